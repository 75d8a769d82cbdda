#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcensus/bounds.hpp"

using namespace nilcensus;

namespace {

BigInt ideal_count(const NilpotentAlgebra& a) {
    return BigInt(enumerate_ideals(a, EnumStrategy::JoinClosure, EnumLimits{}).size());
}

}  // namespace

TEST_CASE("lambda lower bound") {
    for (std::int64_t q : {3, 5, 7}) {
        CHECK(lambda_lower(NilpotentAlgebra::triangular(PrimeModulus(q), 2)) ==
              2 * q * q + 3 * q + 6);
        CHECK(lambda_lower(NilpotentAlgebra::binomial(PrimeModulus(q), 3)) ==
              4 * q * q + 4 * q + 8);
        for (int e = 1; e <= 4; ++e)
            CHECK(lambda_lower(NilpotentAlgebra::uniserial(PrimeModulus(q), e)) == e + 1);
    }
    CHECK(lambda_lower(NilpotentAlgebra::triangular(PrimeModulus(3), 2)) == 33);
}

TEST_CASE("rough lower bound") {
    CHECK(rough_lower(NilpotentAlgebra::triangular(PrimeModulus(3), 2)) == 9);  // t_M = 3
    CHECK(rough_lower(NilpotentAlgebra::binomial(PrimeModulus(5), 4)) ==
          big_pow(BigInt(5), 9));  // t_M = 6
    // zero-product algebra of dim 3: every subspace is an ideal and the bound
    // sits below the full count
    const auto flat = NilpotentAlgebra::custom(PrimeModulus(3), 3, {}, {});
    CHECK(rough_lower(flat) == 9);
    CHECK(rough_lower(flat) <= s_eval(3, flat.modulus()));
}

TEST_CASE("main upper bound and guards") {
    CHECK(upper_main_ratio(NilpotentAlgebra::triangular(PrimeModulus(5), 2)) == BigRat(3, 5));
    CHECK(upper_main_ratio(NilpotentAlgebra::triangular(PrimeModulus(7), 2)) == BigRat(3, 7));
    CHECK(upper_main_ratio(NilpotentAlgebra::uniserial(PrimeModulus(5), 3)) == BigRat(5, 25));
    CHECK(upper_main_ratio(NilpotentAlgebra::binomial(PrimeModulus(5), 4)) == BigRat(7, 625));
    CHECK(upper_main(NilpotentAlgebra::triangular(PrimeModulus(3), 2)) ==
          BigRat(3, 3) * BigRat(2664));

    CHECK_THROWS_AS(upper_main(NilpotentAlgebra::triangular(PrimeModulus(2), 2)),
                    HypothesisViolatedError);
    CHECK_THROWS_AS(upper_main(NilpotentAlgebra::custom(PrimeModulus(3), 0, {}, {})),
                    ZeroAlgebraError);
}

TEST_CASE("stratified bounds") {
    const auto tri = NilpotentAlgebra::triangular(PrimeModulus(3), 2);
    const StratifiedBounds sb = upper_stratified(tri, QMode::Exact);
    CHECK(sb.q == std::vector<Index>{1, 3});
    // bracket of the refined form: 2 p^-4 + p^-2
    CHECK(sb.refined == (BigRat(2, 81) + BigRat(1, 9)) * BigRat(2664));
    // telescoped: (1 - p^-2) s(3) + p^-2 s(5)
    CHECK(sb.telescoped == (BigRat(1) - BigRat(1, 9)) * BigRat(28) + BigRat(1, 9) * BigRat(2664));
    CHECK(BigRat(45) <= sb.telescoped);

    const auto bin4 = NilpotentAlgebra::binomial(PrimeModulus(5), 4);
    const StratifiedBounds structural = upper_stratified(bin4, QMode::BinomialPow2);
    const PrimeModulus p5(5);
    BigRat intermediate = BigRat(s_eval(1, p5));
    intermediate += BigRat(s_eval(5, p5)) / 5;
    intermediate += BigRat(s_eval(11, p5)) / BigRat(big_pow(BigInt(5), 4));
    intermediate += BigRat(s_eval(15, p5)) / BigRat(big_pow(BigInt(5), 16));
    CHECK(structural.dropped == intermediate);

    CHECK_THROWS_AS(upper_stratified(tri, QMode::BinomialPow2), std::invalid_argument);
    CHECK_THROWS_AS(upper_stratified(NilpotentAlgebra::triangular(PrimeModulus(2), 2),
                                     QMode::GenericT),
                    HypothesisViolatedError);
}

TEST_CASE("ratio chain for the four-generator binomial algebra") {
    const auto bin4 = NilpotentAlgebra::binomial(PrimeModulus(5), 4);
    const RatioChain chain = stratified_ratio_chain(bin4, QMode::BinomialPow2);
    REQUIRE(chain.terms.size() == 4);
    std::vector<long> exps;
    for (const auto& t : chain.terms) {
        exps.push_back(t.exponent);
        CHECK(t.coefficient == 1);
    }
    CHECK(exps == std::vector<long>{56, 51, 30, 16});
    CHECK(chain.simplified_ok);
    CHECK(chain.dominant_exponent == 16);
    CHECK(chain.dominant_coefficient == 2);
    // the chain total really bounds the dropped form divided by s(A)
    const StratifiedBounds sb = upper_stratified(bin4, QMode::BinomialPow2);
    CHECK(sb.dropped / BigRat(s_eval(15, PrimeModulus(5))) <= chain.total);
}

TEST_CASE("small-index refinements") {
    const auto tri3 = NilpotentAlgebra::triangular(PrimeModulus(3), 2);
    const auto bound = upper_small_e(tri3);
    REQUIRE(bound.has_value());
    CHECK(*bound == BigRat(2 * 2664, 3));
    CHECK(*bound == BigRat(1776));

    CHECK_FALSE(upper_small_e(NilpotentAlgebra::triangular(PrimeModulus(2), 2)).has_value());
    CHECK_FALSE(upper_small_e(NilpotentAlgebra::uniserial(PrimeModulus(5), 3)).has_value());
    CHECK(upper_small_e(NilpotentAlgebra::binomial(PrimeModulus(5), 3)).has_value());
}

TEST_CASE("threshold classification") {
    CHECK_FALSE(predicted_below_one_percent(2, 5, PrimeModulus(199)));
    CHECK(predicted_below_one_percent(2, 5, PrimeModulus(211)));
    CHECK_FALSE(predicted_below_one_percent(3, 5, PrimeModulus(13)));
    CHECK(predicted_below_one_percent(3, 5, PrimeModulus(17)));
    CHECK_FALSE(predicted_below_one_percent(4, 6, PrimeModulus(5)));
    CHECK(predicted_below_one_percent(4, 6, PrimeModulus(7)));
    CHECK(predicted_below_one_percent(5, 6, PrimeModulus(7)));
    CHECK(predicted_ratio_bound(2, 5, PrimeModulus(211)) == BigRat(2, 211));
    CHECK(predicted_ratio_bound(5, 6, PrimeModulus(7)) == BigRat(9, 117649));
    CHECK_THROWS_AS(predicted_ratio_bound(5, 6, PrimeModulus(5)), HypothesisViolatedError);

    const auto tri = NilpotentAlgebra::triangular(PrimeModulus(3), 2);
    const RatioClassification cls = correspondence_ratio(tri, BigInt(45));
    CHECK(cls.ratio == BigRat(45, 2664));
    CHECK(cls.predicted_bound == BigRat(2, 3));
    CHECK_FALSE(cls.predicted_small);
    CHECK_THROWS_AS(correspondence_ratio(NilpotentAlgebra::custom(PrimeModulus(3), 0, {}, {}),
                                         BigInt(1)),
                    ZeroAlgebraError);
}

TEST_CASE("per-stratum fiber floor") {
    CHECK(check_stratum_fiber_bounds(NilpotentAlgebra::triangular(PrimeModulus(3), 2)).all_ok);
    CHECK(check_stratum_fiber_bounds(NilpotentAlgebra::uniserial(PrimeModulus(5), 3)).all_ok);
    // zero-product algebra: equality with floor 1
    const auto flat = NilpotentAlgebra::custom(PrimeModulus(3), 3, {}, {});
    const StratifiedReport rep = check_stratum_fiber_bounds(flat);
    REQUIRE(rep.strata.size() == 1);
    CHECK(rep.strata[0].fiber_floor == 1);
    CHECK(rep.strata[0].ideal_delta == rep.strata[0].subspace_delta);
    CHECK(rep.all_ok);
}

TEST_CASE("sandwich on a censused instance") {
    const auto tri = NilpotentAlgebra::triangular(PrimeModulus(3), 2);
    const BigInt i = ideal_count(tri);
    const StratifiedBounds exact = upper_stratified(tri, QMode::Exact);
    const StratifiedBounds generic = upper_stratified(tri, QMode::GenericT);
    CHECK(lambda_lower(tri) <= i);
    CHECK(rough_lower(tri) <= i);
    CHECK(BigRat(i) <= exact.telescoped);
    CHECK(exact.telescoped <= exact.dropped);
    CHECK(exact.dropped <= exact.refined);
    CHECK(exact.refined <= generic.refined);
    CHECK(generic.refined <= upper_main(tri));
    const auto small = upper_small_e(tri);
    REQUIRE(small.has_value());
    CHECK(BigRat(i) <= *small);
}

TEST_CASE("bound reports carry applicability") {
    const BoundReport tri2 = bound_report(NilpotentAlgebra::triangular(PrimeModulus(2), 2));
    CHECK_FALSE(tri2.hypothesis_ok);
    CHECK_FALSE(tri2.main.has_value());
    CHECK(tri2.i_count.has_value());  // the census still runs
    CHECK(tri2.lambda == 2 * 4 + 3 * 2 + 6);

    const BoundReport tri3 = bound_report(NilpotentAlgebra::triangular(PrimeModulus(3), 2));
    CHECK(tri3.hypothesis_ok);
    CHECK(tri3.q_mode == QMode::Exact);
    CHECK(tri3.q_values == std::vector<Index>{1, 3});
    CHECK(tri3.delta_gap_ok);
    REQUIRE(tri3.i_count.has_value());
    CHECK(*tri3.i_count == 45);
    CHECK(*tri3.ratio == BigRat(45, 2664));
    CHECK(*tri3.threshold_predicted == false);

    const BoundReport bin4 = bound_report(NilpotentAlgebra::binomial(PrimeModulus(5), 4));
    CHECK(bin4.q_mode == QMode::BinomialPow2);
    CHECK_FALSE(bin4.i_count.has_value());  // census infeasible at dim 15
    const PrimeModulus p5(5);
    // layers (1, 4, 6, 4)
    CHECK(bin4.lambda ==
          BigInt(2) + 2 * (s_eval(4, p5) - 1) + (s_eval(6, p5) - 1));
}
