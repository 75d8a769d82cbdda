#include "nilcensus/checks.hpp"

#include "nilcensus/report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace nilcensus {

namespace {

struct Collector {
    bool ok = true;
    std::ostringstream msg;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (msg.tellp() > 0) msg << "; ";
        msg << what;
    }
};

std::vector<Subspace> subspaces_of(const Subspace& w, const PrimeModulus& p) {
    std::vector<Subspace> out;
    for_each_subspace(w.dim(), p, std::nullopt, [&](const Subspace& coords) {
        FpMat rows = FpMat::Zero(coords.dim(), w.ambient());
        for (Index r = 0; r < coords.dim(); ++r)
            for (Index j = 0; j < w.dim(); ++j) {
                const Scalar c = coords.basis()(r, j);
                if (c == 0) continue;
                for (Index col = 0; col < w.ambient(); ++col)
                    rows(r, col) = add_mod(rows(r, col), mul_mod(c, w.basis()(j, col), p), p);
            }
        out.push_back(rref(std::move(rows), p));
    });
    return out;
}

int stratum_of_vector(const NilpotentAlgebra& algebra, const FpVec& x) {
    const auto& chain = algebra.annihilator_chain();
    for (int t = 1; t <= chain.length(); ++t)
        if (contains(chain.layers[static_cast<std::size_t>(t - 1)], x, algebra.modulus()))
            return t;
    throw std::logic_error("stratum_of_vector: vector outside the algebra");
}

// ---------------------------------------------------------------------------
// individual checks
// ---------------------------------------------------------------------------

CheckResult check_growth(const VerifyOptions&) {
    Collector c;
    for (std::int64_t q : {2, 3, 5, 7}) {
        const PrimeModulus p(q);
        for (int n = 0; n <= 8; ++n)
            for (int m = 0; m <= n; ++m) {
                const GrowthReport rep = check_growth_inequalities(n, m, p);
                c.expect(rep.all_hold, "growth fails at n=" + std::to_string(n) +
                                           " m=" + std::to_string(m) + " p=" + std::to_string(q));
            }
    }
    return {"growth", c.ok, c.msg.str()};
}

CheckResult check_counts(const VerifyOptions&) {
    Collector c;
    for (std::int64_t q : {2, 3}) {
        const PrimeModulus p(q);
        for (int d = 1; d <= 4; ++d) {
            const auto all = enumerate_subspaces(d, p);
            for (int r = 0; r <= d; ++r) {
                FpMat w0_rows = FpMat::Zero(r, d);
                for (int i = 0; i < r; ++i) w0_rows(i, i) = 1;
                const Subspace w0 = rref(std::move(w0_rows), p);
                for (int k = 0; k <= d - r; ++k) {
                    BigInt brute = 0;
                    for (const auto& u : all)
                        if (u.dim() == k && subspace_sum(u, w0, p).dim() == k + r) brute += 1;
                    c.expect(brute == count_general_position(d, r, k, p),
                             "general-position count off at d=" + std::to_string(d) +
                                 " r=" + std::to_string(r) + " k=" + std::to_string(k) +
                                 " p=" + std::to_string(q));
                }
            }
            // hyperplane = the first d-1 coordinates
            FpMat hyp_rows = FpMat::Zero(d - 1, d);
            for (int i = 0; i < d - 1; ++i) hyp_rows(i, i) = 1;
            const Subspace hyperplane = rref(std::move(hyp_rows), p);
            BigInt brute = 0;
            for (const auto& u : all)
                if (!contains(hyperplane, u, p)) brute += 1;
            const BigInt counted = count_not_in_hyperplane(d, p);
            c.expect(brute == counted, "hyperplane-avoiding count off at t=" + std::to_string(d) +
                                           " p=" + std::to_string(q));
            c.expect(counted >= big_pow(BigInt(q), delta(d)),
                     "hyperplane-avoiding count below p^delta(t) at t=" + std::to_string(d));
        }
    }
    return {"counts", c.ok, c.msg.str()};
}

CheckResult check_spoly(const VerifyOptions&) {
    Collector c;
    const std::vector<BigInt> expected{6, 4, 6, 6, 6, 2, 2};  // ascending powers
    c.expect(s_poly(5).coefficients() == expected, "s_poly(5) != 2q^6+2q^5+6q^4+6q^3+6q^2+4q+6");
    const PrimeModulus p3(3);
    std::int64_t streamed = 0;
    for_each_subspace(5, p3, std::nullopt, [&](const Subspace&) { ++streamed; });
    c.expect(streamed == 2664, "enumeration of F_3^5 yields " + std::to_string(streamed));
    c.expect(s_eval(5, p3) == 2664, "s_eval(5,3) != 2664");
    return {"spoly", c.ok, c.msg.str()};
}

CheckResult check_idcount(const VerifyOptions& opt) {
    Collector c;
    for (std::int64_t q : {3, 5}) {
        const PrimeModulus p(q);
        const auto algebra = NilpotentAlgebra::triangular(p, 2);
        const auto filtered =
            enumerate_ideals(algebra, EnumStrategy::Filter, opt.limits, opt.workers);
        const auto joined =
            enumerate_ideals(algebra, EnumStrategy::JoinClosure, opt.limits, opt.workers);
        const BigInt expected = 3 * q * q + 4 * q + 6;
        c.expect(BigInt(filtered.size()) == expected,
                 "filter census of triangular(2)@" + std::to_string(q) + " gives " +
                     std::to_string(filtered.size()));
        c.expect(filtered == joined,
                 "filter and join-closure disagree at p=" + std::to_string(q));
    }
    return {"idcount", c.ok, c.msg.str()};
}

CheckResult check_uniserial(const VerifyOptions& opt) {
    Collector c;
    for (std::int64_t q : {5, 7})
        for (int e = 1; e <= 4; ++e) {
            const auto algebra = NilpotentAlgebra::uniserial(PrimeModulus(q), e);
            const auto ideals =
                enumerate_ideals(algebra, EnumStrategy::JoinClosure, opt.limits, opt.workers);
            c.expect(static_cast<int>(ideals.size()) == e + 1,
                     "uniserial(" + std::to_string(e) + ")@" + std::to_string(q) + " has " +
                         std::to_string(ideals.size()) + " ideals");
        }
    return {"uniserial", c.ok, c.msg.str()};
}

CheckResult check_binomial_count(const VerifyOptions& opt) {
    Collector c;
    for (std::int64_t q : {5, 7}) {
        const auto algebra = NilpotentAlgebra::binomial(PrimeModulus(q), 3);
        const auto ideals =
            enumerate_ideals(algebra, EnumStrategy::JoinClosure, opt.limits, opt.workers);
        const BigInt expected = 7 * q * q + 4 * q + 8;
        c.expect(BigInt(ideals.size()) == expected, "binomial(3)@" + std::to_string(q) +
                                                        " census gives " +
                                                        std::to_string(ideals.size()));
    }
    return {"binomial", c.ok, c.msg.str()};
}

CheckResult check_fibers(const VerifyOptions& opt) {
    Collector c;
    const PrimeModulus p(3);
    const auto algebra = NilpotentAlgebra::triangular(p, 2);
    const FiberTable fibers = fiber_census(algebra, opt.limits, opt.workers);
    const auto& chain = algebra.annihilator_chain();
    const Subspace& n1 = chain.layers.front();

    auto fiber_of = [&](const Subspace& generators) {
        const Subspace ideal = ideal_closure(algebra, rref(FpMat(generators.basis()), p)).space();
        auto it = fibers.find(ideal);
        return it == fibers.end() ? BigInt(-1) : it->second;
    };

    c.expect(fibers.at(Subspace::full(5)) == 1900, "|G^-1(A)| != 1900");

    // generators y and x^2 in the basis (x, y, x^2, xy, y^2)
    FpMat j23_rows = FpMat::Zero(2, 5);
    j23_rows(0, 1) = 1;
    j23_rows(1, 2) = 1;
    c.expect(fiber_of(rref(std::move(j23_rows), p)) == 118, "fiber of (y, x^2, xy, y^2) != 118");

    FpMat x_row = FpMat::Zero(1, 5);
    x_row(0, 0) = 1;
    c.expect(fiber_of(rref(FpMat(x_row), p)) == 22, "fiber of G(x) != 2p^2+p+1");

    BigInt inside_n1 = 0, ideal_total = 0, subspace_total = 0;
    for (const auto& [ideal, count] : fibers) {
        ideal_total += 1;
        subspace_total += count;
        if (contains(n1, ideal, p)) {
            inside_n1 += 1;
            c.expect(count == 1, "an ideal inside N_1 has fiber " + count.str());
        }
    }
    c.expect(inside_n1 == 28, "ideals inside N_1: " + inside_n1.str());
    c.expect(ideal_total == 45, "ideal column sums to " + ideal_total.str());
    c.expect(subspace_total == 2664, "fiber column sums to " + subspace_total.str());
    return {"fibers", c.ok, c.msg.str()};
}

CheckResult check_stratified(const VerifyOptions& opt) {
    Collector c;
    auto run = [&](const NilpotentAlgebra& algebra) {
        const StratifiedReport rep = stratified_identity_check(algebra, opt.limits, opt.workers);
        c.expect(rep.all_ok, "stratified identities fail for " + algebra.descriptor());
    };
    for (std::int64_t q : {3, 5}) run(NilpotentAlgebra::triangular(PrimeModulus(q), 2));
    for (std::int64_t q : {5, 7})
        for (int e = 1; e <= 4; ++e) run(NilpotentAlgebra::uniserial(PrimeModulus(q), e));
    return {"stratified", c.ok, c.msg.str()};
}

CheckResult check_qt(const VerifyOptions& opt) {
    Collector c;
    auto q_of = [&](const NilpotentAlgebra& a) { return exact_q_minima(a, opt.limits); };

    for (std::int64_t q : {3, 5}) {
        const auto minima = q_of(NilpotentAlgebra::triangular(PrimeModulus(q), 2));
        c.expect(minima == std::vector<Index>{1, 3},
                 "triangular(2)@" + std::to_string(q) + " q != (1,3)");
    }
    for (int e = 1; e <= 5; ++e) {
        const auto minima = q_of(NilpotentAlgebra::uniserial(PrimeModulus(7), e));
        std::vector<Index> expected;
        for (int t = 1; t <= e; ++t) expected.push_back(t);
        c.expect(minima == expected, "uniserial(" + std::to_string(e) + ")@7 q != (1..e)");
    }
    // two-generator truncated algebras: q_t = t(t+1)/2
    for (std::int64_t q : {3}) {
        const auto minima = q_of(NilpotentAlgebra::triangular(PrimeModulus(q), 3));
        c.expect(minima == std::vector<Index>{1, 3, 6},
                 "triangular(3)@" + std::to_string(q) + " q != (1,3,6)");
    }
    // floor q_t >= t on every algebra touched above
    for (std::int64_t q : {3, 5})
        for (int e : {1, 2, 3}) {
            const auto algebra = e <= 2 ? NilpotentAlgebra::triangular(PrimeModulus(q), e)
                                        : NilpotentAlgebra::uniserial(PrimeModulus(q), e);
            const auto minima = q_of(algebra);
            for (std::size_t t = 0; t < minima.size(); ++t)
                c.expect(minima[t] >= static_cast<Index>(t + 1),
                         "q_t < t for " + algebra.descriptor());
        }
    return {"qt", c.ok, c.msg.str()};
}

CheckResult check_absorption(const VerifyOptions&) {
    Collector c;
    const PrimeModulus p(3);
    const auto algebra = NilpotentAlgebra::triangular(p, 2);
    for_each_projective_vector(algebra.dim(), p, [&](const FpVec& x) {
        FpMat row(1, algebra.dim());
        row.row(0) = x.transpose();
        const Subspace span_x = rref(std::move(row), p);
        const Subspace w = ideal_closure(algebra, span_x).space();
        const Subspace w0 = algebra.module_product(span_x);
        for (const Subspace& u : subspaces_of(w, p)) {
            if (contains(w0, u, p)) continue;
            if (!(ideal_closure(algebra, u).space() == w)) {
                c.expect(false, "G(U) != G({x}) for x=" + to_string(x) + ", U=" + to_string(u));
                return;
            }
        }
    });
    return {"absorption", c.ok, c.msg.str()};
}

CheckResult check_qmin(const VerifyOptions&) {
    Collector c;
    for (std::int64_t q : {5, 7}) {
        const PrimeModulus p(q);
        const auto algebra = NilpotentAlgebra::binomial(p, 3);
        bool all_ok = true;
        bool generic_dims_ok = true;
        for_each_projective_vector(algebra.dim(), p, [&](const FpVec& u) {
            const int t = stratum_of_vector(algebra, u);
            const Index dim = principal_ideal_dim(algebra, u);
            if (dim < (Index(1) << (t - 1))) all_ok = false;
            // generators x + b y + c z with b, c nonzero span 5-dimensional
            // principal ideals (coordinates 0..2 hold the degree-1 basis)
            if (u(0) == 1 && u(1) != 0 && u(2) != 0 && u(3) == 0 && u(4) == 0 && u(5) == 0 &&
                u(6) == 0 && dim < 5)
                generic_dims_ok = false;
        });
        c.expect(all_ok, "dim G(u) < 2^(t-1) somewhere in binomial(3)@" + std::to_string(q));
        c.expect(generic_dims_ok,
                 "dim G(x+by+cz) < 5 for some b,c != 0 at p=" + std::to_string(q));
    }
    return {"qmin", c.ok, c.msg.str()};
}

CheckResult check_lambda(const VerifyOptions& opt) {
    Collector c;
    auto lambda_at = [&](const std::string& family) {
        return [family](std::int64_t q) {
            return lambda_lower(build_family_at(family, q));
        };
    };
    const QPolynomial tri = interpolate_count(lambda_at("triangular(2)"), {3, 5, 7}, 11);
    c.expect(tri.coefficients() == std::vector<BigInt>{6, 3, 2},
             "lambda(triangular(2)) != 2q^2+3q+6, got " + tri.str());
    const QPolynomial bin = interpolate_count(lambda_at("binomial(3)"), {3, 5, 7}, 11);
    c.expect(bin.coefficients() == std::vector<BigInt>{8, 4, 4},
             "lambda(binomial(3)) != 4q^2+4q+8, got " + bin.str());
    const QPolynomial uni = interpolate_count(lambda_at("uniserial(3)"), {5, 7}, 11);
    c.expect(uni.coefficients() == std::vector<BigInt>{4},
             "lambda(uniserial(3)) != 4, got " + uni.str());

    const auto tri3 = NilpotentAlgebra::triangular(PrimeModulus(3), 2);
    const BigInt i3(enumerate_ideals(tri3, EnumStrategy::JoinClosure, opt.limits).size());
    c.expect(lambda_lower(tri3) == 33 && i3 == 45, "lambda(triangular(2)@3) vs census mismatch");

    // lambda stays below the censused count across the builtin grid
    std::vector<NilpotentAlgebra> grid{NilpotentAlgebra::binomial(PrimeModulus(5), 3)};
    for (std::int64_t q : {3, 5}) {
        grid.push_back(NilpotentAlgebra::triangular(PrimeModulus(q), 2));
        for (int e = 1; e <= 4; ++e) grid.push_back(NilpotentAlgebra::uniserial(PrimeModulus(q), e));
    }
    for (const auto& a : grid) {
        const BigInt i(enumerate_ideals(a, EnumStrategy::JoinClosure, opt.limits).size());
        c.expect(lambda_lower(a) <= i, "lambda > i for " + a.descriptor());
    }
    return {"lambda", c.ok, c.msg.str()};
}

CheckResult check_bound_formulas(const VerifyOptions& opt) {
    Collector c;
    const auto tri5 = NilpotentAlgebra::triangular(PrimeModulus(5), 2);
    c.expect(upper_main_ratio(tri5) == BigRat(3, 5), "e=2 main ratio != 3/p at p=5");
    const auto uni5 = NilpotentAlgebra::uniserial(PrimeModulus(5), 3);
    c.expect(upper_main_ratio(uni5) == BigRat(5, 25), "e=3 main ratio != 5/p^2 at p=5");

    const auto bin4 = NilpotentAlgebra::binomial(PrimeModulus(5), 4);
    c.expect(upper_main_ratio(bin4) == BigRat(7, 625), "binomial(4)@5 main ratio != 7/p^4");
    const RatioChain chain =
        stratified_ratio_chain(bin4, QMode::BinomialPow2, nullptr, opt.limits);
    std::vector<long> exponents;
    for (const auto& term : chain.terms) exponents.push_back(term.exponent);
    c.expect(exponents == std::vector<long>{56, 51, 30, 16},
             "binomial(4) chain exponents are not (56,51,30,16)");
    for (const auto& term : chain.terms)
        c.expect(term.coefficient == 1, "binomial(4) chain picked up a parity factor 2");
    c.expect(chain.simplified_ok && chain.dominant_exponent == 16 &&
                 chain.dominant_coefficient == 2,
             "binomial(4) chain does not simplify to 2/p^16");

    const StratifiedBounds sb =
        upper_stratified(bin4, QMode::BinomialPow2, nullptr, opt.limits);
    const PrimeModulus p5(5);
    BigRat intermediate = BigRat(s_eval(1, p5));
    intermediate += BigRat(s_eval(5, p5)) / BigRat(5);
    intermediate += BigRat(s_eval(11, p5)) / BigRat(big_pow(BigInt(5), 4));
    intermediate += BigRat(s_eval(15, p5)) / BigRat(big_pow(BigInt(5), 16));
    c.expect(sb.dropped == intermediate,
             "binomial(4) dropped-negatives bound != s(1)+s(5)/p+s(11)/p^4+s(15)/p^16");

    const auto tri3 = NilpotentAlgebra::triangular(PrimeModulus(3), 2);
    const auto small3 = upper_small_e(tri3);
    c.expect(small3 && *small3 == BigRat(BigInt(2) * 2664, 3),
             "small-e bound for triangular(2)@3 != (2/3) s(5)");
    c.expect(!upper_small_e(NilpotentAlgebra::triangular(PrimeModulus(2), 2)).has_value(),
             "small-e bound should be inapplicable at p=2");
    c.expect(!upper_small_e(uni5).has_value(),
             "small-e bound should be inapplicable for e=3, n=3");

    c.expect(bound_report(tri5, opt.limits, opt.workers).delta_gap_ok,
             "delta gap inequality fails for triangular(2)@5");
    return {"bounds", c.ok, c.msg.str()};
}

CheckResult check_threshold(const VerifyOptions&) {
    Collector c;
    struct Case {
        int e;
        std::int64_t p;
        bool expected;
    };
    for (const Case& k : std::initializer_list<Case>{{2, 199, false},
                                                     {2, 211, true},
                                                     {3, 13, false},
                                                     {3, 17, true},
                                                     {4, 5, false},
                                                     {4, 7, true},
                                                     {5, 7, true},
                                                     {6, 7, true},
                                                     {5, 11, true},
                                                     {7, 11, true}}) {
        const bool got = predicted_below_one_percent(k.e, 6, PrimeModulus(k.p));
        c.expect(got == k.expected, "threshold flag wrong at e=" + std::to_string(k.e) +
                                        " p=" + std::to_string(k.p));
    }
    c.expect(predicted_ratio_bound(2, 6, PrimeModulus(211)) == BigRat(2, 211),
             "e=2 census-free bound != 2/p");
    c.expect(predicted_ratio_bound(4, 6, PrimeModulus(7)) == BigRat(7, 2401),
             "e=4 census-free bound != 7/p^4");
    return {"threshold", c.ok, c.msg.str()};
}

CheckResult check_sandwich(const VerifyOptions& opt) {
    Collector c;
    std::vector<NilpotentAlgebra> grid;
    for (std::int64_t q : {3, 5, 7}) {
        const PrimeModulus p(q);
        for (int e = 1; e <= std::min<std::int64_t>(6, q - 1); ++e)
            grid.push_back(NilpotentAlgebra::uniserial(p, e));
        for (int m = 1; m <= 3 && m < q; ++m) grid.push_back(NilpotentAlgebra::binomial(p, m));
        for (int e = 1; e <= 2 && e < q; ++e) grid.push_back(NilpotentAlgebra::triangular(p, e));
    }
    for (const auto& algebra : grid) {
        if (algebra.dim() > 7) continue;
        const std::string who = algebra.descriptor();
        const BigInt i_count(
            enumerate_ideals(algebra, EnumStrategy::JoinClosure, opt.limits, opt.workers).size());
        const BigInt lam = lambda_lower(algebra);
        const BigInt rough = rough_lower(algebra);
        const StratifiedBounds exact =
            upper_stratified(algebra, QMode::Exact, nullptr, opt.limits);
        const StratifiedBounds generic =
            upper_stratified(algebra, QMode::GenericT, nullptr, opt.limits);
        const BigRat main = upper_main(algebra);
        const BigRat i_rat(i_count);

        c.expect(lam <= i_count, who + ": lambda > i");
        c.expect(rough <= i_count, who + ": rough lower bound > i");
        c.expect(i_rat <= exact.telescoped, who + ": i > telescoped bound");
        c.expect(exact.telescoped <= exact.dropped, who + ": telescoped > dropped");
        c.expect(exact.dropped <= exact.refined, who + ": dropped > refined");
        c.expect(exact.refined <= generic.refined, who + ": exact-q refined > generic refined");
        c.expect(generic.refined <= main, who + ": generic refined > main");
        c.expect(i_rat <= main, who + ": i > main bound");

        if (algebra.family() == AlgebraFamily::Binomial && algebra.family_param() == 3) {
            const StratifiedBounds structural =
                upper_stratified(algebra, QMode::BinomialPow2, nullptr, opt.limits);
            c.expect(exact.telescoped <= structural.telescoped &&
                         structural.telescoped <= generic.telescoped,
                     who + ": q-mode monotonicity fails (telescoped)");
            c.expect(exact.refined <= structural.refined &&
                         structural.refined <= generic.refined,
                     who + ": q-mode monotonicity fails (refined)");
        }
    }
    return {"sandwich", c.ok, c.msg.str()};
}

CheckResult check_degree(const VerifyOptions& opt) {
    Collector c;
    // fiber of the full ideal for the dim-5 two-generator family
    const QPolynomial full_fiber(std::vector<BigInt>{1, 0, 1, 1, 2, 1, 2});
    c.expect(full_fiber.degree() == s_poly(5).degree(),
             "reference fiber polynomial degree != deg s(5)");
    for (std::int64_t q : {3, 5, 7}) {
        const PrimeModulus p(q);
        const auto algebra = NilpotentAlgebra::triangular(p, 2);
        const FiberTable fibers = fiber_census(algebra, opt.limits, opt.workers);
        c.expect(fibers.at(Subspace::full(5)) == full_fiber.eval(BigInt(q)),
                 "|G^-1(A)| at p=" + std::to_string(q) + " is off the degree-6 polynomial");
    }
    // three sample primes cannot certify a degree-6 count; the honest fit
    // must reject its held-out validation
    bool rejected = false;
    try {
        interpolate_count(
            [&](std::int64_t q) {
                const auto algebra = NilpotentAlgebra::triangular(PrimeModulus(q), 2);
                return fiber_census(algebra, opt.limits, opt.workers).at(Subspace::full(5));
            },
            {3, 5, 7}, 2);
    } catch (const NonIntegerCoefficientsError&) {
        rejected = true;
    } catch (const ValidationMismatchError&) {
        rejected = true;
    }
    c.expect(rejected, "a quadratic fit of the full-ideal fiber passed validation");
    return {"degree", c.ok, c.msg.str()};
}

CheckResult check_interpolate(const VerifyOptions& opt) {
    Collector c;
    auto ideal_count_at = [&](const std::string& family) {
        return [family, &opt](std::int64_t q) {
            return BigInt(enumerate_ideals(build_family_at(family, q), EnumStrategy::JoinClosure,
                                           opt.limits, opt.workers)
                              .size());
        };
    };
    const QPolynomial tri = interpolate_count(ideal_count_at("triangular(2)"), {3, 5, 7}, 11);
    c.expect(tri.coefficients() == std::vector<BigInt>{6, 4, 3},
             "i(triangular(2)) != 3q^2+4q+6, got " + tri.str());
    const QPolynomial uni = interpolate_count(ideal_count_at("uniserial(3)"), {5, 7}, 11);
    c.expect(uni.coefficients() == std::vector<BigInt>{4}, "i(uniserial(3)) != 4, got " + uni.str());
    const QPolynomial bin = interpolate_count(ideal_count_at("binomial(3)"), {5, 7, 11}, 13);
    c.expect(bin.coefficients() == std::vector<BigInt>{8, 4, 7},
             "i(binomial(3)) != 7q^2+4q+8, got " + bin.str());
    return {"interpolate", c.ok, c.msg.str()};
}

using CheckFn = CheckResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> checks{
        {"growth", check_growth},
        {"counts", check_counts},
        {"spoly", check_spoly},
        {"idcount", check_idcount},
        {"uniserial", check_uniserial},
        {"binomial", check_binomial_count},
        {"fibers", check_fibers},
        {"stratified", check_stratified},
        {"qt", check_qt},
        {"absorption", check_absorption},
        {"qmin", check_qmin},
        {"lambda", check_lambda},
        {"bounds", check_bound_formulas},
        {"threshold", check_threshold},
        {"sandwich", check_sandwich},
        {"degree", check_degree},
        {"interpolate", check_interpolate},
    };
    return checks;
}

}  // namespace

const std::vector<std::string>& verify_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

CheckResult run_verify_check(const std::string& name, const VerifyOptions& options) {
    for (const auto& [check_name, fn] : registry())
        if (check_name == name) {
            try {
                return fn(options);
            } catch (const std::exception& ex) {
                return {name, false, std::string("exception: ") + ex.what()};
            }
        }
    throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckResult> run_verify_checks(const std::vector<std::string>& only,
                                           const VerifyOptions& options) {
    std::vector<CheckResult> results;
    if (only.empty()) {
        for (const auto& [name, fn] : registry()) results.push_back(run_verify_check(name, options));
        return results;
    }
    for (const std::string& name : only) results.push_back(run_verify_check(name, options));
    return results;
}

}  // namespace nilcensus
