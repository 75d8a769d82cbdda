#include "nilcensus/bounds.hpp"

#include <algorithm>

namespace nilcensus {

namespace {

void require_nonzero(const NilpotentAlgebra& algebra, const char* who) {
    if (algebra.is_zero_algebra())
        throw ZeroAlgebraError(std::string(who) + ": the zero algebra is excluded");
}

void require_index_below_p(const NilpotentAlgebra& algebra, const char* who) {
    const int e = algebra.nil_index();
    if (e >= algebra.modulus().value())
        throw HypothesisViolatedError(std::string(who) + ": requires e < p, got e = " +
                                      std::to_string(e) + ", p = " +
                                      std::to_string(algebra.modulus().value()));
}

BigRat p_power(const PrimeModulus& p, long exponent) {
    if (exponent >= 0) return BigRat(big_pow(BigInt(p.value()), exponent));
    return BigRat(BigInt(1), big_pow(BigInt(p.value()), -exponent));
}

std::vector<Index> q_values_for(const NilpotentAlgebra& algebra, QMode mode,
                                const std::vector<Index>* exact_q, const EnumLimits& limits) {
    const int e = algebra.nil_index();
    std::vector<Index> q;
    switch (mode) {
        case QMode::Exact:
            if (exact_q) {
                q = *exact_q;
                if (static_cast<int>(q.size()) != e)
                    throw std::invalid_argument("upper_stratified: exact q length mismatch");
            } else {
                q = exact_q_minima(algebra, limits);
            }
            break;
        case QMode::GenericT:
            for (int t = 1; t <= e; ++t) q.push_back(t);
            break;
        case QMode::BinomialPow2:
            if (algebra.family() != AlgebraFamily::Binomial)
                throw std::invalid_argument(
                    "upper_stratified: the 2^(t-1) floor is structural to binomial algebras");
            for (int t = 1; t <= e; ++t) q.push_back(Index(1) << (t - 1));
            break;
    }
    return q;
}

}  // namespace

std::string to_string(QMode mode) {
    switch (mode) {
        case QMode::Exact: return "exact";
        case QMode::GenericT: return "generic-t";
        case QMode::BinomialPow2: return "binomial-2^(t-1)";
    }
    return "?";
}

BigInt lambda_lower(const NilpotentAlgebra& algebra) {
    const auto& chain = algebra.annihilator_chain();
    BigInt total = 0;
    for (std::size_t r = 0; r < chain.layer_dims.size(); ++r) {
        total += s_eval(static_cast<int>(chain.layer_dims[r]), algebra.modulus());
        if (r > 0) total -= 1;
    }
    return total;
}

BigInt rough_lower(const NilpotentAlgebra& algebra) {
    require_nonzero(algebra, "rough_lower");
    const auto& layer_dims = algebra.annihilator_chain().layer_dims;
    const Index t_max = *std::max_element(layer_dims.begin(), layer_dims.end());
    return big_pow(BigInt(algebra.modulus().value()), delta(t_max));
}

BigRat upper_main_ratio(const NilpotentAlgebra& algebra) {
    require_nonzero(algebra, "upper_main");
    require_index_below_p(algebra, "upper_main");
    const int e = algebra.nil_index();
    return BigRat(BigInt(2 * e - 1), big_pow(BigInt(algebra.modulus().value()), delta(e)));
}

BigRat upper_main(const NilpotentAlgebra& algebra) {
    return upper_main_ratio(algebra) *
           BigRat(s_eval(static_cast<int>(algebra.dim()), algebra.modulus()));
}

StratifiedBounds upper_stratified(const NilpotentAlgebra& algebra, QMode mode,
                                  const std::vector<Index>* exact_q, const EnumLimits& limits) {
    require_nonzero(algebra, "upper_stratified");
    require_index_below_p(algebra, "upper_stratified");
    const PrimeModulus& p = algebra.modulus();
    const auto& chain = algebra.annihilator_chain();
    const int e = chain.length();

    StratifiedBounds out;
    out.mode = mode;
    out.q = q_values_for(algebra, mode, exact_q, limits);

    std::vector<BigInt> s_layer;  // s(N_t)
    for (int t = 1; t <= e; ++t)
        s_layer.push_back(s_eval(static_cast<int>(chain.dims[static_cast<std::size_t>(t - 1)]), p));

    auto dq = [&](int t) { return delta(out.q[static_cast<std::size_t>(t - 1)]); };

    BigRat telescoped(0), dropped(0), refined_bracket(0);
    for (int t = 1; t <= e; ++t) {
        const BigRat head = p_power(p, -dq(t));
        dropped += head * BigRat(s_layer[static_cast<std::size_t>(t - 1)]);
        if (t < e) {
            telescoped += (head - p_power(p, -dq(t + 1))) *
                          BigRat(s_layer[static_cast<std::size_t>(t - 1)]);
            const long shift = delta(chain.dims[static_cast<std::size_t>(t - 1)]) -
                               delta(chain.dims[static_cast<std::size_t>(e - 1)]);
            refined_bracket += BigRat(2) * p_power(p, -dq(t) + shift);
        } else {
            telescoped += head * BigRat(s_layer[static_cast<std::size_t>(t - 1)]);
            refined_bracket += head;
        }
    }
    out.telescoped = telescoped;
    out.dropped = dropped;
    out.refined = refined_bracket * BigRat(s_layer[static_cast<std::size_t>(e - 1)]);
    return out;
}

RatioChain stratified_ratio_chain(const NilpotentAlgebra& algebra, QMode mode,
                                  const std::vector<Index>* exact_q, const EnumLimits& limits) {
    require_nonzero(algebra, "stratified_ratio_chain");
    require_index_below_p(algebra, "stratified_ratio_chain");
    const PrimeModulus& p = algebra.modulus();
    const auto& chain = algebra.annihilator_chain();
    const int e = chain.length();
    const std::vector<Index> q = q_values_for(algebra, mode, exact_q, limits);
    const Index d_e = chain.dims.back();

    RatioChain out;
    out.total = BigRat(0);
    for (int t = 1; t <= e; ++t) {
        RatioChainTerm term;
        term.t = t;
        const Index d_t = chain.dims[static_cast<std::size_t>(t - 1)];
        if (t < e) {
            term.exponent = delta(q[static_cast<std::size_t>(t - 1)]) + delta(d_e) - delta(d_t);
            term.coefficient = (d_e % 2 == 0 || d_t % 2 == d_e % 2) ? 1 : 2;
        } else {
            term.exponent = delta(q[static_cast<std::size_t>(t - 1)]);
            term.coefficient = 1;
        }
        out.total += BigRat(term.coefficient) * p_power(p, -term.exponent);
        out.terms.push_back(term);
    }

    const auto dominant = std::min_element(
        out.terms.begin(), out.terms.end(),
        [](const RatioChainTerm& a, const RatioChainTerm& b) { return a.exponent < b.exponent; });
    out.dominant_exponent = dominant->exponent;
    out.dominant_coefficient = dominant->coefficient + 1;
    out.simplified_ok =
        out.total <= BigRat(out.dominant_coefficient) * p_power(p, -out.dominant_exponent);
    return out;
}

std::optional<BigRat> upper_small_e(const NilpotentAlgebra& algebra) {
    const int e = algebra.nil_index();
    const std::int64_t p = algebra.modulus().value();
    const Index n = algebra.dim();
    if (e == 2 && p >= 3 && n >= 3)
        return BigRat(BigInt(2), BigInt(p)) *
               BigRat(s_eval(static_cast<int>(n), algebra.modulus()));
    if (e == 3 && p >= 3 && n >= 4)
        return BigRat(BigInt(2), BigInt(p) * p) *
               BigRat(s_eval(static_cast<int>(n), algebra.modulus()));
    return std::nullopt;
}

BigRat predicted_ratio_bound(int e, Index n, const PrimeModulus& p) {
    if (e < 1) throw ZeroAlgebraError("predicted_ratio_bound: the zero algebra is excluded");
    if (e >= p.value())
        throw HypothesisViolatedError("predicted_ratio_bound: requires e < p");
    if (e == 2 && p.value() >= 3 && n >= 3) return BigRat(BigInt(2), BigInt(p.value()));
    if (e == 3 && p.value() >= 3 && n >= 4)
        return BigRat(BigInt(2), BigInt(p.value()) * p.value());
    return BigRat(BigInt(2 * e - 1), big_pow(BigInt(p.value()), delta(e)));
}

bool predicted_below_one_percent(int e, Index n, const PrimeModulus& p) {
    return predicted_ratio_bound(e, n, p) < BigRat(1, 100);
}

RatioClassification correspondence_ratio(const NilpotentAlgebra& algebra, const BigInt& i_count) {
    require_nonzero(algebra, "correspondence_ratio");
    RatioClassification out;
    out.ratio = BigRat(i_count, s_eval(static_cast<int>(algebra.dim()), algebra.modulus()));
    out.predicted_bound =
        predicted_ratio_bound(algebra.nil_index(), algebra.dim(), algebra.modulus());
    out.predicted_small = out.predicted_bound < BigRat(1, 100);
    return out;
}

StratifiedReport check_stratum_fiber_bounds(const NilpotentAlgebra& algebra,
                                            const EnumLimits& limits, int workers) {
    return stratified_identity_check(algebra, limits, workers);
}

BoundReport bound_report(const NilpotentAlgebra& algebra, const EnumLimits& limits, int workers) {
    require_nonzero(algebra, "bound_report");
    const PrimeModulus& p = algebra.modulus();
    const auto& chain = algebra.annihilator_chain();

    BoundReport rep;
    rep.p = p.value();
    rep.n = algebra.dim();
    rep.e = algebra.nil_index();
    rep.chain_dims = chain.dims;
    rep.layer_dims = chain.layer_dims;
    rep.s_count = s_eval(static_cast<int>(algebra.dim()), p);
    rep.lambda = lambda_lower(algebra);
    rep.rough = rough_lower(algebra);
    rep.hypothesis_ok = rep.e < rep.p;

    rep.delta_gap_ok = true;
    for (int t = 1; t <= rep.e; ++t)
        rep.delta_gap_ok =
            rep.delta_gap_ok && delta(chain.dims.back()) -
                                        delta(chain.dims[static_cast<std::size_t>(t - 1)]) >=
                                    delta(rep.e) - delta(t);

    const bool scan_ok = vector_scan_feasible(algebra.dim(), p, limits);
    if (rep.hypothesis_ok) {
        rep.main_ratio = upper_main_ratio(algebra);
        rep.main = upper_main(algebra);
        rep.q_mode = scan_ok ? QMode::Exact
                   : algebra.family() == AlgebraFamily::Binomial ? QMode::BinomialPow2
                                                                 : QMode::GenericT;
        const StratifiedBounds sb = upper_stratified(algebra, rep.q_mode, nullptr, limits);
        rep.q_values = sb.q;
        rep.stratified = sb.telescoped;
        rep.stratified_dropped = sb.dropped;
        rep.stratified_refined = sb.refined;
        rep.small_e = upper_small_e(algebra);
        rep.threshold_bound = predicted_ratio_bound(rep.e, rep.n, p);
        rep.threshold_predicted = *rep.threshold_bound < BigRat(1, 100);
    }

    if (subspace_census_feasible(algebra.dim(), p, limits) && scan_ok) {
        rep.i_count = BigInt(
            enumerate_ideals(algebra, EnumStrategy::JoinClosure, limits, workers).size());
        rep.ratio = BigRat(*rep.i_count, rep.s_count);
    }
    return rep;
}

}  // namespace nilcensus
