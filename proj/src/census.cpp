#include "nilcensus/census.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace nilcensus {

Index default_enum_cap(const PrimeModulus& p) {
    if (p.value() >= 5) return 6;
    if (p.value() == 3) return 7;
    return 8;
}

bool subspace_census_feasible(Index n, const PrimeModulus& p, const EnumLimits& limits) {
    return limits.force || n <= std::max(limits.max_enum_dim, default_enum_cap(p));
}

void require_subspace_census(Index n, const PrimeModulus& p, const EnumLimits& limits) {
    if (!subspace_census_feasible(n, p, limits))
        throw EnumerationTooLargeError(
            "subspace enumeration refused for dimension " + std::to_string(n) + " at p = " +
            std::to_string(p.value()) +
            "; switch to the join-closure strategy, raise --max-enum-dim, or pass --force");
}

bool vector_scan_feasible(Index n, const PrimeModulus& p, const EnumLimits& limits) {
    return limits.force || projective_count(n, p, limits.scan_budget) >= 0;
}

void require_vector_scan(Index n, const PrimeModulus& p, const EnumLimits& limits) {
    if (!vector_scan_feasible(n, p, limits))
        throw EnumerationTooLargeError("vector scan refused: more than " +
                                       std::to_string(limits.scan_budget) +
                                       " projective representatives; pass --force to override");
}

Ideal::Ideal(const NilpotentAlgebra& algebra, Subspace space) : space_(std::move(space)) {
    if (!is_ideal(algebra, space_))
        throw std::invalid_argument("Ideal: subspace is not closed under multiplication");
}

bool is_ideal(const NilpotentAlgebra& algebra, const Subspace& v) {
    if (v.ambient() != algebra.dim())
        throw DimensionMismatchError("is_ideal: ambient does not match dim");
    return contains(v, algebra.module_product(v), algebra.modulus());
}

Ideal ideal_closure(const NilpotentAlgebra& algebra, const Subspace& u) {
    Subspace closed = subspace_sum(u, algebra.module_product(u), algebra.modulus());
    return Ideal(algebra, std::move(closed));
}

namespace {

Subspace principal_ideal_space(const NilpotentAlgebra& algebra, const FpVec& x) {
    const Index n = algebra.dim();
    FpMat rows(n + 1, n);
    rows.row(0) = x.transpose();
    for (Index i = 0; i < n; ++i) {
        const FpMat& m = algebra.mult_matrix(i);
        for (Index r = 0; r < n; ++r) {
            Scalar dot = 0;
            for (Index j = 0; j < n; ++j)
                dot = add_mod(dot, mul_mod(m(r, j), x(j), algebra.modulus()), algebra.modulus());
            rows(i + 1, r) = dot;
        }
    }
    return rref(std::move(rows), algebra.modulus());
}

/// Join-closure of a seed set of ideal subspaces under pairwise sums.
/// Set insertion never invalidates iterators, so each popped element is
/// summed against the live set; elements discovered meanwhile re-enter the
/// worklist and get their own full pass.
std::set<Subspace> close_under_sums(const PrimeModulus& p, std::set<Subspace> seeds) {
    std::vector<Subspace> worklist(seeds.begin(), seeds.end());
    while (!worklist.empty()) {
        Subspace w = std::move(worklist.back());
        worklist.pop_back();
        if (w.dim() == 0) continue;
        for (auto it = seeds.begin(); it != seeds.end(); ++it) {
            if (it->dim() == 0) continue;
            Subspace sum = subspace_sum(w, *it, p);
            auto [pos, inserted] = seeds.insert(std::move(sum));
            if (inserted) worklist.push_back(*pos);
        }
    }
    return seeds;
}

/// Distinct principal ideals G(x) with generators x restricted to `ambit`
/// (the whole algebra or one annihilator ideal), then the sum closure. The
/// result is the set of ideals of the algebra contained in `ambit`.
std::set<Subspace> join_closure_within(const NilpotentAlgebra& algebra, const Subspace& ambit,
                                       const EnumLimits& limits) {
    const PrimeModulus& p = algebra.modulus();
    require_vector_scan(ambit.dim(), p, limits);
    std::set<Subspace> ideals;
    ideals.insert(Subspace::zero(algebra.dim()));
    for_each_projective_vector(ambit.dim(), p, [&](const FpVec& coeffs) {
        FpVec x = FpVec::Zero(algebra.dim());
        for (Index r = 0; r < ambit.dim(); ++r) {
            if (coeffs(r) == 0) continue;
            for (Index j = 0; j < algebra.dim(); ++j)
                x(j) = add_mod(x(j), mul_mod(coeffs(r), ambit.basis()(r, j), p), p);
        }
        ideals.insert(principal_ideal_space(algebra, x));
    });
    return close_under_sums(p, std::move(ideals));
}

void sort_canonically(std::vector<Ideal>& ideals) {
    std::sort(ideals.begin(), ideals.end());
}

}  // namespace

std::vector<Ideal> enumerate_ideals(const NilpotentAlgebra& algebra, EnumStrategy strategy,
                                    const EnumLimits& limits, int workers) {
    if (algebra.is_zero_algebra())
        throw ZeroAlgebraError("enumerate_ideals: the zero algebra is excluded");
    const PrimeModulus& p = algebra.modulus();
    const Index n = algebra.dim();
    std::vector<Ideal> out;

    if (strategy == EnumStrategy::Filter) {
        require_subspace_census(n, p, limits);
        const auto patterns = pivot_patterns(n);
        const int nworkers = std::max(1, workers);
        std::vector<std::vector<Subspace>> found(static_cast<std::size_t>(nworkers));
        auto run = [&](int w) {
            for (std::size_t idx = static_cast<std::size_t>(w); idx < patterns.size();
                 idx += static_cast<std::size_t>(nworkers))
                for_each_subspace_in_pattern(patterns[idx], n, p, [&](const Subspace& s) {
                    if (is_ideal(algebra, s)) found[static_cast<std::size_t>(w)].push_back(s);
                });
        };
        if (nworkers == 1) {
            run(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < nworkers; ++w) pool.emplace_back(run, w);
            for (auto& t : pool) t.join();
        }
        for (auto& bucket : found)
            for (auto& s : bucket) out.emplace_back(algebra, std::move(s));
    } else {
        auto ideals = join_closure_within(algebra, Subspace::full(n), limits);
        for (const auto& s : ideals) out.emplace_back(algebra, s);
    }
    sort_canonically(out);
    return out;
}

BigInt count_ideals_within(const NilpotentAlgebra& algebra, const Subspace& bound,
                           const EnumLimits& limits) {
    if (!is_ideal(algebra, bound))
        throw std::invalid_argument("count_ideals_within: bound is not an ideal");
    return BigInt(join_closure_within(algebra, bound, limits).size());
}

Index principal_ideal_dim(const NilpotentAlgebra& algebra, const FpVec& x) {
    if (x.size() != algebra.dim())
        throw DimensionMismatchError("principal_ideal_dim: coordinate length does not match dim");
    bool zero = true;
    for (Index i = 0; i < x.size() && zero; ++i) zero = x(i) == 0;
    if (zero) throw std::invalid_argument("principal_ideal_dim: x must be nonzero");
    return principal_ideal_space(algebra, reduced(x, algebra.modulus())).dim();
}

std::vector<Index> exact_q_minima(const NilpotentAlgebra& algebra, const EnumLimits& limits) {
    if (algebra.is_zero_algebra())
        throw ZeroAlgebraError("exact_q_minima: the zero algebra is excluded");
    const PrimeModulus& p = algebra.modulus();
    const auto& chain = algebra.annihilator_chain();
    require_vector_scan(algebra.dim(), p, limits);

    std::vector<Index> q;
    Subspace previous = Subspace::zero(algebra.dim());
    for (const Subspace& layer : chain.layers) {
        Index best = algebra.dim() + 1;
        // q(cx) = q(x) for scalars c ≠ 0, so one representative per class
        for_each_projective_vector(layer.dim(), p, [&](const FpVec& coeffs) {
            FpVec x = FpVec::Zero(algebra.dim());
            for (Index r = 0; r < layer.dim(); ++r) {
                if (coeffs(r) == 0) continue;
                for (Index j = 0; j < algebra.dim(); ++j)
                    x(j) = add_mod(x(j), mul_mod(coeffs(r), layer.basis()(r, j), p), p);
            }
            if (contains(previous, x, p)) return;
            best = std::min(best, principal_ideal_space(algebra, x).dim());
        });
        q.push_back(best);
        previous = layer;
    }
    return q;
}

FiberTable fiber_census(const NilpotentAlgebra& algebra, const EnumLimits& limits, int workers) {
    if (algebra.is_zero_algebra())
        throw ZeroAlgebraError("fiber_census: the zero algebra is excluded");
    const PrimeModulus& p = algebra.modulus();
    const Index n = algebra.dim();
    require_subspace_census(n, p, limits);

    const auto patterns = pivot_patterns(n);
    const int nworkers = std::max(1, workers);
    using Tally = std::map<Subspace, std::uint64_t>;
    std::vector<Tally> tallies(static_cast<std::size_t>(nworkers));
    auto run = [&](int w) {
        Tally& local = tallies[static_cast<std::size_t>(w)];
        for (std::size_t idx = static_cast<std::size_t>(w); idx < patterns.size();
             idx += static_cast<std::size_t>(nworkers))
            for_each_subspace_in_pattern(patterns[idx], n, p, [&](const Subspace& s) {
                ++local[ideal_closure(algebra, s).space()];
            });
    };
    if (nworkers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nworkers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    FiberTable table;
    for (const auto& local : tallies)
        for (const auto& [ideal, count] : local) table[ideal] += count;
    return table;
}

StratifiedReport stratified_identity_check(const NilpotentAlgebra& algebra,
                                           const EnumLimits& limits, int workers) {
    const PrimeModulus& p = algebra.modulus();
    const auto& chain = algebra.annihilator_chain();
    const FiberTable fibers = fiber_census(algebra, limits, workers);
    const std::vector<Index> q = exact_q_minima(algebra, limits);

    StratifiedReport rep;
    Subspace previous = Subspace::zero(algebra.dim());
    BigInt i_previous = 1;  // the zero ideal
    BigInt s_previous = 1;  // the zero subspace
    for (int t = 1; t <= chain.length(); ++t) {
        const Subspace& layer = chain.layers[static_cast<std::size_t>(t - 1)];
        StratumCheck check;
        check.t = t;
        check.d_t = layer.dim();
        check.q_t = q[static_cast<std::size_t>(t - 1)];

        for (const auto& [ideal, count] : fibers)
            if (contains(layer, ideal, p) && !contains(previous, ideal, p))
                check.fiber_sum += count;

        const BigInt s_here = s_eval(static_cast<int>(layer.dim()), p);
        const BigInt i_here = count_ideals_within(algebra, layer, limits);
        check.subspace_delta = s_here - s_previous;
        check.ideal_delta = i_here - i_previous;
        check.fiber_floor = big_pow(BigInt(p.value()), delta(check.q_t));
        check.partition_ok = check.fiber_sum == check.subspace_delta;
        check.fiber_bound_ok = check.fiber_floor * check.ideal_delta <= check.subspace_delta;
        rep.all_ok = rep.all_ok && check.partition_ok && check.fiber_bound_ok;
        rep.strata.push_back(std::move(check));

        previous = layer;
        i_previous = i_here;
        s_previous = s_here;
    }
    return rep;
}

CensusReport census(const NilpotentAlgebra& algebra, EnumStrategy strategy,
                    const EnumLimits& limits, int workers, bool with_fibers) {
    if (algebra.is_zero_algebra())
        throw ZeroAlgebraError("census: the zero algebra is excluded");
    const PrimeModulus& p = algebra.modulus();
    CensusReport rep;
    rep.strategy = strategy;
    rep.i_count = BigInt(enumerate_ideals(algebra, strategy, limits, workers).size());
    rep.s_count = s_eval(static_cast<int>(algebra.dim()), p);
    rep.ratio = BigRat(rep.i_count, rep.s_count);

    std::optional<std::vector<Index>> q;
    if (vector_scan_feasible(algebra.dim(), p, limits)) q = exact_q_minima(algebra, limits);

    rep.strata.push_back({0, 0, BigInt(1), BigInt(1), std::nullopt});
    const auto& chain = algebra.annihilator_chain();
    for (int t = 1; t <= chain.length(); ++t) {
        const Subspace& layer = chain.layers[static_cast<std::size_t>(t - 1)];
        StratumData row;
        row.t = t;
        row.d_t = layer.dim();
        row.i_within = count_ideals_within(algebra, layer, limits);
        row.s_within = s_eval(static_cast<int>(layer.dim()), p);
        if (q) row.q_t = (*q)[static_cast<std::size_t>(t - 1)];
        rep.strata.push_back(std::move(row));
    }

    if (with_fibers) rep.fibers = fiber_census(algebra, limits, workers);
    return rep;
}

QPolynomial interpolate_count(const std::function<BigInt(std::int64_t)>& count_at,
                              const std::vector<std::int64_t>& primes,
                              std::int64_t validation_prime) {
    if (primes.empty()) throw std::invalid_argument("interpolate_count: no sample primes");
    std::set<std::int64_t> distinct(primes.begin(), primes.end());
    if (distinct.size() != primes.size() || distinct.count(validation_prime))
        throw std::invalid_argument("interpolate_count: sample primes must be distinct from "
                                    "each other and from the validation prime");

    std::vector<BigInt> values;
    values.reserve(primes.size());
    for (std::int64_t q : primes) values.push_back(count_at(q));

    // Lagrange with exact rationals: Σ_i y_i Π_{j≠i} (x − x_j) / (x_i − x_j)
    std::vector<BigRat> coeffs(primes.size(), BigRat(0));
    for (std::size_t i = 0; i < primes.size(); ++i) {
        std::vector<BigRat> numerator{BigRat(1)};
        BigRat denom(1);
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (j == i) continue;
            // numerator *= (x − x_j)
            std::vector<BigRat> next(numerator.size() + 1, BigRat(0));
            for (std::size_t k = 0; k < numerator.size(); ++k) {
                next[k + 1] += numerator[k];
                next[k] -= numerator[k] * BigRat(primes[j]);
            }
            numerator = std::move(next);
            denom *= BigRat(primes[i] - primes[j]);
        }
        const BigRat scale = BigRat(values[i]) / denom;
        for (std::size_t k = 0; k < numerator.size(); ++k) coeffs[k] += numerator[k] * scale;
    }

    std::vector<BigInt> integer_coeffs;
    integer_coeffs.reserve(coeffs.size());
    for (const BigRat& c : coeffs) {
        if (denominator(c) != 1)
            throw NonIntegerCoefficientsError(
                "interpolate_count: fitted coefficients are not integers; the count is not a "
                "polynomial of degree <= " + std::to_string(primes.size() - 1) +
                " on the sampled primes");
        integer_coeffs.push_back(numerator(c));
    }
    QPolynomial fit(std::move(integer_coeffs));

    const BigInt predicted = fit.eval(BigInt(validation_prime));
    const BigInt actual = count_at(validation_prime);
    if (predicted != actual)
        throw ValidationMismatchError("interpolate_count: fit predicts " + predicted.str() +
                                      " at p = " + std::to_string(validation_prime) +
                                      " but the count is " + actual.str());
    return fit;
}

}  // namespace nilcensus
