#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "nilcensus/algebra.hpp"
#include "nilcensus/qcomb.hpp"

namespace nilcensus {

struct EnumerationTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroAlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegerCoefficientsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration guardrails. A subspace census of F_p^n is allowed when
/// n ≤ max(max_enum_dim, default cap for p), where the default cap is 6 for
/// p ≥ 5, 7 for p = 3 and 8 for p = 2; force overrides everything. Vector
/// scans (join-closure generator collection, exact q minima) are bounded by
/// scan_budget projective representatives.
struct EnumLimits {
    Index max_enum_dim = 6;
    bool force = false;
    std::int64_t scan_budget = 20'000'000;
};

Index default_enum_cap(const PrimeModulus& p);
bool subspace_census_feasible(Index n, const PrimeModulus& p, const EnumLimits& limits);
void require_subspace_census(Index n, const PrimeModulus& p, const EnumLimits& limits);
bool vector_scan_feasible(Index n, const PrimeModulus& p, const EnumLimits& limits);
void require_vector_scan(Index n, const PrimeModulus& p, const EnumLimits& limits);

/// A verified ideal: A·space ⊆ space, checked on construction.
class Ideal {
public:
    Ideal(const NilpotentAlgebra& algebra, Subspace space);
    const Subspace& space() const noexcept { return space_; }
    Index dim() const noexcept { return space_.dim(); }

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.space_ == b.space_; }
    friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) {
        return a.space_ <=> b.space_;
    }

private:
    Subspace space_;
};

/// G(U) = U + A·U, the least ideal containing U. One application closes:
/// A·(U + AU) ⊆ AU + A²U ⊆ AU.
Ideal ideal_closure(const NilpotentAlgebra& algebra, const Subspace& u);

bool is_ideal(const NilpotentAlgebra& algebra, const Subspace& v);

enum class EnumStrategy { JoinClosure, Filter };

/// Every ideal of the algebra exactly once, ordered by dimension then
/// canonical form. Filter streams all subspaces and keeps the ideals;
/// join-closure collects the distinct principal ideals G(x) over projective
/// representatives and closes {0} ∪ principals under pairwise sums.
std::vector<Ideal> enumerate_ideals(const NilpotentAlgebra& algebra,
                                    EnumStrategy strategy = EnumStrategy::JoinClosure,
                                    const EnumLimits& limits = {}, int workers = 1);

/// Number of ideals of the algebra contained in bound (which must itself be
/// an ideal): join-closure with generators restricted to bound.
BigInt count_ideals_within(const NilpotentAlgebra& algebra, const Subspace& bound,
                           const EnumLimits& limits = {});

/// dim G({x}) for x ≠ 0.
Index principal_ideal_dim(const NilpotentAlgebra& algebra, const FpVec& x);

/// q_t = min{ dim G({x}) : x ∈ N_t \ N_{t-1} } for t = 1..e, by exhaustive
/// minimum over one representative per scalar class.
std::vector<Index> exact_q_minima(const NilpotentAlgebra& algebra, const EnumLimits& limits = {});

using FiberTable = std::map<Subspace, BigInt>;

/// |G^{-1}(J)| for every ideal J, by streaming all subspaces through the
/// closure map. Partitioned by pivot pattern across workers; the merged
/// table is independent of the worker count.
FiberTable fiber_census(const NilpotentAlgebra& algebra, const EnumLimits& limits = {},
                        int workers = 1);

struct StratumCheck {
    int t = 0;
    Index d_t = 0;
    Index q_t = 0;
    BigInt fiber_sum;        // Σ |G^{-1}(J)| over ideals J ⊆ N_t, J ⊄ N_{t-1}
    BigInt subspace_delta;   // s(N_t) − s(N_{t-1})
    BigInt ideal_delta;      // i(N_t) − i(N_{t-1})
    BigInt fiber_floor;      // p^{δ(q_t)}
    bool partition_ok = false;    // fiber_sum == subspace_delta
    bool fiber_bound_ok = false;  // fiber_floor · ideal_delta ≤ subspace_delta
};

struct StratifiedReport {
    std::vector<StratumCheck> strata;
    bool all_ok = true;
};

/// Verifies, per annihilator stratum, that the fibers of G partition the new
/// subspaces and that the per-ideal fiber floor p^{δ(q_t)} accounts for them.
StratifiedReport stratified_identity_check(const NilpotentAlgebra& algebra,
                                           const EnumLimits& limits = {}, int workers = 1);

struct StratumData {
    int t = 0;       // 0 = the zero ideal's degenerate stratum
    Index d_t = 0;
    BigInt i_within;  // ideals contained in N_t
    BigInt s_within;  // subspaces of N_t
    std::optional<Index> q_t;
};

struct CensusReport {
    BigInt i_count;
    BigInt s_count;
    BigRat ratio;
    std::vector<StratumData> strata;
    std::optional<FiberTable> fibers;
    EnumStrategy strategy = EnumStrategy::JoinClosure;
};

CensusReport census(const NilpotentAlgebra& algebra,
                    EnumStrategy strategy = EnumStrategy::JoinClosure,
                    const EnumLimits& limits = {}, int workers = 1, bool with_fibers = false);

/// Exact Lagrange fit of count_at over the sample primes (degree bound =
/// #primes − 1), rejected unless the coefficients are integers and the fit
/// reproduces count_at at the held-out validation prime.
QPolynomial interpolate_count(const std::function<BigInt(std::int64_t)>& count_at,
                              const std::vector<std::int64_t>& primes,
                              std::int64_t validation_prime);

}  // namespace nilcensus
