#pragma once

#include <Eigen/Core>

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nilcensus/fp.hpp"

namespace nilcensus {

using Index = Eigen::Index;
using Scalar = std::int64_t;

// Row convention for spans: each row of an FpMat is one vector of F_p^n.
// Column convention for maps: a linear map acts on an FpVec by M * v.
using FpMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using FpVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

FpMat reduced(FpMat m, const PrimeModulus& p);
FpVec reduced(FpVec v, const PrimeModulus& p);

bool mat_eq(const FpMat& a, const FpMat& b);

std::string to_string(const FpVec& v);
std::string to_string(const FpMat& m);

/// A subspace of F_p^n held in reduced row echelon form. Each pivot entry is
/// 1 and is the only nonzero entry in its column, pivot columns strictly
/// increase by row, and zero rows are dropped. Two Subspace values describe
/// the same set of vectors iff they compare equal.
class Subspace {
public:
    Subspace() : ambient_(0), basis_(0, 0) {}

    static Subspace zero(Index ambient);
    static Subspace full(Index ambient);

    /// Wraps rows already known to be canonical RREF. Enumeration and kernel
    /// construction produce canonical rows directly and skip the elimination.
    static Subspace from_rref(Index ambient, FpMat basis, std::vector<Index> pivots);

    Index ambient() const noexcept { return ambient_; }
    Index dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return basis_.rows() == 0; }
    const FpMat& basis() const noexcept { return basis_; }
    const std::vector<Index>& pivots() const noexcept { return pivots_; }

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

private:
    Index ambient_;
    FpMat basis_;
    std::vector<Index> pivots_;
};

std::string to_string(const Subspace& s);

/// Canonical row space of an arbitrary generator matrix.
Subspace rref(FpMat rows, const PrimeModulus& p);

/// True iff v lies in the span of s.
bool contains(const Subspace& s, const FpVec& v, const PrimeModulus& p);

/// True iff inner is a subspace of outer.
bool contains(const Subspace& outer, const Subspace& inner, const PrimeModulus& p);

Subspace subspace_sum(const Subspace& a, const Subspace& b, const PrimeModulus& p);

/// Deterministic complement W with inner ⊕ W = outer: greedily extends
/// inner's basis by rows of outer's canonical basis (the standard basis
/// vectors whenever outer is the full space).
Subspace complement(const Subspace& inner, const Subspace& outer, const PrimeModulus& p);

/// {v : map * v = 0}, canonical.
Subspace kernel(const FpMat& map, const PrimeModulus& p);

/// Matrix F with (ambient - dim) rows whose kernel is exactly s: one row per
/// non-pivot column, w ↦ w(c) − Σ_k basis(k, c) · w(pivot_k).
FpMat membership_functionals(const Subspace& s, const PrimeModulus& p);

/// {v : map * v ∈ target}, canonical.
Subspace preimage(const FpMat& map, const Subspace& target, const PrimeModulus& p);

// ---------------------------------------------------------------------------
// Subspace enumeration.
//
// Subspaces are streamed by pivot pattern (the set of pivot columns), pattern
// classes in dimension-then-lexicographic order, and within one pattern the
// free entries run through F_p as a big-endian odometer over the row-major
// list of free positions. A free position of a pattern is any (row, col) with
// col right of that row's pivot and not itself a pivot column. Distinct
// pattern classes are disjoint, so workers may process them independently.
// ---------------------------------------------------------------------------

std::vector<std::vector<Index>> pivot_patterns(Index n, std::optional<Index> k = std::nullopt);

std::vector<std::pair<Index, Index>> pattern_free_positions(const std::vector<Index>& pattern,
                                                            Index n);

void for_each_subspace_in_pattern(const std::vector<Index>& pattern, Index n,
                                  const PrimeModulus& p,
                                  const std::function<void(const Subspace&)>& fn);

void for_each_subspace(Index n, const PrimeModulus& p, std::optional<Index> k,
                       const std::function<void(const Subspace&)>& fn);

std::vector<Subspace> enumerate_subspaces(Index n, const PrimeModulus& p,
                                          std::optional<Index> k = std::nullopt);

/// Streams one representative per scalar class of the nonzero vectors of
/// F_p^n (first nonzero coordinate normalized to 1).
void for_each_projective_vector(Index n, const PrimeModulus& p,
                                const std::function<void(const FpVec&)>& fn);

/// Number of projective representatives (p^n - 1) / (p - 1), or -1 when the
/// count overflows the requested budget.
std::int64_t projective_count(Index n, const PrimeModulus& p,
                              std::int64_t budget = std::int64_t{1} << 62);

}  // namespace nilcensus
