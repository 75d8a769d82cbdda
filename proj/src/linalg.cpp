#include "nilcensus/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace nilcensus {

FpMat reduced(FpMat m, const PrimeModulus& p) {
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) m(i, j) = mod_reduce(m(i, j), p);
    return m;
}

FpVec reduced(FpVec v, const PrimeModulus& p) {
    for (Index i = 0; i < v.size(); ++i) v(i) = mod_reduce(v(i), p);
    return v;
}

bool mat_eq(const FpMat& a, const FpMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

std::string to_string(const FpVec& v) {
    std::ostringstream os;
    os << '(';
    for (Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
    os << ')';
    return os.str();
}

std::string to_string(const FpMat& m) {
    std::ostringstream os;
    os << '[';
    for (Index i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (Index j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    }
    os << ']';
    return os.str();
}

Subspace Subspace::zero(Index ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = FpMat(0, ambient);
    return s;
}

Subspace Subspace::full(Index ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = FpMat::Identity(ambient, ambient);
    s.pivots_.resize(static_cast<std::size_t>(ambient));
    for (Index i = 0; i < ambient; ++i) s.pivots_[static_cast<std::size_t>(i)] = i;
    return s;
}

Subspace Subspace::from_rref(Index ambient, FpMat basis, std::vector<Index> pivots) {
    assert(basis.cols() == ambient);
    assert(basis.rows() == static_cast<Index>(pivots.size()));
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(pivots);
    return s;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && mat_eq(a.basis_, b.basis_);
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    if (auto c = a.pivots_ <=> b.pivots_; c != 0) return c;
    for (Index i = 0; i < a.basis_.rows(); ++i)
        for (Index j = 0; j < a.basis_.cols(); ++j)
            if (auto c = a.basis_(i, j) <=> b.basis_(i, j); c != 0) return c;
    return std::strong_ordering::equal;
}

std::string to_string(const Subspace& s) {
    return "span" + to_string(s.basis());
}

Subspace rref(FpMat rows, const PrimeModulus& p) {
    const Index n = rows.cols();
    rows = reduced(std::move(rows), p);
    std::vector<Index> pivots;
    Index r = 0;
    for (Index col = 0; col < n && r < rows.rows(); ++col) {
        Index pivot_row = -1;
        for (Index i = r; i < rows.rows(); ++i)
            if (rows(i, col) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        rows.row(r).swap(rows.row(pivot_row));
        const Scalar inv = inv_mod(rows(r, col), p);
        for (Index j = col; j < n; ++j) rows(r, j) = mul_mod(rows(r, j), inv, p);
        for (Index i = 0; i < rows.rows(); ++i) {
            if (i == r || rows(i, col) == 0) continue;
            const Scalar f = rows(i, col);
            for (Index j = col; j < n; ++j)
                rows(i, j) = sub_mod(rows(i, j), mul_mod(f, rows(r, j), p), p);
        }
        pivots.push_back(col);
        ++r;
    }
    FpMat basis = rows.topRows(r);
    return Subspace::from_rref(n, std::move(basis), std::move(pivots));
}

bool contains(const Subspace& s, const FpVec& v, const PrimeModulus& p) {
    if (v.size() != s.ambient())
        throw DimensionMismatchError("contains: vector length " + std::to_string(v.size()) +
                                     " vs ambient " + std::to_string(s.ambient()));
    FpVec w = reduced(v, p);
    for (Index r = 0; r < s.dim(); ++r) {
        const Index col = s.pivots()[static_cast<std::size_t>(r)];
        const Scalar f = w(col);
        if (f == 0) continue;
        for (Index j = col; j < s.ambient(); ++j)
            w(j) = sub_mod(w(j), mul_mod(f, s.basis()(r, j), p), p);
    }
    for (Index j = 0; j < w.size(); ++j)
        if (w(j) != 0) return false;
    return true;
}

bool contains(const Subspace& outer, const Subspace& inner, const PrimeModulus& p) {
    if (outer.ambient() != inner.ambient())
        throw DimensionMismatchError("contains: ambient dimensions differ");
    if (inner.dim() > outer.dim()) return false;
    for (Index r = 0; r < inner.dim(); ++r)
        if (!contains(outer, FpVec(inner.basis().row(r).transpose()), p)) return false;
    return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b, const PrimeModulus& p) {
    if (a.ambient() != b.ambient())
        throw DimensionMismatchError("subspace_sum: ambient dimensions differ");
    FpMat rows(a.dim() + b.dim(), a.ambient());
    rows.topRows(a.dim()) = a.basis();
    rows.bottomRows(b.dim()) = b.basis();
    return rref(std::move(rows), p);
}

Subspace complement(const Subspace& inner, const Subspace& outer, const PrimeModulus& p) {
    if (inner.ambient() != outer.ambient())
        throw DimensionMismatchError("complement: ambient dimensions differ");
    if (!contains(outer, inner, p))
        throw std::invalid_argument("complement: inner is not contained in outer");
    FpMat work(outer.dim() + 1, outer.ambient());
    work.topRows(inner.dim()) = inner.basis();
    Index rank = inner.dim();
    std::vector<Index> chosen;
    for (Index r = 0; r < outer.dim() && rank < outer.dim(); ++r) {
        work.row(rank) = outer.basis().row(r);
        Subspace span = rref(FpMat(work.topRows(rank + 1)), p);
        if (span.dim() == rank + 1) {
            chosen.push_back(r);
            ++rank;
        }
    }
    FpMat rows(static_cast<Index>(chosen.size()), outer.ambient());
    for (Index i = 0; i < rows.rows(); ++i)
        rows.row(i) = outer.basis().row(chosen[static_cast<std::size_t>(i)]);
    return rref(std::move(rows), p);
}

Subspace kernel(const FpMat& map, const PrimeModulus& p) {
    const Index d = map.cols();
    Subspace constraints = rref(FpMat(map), p);  // row space of the constraint matrix
    const auto& piv = constraints.pivots();
    std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
    for (Index c : piv) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<Index> free_cols;
    for (Index j = 0; j < d; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);

    // One parametric solution per free column, then canonicalize: the
    // parametric rows are independent but not in echelon form.
    FpMat basis(static_cast<Index>(free_cols.size()), d);
    basis.setZero();
    for (Index i = 0; i < basis.rows(); ++i) {
        const Index f = free_cols[static_cast<std::size_t>(i)];
        basis(i, f) = 1;
        for (Index r = 0; r < constraints.dim(); ++r)
            basis(i, piv[static_cast<std::size_t>(r)]) = neg_mod(constraints.basis()(r, f), p);
    }
    return rref(std::move(basis), p);
}

FpMat membership_functionals(const Subspace& s, const PrimeModulus& p) {
    const Index m = s.ambient();
    const auto& piv = s.pivots();
    std::vector<bool> is_pivot(static_cast<std::size_t>(m), false);
    for (Index c : piv) is_pivot[static_cast<std::size_t>(c)] = true;

    // w ∈ s iff, after eliminating the pivot coordinates with s's basis rows,
    // every non-pivot coordinate of the residual vanishes.
    FpMat functionals(m - s.dim(), m);
    functionals.setZero();
    Index row = 0;
    for (Index c = 0; c < m; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        functionals(row, c) = 1;
        for (Index k = 0; k < s.dim(); ++k)
            functionals(row, piv[static_cast<std::size_t>(k)]) = neg_mod(s.basis()(k, c), p);
        ++row;
    }
    return functionals;
}

Subspace preimage(const FpMat& map, const Subspace& target, const PrimeModulus& p) {
    if (map.rows() != target.ambient())
        throw DimensionMismatchError("preimage: map codomain " + std::to_string(map.rows()) +
                                     " vs target ambient " + std::to_string(target.ambient()));
    const Index m = target.ambient();
    const FpMat functionals = membership_functionals(target, p);
    FpMat composed(functionals.rows(), map.cols());
    for (Index i = 0; i < composed.rows(); ++i)
        for (Index j = 0; j < composed.cols(); ++j) {
            Scalar acc = 0;
            for (Index k = 0; k < m; ++k)
                acc = add_mod(acc, mul_mod(functionals(i, k), map(k, j), p), p);
            composed(i, j) = acc;
        }
    return kernel(composed, p);
}

std::vector<std::vector<Index>> pivot_patterns(Index n, std::optional<Index> k) {
    if (k && (*k < 0 || *k > n))
        throw std::invalid_argument("pivot_patterns: k out of range");
    std::vector<std::vector<Index>> out;
    auto emit_for_dim = [&](Index dim) {
        if (dim == 0) {
            out.emplace_back();
            return;
        }
        std::vector<Index> c(static_cast<std::size_t>(dim));
        for (Index i = 0; i < dim; ++i) c[static_cast<std::size_t>(i)] = i;
        while (true) {
            out.push_back(c);
            Index i = dim - 1;
            while (i >= 0 && c[static_cast<std::size_t>(i)] == n - dim + i) --i;
            if (i < 0) break;
            ++c[static_cast<std::size_t>(i)];
            for (Index j = i + 1; j < dim; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    };
    if (k) {
        emit_for_dim(*k);
    } else {
        for (Index dim = 0; dim <= n; ++dim) emit_for_dim(dim);
    }
    return out;
}

std::vector<std::pair<Index, Index>> pattern_free_positions(const std::vector<Index>& pattern,
                                                            Index n) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (Index c : pattern) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::pair<Index, Index>> free;
    for (std::size_t i = 0; i < pattern.size(); ++i)
        for (Index j = pattern[i] + 1; j < n; ++j)
            if (!is_pivot[static_cast<std::size_t>(j)]) free.emplace_back(static_cast<Index>(i), j);
    return free;
}

void for_each_subspace_in_pattern(const std::vector<Index>& pattern, Index n,
                                  const PrimeModulus& p,
                                  const std::function<void(const Subspace&)>& fn) {
    const Index r = static_cast<Index>(pattern.size());
    FpMat basis(r, n);
    basis.setZero();
    for (Index i = 0; i < r; ++i) basis(i, pattern[static_cast<std::size_t>(i)]) = 1;
    const auto free = pattern_free_positions(pattern, n);
    std::vector<Scalar> digits(free.size(), 0);
    while (true) {
        fn(Subspace::from_rref(n, basis, pattern));
        // big-endian odometer: last free position moves fastest
        std::size_t i = free.size();
        while (i > 0) {
            --i;
            if (++digits[i] < p.value()) {
                basis(free[i].first, free[i].second) = digits[i];
                break;
            }
            digits[i] = 0;
            basis(free[i].first, free[i].second) = 0;
            if (i == 0) return;
        }
        if (free.empty()) return;
    }
}

void for_each_subspace(Index n, const PrimeModulus& p, std::optional<Index> k,
                       const std::function<void(const Subspace&)>& fn) {
    for (const auto& pattern : pivot_patterns(n, k))
        for_each_subspace_in_pattern(pattern, n, p, fn);
}

std::vector<Subspace> enumerate_subspaces(Index n, const PrimeModulus& p, std::optional<Index> k) {
    std::vector<Subspace> out;
    for_each_subspace(n, p, k, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

void for_each_projective_vector(Index n, const PrimeModulus& p,
                                const std::function<void(const FpVec&)>& fn) {
    FpVec v(n);
    for (Index lead = 0; lead < n; ++lead) {
        v.setZero();
        v(lead) = 1;
        // odometer over coordinates lead+1 .. n-1
        while (true) {
            fn(v);
            Index i = n;
            bool done = true;
            while (i > lead + 1) {
                --i;
                if (++v(i) < p.value()) {
                    done = false;
                    break;
                }
                v(i) = 0;
            }
            if (done) break;
        }
    }
}

std::int64_t projective_count(Index n, const PrimeModulus& p, std::int64_t budget) {
    std::int64_t total = 0;
    std::int64_t layer = 1;  // p^(n-1-lead) for lead = n-1 down to 0
    for (Index lead = 0; lead < n; ++lead) {
        if (total > budget) return -1;
        total += layer;
        if (layer > budget / p.value() + 1) layer = budget + 1;
        else layer *= p.value();
    }
    return total <= budget ? total : -1;
}

}  // namespace nilcensus
