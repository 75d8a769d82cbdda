// Brute-force oracles for the unit suites. Everything here works on explicit
// vector sets so the results are independent of the echelon-form code paths
// they are used to check.

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "nilcensus/algebra.hpp"

namespace oracle {

using nilcensus::FpMat;
using nilcensus::FpVec;
using nilcensus::Index;
using nilcensus::PrimeModulus;
using nilcensus::Scalar;

using Vec = std::vector<Scalar>;
using VecSet = std::set<Vec>;

inline Vec to_vec(const FpVec& v) {
    Vec out(static_cast<std::size_t>(v.size()));
    for (Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = v(i);
    return out;
}

inline FpVec to_fpvec(const Vec& v) {
    FpVec out(static_cast<Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Index>(i)) = v[i];
    return out;
}

/// All p^k linear combinations of the generator rows.
inline VecSet span_of_rows(const FpMat& rows, const PrimeModulus& p) {
    const Index k = rows.rows(), n = rows.cols();
    VecSet out;
    std::vector<Scalar> coeff(static_cast<std::size_t>(k), 0);
    while (true) {
        Vec v(static_cast<std::size_t>(n), 0);
        for (Index i = 0; i < k; ++i)
            for (Index j = 0; j < n; ++j)
                v[static_cast<std::size_t>(j)] = nilcensus::add_mod(
                    v[static_cast<std::size_t>(j)],
                    nilcensus::mul_mod(coeff[static_cast<std::size_t>(i)], rows(i, j), p), p);
        out.insert(std::move(v));
        Index i = 0;
        while (i < k && ++coeff[static_cast<std::size_t>(i)] == p.value()) {
            coeff[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == k) break;
    }
    if (k == 0) out.insert(Vec(static_cast<std::size_t>(n), 0));
    return out;
}

inline VecSet span_of(const nilcensus::Subspace& s, const PrimeModulus& p) {
    VecSet out = span_of_rows(s.basis(), p);
    if (s.dim() == 0) out.insert(Vec(static_cast<std::size_t>(s.ambient()), 0));
    return out;
}

/// Every vector of F_p^n.
inline std::vector<Vec> all_vectors(Index n, const PrimeModulus& p) {
    std::vector<Vec> out;
    Vec v(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < v.size() && ++v[i] == p.value()) {
            v[i] = 0;
            ++i;
        }
        if (i == v.size()) break;
    }
    return out;
}

/// Every subspace of F_p^n as an explicit vector set, found by closing:
/// start from {0} and repeatedly extend any known subspace by any outside
/// vector. No echelon forms involved.
inline std::set<VecSet> all_subspaces(Index n, const PrimeModulus& p) {
    const auto vectors = all_vectors(n, p);
    std::set<VecSet> known;
    VecSet zero{Vec(static_cast<std::size_t>(n), 0)};
    known.insert(zero);
    std::vector<VecSet> work{zero};
    while (!work.empty()) {
        VecSet s = std::move(work.back());
        work.pop_back();
        for (const Vec& v : vectors) {
            if (s.count(v)) continue;
            // span(s ∪ {v}) = { w + c v : w ∈ s, c ∈ F_p }
            VecSet bigger;
            for (const Vec& w : s)
                for (Scalar c = 0; c < p.value(); ++c) {
                    Vec u(w.size());
                    for (std::size_t j = 0; j < w.size(); ++j)
                        u[j] = nilcensus::add_mod(
                            w[j], nilcensus::mul_mod(c, v[static_cast<std::size_t>(j)], p), p);
                    bigger.insert(std::move(u));
                }
            if (known.insert(bigger).second) work.push_back(std::move(bigger));
        }
    }
    return known;
}

inline std::size_t dim_of(const VecSet& s, const PrimeModulus& p) {
    std::size_t d = 0;
    for (std::size_t size = s.size(); size > 1; size /= static_cast<std::size_t>(p.value())) ++d;
    return d;
}

/// N_k as a vector set: all a with w · a = 0 for every k-fold product w of
/// basis elements (multisets suffice by commutativity). Checked against
/// every vector of the algebra.
inline VecSet annihilator_vecset(const nilcensus::NilpotentAlgebra& algebra, int k) {
    const Index n = algebra.dim();
    const PrimeModulus& p = algebra.modulus();

    VecSet distinct;
    std::vector<Index> choice(static_cast<std::size_t>(k), 0);
    // nondecreasing index tuples; the distinct products are few
    while (true) {
        FpVec w = FpVec::Zero(n);
        w(choice[0]) = 1;
        for (int i = 1; i < k; ++i) {
            FpVec g = FpVec::Zero(n);
            g(choice[static_cast<std::size_t>(i)]) = 1;
            w = algebra.multiply(w, g);
        }
        distinct.insert(to_vec(w));
        int i = k - 1;
        while (i >= 0 && choice[static_cast<std::size_t>(i)] == n - 1) --i;
        if (i < 0) break;
        const Index next = choice[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < k; ++j) choice[static_cast<std::size_t>(j)] = next;
    }
    std::vector<FpVec> products;
    for (const Vec& w : distinct) products.push_back(to_fpvec(w));

    VecSet out;
    for (const Vec& a : all_vectors(n, p)) {
        const FpVec av = to_fpvec(a);
        bool killed = true;
        for (const FpVec& w : products) {
            const FpVec prod = algebra.multiply(w, av);
            for (Index j = 0; j < n && killed; ++j) killed = prod(j) == 0;
            if (!killed) break;
        }
        if (killed) out.insert(a);
    }
    return out;
}

}  // namespace oracle
