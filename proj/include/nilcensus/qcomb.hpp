#pragma once

#include <string>
#include <vector>

#include "nilcensus/fp.hpp"
#include "nilcensus/qpoly.hpp"

namespace nilcensus {

/// Number of k-dimensional subspaces of F_q^n as a polynomial in q, computed
/// purely by the Pascal-type recursion
///   [n k] = [n-1 k-1] + q^k [n-1 k]
/// so every intermediate value is an integer polynomial. Zero for k < 0 or
/// k > n; degree k(n-k) otherwise.
QPolynomial gauss_binomial_poly(int n, int k);

BigInt gauss_binomial_eval(int n, int k, const PrimeModulus& p);

/// Total number of subspaces of F_q^n, as a polynomial and evaluated.
QPolynomial s_poly(int n);
BigInt s_eval(int n, const PrimeModulus& p);

/// ⌊t²/4⌋ — the exponent scale governing subspace-count growth.
long delta(long t);

/// Number of k-dimensional subspaces U of a d-dimensional space with
/// U ∩ W₀ = 0 for a fixed r-dimensional W₀: p^{rk} · [d-r k]_p.
BigInt count_general_position(int d, int r, int k, const PrimeModulus& p);

/// Number of subspaces of a t-dimensional space not contained in a fixed
/// hyperplane: Σ_{k=0}^{t-1} p^k [t-1 k]_p. Always at least p^δ(t).
BigInt count_not_in_hyperplane(int t, const PrimeModulus& p);

struct GrowthCheck {
    std::string label;
    bool applicable = false;
    bool holds = true;  // vacuously true when not applicable
};

/// Exact verification of the s(n)-growth inequalities relating s(n) to
/// s(n-1), s(n-2) and s(m):
///   a) n ≥ 2:           s(n) ≥ p^{n-1} s(n-2)
///   b) n > 1 even:      s(n) ≥ ½ p^{n/2} s(n-1)
///   c) n odd:           s(n) ≥ p^{(n-1)/2} s(n-1)
///   d) n ≥ m ≥ 0:       s(n) ≥ ½ p^{δ(n)-δ(m)} s(m), the ½ dropped when
///                       m ≡ n (mod 2) or n is odd.
struct GrowthReport {
    int n = 0;
    int m = 0;
    std::int64_t p = 0;
    std::vector<GrowthCheck> parts;
    bool all_hold = true;
};

GrowthReport check_growth_inequalities(int n, int m, const PrimeModulus& p);

}  // namespace nilcensus
