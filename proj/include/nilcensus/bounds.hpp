#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilcensus/census.hpp"

namespace nilcensus {

struct HypothesisViolatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// How the per-stratum principal-ideal minima q_t are supplied:
///   Exact        — computed by exhaustive scan,
///   GenericT     — the universal floor q_t = t,
///   BinomialPow2 — the structural floor q_t = 2^{t-1} for binomial algebras.
enum class QMode { Exact, GenericT, BinomialPow2 };

std::string to_string(QMode mode);

/// s(t_1) + (s(t_2) − 1) + … + (s(t_e) − 1): the count of ideals of the form
/// N_{r-1} + (nonzero subspace of W_r), plus the zero ideal. Depends only on
/// the layer dimensions, not on the complement choice.
BigInt lambda_lower(const NilpotentAlgebra& algebra);

/// p^{δ(max t_r)}.
BigInt rough_lower(const NilpotentAlgebra& algebra);

/// (2e−1) / p^{δ(e)}, the census-free ratio bound. Requires 0 < e < p.
BigRat upper_main_ratio(const NilpotentAlgebra& algebra);

/// upper_main_ratio · s(n) as a bound on the ideal count.
BigRat upper_main(const NilpotentAlgebra& algebra);

struct StratifiedBounds {
    QMode mode = QMode::GenericT;
    std::vector<Index> q;  // q_1 .. q_e as used
    // Count bounds, weakest to strongest containments:
    //   telescoped ≤ dropped ≤ refined, and refined(GenericT) ≤ upper_main.
    BigRat telescoped;  // Σ_{t<e} (p^{−δ(q_t)} − p^{−δ(q_{t+1})}) s(N_t) + p^{−δ(q_e)} s(N_e)
    BigRat dropped;     // Σ_t p^{−δ(q_t)} s(N_t)   (negative terms omitted)
    BigRat refined;     // (Σ_{t<e} 2 p^{−δ(q_t)+δ(d_t)−δ(d_e)} + p^{−δ(q_e)}) s(A)
};

/// The stratified upper bounds for the requested q-mode. Exact mode scans
/// unless precomputed minima are passed in. Requires 0 < e < p.
StratifiedBounds upper_stratified(const NilpotentAlgebra& algebra, QMode mode,
                                  const std::vector<Index>* exact_q = nullptr,
                                  const EnumLimits& limits = {});

/// One monomial p^{-exponent} term of the ratio-form stratified bound, after
/// dividing the dropped-negatives bound by s(A) and applying the growth
/// inequality s(A) ≥ (½) p^{δ(d_e)−δ(d_t)} s(d_t) per stratum. coefficient
/// is 2 exactly when the ½ cannot be dropped (parity mismatch with odd d_e).
struct RatioChainTerm {
    int t = 0;
    int coefficient = 1;
    long exponent = 0;
};

struct RatioChain {
    std::vector<RatioChainTerm> terms;
    BigRat total;              // Σ coefficient · p^{-exponent}
    bool simplified_ok = false;  // total ≤ (c_min + 1) p^{-min exponent}, checked exactly
    long dominant_exponent = 0;
    int dominant_coefficient = 0;  // c_min + 1
};

RatioChain stratified_ratio_chain(const NilpotentAlgebra& algebra, QMode mode,
                                  const std::vector<Index>* exact_q = nullptr,
                                  const EnumLimits& limits = {});

/// (2/p)·s(A) for e = 2 (p ≥ 3, n ≥ 3); (2/p²)·s(A) for e = 3 (p ≥ 3, n ≥ 4);
/// absent otherwise.
std::optional<BigRat> upper_small_e(const NilpotentAlgebra& algebra);

/// Best census-free bound on i/s for the given shape: the small-e refinement
/// when its preconditions hold, else the main bound. Requires 0 < e < p.
BigRat predicted_ratio_bound(int e, Index n, const PrimeModulus& p);

/// True iff the census-free bound already forces i/s < 1/100.
bool predicted_below_one_percent(int e, Index n, const PrimeModulus& p);

struct RatioClassification {
    BigRat ratio;            // exact i(A)/s(A)
    BigRat predicted_bound;  // census-free bound
    bool predicted_small = false;
};

RatioClassification correspondence_ratio(const NilpotentAlgebra& algebra, const BigInt& i_count);

/// Per-stratum exact check that p^{δ(q_t)} (i(N_t) − i(N_{t-1})) never
/// exceeds s(N_t) − s(N_{t-1}), with exhaustively computed q_t.
StratifiedReport check_stratum_fiber_bounds(const NilpotentAlgebra& algebra,
                                            const EnumLimits& limits = {}, int workers = 1);

struct BoundReport {
    std::int64_t p = 0;
    Index n = 0;
    int e = 0;
    std::vector<Index> chain_dims;
    std::vector<Index> layer_dims;

    BigInt s_count;
    BigInt lambda;
    BigInt rough;

    bool hypothesis_ok = false;  // 0 < e < p
    QMode q_mode = QMode::GenericT;
    std::vector<Index> q_values;
    std::optional<BigRat> main_ratio;
    std::optional<BigRat> main;
    std::optional<BigRat> stratified;          // telescoped form
    std::optional<BigRat> stratified_dropped;  // negatives omitted
    std::optional<BigRat> stratified_refined;
    std::optional<BigRat> small_e;
    bool delta_gap_ok = false;  // δ(d_e) − δ(d_t) ≥ δ(e) − δ(t) for every t

    std::optional<BigInt> i_count;  // when a census is feasible
    std::optional<BigRat> ratio;
    std::optional<BigRat> threshold_bound;
    std::optional<bool> threshold_predicted;

    // The telescoped bound uses p^{−δ(q_{t+1})} in the alternating
    // coefficient; the positive-exponent variant would be vacuous.
    std::string sign_note =
        "telescoped coefficients use p^(-delta(q_{t+1})); "
        "the positive-exponent reading is vacuous";
};

/// Every bound the library knows, with applicability flags instead of
/// failures when e ≥ p, and census-backed fields filled only when feasible.
BoundReport bound_report(const NilpotentAlgebra& algebra, const EnumLimits& limits = {},
                         int workers = 1);

}  // namespace nilcensus
