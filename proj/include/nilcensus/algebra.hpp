#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilcensus/linalg.hpp"

namespace nilcensus {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadCoordinatesError : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NotCommutativeError : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NotAssociativeError : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NotNilpotentError : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// One structure-constant entry: b_i · b_j = Σ_k coords[k].second · b_{coords[k].first}.
struct ProductEntry {
    Index i = 0;
    Index j = 0;
    std::vector<std::pair<Index, Scalar>> coords;
};

/// Chain of annihilator ideals N_1 ⊂ N_2 ⊂ … ⊂ N_e = A, where N_k collects
/// the elements killed by every k-fold product. dims are strictly increasing
/// and layer_dims[r] = dims[r] - dims[r-1] sum to dim(A). complements[r] is a
/// deterministic direct complement of N_r inside N_{r+1}.
struct AnnihilatorChain {
    std::vector<Subspace> layers;       // N_1 .. N_e
    std::vector<Index> dims;            // d_1 .. d_e
    std::vector<Index> layer_dims;      // t_1 .. t_e
    std::vector<Subspace> complements;  // W_1 .. W_e, N_r = W_r ⊕ N_{r-1}

    int length() const noexcept { return static_cast<int>(layers.size()); }
};

enum class AlgebraFamily { Custom, Uniserial, Binomial, Triangular };

/// A finite commutative nilpotent F_p-algebra given by its structure
/// constants on a fixed basis. Commutativity, nilpotency and associativity
/// are verified exhaustively at construction; instances are immutable
/// afterwards and safe to share across threads.
class NilpotentAlgebra {
public:
    static NilpotentAlgebra custom(const PrimeModulus& p, Index n,
                                   std::vector<std::string> basis_labels,
                                   const std::vector<ProductEntry>& products);

    /// One generator x with x^{e+1} = 0; basis x, x², …, x^e.
    static NilpotentAlgebra uniserial(const PrimeModulus& p, int e);

    /// m generators with squares zero; basis = nonempty square-free
    /// monomials, dim 2^m - 1, nilpotency index m.
    static NilpotentAlgebra binomial(const PrimeModulus& p, int m);

    /// Two generators x, y truncated beyond total degree e; basis = the
    /// monomials x^i y^j with 1 ≤ i+j ≤ e, dim e(e+3)/2.
    static NilpotentAlgebra triangular(const PrimeModulus& p, int e);

    const PrimeModulus& modulus() const noexcept { return p_; }
    Index dim() const noexcept { return n_; }
    bool is_zero_algebra() const noexcept { return n_ == 0; }
    const std::vector<std::string>& basis_labels() const noexcept { return labels_; }

    /// Matrix of multiplication by basis element b_i, acting as M * v.
    const FpMat& mult_matrix(Index i) const { return mult_.at(static_cast<std::size_t>(i)); }

    /// Bilinear product of two coordinate vectors.
    FpVec multiply(const FpVec& u, const FpVec& v) const;

    /// A·U = span{ b_i · u : i < n, u ∈ basis(U) }.
    Subspace module_product(const Subspace& u) const;

    /// A¹ ⊇ A² ⊇ … ⊇ A^e (the nonzero powers).
    const std::vector<Subspace>& power_chain() const noexcept { return powers_; }

    /// Nilpotency index e: A^e ≠ 0 and A^{e+1} = 0. Zero for the 0-algebra.
    int nil_index() const noexcept { return static_cast<int>(powers_.size()); }

    const AnnihilatorChain& annihilator_chain() const noexcept { return chain_; }

    AlgebraFamily family() const noexcept { return family_; }
    int family_param() const noexcept { return family_param_; }

    /// "triangular(2)@3", "binomial(4)@5", "custom(dim 3)@7", …
    std::string descriptor() const;

private:
    NilpotentAlgebra(PrimeModulus p, Index n, std::vector<std::string> labels,
                     std::vector<FpMat> mult, AlgebraFamily family, int family_param);

    void validate() const;
    void compute_power_chain();
    void compute_annihilator_chain();

    PrimeModulus p_;
    Index n_;
    std::vector<std::string> labels_;
    std::vector<FpMat> mult_;  // mult_[i] = matrix of multiplication by b_i
    std::vector<Subspace> powers_;
    AnnihilatorChain chain_;
    AlgebraFamily family_;
    int family_param_;
};

}  // namespace nilcensus
