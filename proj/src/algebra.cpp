#include "nilcensus/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nilcensus {

namespace {

std::string triple(Index i, Index j, Index k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
}

std::vector<std::string> default_labels(Index n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    return labels;
}

}  // namespace

NilpotentAlgebra::NilpotentAlgebra(PrimeModulus p, Index n, std::vector<std::string> labels,
                                   std::vector<FpMat> mult, AlgebraFamily family,
                                   int family_param)
    : p_(p),
      n_(n),
      labels_(std::move(labels)),
      mult_(std::move(mult)),
      family_(family),
      family_param_(family_param) {
    // dense structure constants are n^3 scalars and validation is O(n^4)
    if (n_ > 128)
        throw std::invalid_argument("algebra dimension " + std::to_string(n_) +
                                    " exceeds the supported cap of 128");
    validate();
    compute_power_chain();
    compute_annihilator_chain();
}

NilpotentAlgebra NilpotentAlgebra::custom(const PrimeModulus& p, Index n,
                                          std::vector<std::string> basis_labels,
                                          const std::vector<ProductEntry>& products) {
    if (n < 0) throw BadCoordinatesError("custom: dimension must be nonnegative");
    if (basis_labels.empty()) basis_labels = default_labels(n);
    if (static_cast<Index>(basis_labels.size()) != n)
        throw BadCoordinatesError("custom: expected " + std::to_string(n) + " basis labels, got " +
                                  std::to_string(basis_labels.size()));

    std::map<std::pair<Index, Index>, FpVec> given;
    for (const auto& e : products) {
        if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n)
            throw BadCoordinatesError("custom: product index out of range at (" +
                                      std::to_string(e.i) + "," + std::to_string(e.j) + ")");
        FpVec v = FpVec::Zero(n);
        for (const auto& [k, c] : e.coords) {
            if (k < 0 || k >= n)
                throw BadCoordinatesError("custom: coordinate index " + std::to_string(k) +
                                          " out of range in product " + triple(e.i, e.j, k));
            if (c < 0 || c >= p.value())
                throw BadCoordinatesError("custom: coefficient " + std::to_string(c) +
                                          " not a canonical residue in product " +
                                          triple(e.i, e.j, k));
            v(k) = c;
        }
        auto key = std::make_pair(e.i, e.j);
        if (auto it = given.find(key); it != given.end() && !mat_eq(it->second, v))
            throw BadCoordinatesError("custom: product (" + std::to_string(e.i) + "," +
                                      std::to_string(e.j) + ") listed twice with different values");
        given.emplace(key, std::move(v));
    }

    // symmetric completion; explicit (i,j)/(j,i) disagreements are rejected
    std::vector<FpMat> mult(static_cast<std::size_t>(n), FpMat::Zero(n, n));
    for (Index i = 0; i < n; ++i)
        for (Index j = i; j < n; ++j) {
            auto a = given.find({i, j});
            auto b = given.find({j, i});
            if (a != given.end() && b != given.end() && !mat_eq(a->second, b->second))
                throw NotCommutativeError("custom: products (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") and (" + std::to_string(j) + "," +
                                          std::to_string(i) + ") disagree");
            const FpVec* v = a != given.end() ? &a->second
                           : b != given.end() ? &b->second
                                              : nullptr;
            if (!v) continue;
            mult[static_cast<std::size_t>(i)].col(j) = *v;
            mult[static_cast<std::size_t>(j)].col(i) = *v;
        }
    return NilpotentAlgebra(p, n, std::move(basis_labels), std::move(mult), AlgebraFamily::Custom,
                            static_cast<int>(n));
}

NilpotentAlgebra NilpotentAlgebra::uniserial(const PrimeModulus& p, int e) {
    if (e < 1) throw std::invalid_argument("uniserial: need e >= 1");
    const Index n = e;
    std::vector<std::string> labels;
    for (int i = 1; i <= e; ++i)
        labels.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
    std::vector<FpMat> mult(static_cast<std::size_t>(n), FpMat::Zero(n, n));
    // basis index i holds x^{i+1}; x^{i+1} x^{j+1} = x^{i+j+2}
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (i + j + 2 <= e) mult[static_cast<std::size_t>(i)](i + j + 1, j) = 1;
    return NilpotentAlgebra(p, n, std::move(labels), std::move(mult), AlgebraFamily::Uniserial, e);
}

NilpotentAlgebra NilpotentAlgebra::binomial(const PrimeModulus& p, int m) {
    if (m < 1) throw std::invalid_argument("binomial: need m >= 1");
    if (m > 7) throw std::invalid_argument("binomial: m too large (dimension 2^m - 1 > 128)");
    // basis = nonempty subsets of the m variables, ordered by size then
    // lexicographically on the sorted variable lists
    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < (1u << m); ++mask) masks.push_back(mask);
    auto elements = [&](unsigned mask) {
        std::vector<int> v;
        for (int b = 0; b < m; ++b)
            if (mask & (1u << b)) v.push_back(b);
        return v;
    };
    std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
        const auto ea = elements(a), eb = elements(b);
        if (ea.size() != eb.size()) return ea.size() < eb.size();
        return ea < eb;
    });
    std::map<unsigned, Index> index_of;
    for (std::size_t i = 0; i < masks.size(); ++i) index_of[masks[i]] = static_cast<Index>(i);

    const char* short_names = "xyzw";
    std::vector<std::string> labels;
    for (unsigned mask : masks) {
        std::string label;
        for (int b : elements(mask))
            label += m <= 4 ? std::string(1, short_names[b]) : "x" + std::to_string(b + 1);
        labels.push_back(std::move(label));
    }

    const Index n = static_cast<Index>(masks.size());
    std::vector<FpMat> mult(static_cast<std::size_t>(n), FpMat::Zero(n, n));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            const unsigned a = masks[static_cast<std::size_t>(i)], b = masks[static_cast<std::size_t>(j)];
            if ((a & b) == 0) mult[static_cast<std::size_t>(i)](index_of[a | b], j) = 1;
        }
    return NilpotentAlgebra(p, n, std::move(labels), std::move(mult), AlgebraFamily::Binomial, m);
}

NilpotentAlgebra NilpotentAlgebra::triangular(const PrimeModulus& p, int e) {
    if (e < 1) throw std::invalid_argument("triangular: need e >= 1");
    // basis = monomials x^i y^j with 1 <= i+j <= e, ordered by total degree,
    // x-exponent descending within a degree: x, y, x^2, xy, y^2, ...
    std::vector<std::pair<int, int>> monos;
    for (int d = 1; d <= e; ++d)
        for (int i = d; i >= 0; --i) monos.emplace_back(i, d - i);
    std::map<std::pair<int, int>, Index> index_of;
    for (std::size_t k = 0; k < monos.size(); ++k) index_of[monos[k]] = static_cast<Index>(k);

    auto pretty = [](int a, int b) {
        std::string s;
        if (a > 0) s += a == 1 ? "x" : "x^" + std::to_string(a);
        if (b > 0) s += b == 1 ? "y" : "y^" + std::to_string(b);
        return s;
    };
    std::vector<std::string> labels;
    for (auto [a, b] : monos) labels.push_back(pretty(a, b));

    const Index n = static_cast<Index>(monos.size());
    std::vector<FpMat> mult(static_cast<std::size_t>(n), FpMat::Zero(n, n));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            const auto [a1, b1] = monos[static_cast<std::size_t>(i)];
            const auto [a2, b2] = monos[static_cast<std::size_t>(j)];
            if (a1 + b1 + a2 + b2 <= e)
                mult[static_cast<std::size_t>(i)](index_of[{a1 + a2, b1 + b2}], j) = 1;
        }
    return NilpotentAlgebra(p, n, std::move(labels), std::move(mult), AlgebraFamily::Triangular, e);
}

FpVec NilpotentAlgebra::multiply(const FpVec& u, const FpVec& v) const {
    if (u.size() != n_ || v.size() != n_)
        throw DimensionMismatchError("multiply: coordinate length does not match dim");
    FpVec acc = FpVec::Zero(n_);
    for (Index i = 0; i < n_; ++i) {
        if (u(i) == 0) continue;
        const FpMat& m = mult_[static_cast<std::size_t>(i)];
        for (Index r = 0; r < n_; ++r) {
            Scalar dot = 0;
            for (Index j = 0; j < n_; ++j)
                dot = add_mod(dot, mul_mod(m(r, j), v(j), p_), p_);
            acc(r) = add_mod(acc(r), mul_mod(u(i), dot, p_), p_);
        }
    }
    return acc;
}

Subspace NilpotentAlgebra::module_product(const Subspace& u) const {
    if (u.ambient() != n_)
        throw DimensionMismatchError("module_product: ambient does not match dim");
    FpMat rows(n_ * u.dim(), n_);
    Index r = 0;
    for (Index i = 0; i < n_; ++i) {
        const FpMat& m = mult_[static_cast<std::size_t>(i)];
        for (Index s = 0; s < u.dim(); ++s, ++r)
            for (Index row = 0; row < n_; ++row) {
                Scalar dot = 0;
                for (Index j = 0; j < n_; ++j)
                    dot = add_mod(dot, mul_mod(m(row, j), u.basis()(s, j), p_), p_);
                rows(r, row) = dot;
            }
    }
    return rref(std::move(rows), p_);
}

void NilpotentAlgebra::validate() const {
    for (Index i = 0; i < n_; ++i)
        for (Index j = 0; j < n_; ++j)
            if (!mat_eq(FpMat(mult_[static_cast<std::size_t>(i)].col(j)),
                        FpMat(mult_[static_cast<std::size_t>(j)].col(i))))
                throw NotCommutativeError("products disagree at " + triple(i, j, -1));

    // Nilpotency is checked before associativity: the power chain is a plain
    // bilinear span computation and its fixed points identify non-nilpotent
    // tensors regardless of associativity.
    Subspace power = Subspace::full(n_);
    for (Index step = 0; step <= n_ + 1 && !power.is_zero(); ++step) {
        Subspace next = module_product(power);
        if (next == power)
            throw NotNilpotentError("power chain stabilizes at nonzero dimension " +
                                    std::to_string(power.dim()));
        if (step == n_ + 1)
            throw NotNilpotentError("power chain fails to reach zero");
        power = std::move(next);
    }

    for (Index i = 0; i < n_; ++i)
        for (Index j = 0; j < n_; ++j)
            for (Index k = 0; k < n_; ++k) {
                const FpVec ij = FpVec(mult_[static_cast<std::size_t>(i)].col(j));
                const FpVec jk = FpVec(mult_[static_cast<std::size_t>(j)].col(k));
                FpVec lhs = FpVec::Zero(n_);  // (b_i b_j) b_k = b_k · (b_i b_j)
                FpVec rhs = FpVec::Zero(n_);  // b_i · (b_j b_k)
                for (Index r = 0; r < n_; ++r)
                    for (Index c = 0; c < n_; ++c) {
                        lhs(r) = add_mod(lhs(r),
                                         mul_mod(mult_[static_cast<std::size_t>(k)](r, c), ij(c), p_), p_);
                        rhs(r) = add_mod(rhs(r),
                                         mul_mod(mult_[static_cast<std::size_t>(i)](r, c), jk(c), p_), p_);
                    }
                if (!mat_eq(FpMat(lhs), FpMat(rhs)))
                    throw NotAssociativeError("associativity fails at triple " + triple(i, j, k));
            }
}

void NilpotentAlgebra::compute_power_chain() {
    powers_.clear();
    if (n_ == 0) return;
    Subspace power = Subspace::full(n_);
    while (!power.is_zero()) {
        powers_.push_back(power);
        power = module_product(power);
    }
}

void NilpotentAlgebra::compute_annihilator_chain() {
    chain_ = AnnihilatorChain{};
    if (n_ == 0) return;

    // N_1 = ∩_i ker(mult by b_i); N_k = { a : b_i a ∈ N_{k-1} for all i }.
    // Each step is one kernel of the stacked per-generator constraints
    // F · M_i, where ker F = N_{k-1}.
    Subspace previous = Subspace::zero(n_);
    while (previous.dim() < n_) {
        const FpMat functionals = membership_functionals(previous, p_);
        FpMat stacked(functionals.rows() * n_, n_);
        for (Index i = 0; i < n_; ++i) {
            const FpMat& m = mult_[static_cast<std::size_t>(i)];
            for (Index r = 0; r < functionals.rows(); ++r)
                for (Index c = 0; c < n_; ++c) {
                    Scalar dot = 0;
                    for (Index k = 0; k < n_; ++k)
                        dot = add_mod(dot, mul_mod(functionals(r, k), m(k, c), p_), p_);
                    stacked(i * functionals.rows() + r, c) = dot;
                }
        }
        Subspace next = kernel(stacked, p_);
        if (next.dim() <= previous.dim())
            throw NotNilpotentError("annihilator chain stalls at dimension " +
                                    std::to_string(previous.dim()));
        chain_.complements.push_back(complement(previous, next, p_));
        chain_.layer_dims.push_back(next.dim() - previous.dim());
        chain_.dims.push_back(next.dim());
        chain_.layers.push_back(next);
        previous = std::move(next);
    }
}

std::string NilpotentAlgebra::descriptor() const {
    std::ostringstream os;
    switch (family_) {
        case AlgebraFamily::Uniserial: os << "uniserial(" << family_param_ << ")"; break;
        case AlgebraFamily::Binomial: os << "binomial(" << family_param_ << ")"; break;
        case AlgebraFamily::Triangular: os << "triangular(" << family_param_ << ")"; break;
        case AlgebraFamily::Custom: os << "custom(dim " << n_ << ")"; break;
    }
    os << "@" << p_.value();
    return os.str();
}

}  // namespace nilcensus
