#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilcensus/algebra.hpp"
#include "nilcensus/qcomb.hpp"
#include "oracle.hpp"

using namespace nilcensus;

namespace {

ProductEntry product(Index i, Index j, std::initializer_list<std::pair<Index, Scalar>> coords) {
    ProductEntry e;
    e.i = i;
    e.j = j;
    e.coords.assign(coords.begin(), coords.end());
    return e;
}

FpVec unit(Index n, Index k) {
    FpVec v = FpVec::Zero(n);
    v(k) = 1;
    return v;
}

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long acc = 1;
    for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
    return acc;
}

}  // namespace

TEST_CASE("custom construction and validation order") {
    const PrimeModulus p3(3);

    const auto trivial = NilpotentAlgebra::custom(p3, 1, {"x"}, {});
    CHECK(trivial.nil_index() == 1);

    // x*x = y, x*y = x: the power chain stabilizes at the whole algebra
    CHECK_THROWS_AS(NilpotentAlgebra::custom(p3, 2, {"x", "y"},
                                             {product(0, 0, {{1, 1}}), product(0, 1, {{0, 1}})}),
                    NotNilpotentError);

    const auto dual = NilpotentAlgebra::custom(p3, 2, {"x", "y"}, {product(0, 0, {{1, 1}})});
    CHECK(dual.nil_index() == 2);

    CHECK_THROWS_AS(NilpotentAlgebra::custom(p3, 2, {"x", "y"}, {product(0, 0, {{1, 5}})}),
                    BadCoordinatesError);
    CHECK_THROWS_AS(NilpotentAlgebra::custom(p3, 2, {"x", "y"}, {product(0, 2, {{1, 1}})}),
                    BadCoordinatesError);
    CHECK_THROWS_AS(NilpotentAlgebra::custom(p3, 1, {"x", "y"}, {}), BadCoordinatesError);
    CHECK_THROWS_AS(
        NilpotentAlgebra::custom(p3, 2, {"x", "y"},
                                 {product(0, 1, {{0, 1}}), product(1, 0, {{0, 2}})}),
        NotCommutativeError);

    // nilpotent but not associative: x*y = z, x*z = w, the rest zero
    CHECK_THROWS_AS(NilpotentAlgebra::custom(p3, 4, {"x", "y", "z", "w"},
                                             {product(0, 1, {{2, 1}}), product(0, 2, {{3, 1}})}),
                    NotAssociativeError);
}

TEST_CASE("uniserial algebras") {
    const auto a = NilpotentAlgebra::uniserial(PrimeModulus(5), 3);
    CHECK(a.dim() == 3);
    CHECK(a.nil_index() == 3);
    CHECK(a.annihilator_chain().dims == std::vector<Index>{1, 2, 3});
    // N_k = span(x^{e-k+1}, ..., x^e)
    CHECK(contains(a.annihilator_chain().layers[0], unit(3, 2), a.modulus()));
    CHECK_FALSE(contains(a.annihilator_chain().layers[0], unit(3, 1), a.modulus()));

    std::vector<Index> power_dims;
    for (const auto& s : a.power_chain()) power_dims.push_back(s.dim());
    CHECK(power_dims == std::vector<Index>{3, 2, 1});

    CHECK(NilpotentAlgebra::uniserial(PrimeModulus(3), 1).power_chain().size() == 1);
    CHECK(NilpotentAlgebra::uniserial(PrimeModulus(7), 2).nil_index() == 2);
    CHECK_THROWS_AS(NilpotentAlgebra::uniserial(PrimeModulus(3), 0), std::invalid_argument);
}

TEST_CASE("binomial algebras") {
    const auto m3 = NilpotentAlgebra::binomial(PrimeModulus(3), 3);
    CHECK(m3.dim() == 7);
    CHECK(m3.nil_index() == 3);
    CHECK(m3.basis_labels() ==
          std::vector<std::string>{"x", "y", "z", "xy", "xz", "yz", "xyz"});
    CHECK(m3.annihilator_chain().dims == std::vector<Index>{1, 4, 7});
    CHECK(contains(m3.annihilator_chain().layers[0], unit(7, 6), m3.modulus()));

    const auto m4 = NilpotentAlgebra::binomial(PrimeModulus(5), 4);
    CHECK(m4.dim() == 15);
    CHECK(m4.nil_index() == 4);
    CHECK(m4.annihilator_chain().dims == std::vector<Index>{1, 5, 11, 15});
    for (int m = 1; m <= 4; ++m) {
        const auto a = NilpotentAlgebra::binomial(PrimeModulus(3), m);
        CHECK(a.nil_index() == m);  // generator count equals the nilpotency index
        const auto& t = a.annihilator_chain().layer_dims;
        for (int k = 1; k <= m; ++k)
            CHECK(t[static_cast<std::size_t>(k - 1)] == binom(m, k - 1));
    }
    CHECK(NilpotentAlgebra::binomial(PrimeModulus(5), 1).dim() == 1);
}

TEST_CASE("triangular algebras") {
    const auto t2 = NilpotentAlgebra::triangular(PrimeModulus(3), 2);
    CHECK(t2.basis_labels() == std::vector<std::string>{"x", "y", "x^2", "xy", "y^2"});
    CHECK(t2.annihilator_chain().dims == std::vector<Index>{3, 5});
    CHECK(t2.nil_index() == 2);
    // N_1 = span(x^2, xy, y^2)
    CHECK(mat_eq(t2.annihilator_chain().layers[0].basis(),
                 FpMat(FpMat::Identity(5, 5).bottomRows(3))));
    // A^2 = N_1 here
    CHECK(t2.power_chain()[1] == t2.annihilator_chain().layers[0]);

    CHECK(NilpotentAlgebra::triangular(PrimeModulus(5), 1).dim() == 2);
    CHECK(NilpotentAlgebra::triangular(PrimeModulus(5), 1).nil_index() == 1);
    const auto t3 = NilpotentAlgebra::triangular(PrimeModulus(3), 3);
    CHECK(t3.dim() == 9);
    CHECK(t3.nil_index() == 3);
}

TEST_CASE("multiplication") {
    const auto a = NilpotentAlgebra::triangular(PrimeModulus(5), 2);
    const FpVec zero = FpVec::Zero(5);
    CHECK(mat_eq(FpMat(a.multiply(zero, unit(5, 1))), FpMat(zero)));
    CHECK(mat_eq(FpMat(a.multiply(unit(5, 0), unit(5, 1))), FpMat(unit(5, 3))));

    FpVec x_plus_y = unit(5, 0) + unit(5, 1);
    FpVec x_minus_y = unit(5, 0);
    x_minus_y(1) = 4;
    FpVec expected = FpVec::Zero(5);
    expected(2) = 1;
    expected(4) = 4;  // x^2 - y^2
    CHECK(mat_eq(FpMat(a.multiply(x_plus_y, x_minus_y)), FpMat(expected)));

    CHECK_THROWS_AS(a.multiply(FpVec::Zero(4), zero), DimensionMismatchError);
}

TEST_CASE("module products") {
    const PrimeModulus p3(3);
    const auto tri = NilpotentAlgebra::triangular(p3, 2);
    CHECK(tri.module_product(Subspace::zero(5)) == Subspace::zero(5));
    FpMat x_row = FpMat::Zero(1, 5);
    x_row(0, 0) = 1;
    const Subspace ax = tri.module_product(rref(std::move(x_row), p3));
    CHECK(ax.dim() == 2);
    CHECK(contains(ax, unit(5, 2), p3));  // x^2
    CHECK(contains(ax, unit(5, 3), p3));  // xy
    CHECK_FALSE(contains(ax, unit(5, 4), p3));

    const auto bin = NilpotentAlgebra::binomial(p3, 3);
    FpMat gen = FpMat::Zero(1, 7);
    gen(0, 0) = 1;
    const Subspace axb = bin.module_product(rref(std::move(gen), p3));
    CHECK(axb.dim() == 3);
    for (Index idx : {3, 4, 6}) CHECK(contains(axb, unit(7, idx), p3));  // xy, xz, xyz
}

TEST_CASE("annihilator chains match brute force") {
    std::vector<NilpotentAlgebra> grid;
    for (std::int64_t q : {3, 5}) {
        const PrimeModulus p(q);
        grid.push_back(NilpotentAlgebra::uniserial(p, 4));
        grid.push_back(NilpotentAlgebra::triangular(p, 2));
        grid.push_back(NilpotentAlgebra::binomial(p, 2));
        if (q == 3) {
            grid.push_back(NilpotentAlgebra::binomial(p, 3));
            grid.push_back(NilpotentAlgebra::triangular(p, 3));
            grid.push_back(NilpotentAlgebra::uniserial(p, 9));
        }
    }
    for (const auto& a : grid) {
        const auto& chain = a.annihilator_chain();
        CHECK(chain.length() == a.nil_index());
        Index prev = 0;
        for (int k = 1; k <= chain.length(); ++k) {
            const Subspace& nk = chain.layers[static_cast<std::size_t>(k - 1)];
            if (a.dim() <= 7 || a.modulus().value() == 3)
                CHECK(oracle::span_of(nk, a.modulus()) == oracle::annihilator_vecset(a, k));
            CHECK(nk.dim() > prev);
            prev = nk.dim();
            // each N_k is an ideal and A N_k sits inside N_{k-1}
            const Subspace product = a.module_product(nk);
            CHECK(contains(nk, product, a.modulus()));
            if (k > 1)
                CHECK(contains(chain.layers[static_cast<std::size_t>(k - 2)], product,
                               a.modulus()));
            else
                CHECK(product.is_zero());
        }
        CHECK(chain.dims.back() == a.dim());
        // complements are genuine direct summands
        Index total = 0;
        for (std::size_t r = 0; r < chain.complements.size(); ++r) {
            CHECK(chain.complements[r].dim() == chain.layer_dims[r]);
            total += chain.layer_dims[r];
        }
        CHECK(total == a.dim());
    }
}

TEST_CASE("layer dimensions do not depend on the complement choice") {
    const auto a = NilpotentAlgebra::triangular(PrimeModulus(3), 2);
    const auto& chain = a.annihilator_chain();
    std::mt19937 rng(5);
    std::uniform_int_distribution<Scalar> dist(0, 2);
    // random complements of N_{r-1} in N_r all share the layer dimension
    Subspace previous = Subspace::zero(a.dim());
    for (std::size_t r = 0; r < chain.layers.size(); ++r) {
        const Subspace& layer = chain.layers[r];
        for (int trial = 0; trial < 10; ++trial) {
            FpMat sample(layer.dim(), a.dim());
            for (Index i = 0; i < sample.rows(); ++i)
                for (Index j = 0; j < sample.cols(); ++j) sample(i, j) = 0;
            // random vectors of the layer until they complete previous
            Subspace sum = previous;
            Index rows = 0;
            while (sum.dim() < layer.dim()) {
                FpVec coeff(layer.dim());
                for (Index i = 0; i < layer.dim(); ++i) coeff(i) = dist(rng);
                FpVec candidate = FpVec::Zero(a.dim());
                for (Index i = 0; i < layer.dim(); ++i)
                    for (Index j = 0; j < a.dim(); ++j)
                        candidate(j) = add_mod(candidate(j),
                                               mul_mod(coeff(i), layer.basis()(i, j),
                                                       a.modulus()),
                                               a.modulus());
                FpMat one_row(1, a.dim());
                one_row.row(0) = candidate.transpose();
                const Subspace bigger = subspace_sum(sum, rref(std::move(one_row), a.modulus()),
                                                     a.modulus());
                if (bigger.dim() > sum.dim()) {
                    sum = bigger;
                    sample.row(rows++) = candidate.transpose();
                }
            }
            CHECK(rows == chain.layer_dims[r]);
        }
        previous = layer;
    }
}

TEST_CASE("zero algebra edge") {
    const auto zero = NilpotentAlgebra::custom(PrimeModulus(3), 0, {}, {});
    CHECK(zero.is_zero_algebra());
    CHECK(zero.nil_index() == 0);
    CHECK(zero.annihilator_chain().length() == 0);
}

TEST_CASE("dimension caps") {
    CHECK_THROWS_AS(NilpotentAlgebra::binomial(PrimeModulus(3), 8), std::invalid_argument);
    CHECK_THROWS_AS(NilpotentAlgebra::uniserial(PrimeModulus(3), 200), std::invalid_argument);
    CHECK_THROWS_AS(NilpotentAlgebra::triangular(PrimeModulus(3), 15), std::invalid_argument);
    CHECK_NOTHROW(NilpotentAlgebra::triangular(PrimeModulus(3), 4));
}

TEST_CASE("descriptors") {
    CHECK(NilpotentAlgebra::triangular(PrimeModulus(3), 2).descriptor() == "triangular(2)@3");
    CHECK(NilpotentAlgebra::binomial(PrimeModulus(5), 4).descriptor() == "binomial(4)@5");
    CHECK(NilpotentAlgebra::custom(PrimeModulus(7), 1, {}, {}).descriptor() == "custom(dim 1)@7");
}
