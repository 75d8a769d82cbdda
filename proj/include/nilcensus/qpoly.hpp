#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace nilcensus {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt big_pow(const BigInt& base, long exp);

/// Integer-coefficient polynomial in the formal variable q, kept canonical
/// (no trailing zero coefficients). Arithmetic and evaluation are exact.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(BigInt constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    explicit QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPolynomial monomial(const BigInt& c, std::size_t power);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
    BigInt leading_coefficient() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

    BigInt eval(const BigInt& x) const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

    /// Multiplication by q^k.
    QPolynomial shifted(std::size_t k) const;

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) = default;

    /// "2*q^6 + 2*q^5 + 4*q + 6" (zero polynomial prints "0").
    std::string str() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<BigInt> coeffs_;  // index = power of q
};

}  // namespace nilcensus
