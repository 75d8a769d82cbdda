#include "nilcensus/qcomb.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilcensus {

BigInt big_pow(const BigInt& base, long exp) {
    if (exp < 0) throw std::invalid_argument("big_pow: negative exponent");
    BigInt acc = 1, b = base;
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

QPolynomial QPolynomial::monomial(const BigInt& c, std::size_t power) {
    if (c == 0) return QPolynomial{};
    std::vector<BigInt> v(power + 1, BigInt(0));
    v[power] = c;
    return QPolynomial(std::move(v));
}

BigInt QPolynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return QPolynomial{};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> out(coeffs_.size() + k, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return QPolynomial(std::move(out));
}

std::string QPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QPolynomial gauss_binomial_poly(int n, int k) {
    if (n < 0) throw std::invalid_argument("gauss_binomial_poly: n must be nonnegative");
    if (k < 0 || k > n) return QPolynomial{};
    if (k > n - k) k = n - k;  // symmetry keeps the table narrow
    // row[j] = [i j] while filling row i
    std::vector<QPolynomial> row(static_cast<std::size_t>(k) + 1);
    row[0] = QPolynomial(BigInt(1));
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            const QPolynomial& above = row[static_cast<std::size_t>(j)];  // [i-1 j]
            const QPolynomial& left = row[static_cast<std::size_t>(j - 1)];  // [i-1 j-1]
            row[static_cast<std::size_t>(j)] =
                (j == i) ? QPolynomial(BigInt(1))
                         : left + above.shifted(static_cast<std::size_t>(j));
        }
    }
    return row[static_cast<std::size_t>(k)];
}

BigInt gauss_binomial_eval(int n, int k, const PrimeModulus& p) {
    return gauss_binomial_poly(n, k).eval(BigInt(p.value()));
}

QPolynomial s_poly(int n) {
    QPolynomial total;
    for (int k = 0; k <= n; ++k) total += gauss_binomial_poly(n, k);
    return total;
}

BigInt s_eval(int n, const PrimeModulus& p) { return s_poly(n).eval(BigInt(p.value())); }

long delta(long t) {
    if (t < 0) throw std::invalid_argument("delta: t must be nonnegative");
    return t * t / 4;
}

BigInt count_general_position(int d, int r, int k, const PrimeModulus& p) {
    if (k < 0 || k > d - r)
        throw std::invalid_argument("count_general_position: need 0 <= k <= d - r");
    return big_pow(BigInt(p.value()), static_cast<long>(r) * k) * gauss_binomial_eval(d - r, k, p);
}

BigInt count_not_in_hyperplane(int t, const PrimeModulus& p) {
    if (t < 1) throw std::invalid_argument("count_not_in_hyperplane: need t >= 1");
    BigInt total = 0;
    for (int k = 0; k <= t - 1; ++k)
        total += big_pow(BigInt(p.value()), k) * gauss_binomial_eval(t - 1, k, p);
    return total;
}

GrowthReport check_growth_inequalities(int n, int m, const PrimeModulus& p) {
    if (n < m || m < 0) throw std::invalid_argument("check_growth_inequalities: need n >= m >= 0");
    GrowthReport rep;
    rep.n = n;
    rep.m = m;
    rep.p = p.value();
    const BigInt q(p.value());
    const BigInt sn = s_eval(n, p);

    auto add = [&](std::string label, bool applicable, bool holds) {
        rep.parts.push_back({std::move(label), applicable, !applicable || holds});
        rep.all_hold = rep.all_hold && rep.parts.back().holds;
    };

    add("a: s(n) >= p^(n-1) s(n-2)", n >= 2,
        n >= 2 && sn >= big_pow(q, n - 1) * s_eval(n - 2, p));
    add("b: 2 s(n) >= p^(n/2) s(n-1)", n > 1 && n % 2 == 0,
        n > 1 && n % 2 == 0 && 2 * sn >= big_pow(q, n / 2) * s_eval(n - 1, p));
    add("c: s(n) >= p^((n-1)/2) s(n-1)", n % 2 == 1,
        n % 2 == 1 && sn >= big_pow(q, (n - 1) / 2) * s_eval(n - 1, p));
    const BigInt scaled_m = big_pow(q, delta(n) - delta(m)) * s_eval(m, p);
    add("d: 2 s(n) >= p^(delta(n)-delta(m)) s(m)", true, 2 * sn >= scaled_m);
    // The ½ drops for equal parity (iterate part a) and for odd n over even m
    // (part c); for even n over odd m only the halved form holds, e.g.
    // s(2) = p+3 < p·s(1) for p ≥ 5.
    const bool strict_applies = (n % 2 == m % 2) || (n % 2 == 1);
    add("d-strict: s(n) >= p^(delta(n)-delta(m)) s(m)", strict_applies,
        !strict_applies || sn >= scaled_m);
    return rep;
}

}  // namespace nilcensus
