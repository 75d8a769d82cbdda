#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilcensus {

/// A validated prime modulus. Every residue in the library is reduced mod p.
class PrimeModulus {
public:
    explicit PrimeModulus(std::int64_t p) : p_(p) {
        if (!is_prime(p))
            throw std::invalid_argument("PrimeModulus: " + std::to_string(p) + " is not prime");
    }

    std::int64_t value() const noexcept { return p_; }

    /// Deterministic trial-division primality test.
    static bool is_prime(std::int64_t p) noexcept {
        if (p < 2) return false;
        if (p % 2 == 0) return p == 2;
        for (std::int64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) return false;
        return true;
    }

    friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) noexcept {
        return a.p_ == b.p_;
    }

private:
    std::int64_t p_;
};

inline std::int64_t mod_reduce(std::int64_t a, const PrimeModulus& p) noexcept {
    std::int64_t r = a % p.value();
    return r < 0 ? r + p.value() : r;
}

inline std::int64_t add_mod(std::int64_t a, std::int64_t b, const PrimeModulus& p) noexcept {
    return mod_reduce(a + b, p);
}

inline std::int64_t sub_mod(std::int64_t a, std::int64_t b, const PrimeModulus& p) noexcept {
    return mod_reduce(a - b, p);
}

// 128-bit intermediate keeps a*b exact for any p that fits in 63 bits.
inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, const PrimeModulus& p) noexcept {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p.value());
}

inline std::int64_t neg_mod(std::int64_t a, const PrimeModulus& p) noexcept {
    return mod_reduce(-a, p);
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, const PrimeModulus& p) noexcept {
    std::int64_t acc = 1 % p.value();
    std::int64_t b = mod_reduce(base, p);
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, b, p);
        b = mul_mod(b, b, p);
        exp >>= 1;
    }
    return acc;
}

inline std::int64_t inv_mod(std::int64_t a, const PrimeModulus& p) {
    a = mod_reduce(a, p);
    if (a == 0) throw std::domain_error("inv_mod: zero has no inverse");
    return pow_mod(a, p.value() - 2, p);
}

}  // namespace nilcensus
