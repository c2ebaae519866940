#pragma once

#include <cstdint>

#include "cliquerec/errors.hpp"

namespace cliquerec {

// Largest modulus the field layer accepts: products of two residues must fit
// a 128-bit intermediate, so moduli stay below 2^61.
inline constexpr std::uint64_t kMaxFieldModulus = 1ULL << 61;

// Deterministic primality: trial division below 2^32, fixed Miller-Rabin
// witness set above (exact for all 64-bit inputs).
bool is_prime(std::uint64_t x);

// Least prime strictly greater than x. Throws ParameterOverflow when the
// result would not fit the field-width contract (x must be < 2^60).
std::uint64_t smallest_prime_greater(std::uint64_t x);

class PrimeField;

// A residue in [0, p) tagged with its modulus. Arithmetic between elements of
// different fields is a contract violation.
class FieldElem {
public:
    FieldElem() : v_(0), p_(2) {}
    FieldElem(std::uint64_t value, std::uint64_t modulus);

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem pow(std::uint64_t e) const;  // convention: x^0 = 1, including x = 0
    FieldElem inverse() const;             // Fermat; requires nonzero

    bool operator==(const FieldElem& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

private:
    void check_same_field(const FieldElem& o) const;

    std::uint64_t v_;
    std::uint64_t p_;
};

// Arithmetic modulo a prime p with 2 <= p < 2^61.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    // Element from a value already in [0, p); out-of-range is a contract
    // violation (silent reduction would mask bad inputs).
    FieldElem elem(std::uint64_t v) const;

    // Element from an arbitrary integer, reduced mod p.
    FieldElem from_integer(std::uint64_t v) const { return FieldElem(v % p_, p_); }

    FieldElem zero() const { return FieldElem(0, p_); }
    FieldElem one() const { return FieldElem(1 % p_, p_); }

private:
    std::uint64_t p_;
};

// Raw helpers used by hot loops that track the modulus themselves.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const std::uint64_t s = a + b;  // no overflow: both < 2^61
    return s >= p ? s - p : s;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

}  // namespace cliquerec
