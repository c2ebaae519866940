#include "cliquerec/field.hpp"

#include <string>

namespace cliquerec {

namespace {

bool trial_division_prime(std::uint64_t x) {
    if (x < 2) return false;
    if (x < 4) return true;
    if (x % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= x; d += 2) {
        if (x % d == 0) return false;
    }
    return true;
}

bool miller_rabin_prime(std::uint64_t n) {
    // Witness set exact for every n < 3.3e24, which covers 64 bits.
    static constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (std::uint64_t w : kWitnesses) {
        if (n == w) return true;
        if (n % w == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (std::uint64_t w : kWitnesses) {
        std::uint64_t x = pow_mod(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t x) {
    if (x < (1ULL << 32)) return trial_division_prime(x);
    return miller_rabin_prime(x);
}

std::uint64_t smallest_prime_greater(std::uint64_t x) {
    if (x >= (1ULL << 60)) {
        throw ParameterOverflow("smallest_prime_greater: argument " + std::to_string(x) +
                                " exceeds the 2^60 field-width contract");
    }
    std::uint64_t c = x + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) ++c;
    while (!is_prime(c)) c += 2;
    if (c >= kMaxFieldModulus) {
        throw ParameterOverflow("smallest_prime_greater: result exceeds 2^61");
    }
    return c;
}

FieldElem::FieldElem(std::uint64_t value, std::uint64_t modulus) : v_(value), p_(modulus) {
    if (value >= modulus) {
        throw ContractViolation("FieldElem: value " + std::to_string(value) +
                                " not in [0, " + std::to_string(modulus) + ")");
    }
}

void FieldElem::check_same_field(const FieldElem& o) const {
    if (p_ != o.p_) {
        throw ContractViolation("FieldElem: mixed-field arithmetic (" + std::to_string(p_) +
                                " vs " + std::to_string(o.p_) + ")");
    }
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_field(o);
    return FieldElem(add_mod(v_, o.v_, p_), p_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_field(o);
    return FieldElem(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_field(o);
    return FieldElem(mul_mod(v_, o.v_, p_), p_);
}

FieldElem FieldElem::pow(std::uint64_t e) const {
    return FieldElem(pow_mod(v_, e, p_), p_);
}

FieldElem FieldElem::inverse() const {
    if (v_ == 0) throw ContractViolation("FieldElem: inverse of zero");
    return pow(p_ - 2);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= kMaxFieldModulus || !is_prime(p)) {
        throw ContractViolation("PrimeField: modulus " + std::to_string(p) +
                                " is not a prime below 2^61");
    }
}

FieldElem PrimeField::elem(std::uint64_t v) const {
    if (v >= p_) {
        throw ContractViolation("PrimeField: value " + std::to_string(v) +
                                " not reduced mod " + std::to_string(p_));
    }
    return FieldElem(v, p_);
}

}  // namespace cliquerec
