#include <doctest.h>

#include "cliquerec/field.hpp"

using namespace cliquerec;

TEST_CASE("smallest_prime_greater basic values") {
    CHECK(smallest_prime_greater(0) == 2);
    CHECK(smallest_prime_greater(1) == 2);
    // trial division over 21, 22, 23
    CHECK(smallest_prime_greater(20) == 23);
    // trial division over 14, 15, 16, 17
    CHECK(smallest_prime_greater(13) == 17);
    CHECK(smallest_prime_greater(2) == 3);
    CHECK(smallest_prime_greater(7) == 11);
}

TEST_CASE("smallest_prime_greater never skips a prime") {
    for (std::uint64_t x = 0; x < 2000; ++x) {
        const std::uint64_t p = smallest_prime_greater(x);
        CHECK(p > x);
        for (std::uint64_t y = x + 1; y < p; ++y) CHECK(!is_prime(y));
        CHECK(is_prime(p));
    }
}

TEST_CASE("smallest_prime_greater rejects oversized arguments") {
    CHECK_THROWS_AS(smallest_prime_greater(1ULL << 60), ParameterOverflow);
}

TEST_CASE("is_prime agrees with trial division across the 2^32 split") {
    // 2^32 + 15 is the first prime past 2^32 (Miller-Rabin path)
    CHECK(is_prime((1ULL << 32) + 15));
    CHECK(!is_prime((1ULL << 32) + 1));   // 641 * 6700417
    CHECK(is_prime(2305843009213693951)); // 2^61 - 1
    CHECK(!is_prime((1ULL << 32)));
}

TEST_CASE("arithmetic in F_7") {
    PrimeField f(7);
    CHECK((f.elem(3) * f.elem(5)).value() == 1);  // 15 mod 7
    for (std::uint64_t a = 0; a < 7; ++a) {
        CHECK((f.elem(a) * f.one()) == f.elem(a));
    }
    CHECK(f.elem(3).pow(0).value() == 1);
    CHECK(f.elem(0).pow(0).value() == 1);  // t^0 = 1 including t = 0
    CHECK((f.elem(2) - f.elem(5)).value() == 4);
}

TEST_CASE("mixed-field arithmetic is rejected") {
    PrimeField f7(7), f11(11);
    CHECK_THROWS_AS(f7.elem(3) + f11.elem(3), ContractViolation);
    CHECK_THROWS_AS(f7.elem(8), ContractViolation);
    CHECK_THROWS_AS(PrimeField(6), ContractViolation);
}

TEST_CASE("field laws hold exhaustively for small primes") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
        PrimeField f(p);
        for (std::uint64_t a = 0; a < p; ++a) {
            for (std::uint64_t b = 0; b < p; ++b) {
                for (std::uint64_t c = 0; c < p; ++c) {
                    const auto ea = f.elem(a), eb = f.elem(b), ec = f.elem(c);
                    CHECK((ea + eb) + ec == ea + (eb + ec));
                    CHECK(ea * (eb + ec) == ea * eb + ea * ec);
                }
            }
        }
    }
}

TEST_CASE("associativity and distributivity hold exhaustively for p = 101") {
    PrimeField f(101);
    std::uint64_t mismatches = 0;
    for (std::uint64_t a = 0; a < 101; ++a) {
        for (std::uint64_t b = 0; b < 101; ++b) {
            for (std::uint64_t c = 0; c < 101; ++c) {
                const auto ea = f.elem(a), eb = f.elem(b), ec = f.elem(c);
                if ((ea + eb) + ec != ea + (eb + ec)) ++mismatches;
                if (ea * (eb + ec) != ea * eb + ea * ec) ++mismatches;
            }
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("Fermat: pow(a, p-1) = 1 for nonzero a, exhaustive to 101") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 97ULL, 101ULL}) {
        PrimeField f(p);
        for (std::uint64_t a = 1; a < p; ++a) {
            CHECK(f.elem(a).pow(p - 1) == f.one());
        }
    }
}

TEST_CASE("wide multiplication near the modulus cap") {
    const std::uint64_t p = 2305843009213693951ULL;  // 2^61 - 1
    PrimeField f(p);
    const auto a = f.elem(p - 1);
    // (p-1)^2 = p^2 - 2p + 1 = 1 mod p
    CHECK((a * a).value() == 1);
    CHECK(a.pow(p - 1).value() == 1);
    CHECK(a.inverse() * a == f.one());
}
