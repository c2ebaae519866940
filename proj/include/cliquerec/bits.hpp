#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cliquerec/errors.hpp"

namespace cliquerec {

// Number of bits a field element of F_p occupies on the wire: ceil(log2 p).
inline int field_bit_width(std::uint64_t p) {
    return std::bit_width(p - 1);
}

// A bit-exact message payload. Bits are packed MSB-first into successive
// bytes; multi-bit fields are big-endian. The unused tail of the last byte
// is zero.
class Bits {
public:
    Bits() = default;

    std::size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    void append_bit(int b);
    void append_uint(std::uint64_t v, int width);

    int bit(std::size_t i) const;

    std::string hex() const;
    static Bits from_hex(const std::string& hex, std::size_t nbits);

    bool operator==(const Bits& o) const { return nbits_ == o.nbits_ && bytes_ == o.bytes_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t nbits_ = 0;
};

// Sequential reader over a Bits payload.
class BitReader {
public:
    explicit BitReader(const Bits& b) : b_(b) {}

    int read_bit();
    std::uint64_t read_uint(int width);
    std::size_t remaining() const { return b_.size() - pos_; }

private:
    const Bits& b_;
    std::size_t pos_ = 0;
};

}  // namespace cliquerec
