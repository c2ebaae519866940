#include "cliquerec/bits.hpp"

namespace cliquerec {

void Bits::append_bit(int b) {
    const std::size_t byte = nbits_ / 8;
    if (byte == bytes_.size()) bytes_.push_back(0);
    if (b) bytes_[byte] |= static_cast<std::uint8_t>(0x80u >> (nbits_ % 8));
    ++nbits_;
}

void Bits::append_uint(std::uint64_t v, int width) {
    if (width < 0 || width > 64) throw ContractViolation("Bits: width out of range");
    if (width < 64 && (v >> width) != 0) {
        throw ContractViolation("Bits: value does not fit in " + std::to_string(width) + " bits");
    }
    for (int i = width - 1; i >= 0; --i) append_bit(static_cast<int>((v >> i) & 1));
}

int Bits::bit(std::size_t i) const {
    if (i >= nbits_) throw ContractViolation("Bits: index past end");
    return (bytes_[i / 8] >> (7 - i % 8)) & 1;
}

std::string Bits::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (std::uint8_t b : bytes_) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

Bits Bits::from_hex(const std::string& hex, std::size_t nbits) {
    if (hex.size() != 2 * ((nbits + 7) / 8)) {
        throw ContractViolation("Bits: hex length does not match bit length");
    }
    Bits out;
    out.nbits_ = nbits;
    out.bytes_.resize(hex.size() / 2, 0);
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw ContractViolation("Bits: bad hex digit");
    };
    for (std::size_t i = 0; i < out.bytes_.size(); ++i) {
        out.bytes_[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
    }
    return out;
}

int BitReader::read_bit() {
    if (pos_ >= b_.size()) throw ContractViolation("BitReader: read past end");
    return b_.bit(pos_++);
}

std::uint64_t BitReader::read_uint(int width) {
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | static_cast<std::uint64_t>(read_bit());
    return v;
}

}  // namespace cliquerec
