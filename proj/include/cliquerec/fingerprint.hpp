#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cliquerec/field.hpp"

namespace cliquerec {

// Row-wise polynomial fingerprint of a square matrix: entry i is the
// fingerprint of row i at evaluation point i.
struct FingerprintVector {
    std::vector<FieldElem> entries;
    std::vector<FieldElem> evaluation_points;

    bool operator==(const FingerprintVector& o) const { return entries == o.entries; }
    bool operator!=(const FingerprintVector& o) const { return !(*this == o); }

    std::vector<std::uint64_t> values() const;
};

// Evaluates sum_i a_i * t^(i-1) by Horner's rule. Coordinates are read as
// integers and must already be reduced below the field modulus.
FieldElem fp_vector(std::span<const std::uint64_t> a, FieldElem t);

// Component i is fp_vector(row i, T_i). Rows must be square with T.
FingerprintVector fp_matrix(const std::vector<std::vector<std::uint64_t>>& rows,
                            std::span<const FieldElem> T);

// Brute-force count of t in F_p with matching fingerprints for a != b.
// Oracle for the root bound; p must be small enough to enumerate (<= 2^20).
std::uint64_t count_collisions(std::span<const std::uint64_t> a,
                               std::span<const std::uint64_t> b, std::uint64_t p);

}  // namespace cliquerec
