#include "cliquerec/fingerprint.hpp"

#include <string>

namespace cliquerec {

std::vector<std::uint64_t> FingerprintVector::values() const {
    std::vector<std::uint64_t> out;
    out.reserve(entries.size());
    for (const FieldElem& e : entries) out.push_back(e.value());
    return out;
}

FieldElem fp_vector(std::span<const std::uint64_t> a, FieldElem t) {
    const std::uint64_t p = t.modulus();
    std::uint64_t acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        const std::uint64_t c = a[i];
        if (c >= p) {
            throw ContractViolation("fp_vector: coordinate " + std::to_string(c) +
                                    " not below modulus " + std::to_string(p));
        }
        acc = add_mod(mul_mod(acc, t.value(), p), c, p);
    }
    return FieldElem(acc, p);
}

FingerprintVector fp_matrix(const std::vector<std::vector<std::uint64_t>>& rows,
                            std::span<const FieldElem> T) {
    if (rows.size() != T.size()) {
        throw ContractViolation("fp_matrix: row count does not match evaluation points");
    }
    FingerprintVector out;
    out.entries.reserve(rows.size());
    out.evaluation_points.assign(T.begin(), T.end());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.entries.push_back(fp_vector(rows[i], T[i]));
    }
    return out;
}

std::uint64_t count_collisions(std::span<const std::uint64_t> a,
                               std::span<const std::uint64_t> b, std::uint64_t p) {
    if (p > (1ULL << 20)) throw ContractViolation("count_collisions: p too large to enumerate");
    if (a.size() != b.size()) throw ContractViolation("count_collisions: length mismatch");
    bool equal = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            equal = false;
            break;
        }
    }
    if (equal) throw ContractViolation("count_collisions: vectors are equal");
    PrimeField f(p);
    std::uint64_t count = 0;
    for (std::uint64_t t = 0; t < p; ++t) {
        const FieldElem e = f.elem(t);
        if (fp_vector(a, e) == fp_vector(b, e)) ++count;
    }
    return count;
}

}  // namespace cliquerec
