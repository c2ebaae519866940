#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cliquerec/field.hpp"
#include "cliquerec/graphs.hpp"

namespace cliquerec {

// Parameters of the systematic Reed-Solomon code on length-n bit-vectors
// with k redundancy symbols over F_q, q the smallest prime above n+k.
struct CodeParams {
    int n;
    int k;
    std::uint64_t q;

    static CodeParams make(int n, int k);
};

// Precomputes the Lagrange basis values L_i(e) for e = n+1..n+k so each
// encode is a k x n multiply.
class RsEncoder {
public:
    explicit RsEncoder(CodeParams params);

    const CodeParams& params() const { return params_; }

    // Codeword (x_1..x_n, P_x(n+1)..P_x(n+k)) where P_x is the unique
    // degree < n polynomial with P_x(i) = x_i over F_q.
    std::vector<std::uint64_t> encode(std::span<const std::uint64_t> x) const;

private:
    CodeParams params_;
    std::vector<std::vector<std::uint64_t>> basis_;  // basis_[e][i] = L_i(n+1+e)
};

// One-shot convenience wrapper around RsEncoder.
std::vector<std::uint64_t> encode(std::span<const std::uint64_t> x, const CodeParams& params);

// The symmetric (n+k) x (n+k) coded adjacency matrix: rows 1..n are the
// encoded adjacency rows, rows n+1..n+k carry the redundancy columns with a
// zero bottom-right block.
struct CodedGraph {
    std::vector<std::vector<std::uint64_t>> matrix;
    CodeParams params;
};

CodedGraph encode_graph(const LabeledGraph& g, const CodeParams& params);
CodedGraph encode_graph(const LabeledGraph& g, const RsEncoder& encoder);

// Number of differing rows between two equal-size square matrices.
int row_distance(const std::vector<std::vector<std::uint64_t>>& m,
                 const std::vector<std::vector<std::uint64_t>>& n);

// All graphs in the universe at row distance exactly k from g (distance on
// adjacency matrices). k = 0 yields {g} when requested.
std::vector<LabeledGraph> ball(const LabeledGraph& g, int k,
                               std::span<const LabeledGraph> universe);

// Universe defaults to every graph on |g| nodes; guarded to n <= 6.
std::vector<LabeledGraph> ball(const LabeledGraph& g, int k);

}  // namespace cliquerec
