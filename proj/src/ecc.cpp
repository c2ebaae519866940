#include "cliquerec/ecc.hpp"

#include <string>

namespace cliquerec {

CodeParams CodeParams::make(int n, int k) {
    if (n < 1) throw ContractViolation("CodeParams: n must be positive");
    if (k < 0 || k > n) throw ContractViolation("CodeParams: k must be in [0, n]");
    return CodeParams{n, k, smallest_prime_greater(static_cast<std::uint64_t>(n) + k)};
}

RsEncoder::RsEncoder(CodeParams params) : params_(params) {
    const int n = params_.n;
    const std::uint64_t q = params_.q;
    // L_i(e) = prod_{j != i} (e - j) / (i - j) over F_q, for i in [n] and
    // evaluation points e = n+1 .. n+k. All differences are nonzero mod q
    // because q > n + k.
    basis_.assign(static_cast<std::size_t>(params_.k),
                  std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
    for (int e = n + 1; e <= n + params_.k; ++e) {
        for (int i = 1; i <= n; ++i) {
            std::uint64_t num = 1, den = 1;
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                num = mul_mod(num, static_cast<std::uint64_t>(e - j), q);
                const std::uint64_t diff =
                    i > j ? static_cast<std::uint64_t>(i - j) : q - static_cast<std::uint64_t>(j - i);
                den = mul_mod(den, diff, q);
            }
            basis_[e - n - 1][i - 1] = mul_mod(num, pow_mod(den, q - 2, q), q);
        }
    }
}

std::vector<std::uint64_t> RsEncoder::encode(std::span<const std::uint64_t> x) const {
    const int n = params_.n;
    if (static_cast<int>(x.size()) != n) throw ContractViolation("encode: length mismatch");
    for (std::uint64_t v : x) {
        if (v > 1) throw ContractViolation("encode: input must be a bit-vector");
    }
    std::vector<std::uint64_t> cw(x.begin(), x.end());
    cw.resize(static_cast<std::size_t>(n) + params_.k, 0);
    for (int e = 0; e < params_.k; ++e) {
        std::uint64_t acc = 0;
        for (int i = 0; i < n; ++i) {
            if (x[i]) acc = add_mod(acc, basis_[e][i], params_.q);
        }
        cw[n + e] = acc;
    }
    return cw;
}

std::vector<std::uint64_t> encode(std::span<const std::uint64_t> x, const CodeParams& params) {
    return RsEncoder(params).encode(x);
}

CodedGraph encode_graph(const LabeledGraph& g, const CodeParams& params) {
    return encode_graph(g, RsEncoder(params));
}

CodedGraph encode_graph(const LabeledGraph& g, const RsEncoder& encoder) {
    const CodeParams& params = encoder.params();
    const int n = params.n, k = params.k;
    if (g.node_count() != n) throw ContractViolation("encode_graph: graph size mismatch");
    CodedGraph out{{}, params};
    out.matrix.reserve(static_cast<std::size_t>(n) + k);
    for (int v = 1; v <= n; ++v) out.matrix.push_back(encoder.encode(g.row(v)));
    for (int i = 1; i <= k; ++i) {
        std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + k, 0);
        for (int j = 0; j < n; ++j) row[j] = out.matrix[j][n + i - 1];
        out.matrix.push_back(std::move(row));
    }
    return out;
}

int row_distance(const std::vector<std::vector<std::uint64_t>>& m,
                 const std::vector<std::vector<std::uint64_t>>& n) {
    if (m.size() != n.size()) throw ContractViolation("row_distance: dimension mismatch");
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != n[i].size()) throw ContractViolation("row_distance: dimension mismatch");
        if (m[i] != n[i]) ++d;
    }
    return d;
}

std::vector<LabeledGraph> ball(const LabeledGraph& g, int k,
                               std::span<const LabeledGraph> universe) {
    if (k < 0) throw ContractViolation("ball: negative distance");
    const auto base = g.adjacency_matrix();
    std::vector<LabeledGraph> out;
    for (const LabeledGraph& h : universe) {
        if (h.node_count() != g.node_count()) continue;
        if (row_distance(base, h.adjacency_matrix()) == k) out.push_back(h);
    }
    return out;
}

std::vector<LabeledGraph> ball(const LabeledGraph& g, int k) {
    if (g.node_count() > 6) {
        throw UnsupportedScale("ball: default universe materializes only up to n = 6");
    }
    return ball(g, k, catalog("all-graphs").enumerate(g.node_count()));
}

}  // namespace cliquerec
