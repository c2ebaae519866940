#include <doctest.h>

#include <vector>

#include "cliquerec/ecc.hpp"
#include "cliquerec/rng.hpp"

using namespace cliquerec;

TEST_CASE("code parameters") {
    const CodeParams p = CodeParams::make(2, 1);
    CHECK(p.q == 5);  // smallest prime > 3
    CHECK(CodeParams::make(4, 4).q == 11);
    CHECK(CodeParams::make(6, 6).q == 13);
    CHECK_THROWS_AS(CodeParams::make(2, 3), ContractViolation);
}

TEST_CASE("encode interpolates through the message positions") {
    const CodeParams params = CodeParams::make(2, 1);  // q = 5
    // x = (1,0): P(t) = 2 - t over F_5, P(3) = -1 = 4
    CHECK(encode(std::vector<std::uint64_t>{1, 0}, params) ==
          std::vector<std::uint64_t>{1, 0, 4});
    // x = (0,1): P(t) = t - 1 over F_5, P(3) = 2
    CHECK(encode(std::vector<std::uint64_t>{0, 1}, params) ==
          std::vector<std::uint64_t>{0, 1, 2});
    CHECK(encode(std::vector<std::uint64_t>{0, 0}, params) ==
          std::vector<std::uint64_t>{0, 0, 0});
}

TEST_CASE("systematic property holds for every vector up to n = 8") {
    for (int n = 1; n <= 8; ++n) {
        for (int k : {1, 2, 4}) {
            if (k > n) continue;
            const RsEncoder encoder(CodeParams::make(n, k));
            for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
                std::vector<std::uint64_t> x(n);
                for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
                const auto cw = encoder.encode(x);
                REQUIRE(cw.size() == static_cast<std::size_t>(n + k));
                for (int i = 0; i < n; ++i) CHECK(cw[i] == x[i]);
            }
        }
    }
}

TEST_CASE("all-zero input gives the all-zero codeword for any parameters") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            const std::vector<std::uint64_t> zeros(n, 0);
            const auto cw = encode(zeros, CodeParams::make(n, k));
            for (auto v : cw) CHECK(v == 0);
        }
    }
}

TEST_CASE("encode_graph on the single edge, n=2 k=1") {
    LabeledGraph g(2);
    g.set_edge(1, 2, true);
    const CodedGraph coded = encode_graph(g, CodeParams::make(2, 1));
    const std::vector<std::vector<std::uint64_t>> expected{{0, 1, 2}, {1, 0, 4}, {2, 4, 0}};
    CHECK(coded.matrix == expected);
}

TEST_CASE("encode_graph of the empty graph is the zero matrix") {
    const CodedGraph coded = encode_graph(LabeledGraph(3), CodeParams::make(3, 2));
    for (const auto& row : coded.matrix) {
        for (auto v : row) CHECK(v == 0);
    }
}

TEST_CASE("coded matrices satisfy the structural invariants") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_below(7));  // up to 8
        const int k = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        LabeledGraph g(n);
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                if (rng.uniform_below(2)) g.set_edge(i, j, true);
            }
        }
        const CodedGraph coded = encode_graph(g, CodeParams::make(n, k));
        const int d = n + k;
        REQUIRE(static_cast<int>(coded.matrix.size()) == d);
        for (int i = 0; i < d; ++i) {
            REQUIRE(static_cast<int>(coded.matrix[i].size()) == d);
            for (int j = 0; j < d; ++j) {
                CHECK(coded.matrix[i][j] == coded.matrix[j][i]);  // symmetric
                if (i >= n && j >= n) CHECK(coded.matrix[i][j] == 0);
                if (i < n && j < n) {
                    CHECK(coded.matrix[i][j] == (g.has_edge(i + 1, j + 1) ? 1u : 0u));
                }
            }
        }
    }
}

TEST_CASE("row_distance") {
    LabeledGraph edge(2), empty(2);
    edge.set_edge(1, 2, true);
    const auto m = edge.adjacency_matrix();
    CHECK(row_distance(m, m) == 0);
    CHECK(row_distance(m, empty.adjacency_matrix()) == 2);

    const CodeParams params = CodeParams::make(2, 1);
    CHECK(row_distance(encode_graph(edge, params).matrix,
                       encode_graph(empty, params).matrix) == 3);

    CHECK_THROWS_AS(row_distance(m, LabeledGraph(3).adjacency_matrix()), ContractViolation);
}

TEST_CASE("ball around the empty graph") {
    const LabeledGraph empty2(2);
    const auto b2 = ball(empty2, 2);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].has_edge(1, 2));
    CHECK(ball(empty2, 1).empty());  // flipping the one edge changes both rows
    const auto b0 = ball(empty2, 0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == empty2);

    // each single-edge graph on 3 nodes differs from empty in exactly 2 rows
    CHECK(ball(LabeledGraph(3), 2).size() == 3);
}

TEST_CASE("codeword distance >= k exhaustively for small n") {
    for (int n = 2; n <= 5; ++n) {
        for (int k : {1, 2, 4}) {
            if (k > n) continue;
            const RsEncoder encoder(CodeParams::make(n, k));
            std::vector<std::vector<std::uint64_t>> words;
            for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
                std::vector<std::uint64_t> x(n);
                for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
                words.push_back(encoder.encode(x));
            }
            for (std::size_t a = 0; a < words.size(); ++a) {
                for (std::size_t b = a + 1; b < words.size(); ++b) {
                    int dist = 0;
                    for (int i = 0; i < n + k; ++i) {
                        if (words[a][i] != words[b][i]) ++dist;
                    }
                    CHECK(dist >= k);
                }
            }
        }
    }
}

TEST_CASE("graph-code row distance exceeds k for n = 3") {
    for (int k : {1, 2, 3}) {
        const RsEncoder encoder(CodeParams::make(3, k));
        std::vector<CodedGraph> coded;
        for (std::uint64_t code = 0; code < 8; ++code) {
            coded.push_back(encode_graph(LabeledGraph::from_triangle_code(3, code), encoder));
        }
        for (std::size_t a = 0; a < coded.size(); ++a) {
            for (std::size_t b = a + 1; b < coded.size(); ++b) {
                CHECK(row_distance(coded[a].matrix, coded[b].matrix) > k);
            }
        }
    }
}
