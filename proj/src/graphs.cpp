#include "cliquerec/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace cliquerec {

LabeledGraph::LabeledGraph(int n) : n_(n) {
    if (n < 1 || n > 32) throw ContractViolation("LabeledGraph: node count must be in [1, 32]");
    adj_.assign(static_cast<std::size_t>(n), 0);
}

int LabeledGraph::check_node(int v) const {
    if (v < 1 || v > n_) throw ContractViolation("LabeledGraph: node id out of range");
    return v;
}

LabeledGraph LabeledGraph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    LabeledGraph g(n);
    for (auto [u, v] : edges) g.set_edge(u, v, true);
    return g;
}

LabeledGraph LabeledGraph::from_triangle_code(int n, std::uint64_t code) {
    LabeledGraph g(n);
    const int m = n * (n - 1) / 2;
    if (m > 63) throw ContractViolation("from_triangle_code: graph too large for a 64-bit code");
    if ((code >> m) != 0) throw ContractViolation("from_triangle_code: code too large");
    int idx = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j, ++idx) {
            if ((code >> (m - 1 - idx)) & 1) g.set_edge(i, j, true);
        }
    }
    return g;
}

std::uint64_t LabeledGraph::triangle_code() const {
    const int m = n_ * (n_ - 1) / 2;
    if (m > 63) throw ContractViolation("triangle_code: graph too large for a 64-bit code");
    std::uint64_t code = 0;
    int idx = 0;
    for (int i = 1; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j, ++idx) {
            if (has_edge(i, j)) code |= 1ULL << (m - 1 - idx);
        }
    }
    return code;
}

int LabeledGraph::edge_count() const {
    int total = 0;
    for (std::uint32_t row : adj_) total += std::popcount(row);
    return total / 2;
}

bool LabeledGraph::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    if (u == v) return false;
    return (adj_[u - 1] >> (v - 1)) & 1;
}

void LabeledGraph::set_edge(int u, int v, bool present) {
    check_node(u);
    check_node(v);
    if (u == v) throw ContractViolation("LabeledGraph: self-loops not allowed");
    if (present) {
        adj_[u - 1] |= 1u << (v - 1);
        adj_[v - 1] |= 1u << (u - 1);
    } else {
        adj_[u - 1] &= ~(1u << (v - 1));
        adj_[v - 1] &= ~(1u << (u - 1));
    }
}

int LabeledGraph::degree(int v) const {
    return std::popcount(row_mask(v));
}

std::vector<std::uint64_t> LabeledGraph::row(int v) const {
    const std::uint32_t mask = row_mask(v);
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) out[j] = (mask >> j) & 1;
    return out;
}

std::vector<std::vector<std::uint64_t>> LabeledGraph::adjacency_matrix() const {
    std::vector<std::vector<std::uint64_t>> m;
    m.reserve(n_);
    for (int v = 1; v <= n_; ++v) m.push_back(row(v));
    return m;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) {
            if (has_edge(i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

bool LabeledGraph::operator<(const LabeledGraph& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return triangle_code() < o.triangle_code();
}

LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const int> nodes) {
    if (nodes.empty()) throw ContractViolation("induced_subgraph: empty node set");
    std::vector<int> u(nodes.begin(), nodes.end());
    std::sort(u.begin(), u.end());
    if (std::adjacent_find(u.begin(), u.end()) != u.end()) {
        throw ContractViolation("induced_subgraph: duplicate node");
    }
    LabeledGraph sub(static_cast<int>(u.size()));
    for (std::size_t a = 0; a < u.size(); ++a) {
        for (std::size_t b = a + 1; b < u.size(); ++b) {
            if (g.has_edge(u[a], u[b])) sub.set_edge(static_cast<int>(a + 1), static_cast<int>(b + 1), true);
        }
    }
    return sub;
}

LabeledGraph read_graph(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw ContractViolation("read_graph: missing header 'n m'");
    if (n < 1 || n > 32 || m < 0) throw ContractViolation("read_graph: bad header values");
    LabeledGraph g(n);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw ContractViolation("read_graph: missing edge line");
        if (u < 1 || v > n || u >= v) {
            throw ContractViolation("read_graph: edge must satisfy 1 <= u < v <= n");
        }
        if (g.has_edge(u, v)) throw ContractViolation("read_graph: duplicate edge");
        g.set_edge(u, v, true);
    }
    return g;
}

void write_graph(std::ostream& out, const LabeledGraph& g) {
    const auto es = g.edges();
    out << g.node_count() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

GraphClass::GraphClass(std::string name, std::function<bool(const LabeledGraph&)> contains,
                       bool hereditary, int n_max)
    : name_(std::move(name)), contains_(std::move(contains)), hereditary_(hereditary), n_max_(n_max) {}

const std::vector<LabeledGraph>& GraphClass::enumerate(int n) const {
    if (n < 1 || n > n_max_) {
        throw UnsupportedScale("class '" + name_ + "' enumerates only up to n = " +
                               std::to_string(n_max_));
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    std::vector<LabeledGraph> members;
    const int m = n * (n - 1) / 2;
    if (m > 62) throw UnsupportedScale("enumerate: scan of 2^" + std::to_string(m) + " graphs");
    for (std::uint64_t code = 0; code < (1ULL << m); ++code) {
        LabeledGraph g = LabeledGraph::from_triangle_code(n, code);
        if (contains_(g)) members.push_back(std::move(g));
    }
    return cache_.emplace(n, std::move(members)).first->second;
}

namespace {

bool is_forest(const LabeledGraph& g) {
    // Union-find over edges; an edge inside one component closes a cycle.
    const int n = g.node_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges()) {
        const int ru = find(u - 1), rv = find(v - 1);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

bool is_triangle_free(const LabeledGraph& g) {
    const int n = g.node_count();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (!g.has_edge(i, j)) continue;
            for (int k = j + 1; k <= n; ++k) {
                if (g.has_edge(i, k) && g.has_edge(j, k)) return false;
            }
        }
    }
    return true;
}

bool is_matching(const LabeledGraph& g) {
    for (int v = 1; v <= g.node_count(); ++v) {
        if (g.degree(v) > 1) return false;
    }
    return true;
}

bool has_induced_p4(const LabeledGraph& g) {
    // An induced 4-path a-b-c-d: three path edges present, the other three
    // pairs absent. Unordered scan over {a,d} and {b,c} choices.
    const int n = g.node_count();
    for (int b = 1; b <= n; ++b) {
        for (int c = 1; c <= n; ++c) {
            if (b == c || !g.has_edge(b, c)) continue;
            for (int a = 1; a <= n; ++a) {
                if (a == b || a == c || !g.has_edge(a, b) || g.has_edge(a, c)) continue;
                for (int d = 1; d <= n; ++d) {
                    if (d == a || d == b || d == c) continue;
                    if (g.has_edge(c, d) && !g.has_edge(b, d) && !g.has_edge(a, d)) return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

const GraphClass& catalog(std::string_view name) {
    static const GraphClass all("all-graphs", [](const LabeledGraph&) { return true; }, true, 6);
    static const GraphClass empty(
        "empty-graphs", [](const LabeledGraph& g) { return g.edge_count() == 0; }, true, 7);
    static const GraphClass forests("forests", is_forest, true, 7);
    static const GraphClass trifree("triangle-free", is_triangle_free, true, 6);
    static const GraphClass matchings("matchings", is_matching, true, 7);
    static const GraphClass cographs(
        "cographs", [](const LabeledGraph& g) { return !has_induced_p4(g); }, true, 6);
    if (name == "all-graphs") return all;
    if (name == "empty-graphs") return empty;
    if (name == "forests") return forests;
    if (name == "triangle-free") return trifree;
    if (name == "matchings") return matchings;
    if (name == "cographs") return cographs;
    throw ContractViolation("catalog: unknown class '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
    return {"all-graphs", "empty-graphs", "forests", "triangle-free", "matchings", "cographs"};
}

std::uint64_t class_cardinality(const GraphClass& cls, int n) {
    return cls.cardinality(n);
}

double f_of_n(const GraphClass& cls, int n) {
    if (n < 1) throw ContractViolation("f_of_n: n must be positive");
    double best = -1.0;
    bool any = false;
    for (int k = 1; k <= n; ++k) {
        const std::uint64_t card = cls.cardinality(k);
        if (card == 0) continue;  // empty level contributes -infinity
        any = true;
        best = std::max(best, std::log2(static_cast<double>(card)) / k);
    }
    if (!any) throw ContractViolation("f_of_n: class is empty at every level up to n");
    return n * best;
}

int ceil_two_log2_over_k(std::uint64_t m, int k) {
    if (k < 1) throw ContractViolation("ceil_two_log2_over_k: k must be positive");
    if (m <= 1) return 0;
    const unsigned __int128 target = static_cast<unsigned __int128>(m) * m;
    for (int e = 0;; ++e) {
        const long long shift = static_cast<long long>(e) * k;
        if (shift >= 127) return e;  // m^2 < 2^127 always holds for 64-bit m
        if ((static_cast<unsigned __int128>(1) << shift) >= target) return e;
    }
}

int ceil_f_over_n(const GraphClass& cls, int n) {
    if (n < 1) throw ContractViolation("ceil_f_over_n: n must be positive");
    // ceil of a max equals max of ceils; each term is the least e with
    // 2^(e*k) >= |G_k|, found by exact shifts.
    int best = 0;
    bool any = false;
    for (int k = 1; k <= n; ++k) {
        const std::uint64_t card = cls.cardinality(k);
        if (card == 0) continue;
        any = true;
        int e = 0;
        while (static_cast<long long>(e) * k < 64 &&
               (static_cast<unsigned __int128>(1) << (e * k)) < card) {
            ++e;
        }
        best = std::max(best, e);
    }
    if (!any) throw ContractViolation("ceil_f_over_n: class is empty at every level up to n");
    return best;
}

bool verify_hereditary(const GraphClass& cls, int n_max) {
    if (n_max > 5 || n_max > cls.n_max()) {
        throw ContractViolation("verify_hereditary: n_max out of supported range");
    }
    for (int n = 1; n <= n_max; ++n) {
        for (const LabeledGraph& g : cls.enumerate(n)) {
            // every nonempty subset of [n]
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                std::vector<int> nodes;
                for (int v = 1; v <= n; ++v) {
                    if ((mask >> (v - 1)) & 1) nodes.push_back(v);
                }
                if (!cls.contains(induced_subgraph(g, nodes))) return false;
            }
        }
    }
    return true;
}

}  // namespace cliquerec
