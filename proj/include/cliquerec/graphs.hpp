#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquerec/errors.hpp"

namespace cliquerec {

// An n-node labeled graph over IDs 1..n, stored as a symmetric adjacency
// bit-matrix with zero diagonal. Supports n up to 32.
class LabeledGraph {
public:
    explicit LabeledGraph(int n);
    static LabeledGraph from_edges(int n, std::span<const std::pair<int, int>> edges);

    // Canonical index: the upper-triangle bit-string read row-major,
    // (1,2) first, interpreted as a big-endian integer. Enumerating codes in
    // increasing order lists graphs in lexicographic bit-string order.
    static LabeledGraph from_triangle_code(int n, std::uint64_t code);
    std::uint64_t triangle_code() const;

    int node_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    void set_edge(int u, int v, bool present);
    int degree(int v) const;

    // Row v of the adjacency matrix as 0/1 integer values.
    std::vector<std::uint64_t> row(int v) const;
    std::uint32_t row_mask(int v) const { return adj_[check_node(v) - 1]; }

    std::vector<std::vector<std::uint64_t>> adjacency_matrix() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const LabeledGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const LabeledGraph& o) const { return !(*this == o); }
    bool operator<(const LabeledGraph& o) const;

private:
    int check_node(int v) const;

    int n_;
    std::vector<std::uint32_t> adj_;  // bit j-1 of adj_[i-1] set iff edge {i,j}
};

// Graph on the relabeled node set U (increasing original ID), preserving
// adjacency. U must be a nonempty subset of [n].
LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const int> nodes);

// Text edge-list format: line 1 "n m", then m lines "u v" with
// 1 <= u < v <= n. Duplicate edges are rejected.
LabeledGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const LabeledGraph& g);

// A named set of labeled graphs with a membership predicate and an
// exhaustive enumerator, defined up to n_max nodes.
class GraphClass {
public:
    GraphClass(std::string name, std::function<bool(const LabeledGraph&)> contains,
               bool hereditary, int n_max);

    const std::string& name() const { return name_; }
    bool hereditary() const { return hereditary_; }
    int n_max() const { return n_max_; }
    bool contains(const LabeledGraph& g) const { return contains_(g); }

    // All members of size n in canonical (lexicographic upper-triangle)
    // order. Cached after the first scan; safe for shared reads.
    const std::vector<LabeledGraph>& enumerate(int n) const;

    std::uint64_t cardinality(int n) const { return enumerate(n).size(); }

private:
    std::string name_;
    std::function<bool(const LabeledGraph&)> contains_;
    bool hereditary_;
    int n_max_;
    mutable std::mutex cache_mutex_;
    mutable std::map<int, std::vector<LabeledGraph>> cache_;
};

// Shipped catalog: all-graphs, empty-graphs, forests, triangle-free,
// matchings, cographs. All hereditary.
const GraphClass& catalog(std::string_view name);
std::vector<std::string> catalog_names();

std::uint64_t class_cardinality(const GraphClass& cls, int n);

// n * max_{k in [n]} log2|G_k| / k with exact cardinalities. Empty levels
// are skipped; all levels empty is a contract violation.
double f_of_n(const GraphClass& cls, int n);

// ceil(f(n)/n) computed in exact integer arithmetic: the least e such that
// 2^(e*k) >= |G_k| for every k in [n].
int ceil_f_over_n(const GraphClass& cls, int n);

// Least e >= 0 with 2^(e*k) >= m^2, i.e. ceil(2*log2(m)/k) exactly.
int ceil_two_log2_over_k(std::uint64_t m, int k);

// Exhaustive hereditary check over all members up to n_max (<= 5): every
// nonempty induced subgraph of every member is again a member.
bool verify_hereditary(const GraphClass& cls, int n_max);

}  // namespace cliquerec
