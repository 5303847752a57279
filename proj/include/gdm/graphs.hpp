#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gdm {

// Parsed form of a generator spec such as "bipartite:1,9" or
// "circulant:10;1,2" (params holds n followed by the offsets).
struct GeneratorSpec {
    std::string kind;
    std::vector<std::int64_t> params;
};

GeneratorSpec parse_generator_spec(std::string_view spec);

// Simple undirected graph on vertices 0..n-1: no loops, no multi-edges.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    // Supported kinds: "cycle:5", "complete:4", "bipartite:1,9",
    // "tripartite:1,1,3", "petersen", "circulant:10;1,2". Partite classes
    // are numbered consecutively (first class first).
    static Graph generate(std::string_view spec);

    // Edge-list text: first line is n, then one "u v" per line.
    static Graph parse_edge_list(std::string_view text);
    std::string edge_list_text() const;

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    std::vector<int> degrees() const;

    // Generator spec this graph was built from; empty for explicit graphs.
    const std::string& gen_spec() const { return spec_; }

    // The common residue of all vertex degrees mod the given modulus, or
    // nullopt when the degrees disagree.
    std::optional<std::int64_t> degree_residue_class(std::int64_t modulus) const;

    std::vector<std::vector<int>> components() const;

    // Direct (tensor) product with the cycle C_k, k >= 3: vertex (i, j) has
    // id i*k + j and (i, j) ~ (i', j') iff i ~ i' and j' = j +- 1 (mod k).
    Graph direct_product_with_cycle(int k) const;

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::string spec_;
};

// Exponent of the largest power of two dividing n (n >= 1).
int two_adic_valuation(std::int64_t n);

}  // namespace gdm
