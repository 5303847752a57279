#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gdm/abelian.hpp"
#include "gdm/graphs.hpp"

namespace gdm {

// Vertex (i, j) of a product graph: i in the base graph, j on the cycle.
// Linear vertex id is i*cycle + j.
struct ProductVertex {
    int i = 0;
    int j = 0;
};

struct VerifyReport {
    bool is_bijection = false;
    bool is_constant_weight = false;
    // Present iff both checks pass.
    std::optional<Element> magic_constant;
    // Linear ids: the duplicated pair when bijectivity fails, the vertices
    // whose weight disagrees with vertex 0's when constancy fails.
    std::vector<int> offending_vertices;

    bool ok() const { return is_bijection && is_constant_weight; }
};

// A complete assignment of group elements to the vertices of base x C_k.
// cycle == 1 means the base graph is labeled as-is, with no product taken.
class Labeling {
  public:
    Labeling(GroupSpec group, Graph base, int cycle, std::vector<Element> labels);

    const GroupSpec& group() const { return group_; }
    const Graph& base() const { return base_; }
    int cycle() const { return cycle_; }
    // The graph the labeling lives on: base x C_cycle, or base when cycle == 1.
    const Graph& graph() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }

    int linear_id(ProductVertex v) const;
    ProductVertex product_vertex(int linear) const;

    const Element& label(int linear) const;
    const Element& label(ProductVertex v) const { return label(linear_id(v)); }
    const std::vector<Element>& labels() const { return labels_; }

    // Open-neighborhood weight, summed over the adjacency of graph().
    Element weight(int linear) const;
    Element weight(ProductVertex v) const { return weight(linear_id(v)); }

    VerifyReport verify() const;

    // The labeling x -> -f(x) over the same graph.
    Labeling negated() const;

    nlohmann::json to_json() const;
    static Labeling from_json(const nlohmann::json& j);

  private:
    GroupSpec group_;
    Graph base_;
    int cycle_ = 1;
    Graph graph_;
    std::vector<Element> labels_;
};

}  // namespace gdm
