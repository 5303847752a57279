#include "gdm/labeling.hpp"

#include <stdexcept>
#include <utility>

namespace gdm {

Labeling::Labeling(GroupSpec group, Graph base, int cycle, std::vector<Element> labels)
    : group_(std::move(group)), base_(std::move(base)), cycle_(cycle), labels_(std::move(labels)) {
    if (cycle_ != 1 && cycle_ < 3) throw std::invalid_argument("cycle length must be 1 or >= 3");
    graph_ = cycle_ == 1 ? base_ : base_.direct_product_with_cycle(cycle_);
    if (static_cast<std::int64_t>(labels_.size()) != graph_.vertex_count())
        throw std::invalid_argument("label count does not match the vertex count");
    if (group_.order() != graph_.vertex_count())
        throw std::invalid_argument("group order does not match the vertex count");
    for (const Element& e : labels_)
        if (!group_.contains(e)) throw std::invalid_argument("label is not a group element");
}

int Labeling::linear_id(ProductVertex v) const {
    if (v.i < 0 || v.i >= base_.vertex_count() || v.j < 0 || v.j >= cycle_)
        throw std::out_of_range("product vertex out of range");
    return v.i * cycle_ + v.j;
}

ProductVertex Labeling::product_vertex(int linear) const {
    if (linear < 0 || linear >= graph_.vertex_count())
        throw std::out_of_range("vertex id out of range");
    return ProductVertex{linear / cycle_, linear % cycle_};
}

const Element& Labeling::label(int linear) const {
    if (linear < 0 || linear >= static_cast<int>(labels_.size()))
        throw std::out_of_range("vertex id out of range");
    return labels_[static_cast<std::size_t>(linear)];
}

Element Labeling::weight(int linear) const {
    Element w = group_.zero();
    for (int u : graph_.neighbors(linear)) w = group_.add(w, label(u));
    return w;
}

VerifyReport Labeling::verify() const {
    VerifyReport rep;
    int n = graph_.vertex_count();

    rep.is_bijection = true;
    std::vector<int> owner(static_cast<std::size_t>(group_.order()), -1);
    for (int v = 0; v < n; ++v) {
        std::int64_t idx = group_.index_of(labels_[static_cast<std::size_t>(v)]);
        int& slot = owner[static_cast<std::size_t>(idx)];
        if (slot >= 0) {
            if (rep.is_bijection) {
                rep.offending_vertices.push_back(slot);
                rep.offending_vertices.push_back(v);
            }
            rep.is_bijection = false;
        } else {
            slot = v;
        }
    }

    rep.is_constant_weight = true;
    if (n > 0) {
        Element mu = weight(0);
        for (int v = 1; v < n; ++v) {
            if (weight(v) != mu) {
                rep.is_constant_weight = false;
                rep.offending_vertices.push_back(v);
            }
        }
        if (rep.is_bijection && rep.is_constant_weight) rep.magic_constant = mu;
    } else if (rep.is_bijection) {
        rep.magic_constant = group_.zero();
    }
    return rep;
}

Labeling Labeling::negated() const {
    std::vector<Element> neg;
    neg.reserve(labels_.size());
    for (const Element& e : labels_) neg.push_back(group_.neg(e));
    return Labeling(group_, base_, cycle_, std::move(neg));
}

nlohmann::json Labeling::to_json() const {
    nlohmann::json j;
    if (!base_.gen_spec().empty()) {
        j["graph"] = base_.gen_spec();
    } else {
        nlohmann::json edges = nlohmann::json::array();
        for (auto [u, v] : base_.edges()) edges.push_back({u, v});
        j["graph"] = {{"n", base_.vertex_count()}, {"edges", std::move(edges)}};
    }
    j["cycle"] = cycle_;
    j["group"] = group_.str();
    nlohmann::json labels = nlohmann::json::array();
    for (int v = 0; v < graph_.vertex_count(); ++v) {
        ProductVertex pv = product_vertex(v);
        labels.push_back({{"v", {pv.i, pv.j}}, {"e", labels_[static_cast<std::size_t>(v)].residues}});
    }
    j["labels"] = std::move(labels);
    return j;
}

Labeling Labeling::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("cycle") || !j.contains("group") ||
        !j.contains("labels"))
        throw std::invalid_argument("malformed labeling: graph, cycle, group, labels required");

    Graph base;
    const auto& jg = j.at("graph");
    if (jg.is_string()) {
        base = Graph::generate(jg.get<std::string>());
    } else if (jg.is_object()) {
        int n = jg.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : jg.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("malformed labeling: bad edge");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        base = Graph(n, std::move(edges));
    } else {
        throw std::invalid_argument("malformed labeling: graph must be a spec string or an edge list");
    }

    int cycle = j.at("cycle").get<int>();
    if (cycle != 1 && cycle < 3)
        throw std::invalid_argument("malformed labeling: cycle must be 1 or >= 3");
    GroupSpec group = GroupSpec::parse(j.at("group").get<std::string>());

    std::int64_t total = static_cast<std::int64_t>(base.vertex_count()) * cycle;
    std::vector<Element> labels(static_cast<std::size_t>(total));
    std::vector<char> present(static_cast<std::size_t>(total), 0);
    for (const auto& entry : j.at("labels")) {
        const auto& jv = entry.at("v");
        if (!jv.is_array() || jv.size() != 2)
            throw std::invalid_argument("malformed labeling: vertex must be [i, j]");
        int i = jv[0].get<int>();
        int cj = jv[1].get<int>();
        if (i < 0 || i >= base.vertex_count() || cj < 0 || cj >= cycle)
            throw std::invalid_argument("labeling vertex out of range");
        std::size_t lin = static_cast<std::size_t>(i) * static_cast<std::size_t>(cycle) +
                          static_cast<std::size_t>(cj);
        if (present[lin]) throw std::invalid_argument("duplicate vertex in labeling");
        present[lin] = 1;
        Element e;
        for (const auto& r : entry.at("e")) e.residues.push_back(r.get<std::int64_t>());
        if (!group.contains(e))
            throw std::invalid_argument("labeling element out of range for group " + group.str());
        labels[lin] = std::move(e);
    }
    for (char p : present)
        if (!p) throw std::invalid_argument("incomplete labeling: some vertices have no label");

    return Labeling(std::move(group), std::move(base), cycle, std::move(labels));
}

}  // namespace gdm
