#include "gdm/graphs.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gdm {

namespace {

std::vector<std::int64_t> parse_int_list(std::string_view text, char sep) {
    std::vector<std::int64_t> out;
    std::int64_t value = 0;
    bool have_digit = false;
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            value = value * 10 + (ch - '0');
            if (value > (std::int64_t{1} << 40)) throw std::invalid_argument("number too large");
            have_digit = true;
        } else if (ch == sep) {
            if (!have_digit) throw std::invalid_argument("malformed number list");
            out.push_back(value);
            value = 0;
            have_digit = false;
        } else {
            throw std::invalid_argument("malformed number list");
        }
    }
    if (!have_digit) throw std::invalid_argument("malformed number list");
    out.push_back(value);
    return out;
}

int checked_vertex_count(std::int64_t n) {
    if (n < 0 || n > (std::int64_t{1} << 20))
        throw std::invalid_argument("vertex count out of range");
    return static_cast<int>(n);
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view spec) {
    GeneratorSpec out;
    auto colon = spec.find(':');
    out.kind = std::string(spec.substr(0, colon));
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

    if (out.kind == "petersen") {
        if (!rest.empty() || colon != std::string_view::npos)
            throw std::invalid_argument("petersen takes no parameters");
        return out;
    }
    if (out.kind == "cycle" || out.kind == "complete") {
        out.params = parse_int_list(rest, ',');
        if (out.params.size() != 1) throw std::invalid_argument(out.kind + " takes one parameter");
        return out;
    }
    if (out.kind == "bipartite" || out.kind == "tripartite") {
        out.params = parse_int_list(rest, ',');
        std::size_t want = out.kind == "bipartite" ? 2 : 3;
        if (out.params.size() != want)
            throw std::invalid_argument(out.kind + " takes " + std::to_string(want) + " part sizes");
        return out;
    }
    if (out.kind == "circulant") {
        auto semi = rest.find(';');
        if (semi == std::string_view::npos)
            throw std::invalid_argument("circulant spec needs n;offsets");
        auto head = parse_int_list(rest.substr(0, semi), ',');
        if (head.size() != 1) throw std::invalid_argument("circulant spec needs a single n");
        out.params = std::move(head);
        auto offsets = parse_int_list(rest.substr(semi + 1), ',');
        out.params.insert(out.params.end(), offsets.begin(), offsets.end());
        return out;
    }
    throw std::invalid_argument("unknown generator kind: " + out.kind);
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loops are not allowed");
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
}

Graph Graph::generate(std::string_view spec) {
    GeneratorSpec gs = parse_generator_spec(spec);
    std::vector<std::pair<int, int>> edges;
    int n = 0;

    if (gs.kind == "cycle") {
        n = checked_vertex_count(gs.params[0]);
        if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    } else if (gs.kind == "complete") {
        n = checked_vertex_count(gs.params[0]);
        if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    } else if (gs.kind == "bipartite" || gs.kind == "tripartite") {
        std::int64_t total = 0;
        for (std::int64_t p : gs.params) {
            if (p < 1) throw std::invalid_argument("part sizes must be positive");
            total += p;
        }
        n = checked_vertex_count(total);
        std::vector<int> cls(static_cast<std::size_t>(n));
        int at = 0;
        for (std::size_t c = 0; c < gs.params.size(); ++c)
            for (std::int64_t k = 0; k < gs.params[c]; ++k) cls[static_cast<std::size_t>(at++)] = static_cast<int>(c);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (cls[static_cast<std::size_t>(u)] != cls[static_cast<std::size_t>(v)])
                    edges.emplace_back(u, v);
    } else if (gs.kind == "petersen") {
        n = 10;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);           // outer 5-cycle
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);   // inner pentagram
            edges.emplace_back(i, 5 + i);                 // spokes
        }
    } else if (gs.kind == "circulant") {
        n = checked_vertex_count(gs.params[0]);
        if (n < 3) throw std::invalid_argument("circulant needs at least 3 vertices");
        std::set<std::int64_t> offsets(gs.params.begin() + 1, gs.params.end());
        if (offsets.size() != gs.params.size() - 1)
            throw std::invalid_argument("circulant offsets must be distinct");
        std::set<std::pair<int, int>> es;
        for (std::int64_t s : offsets) {
            if (s < 1 || s > n / 2) throw std::invalid_argument("circulant offset out of range");
            for (int i = 0; i < n; ++i) {
                int j = static_cast<int>((i + s) % n);
                es.emplace(std::min(i, j), std::max(i, j));
            }
        }
        edges.assign(es.begin(), es.end());
    }

    Graph g(n, std::move(edges));
    g.spec_ = std::string(spec);
    return g;
}

Graph Graph::parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<std::int64_t> n;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tail;
        if (!n) {
            std::int64_t v;
            if (!(ls >> v)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                throw std::invalid_argument("edge list must start with the vertex count");
            }
            if (ls >> tail)
                throw std::invalid_argument("first line must contain only the vertex count");
            n = v;
            continue;
        }
        std::int64_t u, v;
        if (!(ls >> u)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw std::invalid_argument("malformed edge line");
        }
        if (!(ls >> v) || (ls >> tail))
            throw std::invalid_argument("edge line must contain exactly two vertex ids");
        if (u < 0 || v < 0 || u >= *n || v >= *n)
            throw std::invalid_argument("edge endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!n) throw std::invalid_argument("empty edge list");
    return Graph(checked_vertex_count(*n), std::move(edges));
}

std::string Graph::edge_list_text() const {
    std::string s = std::to_string(n_);
    s += '\n';
    for (auto [u, v] : edges_) {
        s += std::to_string(u);
        s += ' ';
        s += std::to_string(v);
        s += '\n';
    }
    return s;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    return d;
}

std::optional<std::int64_t> Graph::degree_residue_class(std::int64_t modulus) const {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    std::optional<std::int64_t> c;
    for (int v = 0; v < n_; ++v) {
        std::int64_t r = degree(v) % modulus;
        if (!c)
            c = r;
        else if (*c != r)
            return std::nullopt;
    }
    if (!c) c = 0;
    return c;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (int u : neighbors(comp[head])) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    comp.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph Graph::direct_product_with_cycle(int k) const {
    if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
    std::int64_t total = static_cast<std::int64_t>(n_) * k;
    if (total > (std::int64_t{1} << 20)) throw std::invalid_argument("product graph too large");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edges_.size() * 2 * static_cast<std::size_t>(k));
    for (auto [u, v] : edges_) {
        for (int j = 0; j < k; ++j) {
            edges.emplace_back(u * k + j, v * k + (j + 1) % k);
            edges.emplace_back(u * k + j, v * k + (j + k - 1) % k);
        }
    }
    return Graph(static_cast<int>(total), std::move(edges));
}

int two_adic_valuation(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("argument must be positive");
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

}  // namespace gdm
