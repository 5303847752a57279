#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "gdm/search.hpp"

using namespace gdm;

namespace {

Element el(std::vector<std::int64_t> r) { return Element{std::move(r)}; }

struct Reference {
    std::vector<std::vector<Element>> solutions;  // sorted label vectors
    std::vector<Element> mus;                     // sorted, deduplicated
};

// Independent oracle: try every bijection outright.
Reference reference_enumerate(const Graph& h, const GroupSpec& group) {
    REQUIRE(group.order() == h.vertex_count());
    int n = h.vertex_count();
    std::vector<Element> elems = group.elements();
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    Reference out;
    do {
        std::optional<Element> mu;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            Element w = group.zero();
            for (int u : h.neighbors(v))
                w = group.add(w, elems[static_cast<std::size_t>(idx[static_cast<std::size_t>(u)])]);
            if (!mu)
                mu = w;
            else
                ok = w == *mu;
        }
        if (ok) {
            std::vector<Element> labels;
            for (int i : idx) labels.push_back(elems[static_cast<std::size_t>(i)]);
            out.solutions.push_back(std::move(labels));
            out.mus.push_back(mu ? *mu : group.zero());
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    std::sort(out.solutions.begin(), out.solutions.end());
    std::sort(out.mus.begin(), out.mus.end());
    out.mus.erase(std::unique(out.mus.begin(), out.mus.end()), out.mus.end());
    return out;
}

std::vector<std::vector<Element>> engine_solutions(const SearchOutcome& out) {
    std::vector<std::vector<Element>> sols;
    for (const Labeling& lab : out.solutions) sols.push_back(lab.labels());
    std::sort(sols.begin(), sols.end());
    return sols;
}

std::vector<std::vector<Element>> negation_closure(const GroupSpec& group,
                                                   std::vector<std::vector<Element>> sols) {
    std::size_t count = sols.size();
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<Element> neg;
        for (const Element& e : sols[s]) neg.push_back(group.neg(e));
        sols.push_back(std::move(neg));
    }
    std::sort(sols.begin(), sols.end());
    sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
    return sols;
}

}  // namespace

TEST_CASE("basic verdicts") {
    SearchOutcome out = search_product(Graph::generate("complete:2"), 4, GroupSpec::parse("8"));
    CHECK(out.status == SearchStatus::Found);
    CHECK(out.nodes_explored > 0);
    REQUIRE(out.labeling.has_value());
    CHECK(out.labeling->cycle() == 4);
    CHECK(out.labeling->base().vertex_count() == 2);
    VerifyReport vr = out.labeling->verify();
    CHECK(vr.ok());
    REQUIRE(out.magic_constants.size() >= 1);

    // On K3 the weight of v is -f(v), which a bijection cannot hold constant.
    out = exists_labeling(Graph::generate("complete:3"), GroupSpec::parse("3"));
    CHECK(out.status == SearchStatus::ExhaustedNone);
    CHECK_FALSE(out.labeling.has_value());
    CHECK(out.magic_constants.empty());

    out = search_product(Graph::generate("bipartite:1,2"), 4, GroupSpec::parse("4x3"));
    CHECK(out.status == SearchStatus::ExhaustedNone);

    // The single-vertex labeling over the trivial group is vacuously magic.
    out = exists_labeling(Graph(1, {}), GroupSpec::parse("1"));
    CHECK(out.status == SearchStatus::Found);
    REQUIRE(out.labeling.has_value());
    CHECK(*out.labeling->verify().magic_constant == GroupSpec::parse("1").zero());
}

TEST_CASE("blown budgets report timeout") {
    SearchOptions opts;
    opts.max_nodes = 1000;
    SearchOutcome out = search_product(Graph::generate("bipartite:1,2"), 4,
                                       GroupSpec::parse("12"), opts);
    CHECK(out.status == SearchStatus::Timeout);
    CHECK(out.nodes_explored >= 1000);
    CHECK_FALSE(out.labeling.has_value());
}

TEST_CASE("pruned search equals outright enumeration") {
    struct Case {
        Graph graph;
        const char* group;
    };
    const Case cases[] = {
        {Graph::generate("cycle:4"), "4"},
        {Graph::generate("cycle:4"), "2x2"},
        {Graph::generate("complete:3"), "3"},
        {Graph(3, {{0, 1}, {1, 2}}), "3"},
        {Graph::generate("bipartite:1,3"), "4"},
        {Graph::generate("bipartite:1,3"), "2x2"},
        {Graph(3, {}), "3"},
        {Graph(3, {{0, 1}}), "3"},  // isolated vertex pins mu to 0
        {Graph::generate("complete:2").direct_product_with_cycle(4), "4x2"},
    };
    for (const Case& c : cases) {
        int nv = c.graph.vertex_count();
        CAPTURE(c.group);
        CAPTURE(nv);
        GroupSpec group = GroupSpec::parse(c.group);
        Reference ref = reference_enumerate(c.graph, group);

        SearchOptions plain;
        plain.symmetry_breaking = false;
        plain.find_all = true;
        SearchOutcome full = exists_labeling(c.graph, group, plain);
        CHECK(engine_solutions(full) == ref.solutions);
        CHECK(full.magic_constants == ref.mus);
        CHECK(full.status ==
              (ref.solutions.empty() ? SearchStatus::ExhaustedNone : SearchStatus::Found));

        SearchOptions sym;
        sym.find_all = true;
        SearchOutcome halved = exists_labeling(c.graph, group, sym);
        CHECK(negation_closure(group, engine_solutions(halved)) == ref.solutions);
        CHECK(halved.magic_constants == ref.mus);
    }
}

TEST_CASE("known magic constant sets") {
    // On the star K_{1,3} over Z4 the center label must satisfy 2x = 2.
    Reference ref = reference_enumerate(Graph::generate("bipartite:1,3"), GroupSpec::parse("4"));
    CHECK(ref.solutions.size() == 12);
    CHECK(ref.mus == std::vector<Element>{el({1}), el({3})});

    Graph k2c4 = Graph::generate("complete:2").direct_product_with_cycle(4);
    std::vector<Element> mus = all_magic_constants(k2c4, GroupSpec::parse("2x2x2"));
    CHECK(std::find(mus.begin(), mus.end(), el({0, 1, 1})) != mus.end());

    Graph edgeless = Graph::generate("complete:1").direct_product_with_cycle(4);
    CHECK(all_magic_constants(edgeless, GroupSpec::parse("4")) == std::vector<Element>{el({0})});
}

TEST_CASE("parallel runs agree") {
    Graph k2c4 = Graph::generate("complete:2").direct_product_with_cycle(4);
    GroupSpec group = GroupSpec::parse("4x2");
    SearchOptions one;
    one.find_all = true;
    SearchOptions four = one;
    four.jobs = 4;
    SearchOutcome a = exists_labeling(k2c4, group, one);
    SearchOutcome b = exists_labeling(k2c4, group, four);
    CHECK(a.status == b.status);
    CHECK(engine_solutions(a) == engine_solutions(b));
    CHECK(a.magic_constants == b.magic_constants);

    SearchOptions plain;
    plain.jobs = 4;
    SearchOutcome c = search_product(Graph::generate("cycle:3"), 4, GroupSpec::parse("4x3"), plain);
    CHECK(c.status == SearchStatus::Found);
    CHECK(c.labeling->verify().ok());
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(exists_labeling(Graph::generate("complete:3"), GroupSpec::parse("4")),
                    std::invalid_argument);
    CHECK_THROWS_AS(search_product(Graph::generate("complete:3"), 4, GroupSpec::parse("8")),
                    std::invalid_argument);
    SearchOptions opts;
    opts.vertex_cap = 4;
    CHECK_THROWS_AS(search_product(Graph::generate("complete:2"), 4, GroupSpec::parse("8"), opts),
                    std::invalid_argument);
}
