#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "gdm/labeling.hpp"

using namespace gdm;

namespace {

Element el(std::vector<std::int64_t> r) { return Element{std::move(r)}; }

std::vector<Element> z4_labels(std::vector<std::int64_t> values) {
    std::vector<Element> out;
    for (std::int64_t v : values) out.push_back(el({v}));
    return out;
}

}  // namespace

TEST_CASE("verify on the 4-cycle over Z4") {
    Graph c4 = Graph::generate("cycle:4");
    GroupSpec z4 = GroupSpec::parse("4");

    // w(0) = f(1) + f(3) = 3, and likewise everywhere.
    Labeling good(z4, c4, 1, z4_labels({0, 1, 3, 2}));
    VerifyReport rep = good.verify();
    CHECK(rep.ok());
    CHECK(rep.is_bijection);
    CHECK(rep.is_constant_weight);
    REQUIRE(rep.magic_constant.has_value());
    CHECK(*rep.magic_constant == el({3}));
    CHECK(rep.offending_vertices.empty());
    CHECK(good.weight(2) == el({3}));

    // Identity assignment alternates weights 0, 2, 0, 2.
    Labeling bad(z4, c4, 1, z4_labels({0, 1, 2, 3}));
    rep = bad.verify();
    CHECK_FALSE(rep.ok());
    CHECK(rep.is_bijection);
    CHECK_FALSE(rep.is_constant_weight);
    CHECK_FALSE(rep.magic_constant.has_value());
    CHECK(rep.offending_vertices == std::vector<int>{1, 3});

    // Swapping two adjacent labels of the good assignment breaks it.
    rep = Labeling(z4, c4, 1, z4_labels({1, 0, 3, 2})).verify();
    CHECK_FALSE(rep.ok());
    CHECK(rep.is_bijection);
    CHECK_FALSE(rep.is_constant_weight);

    // A repeated label reports the colliding pair first.
    rep = Labeling(z4, c4, 1, z4_labels({0, 1, 1, 2})).verify();
    CHECK_FALSE(rep.is_bijection);
    CHECK_FALSE(rep.magic_constant.has_value());
    REQUIRE(rep.offending_vertices.size() >= 2);
    CHECK(rep.offending_vertices[0] == 1);
    CHECK(rep.offending_vertices[1] == 2);

    // Negation is again magic, with the negated constant.
    rep = good.negated().verify();
    CHECK(rep.ok());
    CHECK(*rep.magic_constant == el({1}));
}

TEST_CASE("edgeless products have magic constant zero") {
    Graph k1 = Graph::generate("complete:1");
    for (const char* gs : {"4", "2x2"}) {
        GroupSpec g = GroupSpec::parse(gs);
        std::vector<Element> labels;
        for (std::int64_t i = 0; i < 4; ++i) labels.push_back(g.element(i));
        Labeling lab(g, k1, 4, std::move(labels));
        CHECK(lab.graph().edges().empty());
        VerifyReport rep = lab.verify();
        CHECK(rep.ok());
        CHECK(*rep.magic_constant == g.zero());
    }

    GroupSpec triv = GroupSpec::parse("1");
    VerifyReport rep = Labeling(triv, Graph(1, {}), 1, {triv.zero()}).verify();
    CHECK(rep.ok());
    CHECK(*rep.magic_constant == triv.zero());
}

TEST_CASE("constructor validation") {
    Graph c4 = Graph::generate("cycle:4");
    GroupSpec z4 = GroupSpec::parse("4");
    CHECK_THROWS_WITH_AS(Labeling(z4, c4, 2, z4_labels({0, 1, 2, 3})),
                         "cycle length must be 1 or >= 3", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Labeling(z4, c4, 1, z4_labels({0, 1, 2})),
                         "label count does not match the vertex count", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Labeling(GroupSpec::parse("5"), c4, 1, z4_labels({0, 1, 2, 3})),
                         "group order does not match the vertex count", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Labeling(z4, c4, 1, z4_labels({0, 1, 2, 7})),
                         "label is not a group element", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Labeling(z4, c4, 1, {el({0}), el({1}), el({2}), el({0, 0})}),
                         "label is not a group element", std::invalid_argument);
}

TEST_CASE("product vertex ids") {
    GroupSpec g = GroupSpec::parse("8");
    std::vector<Element> labels;
    for (std::int64_t i = 0; i < 8; ++i) labels.push_back(g.element(i));
    Labeling lab(g, Graph::generate("complete:2"), 4, std::move(labels));
    CHECK(lab.vertex_count() == 8);
    CHECK(lab.cycle() == 4);
    CHECK(lab.linear_id({1, 2}) == 6);
    ProductVertex pv = lab.product_vertex(6);
    CHECK(pv.i == 1);
    CHECK(pv.j == 2);
    for (int v = 0; v < 8; ++v) CHECK(lab.linear_id(lab.product_vertex(v)) == v);
    CHECK(lab.label(ProductVertex{1, 2}) == g.element(6));
    CHECK_THROWS_AS(lab.linear_id({2, 0}), std::out_of_range);
    CHECK_THROWS_AS(lab.linear_id({0, 4}), std::out_of_range);
    CHECK_THROWS_AS(lab.product_vertex(8), std::out_of_range);
    CHECK_THROWS_AS(lab.label(-1), std::out_of_range);
}

TEST_CASE("json round trip") {
    GroupSpec g = GroupSpec::parse("8");
    std::vector<Element> labels;
    for (std::int64_t i = 0; i < 8; ++i) labels.push_back(g.element(7 - i));
    Labeling lab(g, Graph::generate("complete:2"), 4, labels);

    nlohmann::json j = lab.to_json();
    CHECK(j.at("graph") == "complete:2");
    CHECK(j.at("cycle") == 4);
    CHECK(j.at("group") == "8");
    CHECK(j.at("labels").size() == 8);

    Labeling back = Labeling::from_json(j);
    CHECK(back.labels() == labels);
    CHECK(back.group().str() == "8");
    CHECK(back.cycle() == 4);
    CHECK(back.graph().edges() == lab.graph().edges());

    // Explicit graphs round-trip through the n/edges object form.
    GroupSpec z3 = GroupSpec::parse("3");
    Labeling expl(z3, Graph(3, {{0, 1}}), 1, {el({2}), el({0}), el({1})});
    nlohmann::json je = expl.to_json();
    CHECK(je.at("graph").is_object());
    CHECK(je.at("graph").at("n") == 3);
    Labeling eback = Labeling::from_json(je);
    CHECK(eback.labels() == expl.labels());
    CHECK(eback.graph().edges() == expl.graph().edges());
    CHECK(eback.base().gen_spec().empty());
}

TEST_CASE("json validation errors") {
    GroupSpec g = GroupSpec::parse("8");
    std::vector<Element> labels;
    for (std::int64_t i = 0; i < 8; ++i) labels.push_back(g.element(i));
    nlohmann::json good = Labeling(g, Graph::generate("complete:2"), 4, labels).to_json();

    nlohmann::json j = good;
    j.erase("group");
    CHECK_THROWS_WITH_AS(Labeling::from_json(j),
                         "malformed labeling: graph, cycle, group, labels required",
                         std::invalid_argument);

    j = good;
    j["labels"][0]["v"] = {9, 0};
    CHECK_THROWS_WITH_AS(Labeling::from_json(j), "labeling vertex out of range",
                         std::invalid_argument);

    j = good;
    j["labels"][1]["v"] = j["labels"][0]["v"];
    CHECK_THROWS_WITH_AS(Labeling::from_json(j), "duplicate vertex in labeling",
                         std::invalid_argument);

    j = good;
    j["labels"][0]["e"] = {9};
    CHECK_THROWS_WITH_AS(Labeling::from_json(j), "labeling element out of range for group 8",
                         std::invalid_argument);

    j = good;
    j["labels"].erase(0);
    CHECK_THROWS_WITH_AS(Labeling::from_json(j),
                         "incomplete labeling: some vertices have no label",
                         std::invalid_argument);

    j = good;
    j["cycle"] = 2;
    CHECK_THROWS_AS(Labeling::from_json(j), std::invalid_argument);
}
