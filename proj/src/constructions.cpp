#include "gdm/constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <utility>

namespace gdm {

namespace {

// Working coordinates for a construction: the complement A comes first and
// the selected 2-power factors last, matching how the schemes write
// elements. coord_map translates back to canonical factor positions.
struct Workspace {
    GroupSpec work;
    GroupSpec a_part;
    std::vector<Element> a_elems;
    std::vector<int> coord_map;
};

Workspace make_workspace(const GroupSpec& group, const std::vector<int>& special_positions) {
    const auto& canon = group.canonical_factors();
    std::vector<char> is_special(canon.size(), 0);
    for (int s : special_positions) is_special[static_cast<std::size_t>(s)] = 1;
    std::vector<std::int64_t> a_factors;
    std::vector<std::int64_t> work_factors;
    std::vector<int> map;
    for (std::size_t i = 0; i < canon.size(); ++i) {
        if (!is_special[i]) {
            a_factors.push_back(canon[i]);
            map.push_back(static_cast<int>(i));
        }
    }
    work_factors = a_factors;
    for (int s : special_positions) {
        work_factors.push_back(canon[static_cast<std::size_t>(s)]);
        map.push_back(s);
    }
    Workspace ws{GroupSpec(std::move(work_factors)), GroupSpec(std::move(a_factors)), {}, std::move(map)};
    ws.a_elems = ws.a_part.elements();
    return ws;
}

Element cat(const Element& a, std::initializer_list<std::int64_t> tail) {
    Element e = a;
    e.residues.insert(e.residues.end(), tail);
    return e;
}

ConstructReport pf(ConstructReport rep, std::string reason) {
    rep.outcome = ConstructReport::Outcome::PreconditionFailed;
    rep.reason = std::move(reason);
    return rep;
}

ConstructReport nc(ConstructReport rep, std::string reason) {
    rep.outcome = ConstructReport::Outcome::NotCovered;
    rep.reason = std::move(reason);
    return rep;
}

// Wraps the labels into a Labeling, verifies it, checks the closed-form
// magic constant and fills in the report. A failed check here is a bug.
ConstructReport finish(ConstructReport rep, const Workspace& ws, const Graph& g, int cycle,
                       std::vector<Element> labels, Element expected_magic) {
    Labeling lab(ws.work, g, cycle, std::move(labels));
    VerifyReport vr = lab.verify();
    if (!vr.ok())
        throw ConstructionDefect("construction " + rep.construction +
                                 " produced an invalid labeling for group " + rep.requested_group +
                                 (vr.is_bijection ? " (non-constant weight)" : " (not a bijection)"));
    if (*vr.magic_constant != expected_magic)
        throw ConstructionDefect("construction " + rep.construction + " for group " +
                                 rep.requested_group + " has magic constant " +
                                 to_string(*vr.magic_constant) + ", expected " +
                                 to_string(expected_magic));
    rep.outcome = ConstructReport::Outcome::Constructed;
    rep.labeling = std::move(lab);
    rep.magic = std::move(expected_magic);
    rep.coord_to_canonical = ws.coord_map;
    return rep;
}

std::vector<int> last_two_order_two_positions(const GroupSpec& group) {
    std::vector<int> twos;
    const auto& canon = group.canonical_factors();
    for (std::size_t i = 0; i < canon.size(); ++i)
        if (canon[i] == 2) twos.push_back(static_cast<int>(i));
    return {twos[twos.size() - 2], twos[twos.size() - 1]};
}

}  // namespace

nlohmann::json ConstructReport::to_json() const {
    nlohmann::json j;
    switch (outcome) {
        case Outcome::Constructed: j["outcome"] = "constructed"; break;
        case Outcome::NotCovered: j["outcome"] = "not_covered"; break;
        case Outcome::PreconditionFailed: j["outcome"] = "precondition_failed"; break;
    }
    if (!construction.empty()) j["construction"] = construction;
    j["errata"] = errata;
    j["group"] = requested_group;
    if (labeling) {
        j["labeling"] = labeling->to_json();
        j["magic"] = magic->residues;
        j["coord_to_canonical"] = coord_to_canonical;
    }
    if (!reason.empty()) j["reason"] = reason;
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

ConstructReport c4_cyclic2(const Graph& g, const GroupSpec& group, int alpha) {
    ConstructReport rep;
    rep.construction = "lemma21";
    rep.requested_group = group.str();
    std::int64_t n = g.vertex_count();
    if (group.order() != 4 * n)
        return pf(std::move(rep), "group order " + std::to_string(group.order()) + " != 4n = " +
                                      std::to_string(4 * n));
    if (alpha < 2) return pf(std::move(rep), "factor exponent must be at least 2");
    auto split = split_cyclic_two_factor(group, alpha);
    if (!split)
        return pf(std::move(rep),
                  "group has no cyclic direct factor of order 2^" + std::to_string(alpha));
    std::int64_t full = std::int64_t{1} << alpha;
    std::int64_t half = full / 2;
    std::int64_t block = full / 4;
    if (n % block != 0)
        return pf(std::move(rep), "2^(alpha-2) = " + std::to_string(block) +
                                      " does not divide the vertex count " + std::to_string(n));
    auto c = g.degree_residue_class(full);
    if (!c)
        return pf(std::move(rep),
                  "vertex degrees are not constant mod 2^" + std::to_string(alpha));

    Workspace ws = make_workspace(group, {split->first});
    Element top = cat(ws.a_part.zero(), {full - 1});
    std::vector<Element> labels(static_cast<std::size_t>(4 * n));
    for (std::int64_t i = 0; i < n; ++i) {
        const Element& a = ws.a_elems[static_cast<std::size_t>(i / block)];
        for (std::int64_t j : {0, 1})
            labels[static_cast<std::size_t>(i * 4 + j)] = cat(a, {(2 * i + j) % half});
        for (std::int64_t j : {2, 3})
            labels[static_cast<std::size_t>(i * 4 + j)] =
                ws.work.add(top, ws.work.neg(labels[static_cast<std::size_t>(i * 4 + j - 2)]));
    }
    Element mu = cat(ws.a_part.zero(), {(full - *c) % full});
    return finish(std::move(rep), ws, g, 4, std::move(labels), std::move(mu));
}

ConstructReport c4_z2z2(const Graph& g, const GroupSpec& group) {
    ConstructReport rep;
    rep.construction = "lemma22";
    rep.requested_group = group.str();
    std::int64_t n = g.vertex_count();
    if (group.order() != 4 * n)
        return pf(std::move(rep), "group order " + std::to_string(group.order()) + " != 4n = " +
                                      std::to_string(4 * n));
    if (!has_z2_z2_summand(group))
        return pf(std::move(rep), "group has no Z2 x Z2 direct summand");
    auto c = g.degree_residue_class(2);
    if (!c) return pf(std::move(rep), "vertex degrees are of mixed parity");

    Workspace ws = make_workspace(group, last_two_order_two_positions(group));
    std::vector<Element> labels(static_cast<std::size_t>(4 * n));
    for (std::int64_t i = 0; i < n; ++i) {
        const Element& a = ws.a_elems[static_cast<std::size_t>(i)];
        Element na = ws.a_part.neg(a);
        labels[static_cast<std::size_t>(i * 4 + 0)] = cat(a, {0, 0});
        labels[static_cast<std::size_t>(i * 4 + 1)] = cat(a, {1, 0});
        labels[static_cast<std::size_t>(i * 4 + 2)] = cat(na, {1, 1});
        labels[static_cast<std::size_t>(i * 4 + 3)] = cat(na, {0, 1});
    }
    Element mu = cat(ws.a_part.zero(), {*c, *c});
    return finish(std::move(rep), ws, g, 4, std::move(labels), std::move(mu));
}

ConstructReport c4_dispatch(const Graph& g, const GroupSpec& group) {
    ConstructReport rep;
    rep.requested_group = group.str();
    std::int64_t n = g.vertex_count();
    if (n < 1) return pf(std::move(rep), "graph has no vertices");
    if (group.order() != 4 * n)
        return pf(std::move(rep), "group order " + std::to_string(group.order()) + " != 4n = " +
                                      std::to_string(4 * n));
    int p = two_adic_valuation(n);
    std::int64_t mod = std::int64_t{1} << (p + 2);
    auto c = g.degree_residue_class(mod);
    if (!c)
        return pf(std::move(rep),
                  "vertex degrees are not constant mod 2^(v2(n)+2) = " + std::to_string(mod));
    if (has_z2_z2_summand(group)) return c4_z2z2(g, group);

    // No Z2 x Z2 summand and 4 | order, so the largest cyclic 2-factor has
    // exponent >= 2, and its degree congruence follows from the one mod 2^(p+2).
    int alpha = 0;
    for (std::int64_t f : group.canonical_factors())
        if ((f & (f - 1)) == 0)
            alpha = std::max(alpha, std::countr_zero(static_cast<std::uint64_t>(f)));
    return c4_cyclic2(g, group, alpha);
}

ConstructReport c4_tripartite(std::int64_t p, std::int64_t q, std::int64_t t,
                              const GroupSpec& group) {
    ConstructReport rep;
    rep.construction = "obs24";
    rep.requested_group = group.str();
    if (p < 1 || q < 1 || t < 1 || p % 2 == 0 || q % 2 == 0 || t % 2 == 0)
        return pf(std::move(rep), "part sizes must be odd and positive");
    std::int64_t nsum = p + q + t;
    if (group.order() != 4 * nsum)
        return pf(std::move(rep), "group order " + std::to_string(group.order()) +
                                      " != 4(p+q+t) = " + std::to_string(4 * nsum));
    Graph g = Graph::generate("tripartite:" + std::to_string(p) + "," + std::to_string(q) + "," +
                              std::to_string(t));
    if (has_z2_z2_summand(group)) return c4_z2z2(g, group);
    auto split = split_cyclic_two_factor(group, 2);
    if (!split) return pf(std::move(rep), "group is not Z4 x A or Z2 x Z2 x A");

    // Two of the three odd part sizes agree mod 4; those two play the roles
    // with the (0_A, 1) complement shift, the third gets (0_A, 1) or
    // (0_A, 3) depending on its residue.
    std::array<std::int64_t, 3> sizes{p, q, t};
    int X = -1, Y = -1;
    for (int i = 0; i < 3 && X < 0; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (sizes[static_cast<std::size_t>(i)] % 4 == sizes[static_cast<std::size_t>(j)] % 4) {
                X = i;
                Y = j;
                break;
            }
    int U = 3 - X - Y;
    std::array<std::int64_t, 3> offset{0, p, p + q};
    std::array<std::int64_t, 3> a_base{};
    a_base[static_cast<std::size_t>(X)] = 0;
    a_base[static_cast<std::size_t>(Y)] = sizes[static_cast<std::size_t>(X)];
    a_base[static_cast<std::size_t>(U)] =
        sizes[static_cast<std::size_t>(X)] + sizes[static_cast<std::size_t>(Y)];
    std::int64_t su =
        (sizes[static_cast<std::size_t>(U)] % 4 == sizes[static_cast<std::size_t>(X)] % 4) ? 1 : 3;

    Workspace ws = make_workspace(group, {split->first});
    std::vector<Element> labels(static_cast<std::size_t>(4 * nsum));
    for (int cl = 0; cl < 3; ++cl) {
        Element shift = cat(ws.a_part.zero(), {cl == U ? su : 1});
        for (std::int64_t r = 0; r < sizes[static_cast<std::size_t>(cl)]; ++r) {
            std::int64_t v = offset[static_cast<std::size_t>(cl)] + r;
            const Element& a =
                ws.a_elems[static_cast<std::size_t>(a_base[static_cast<std::size_t>(cl)] + r)];
            for (std::int64_t j : {0, 1})
                labels[static_cast<std::size_t>(v * 4 + j)] = cat(a, {2 * j});
            for (std::int64_t j : {2, 3})
                labels[static_cast<std::size_t>(v * 4 + j)] = ws.work.add(
                    shift, ws.work.neg(labels[static_cast<std::size_t>(v * 4 + j - 2)]));
        }
    }
    Element mu = cat(ws.a_part.zero(), {2});
    if (X != 0 || Y != 1)
        rep.notes = "part roles reordered to (" + std::to_string(X) + "," + std::to_string(Y) +
                    "," + std::to_string(U) + ")";
    return finish(std::move(rep), ws, g, 4, std::move(labels), std::move(mu));
}

ConstructReport c4_bipartite_z2z2(std::int64_t m, std::int64_t n, const GroupSpec& group) {
    ConstructReport rep;
    rep.construction = "lemma28";
    rep.errata = {"E3"};
    rep.requested_group = group.str();
    if (m < 1 || m % 2 == 0) return pf(std::move(rep), "m must be odd and positive");
    if (n < 2 || n % 2 != 0) return pf(std::move(rep), "n must be even and positive");
    if (group.order() != 4 * (m + n))
        return pf(std::move(rep), "group order " + std::to_string(group.order()) +
                                      " != 4(m+n) = " + std::to_string(4 * (m + n)));
    if (!has_z2_z2_summand(group))
        return pf(std::move(rep), "group has no Z2 x Z2 direct summand");

    Graph g = Graph::generate("bipartite:" + std::to_string(m) + "," + std::to_string(n));
    Workspace ws = make_workspace(group, last_two_order_two_positions(group));
    // |A| = m + n is odd and >= 3, so A has a nonzero element b with b != -b.
    Element b = ws.a_elems[1];
    Element nb = ws.a_part.neg(b);
    Element az = ws.a_part.zero();

    std::vector<Element> labels(static_cast<std::size_t>(4 * (m + n)));
    auto put = [&](std::int64_t v, int j, Element e) {
        labels[static_cast<std::size_t>(v * 4 + j)] = std::move(e);
    };
    auto generic_row = [&](std::int64_t v, const Element& a) {
        Element na = ws.a_part.neg(a);
        put(v, 0, cat(a, {0, 0}));
        put(v, 1, cat(a, {1, 0}));
        put(v, 2, cat(na, {1, 1}));
        put(v, 3, cat(na, {0, 1}));
    };

    // The three special rows; the first x row takes 0, the first two y rows
    // share the pair {b, -b}.
    put(0, 0, cat(az, {0, 0}));
    put(0, 1, cat(az, {1, 0}));
    put(0, 2, cat(az, {0, 1}));
    put(0, 3, cat(az, {1, 1}));
    put(m, 0, cat(b, {1, 0}));
    put(m, 1, cat(b, {0, 0}));
    put(m, 2, cat(nb, {1, 0}));
    put(m, 3, cat(nb, {1, 1}));
    put(m + 1, 0, cat(nb, {0, 0}));
    put(m + 1, 1, cat(nb, {0, 1}));
    put(m + 1, 2, cat(b, {0, 1}));
    put(m + 1, 3, cat(b, {1, 1}));

    // Remaining |A| - 3 elements feed the generic rows injectively (E3: the
    // published index scheme reuses an element when m = 1).
    std::vector<const Element*> rest;
    for (const Element& e : ws.a_elems)
        if (e != az && e != b && e != nb) rest.push_back(&e);
    std::size_t ri = 0;
    for (std::int64_t i = 1; i < m; ++i) generic_row(i, *rest[ri++]);
    for (std::int64_t l = 2; l < n; ++l) generic_row(m + l, *rest[ri++]);

    rep.notes = "pair element b = " + to_string(b);
    Element mu = cat(az, {0, 1});
    return finish(std::move(rep), ws, g, 4, std::move(labels), std::move(mu));
}

ConstructReport c8_z2z2(const Graph& g, const GroupSpec& group) {
    ConstructReport rep;
    rep.construction = "lemma31";
    rep.errata = {"E1", "E2"};
    rep.requested_group = group.str();
    std::int64_t n = g.vertex_count();
    if (group.order() != 8 * n)
        return pf(std::move(rep), "group order " + std::to_string(group.order()) + " != 8n = " +
                                      std::to_string(8 * n));
    if (!has_z2_z2_summand(group))
        return pf(std::move(rep), "group has no Z2 x Z2 direct summand");
    auto c = g.degree_residue_class(2);
    if (!c || *c != 0) return pf(std::move(rep), "all vertex degrees must be even");

    Workspace ws = make_workspace(group, last_two_order_two_positions(group));
    Element top = cat(ws.a_part.zero(), {1, 1});
    std::vector<Element> labels(static_cast<std::size_t>(8 * n));
    auto at = [&](std::int64_t i, std::int64_t j) -> Element& {
        return labels[static_cast<std::size_t>(i * 8 + j)];
    };
    for (std::int64_t i = 0; i < n; ++i) {
        at(i, 0) = cat(ws.a_elems[static_cast<std::size_t>(2 * i)], {0, 0});
        at(i, 1) = cat(ws.a_elems[static_cast<std::size_t>(2 * i + 1)], {0, 0});
        at(i, 4) = cat(ws.a_elems[static_cast<std::size_t>(2 * i)], {0, 1});
        at(i, 5) = cat(ws.a_elems[static_cast<std::size_t>(2 * i + 1)], {0, 1});
        for (std::int64_t j : {2, 3, 6, 7}) at(i, j) = ws.work.add(top, ws.work.neg(at(i, j - 2)));
    }
    return finish(std::move(rep), ws, g, 8, std::move(labels), ws.work.zero());
}

ConstructReport c8_z4(const Graph& g, const GroupSpec& group) {
    ConstructReport rep;
    rep.construction = "thm32c2";
    rep.requested_group = group.str();
    std::int64_t n = g.vertex_count();
    if (group.order() != 8 * n)
        return pf(std::move(rep), "group order " + std::to_string(group.order()) + " != 8n = " +
                                      std::to_string(8 * n));
    auto split = split_cyclic_two_factor(group, 2);
    if (!split) return pf(std::move(rep), "group has no cyclic direct factor of order 4");
    auto r = g.degree_residue_class(4);
    if (!r) return pf(std::move(rep), "vertex degrees are not constant mod 4");
    if (*r % 2 != 0) return pf(std::move(rep), "degree residue mod 4 must be even");

    Workspace ws = make_workspace(group, {split->first});
    Element top = cat(ws.a_part.zero(), {3});
    std::vector<Element> labels(static_cast<std::size_t>(8 * n));
    auto at = [&](std::int64_t i, std::int64_t j) -> Element& {
        return labels[static_cast<std::size_t>(i * 8 + j)];
    };
    for (std::int64_t i = 0; i < n; ++i) {
        at(i, 0) = cat(ws.a_elems[static_cast<std::size_t>(2 * i)], {0});
        at(i, 1) = cat(ws.a_elems[static_cast<std::size_t>(2 * i + 1)], {0});
        at(i, 4) = cat(ws.a_elems[static_cast<std::size_t>(2 * i)], {2});
        at(i, 5) = cat(ws.a_elems[static_cast<std::size_t>(2 * i + 1)], {2});
        for (std::int64_t j : {2, 3, 6, 7}) at(i, j) = ws.work.add(top, ws.work.neg(at(i, j - 2)));
    }
    Element mu = cat(ws.a_part.zero(), {*r});
    return finish(std::move(rep), ws, g, 8, std::move(labels), std::move(mu));
}

ConstructReport c8_cyclic2(const Graph& g, const GroupSpec& group, int alpha) {
    ConstructReport rep;
    rep.construction = "thm32c3";
    rep.requested_group = group.str();
    std::int64_t n = g.vertex_count();
    if (group.order() != 8 * n)
        return pf(std::move(rep), "group order " + std::to_string(group.order()) + " != 8n = " +
                                      std::to_string(8 * n));
    if (alpha < 3) return pf(std::move(rep), "factor exponent must be at least 3");
    auto split = split_cyclic_two_factor(group, alpha);
    if (!split)
        return pf(std::move(rep),
                  "group has no cyclic direct factor of order 2^" + std::to_string(alpha));
    std::int64_t full = std::int64_t{1} << alpha;
    std::int64_t half = full / 2;
    std::int64_t quarter = full / 4;
    std::int64_t block = full / 8;
    if (n % block != 0)
        return pf(std::move(rep), "2^(alpha-3) = " + std::to_string(block) +
                                      " does not divide the vertex count " + std::to_string(n));
    auto r = g.degree_residue_class(full);
    if (!r || *r % 2 != 0)
        return nc(std::move(rep), "vertex degrees are not congruent to an even constant mod 2^" +
                                      std::to_string(alpha));

    Workspace ws = make_workspace(group, {split->first});
    Element top = cat(ws.a_part.zero(), {full - 1});
    Element lift = cat(ws.a_part.zero(), {half});
    std::vector<Element> labels(static_cast<std::size_t>(8 * n));
    auto at = [&](std::int64_t i, std::int64_t j) -> Element& {
        return labels[static_cast<std::size_t>(i * 8 + j)];
    };
    for (std::int64_t i = 0; i < n; ++i) {
        const Element& a = ws.a_elems[static_cast<std::size_t>(i / block)];
        for (std::int64_t j : {0, 1}) at(i, j) = cat(a, {(2 * i + j) % quarter});
        for (std::int64_t j : {2, 3}) at(i, j) = ws.work.add(top, ws.work.neg(at(i, j - 2)));
        for (std::int64_t j : {4, 5}) at(i, j) = ws.work.add(lift, at(i, j - 4));
        for (std::int64_t j : {6, 7}) at(i, j) = ws.work.add(top, ws.work.neg(at(i, j - 2)));
    }
    Element mu = cat(ws.a_part.zero(), {(full - *r) % full});
    return finish(std::move(rep), ws, g, 8, std::move(labels), std::move(mu));
}

ConstructReport c8_dispatch(const Graph& g, const GroupSpec& group) {
    ConstructReport rep;
    rep.requested_group = group.str();
    std::int64_t n = g.vertex_count();
    if (n < 1) return pf(std::move(rep), "graph has no vertices");
    if (group.order() != 8 * n)
        return pf(std::move(rep), "group order " + std::to_string(group.order()) + " != 8n = " +
                                      std::to_string(8 * n));
    auto parity = g.degree_residue_class(2);
    if (!parity || *parity != 0) return pf(std::move(rep), "all vertex degrees must be even");

    if (has_z2_z2_summand(group)) return c8_z2z2(g, group);

    std::vector<int> alphas;
    for (std::int64_t f : group.canonical_factors())
        if ((f & (f - 1)) == 0 && f >= 8)
            alphas.push_back(std::countr_zero(static_cast<std::uint64_t>(f)));
    std::sort(alphas.rbegin(), alphas.rend());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    for (int a : alphas) {
        auto r = g.degree_residue_class(std::int64_t{1} << a);
        if (r && *r % 2 == 0) return c8_cyclic2(g, group, a);
    }

    if (split_cyclic_two_factor(group, 2)) {
        auto r = g.degree_residue_class(4);
        if (r && *r % 2 == 0) return c8_z4(g, group);
    }

    return nc(std::move(rep),
              "no construction covers group " + group.str() + " for this degree pattern");
}

ConstructReport construct_for_spec(const std::string& gen_spec, int cycle, const GroupSpec& group) {
    GeneratorSpec gs = parse_generator_spec(gen_spec);
    Graph g = Graph::generate(gen_spec);
    if (cycle == 8) return c8_dispatch(g, group);
    if (cycle != 4) throw std::invalid_argument("cycle must be 4 or 8");

    if (gs.kind == "tripartite" && gs.params[0] % 2 && gs.params[1] % 2 && gs.params[2] % 2)
        return c4_tripartite(gs.params[0], gs.params[1], gs.params[2], group);
    if (gs.kind == "bipartite" && gs.params[0] % 2 == 1 && gs.params[1] % 2 == 0) {
        ConstructReport rep = c4_bipartite_z2z2(gs.params[0], gs.params[1], group);
        if (rep.constructed()) return rep;
        ConstructReport disp = c4_dispatch(g, group);
        return disp.constructed() ? disp : rep;
    }
    return c4_dispatch(g, group);
}

}  // namespace gdm
