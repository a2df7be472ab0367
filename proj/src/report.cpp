#include <dicrit/report.hpp>

namespace dicrit::report
{
    namespace
    {
        auto arc(Arc a) -> json { return json::array({a.tail, a.head}); }

        auto arcs(std::span<const Arc> as) -> json
        {
            auto out = json::array();
            for (auto a : as)
                out.push_back(arc(a));
            return out;
        }
    }

    auto colouring(const Colouring & c) -> json
    {
        return {{"k", c.k}, {"colours", c.colours}};
    }

    auto criticality(const CriticalityReport & r) -> json
    {
        json j = {
            {"k", r.k},
            {"dicritical", r.verdict},
            {"digraph", serialize(r.digraph)},
        };
        if (r.k_colouring)
            j["k_colouring"] = colouring(*r.k_colouring);
        if (r.failure_arc)
            j["failure_arc"] = arc(*r.failure_arc);
        if (! r.reason.empty())
            j["reason"] = r.reason;
        auto ws = json::array();
        for (const auto & w : r.witnesses)
            ws.push_back({{"arc", arc(w.arc)}, {"colouring", colouring(w.colouring)}});
        j["witnesses"] = ws;
        return j;
    }

    auto trace(const OreTrace & t) -> json
    {
        if (t.is_leaf())
            return {{"leaf", true}, {"labels", t.labels()}};
        auto [x, y] = t.replaced_digon();
        return {
            {"leaf", false},
            {"digon", {x, y}},
            {"split_vertex", t.split_vertex()},
            {"z1", t.z1()},
            {"z2", t.z2()},
            {"j_preserving", t.j_preserving()},
            {"labels", t.labels()},
            {"digon_side", trace(t.digon_side())},
            {"split_side", trace(t.split_side())},
        };
    }

    auto packing(const Packing & p) -> json
    {
        auto ds = json::array(), ts = json::array();
        for (auto [u, v] : p.digons)
            ds.push_back({u, v});
        for (const auto & t : p.triangles)
            ts.push_back(t);
        return {{"value", p.value}, {"optimal", p.optimal}, {"digons", ds}, {"triangles", ts}};
    }

    auto audit(const PotentialParams & p, const std::vector<AuditRow> & rows) -> json
    {
        auto rs = json::array();
        for (const auto & r : rows)
            rs.push_back({{"inequality", r.label}, {"lhs", r.lhs.str()}, {"bound", r.bound.str()}, {"satisfied", r.satisfied}});
        return {{"eps", p.eps().str()}, {"delta", p.delta().str()}, {"rows", rs}};
    }

    auto ledger(const ChargeLedger & l) -> json
    {
        auto strs = [](const std::vector<Rational> & v) {
            auto a = json::array();
            for (const auto & r : v)
                a.push_back(r.str());
            return a;
        };
        auto ts = json::array();
        for (const auto & t : l.transfers)
            ts.push_back({{"rule", to_string(t.rule)}, {"from", t.source}, {"to", t.target}, {"amount", t.amount.str()}});
        auto skipped = json::array();
        for (auto [v, u] : l.r2_inapplicable)
            skipped.push_back({v, u});
        return {
            {"eps", l.params.eps().str()},
            {"delta", l.params.delta().str()},
            {"sigma", strs(l.sigma)},
            {"initial", strs(l.initial)},
            {"transfers", ts},
            {"final", strs(l.final)},
            {"initial_total", l.initial_total().str()},
            {"final_total", l.final_total().str()},
            {"r2_inapplicable", skipped},
            {"notes", l.notes},
        };
    }

    auto structure(const Digraph & d) -> json
    {
        auto ch = find_chelou_arcs(d);
        auto comps = json::array();
        for (const auto & c : d6_components(d)) {
            json j = {{"vertices", c.vertices}, {"class", to_string(c.cls)}};
            if (! c.extremities.empty()) {
                j["extremities"] = c.extremities;
                j["extremities_valency_at_least_4"] = c.extremities_valency_ok;
            }
            comps.push_back(j);
        }
        auto vals = json::array();
        for (Vertex v = 0; std::size_t(v) < d.vertex_count(); ++v) {
            json j = {{"vertex", v}, {"degree", d.degree(v)}, {"valency8", valency8(d, v)}};
            if (d.degree(v) == 6 && d.incident_to_digon(v))
                j["neighbourhood_valency"] = neighbourhood_valency(d, v);
            vals.push_back(j);
        }
        return {
            {"out_chelou", arcs(ch.out_chelou)},
            {"in_chelou", arcs(ch.in_chelou)},
            {"d6_components", comps},
            {"vertices", vals},
        };
    }

    auto identification(const PhiIdentification & p) -> json
    {
        return {{"digraph", serialize(p.graph)}, {"image", p.image}, {"x", p.x}};
    }

    auto extension(const ExtensionResult & e) -> json
    {
        return {
            {"identification", identification(e.identified)},
            {"extender", serialize(e.extender)},
            {"extender_vertices", e.extender_vertices},
            {"core", e.core},
            {"extension", e.extension},
            {"extension_is_whole", e.extension_is_whole},
        };
    }

    auto certificate(const CompositionCertificate & c) -> json
    {
        auto cls = json::array();
        for (const auto & a : c.classes) {
            json j = {{"class", a.name}, {"arcs", a.arcs}, {"representative_valid", a.representative_valid}};
            if (a.representative)
                j["representative"] = arc(*a.representative);
            cls.push_back(j);
        }
        json j = {
            {"k", c.k},
            {"n0", c.n0},
            {"n", c.n},
            {"m", c.m},
            {"lower_bound", {{"method", c.lower_bound_method}, {"ok", c.lower_bound_ok}, {"checks", c.lower_bound_checks}}},
            {"k_colouring_valid", c.k_colouring_valid},
            {"arc_classes", cls},
            {"witnesses", {{"sampled", c.sampled}, {"validated", c.arcs_validated}, {"valid", c.witnesses_valid}}},
            {"verdict", c.verdict},
        };
        if (c.failure_arc)
            j["witnesses"]["failure_arc"] = arc(*c.failure_arc);
        if (c.base)
            j["base"] = certificate(*c.base);
        return j;
    }

    auto census(const CensusResult & r) -> json
    {
        auto rows = json::array();
        for (const auto & row : r.rows) {
            json j = {{"n", row.n}, {"classes", row.classes}, {"oriented_classes", row.oriented_classes}};
            j["d_k"] = row.d_k ? json(*row.d_k) : json(nullptr);
            j["o_k"] = row.o_k ? json(*row.o_k) : json(nullptr);
            rows.push_back(j);
        }
        auto recs = json::array();
        for (const auto & rec : r.records)
            recs.push_back({{"n", rec.n}, {"arcs", rec.arc_count}, {"oriented", rec.oriented}, {"digraph", serialize(rec.digraph)}});
        return {{"k", r.k}, {"n_max", r.n_max}, {"rows", rows}, {"records", recs}};
    }
}
