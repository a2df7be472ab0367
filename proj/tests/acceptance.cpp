// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include <dicrit/census.hpp>
#include <dicrit/constructions.hpp>
#include <dicrit/dicolour.hpp>
#include <dicrit/families.hpp>
#include <dicrit/ore.hpp>
#include <dicrit/potential.hpp>
#include <dicrit/structure.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace dicrit;

namespace
{
    struct Outcome
    {
        bool pass = true;
        std::string detail;

        auto require(bool ok, const std::string & what) -> void
        {
            if (! ok && pass) {
                pass = false;
                detail = what;
            }
        }
    };

    struct Instance
    {
        std::size_t n;
        std::uint64_t seed;
        Digraph graph;
    };

    auto ore_corpus() -> const std::vector<Instance> &
    {
        static const std::vector<Instance> corpus = [] {
            std::vector<Instance> out;
            for (std::size_t n = 4; n <= 25; n += 3)
                for (std::uint64_t seed = 1; seed <= 25; ++seed)
                    out.push_back({n, seed, generate_4ore(n, seed * 1000 + n).graph()});
            return out;
        }();
        return corpus;
    }

    auto census_records() -> const std::vector<CensusRecord> &
    {
        static const std::vector<CensusRecord> records = [] {
            std::vector<CensusRecord> out;
            for (int k = 2; k <= 4; ++k)
                for (auto & r : census(k, 5).records)
                    out.push_back(std::move(r));
            return out;
        }();
        return records;
    }

    auto name(const Instance & i) -> std::string
    {
        return "n=" + std::to_string(i.n) + " seed=" + std::to_string(i.seed);
    }

    auto criterion1() -> Outcome
    {
        Outcome o;
        auto k4 = complete_bidirected(4);
        auto r = is_k_dicritical(k4, 4);
        o.require(r.verdict, "K4 not 4-dicritical: " + r.reason);
        o.require(r.witnesses.size() == 12, "K4 has " + std::to_string(r.witnesses.size()) + " witnesses");
        for (const auto & w : r.witnesses)
            o.require(w.colouring.k == 3 && oracle::classes_acyclic(k4.without_arc(w.arc), w.colouring.colours),
                "invalid K4 witness");
        o.require(is_k_dicritical(complete_bidirected(3), 3).verdict, "K3 not 3-dicritical");
        for (std::size_t n = 2; n <= 7; ++n)
            o.require(is_k_dicritical(directed_cycle(n), 2).verdict, "directed " + std::to_string(n) + "-cycle not 2-dicritical");
        o.detail = o.pass ? "K4 (12 witnesses), K3, directed cycles n=2..7" : o.detail;
        return o;
    }

    auto criterion2() -> Outcome
    {
        Outcome o;
        auto p = PotentialParams::reference();
        std::size_t packing_low = 0, potential_high = 0;
        std::string first;
        for (const auto & i : ore_corpus()) {
            const auto & d = i.graph;
            const auto n = (long long)d.vertex_count(), m = (long long)d.arc_count();
            o.require(3 * m == 10 * n - 4, "arc identity fails at " + name(i));
            auto t = max_packing(d);
            o.require(t.optimal, "packing search not optimal at " + name(i));
            if (3 * t.value < 2 * (n - 1)) {
                ++packing_low;
                if (first.empty())
                    first = name(i) + " has T = " + std::to_string(t.value);
            }
            auto bound = Rational(4, 3) + p.eps() * Rational(n) - p.delta() * Rational(2 * (n - 1), 3);
            if (potential_from(d.vertex_count(), d.arc_count(), t.value, p) > bound)
                ++potential_high;
        }
        auto total = std::to_string(ore_corpus().size());
        if (packing_low || potential_high)
            o.require(false, "T(D) < 2(n-1)/3 on " + std::to_string(packing_low) + "/" + total + ", potential bound fails on " +
                                 std::to_string(potential_high) + "/" + total + ", first " + first);
        if (o.pass)
            o.detail = total + " instances, n = 4..25";
        return o;
    }

    auto criterion3() -> Outcome
    {
        Outcome o;
        std::size_t count = 0;
        for (const auto & i : ore_corpus())
            if (i.n <= 11) {
                auto r = is_k_dicritical(i.graph, 4);
                o.require(r.verdict, "not 4-dicritical at " + name(i) + ": " + r.reason);
                ++count;
            }
        if (o.pass)
            o.detail = std::to_string(count) + " instances with n <= 11";
        return o;
    }

    auto criterion4() -> Outcome
    {
        Outcome o;
        std::mt19937_64 rng(4004);
        for (int i = 0; i < 500; ++i) {
            auto d = i % 2 ? oracle::random_mixed(1 + i % 9, rng) : oracle::random_digraph(1 + i % 9, 0.5, rng);
            auto t = max_packing(d);
            o.require(t.optimal && is_valid_packing(d, t), "invalid packing on random digraph " + std::to_string(i));
            o.require(t.value == oracle::packing_value(d), "packing differs from the oracle on random digraph " + std::to_string(i));
            for (Vertex v = 0; std::size_t(v) < d.vertex_count() && d.vertex_count() > 1; ++v)
                o.require(max_packing(remove_vertices(d, std::vector<Vertex>{v}).graph).value >= t.value - 1,
                    "T(D - v) < T(D) - 1 on random digraph " + std::to_string(i));
        }
        int k4_sides = 0;
        for (int i = 0; i < 100; ++i) {
            auto a = generate_4ore(4 + 3 * (rng() % 4), rng()).graph();
            auto b = generate_4ore(4 + 3 * (rng() % 4), rng()).graph();
            auto digons = a.digons();
            auto [x, y] = digons[rng() % digons.size()];
            auto z = Vertex(rng() % b.vertex_count());
            auto nb = b.neighbours(z);
            std::shuffle(nb.begin(), nb.end(), rng);
            auto cut = long(1 + rng() % (nb.size() - 1));
            std::vector<Vertex> z1(nb.begin(), nb.begin() + cut), z2(nb.begin() + cut, nb.end());
            std::sort(z1.begin(), z1.end());
            std::sort(z2.begin(), z2.end());
            auto d = ore_compose(a, x, y, b, z, z1, z2);
            auto td = max_packing(d).value, ta = max_packing(a).value, tb = max_packing(b).value;
            bool k4 = a.vertex_count() == 4 || b.vertex_count() == 4;
            k4_sides += k4;
            o.require(td >= ta + tb - (k4 ? 1 : 2), "composition packing bound fails on composition " + std::to_string(i));
        }
        if (o.pass)
            o.detail = "500 random digraphs, 100 compositions (" + std::to_string(k4_sides) + " with a K4 side)";
        return o;
    }

    auto criterion5() -> Outcome
    {
        Outcome o;
        std::size_t subsets = 0;
        for (const auto & i : ore_corpus()) {
            if (i.n > 9)
                continue;
            // Induced subdigraphs carry the most arcs on a vertex set, so they are the binding case.
            for (std::uint32_t mask = 1; mask + 1 < (1U << i.n); ++mask) {
                std::vector<Vertex> r;
                for (Vertex v = 0; std::size_t(v) < i.n; ++v)
                    if (mask >> v & 1)
                        r.push_back(v);
                auto m = (long long)induced(i.graph, r).graph.arc_count();
                o.require(Rational(10 * (long long)r.size(), 3) - Rational(m) >= Rational(10, 3), "subdigraph bound fails at " + name(i));
                ++subsets;
            }
        }
        if (o.pass)
            o.detail = std::to_string(subsets) + " proper subsets";
        return o;
    }

    auto criterion6() -> Outcome
    {
        Outcome o;
        auto g3 = certify_dicritical_composition(ConstructionSpec{3, 1, 0, {}});
        o.require(g3.n == 12 && g3.m == 30, "G3 counts");
        o.require(g3.verdict && g3.lower_bound_method == "solver" && ! g3.sampled && g3.arcs_validated == 30, "G3 solver certificate");

        auto g4 = build_gk(ConstructionSpec{4, 1, 0, {}});
        o.require(g4.graph.vertex_count() == 76 && g4.graph.arc_count() == 330, "G4 counts");
        auto b = check_oriented_bound(g4.graph);
        o.require(b.holds && b.slack == Rational(1295, 17), "G4 oriented bound slack " + b.slack.str());
        o.require(2 * g4.graph.arc_count() <= 9 * g4.graph.vertex_count(), "G4 arc density");
        for (const auto & gd : g4.gadgets)
            o.require(gadget_forces_distinct(g4.graph, gd.x, gd.y, gd.triangle), "gadget fails");
        o.require(g4.gadgets.size() == 18, "G4 gadget count");

        auto cert = certify_dicritical_composition(ConstructionSpec{4, 1, 0, {}}, {}, 30, 2024);
        o.require(cert.verdict && cert.lower_bound_method == "compositional" && cert.lower_bound_ok, "G4 compositional certificate");
        o.require(cert.sampled && cert.arcs_validated == 30 && cert.witnesses_valid, "G4 sampled witnesses");
        if (o.pass)
            o.detail = "G3 12/30 solver-certified, G4 76/330 slack 1295/17, 18 gadgets, 30 sampled witnesses";
        return o;
    }

    auto criterion7() -> Outcome
    {
        Outcome o;
        auto rows = audit_params(PotentialParams::reference());
        for (const auto & r : rows)
            o.require(r.satisfied, "row " + r.label + " fails");
        if (o.pass)
            o.detail = std::to_string(rows.size()) + " rows at eps = 1/51, delta = 2/17";
        return o;
    }

    auto criterion8() -> Outcome
    {
        Outcome o;
        auto p = PotentialParams::reference();
        std::vector<Digraph> digraphs{complete_bidirected(4)};
        for (const auto & i : ore_corpus())
            digraphs.push_back(i.graph);
        for (const auto & r : census_records())
            digraphs.push_back(r.digraph);
        for (const auto & d : digraphs) {
            auto l = discharge(d, p);
            o.require(l.final_total() == l.initial_total(), "charge not conserved on\n" + serialize(d));
            o.require(l.initial_total() >= potential(d, p), "total charge below the potential on\n" + serialize(d));
        }
        auto l = discharge(complete_bidirected(4), p);
        for (Vertex v = 0; v < 4; ++v)
            o.require(l.sigma[v] == Rational(1, 34) && l.initial[v] == Rational(11, 34), "K4 ledger entries");
        o.require(l.initial_total() == Rational(22, 17) && potential(complete_bidirected(4), p) == Rational(20, 17), "K4 totals");
        if (o.pass)
            o.detail = std::to_string(digraphs.size()) + " digraphs; K4 ledger 1/34, 11/34, 22/17 >= 20/17";
        return o;
    }

    auto criterion9() -> Outcome
    {
        Outcome o;
        auto c2 = census(2, 5);
        for (int n = 2; n <= 5; ++n)
            o.require(c2.rows[std::size_t(n - 1)].d_k == std::size_t(n) && c2.rows[std::size_t(n - 1)].classes == 1, "d_2(" + std::to_string(n) + ")");
        for (const auto & r : c2.records)
            o.require(oracle::isomorphism(r.digraph, directed_cycle(std::size_t(r.n))).has_value(), "2-dicritical record is not a directed cycle");
        auto c3 = census(3, 5);
        o.require(c3.rows[2].d_k == 6u, "d_3(3)");
        bool k3 = std::any_of(c3.records.begin(), c3.records.end(), [](const CensusRecord & r) { return r.digraph == complete_bidirected(3); });
        o.require(k3, "K3 missing from the k = 3 census");
        auto c4 = census(4, 5);
        o.require(c4.rows[3].d_k == 12u, "d_4(4)");
        bool k4 = std::any_of(c4.records.begin(), c4.records.end(), [](const CensusRecord & r) { return r.digraph == complete_bidirected(4); });
        o.require(k4, "K4 missing from the k = 4 census");
        for (const auto & r : c4.records)
            o.require(3 * r.arc_count + 4 >= 10 * std::size_t(r.n), "4-dicritical record below 10n/3 - 4/3");
        if (o.pass) {
            std::ostringstream s;
            s << "d_2 = 2,3,4,5; d_3(3) = 6; d_4(4) = 12; " << c4.records.size() << " 4-dicritical classes checked";
            o.detail = s.str();
        }
        return o;
    }

    auto criterion10() -> Outcome
    {
        Outcome o;
        std::size_t count = 0;
        for (const auto & i : ore_corpus()) {
            if (i.n > 13)
                continue;
            auto r = is_4ore(i.graph);
            o.require(r.status == SearchStatus::found && r.trace, "not recognised at " + name(i));
            if (r.trace)
                o.require(oracle::isomorphism(r.trace->replay(), i.graph).has_value(), "replay not isomorphic at " + name(i));
            ++count;
        }
        if (o.pass)
            o.detail = std::to_string(count) + " instances with n <= 13";
        return o;
    }

    auto criterion11() -> Outcome
    {
        Outcome o;
        std::size_t colourings = 0, instances = 0;
        for (std::size_t n = 4; n <= 10; n += 3)
            for (std::uint64_t seed = 1; seed <= (n == 4 ? 1 : 15); ++seed) {
                auto t = generate_4ore(n, seed, true);
                const auto & d = t.graph();
                auto j = t.base_clique();
                o.require(j.has_value(), "no base clique");
                if (! j)
                    continue;
                ++instances;
                for (int a = 0; a < 4; ++a)
                    for (int b = a + 1; b < 4; ++b) {
                        auto u = (*j)[a], v = (*j)[b];
                        if (! d.has_digon(u, v))
                            continue;
                        (void)enumerate_dicolourings(d.without_digon(u, v), 3, [&](const Colouring & c) {
                            ++colourings;
                            std::set<int> others;
                            for (auto w : *j)
                                if (w != u && w != v)
                                    others.insert(c.colours[w]);
                            o.require(c.colours[u] == c.colours[v] && others.size() == 2 && ! others.count(c.colours[u]),
                                "digon-deleted colouring breaks the clique pattern");
                            return true;
                        });
                    }
                for (auto v : *j) {
                    auto sub = remove_vertices(d, std::vector<Vertex>{v});
                    std::vector<Vertex> pos(d.vertex_count(), -1);
                    for (std::size_t i = 0; i < sub.origin.size(); ++i)
                        pos[sub.origin[i]] = Vertex(i);
                    (void)enumerate_dicolourings(sub.graph, 3, [&](const Colouring & c) {
                        ++colourings;
                        std::set<int> seen;
                        for (auto w : *j)
                            if (w != v)
                                seen.insert(c.colours[pos[w]]);
                        o.require(seen.size() == 3, "vertex-deleted colouring repeats a colour on the clique");
                        return true;
                    });
                }
            }
        if (o.pass)
            o.detail = std::to_string(instances) + " J-preserving instances, " + std::to_string(colourings) + " colourings";
        return o;
    }
}

auto main() -> int
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"dicritical base cases", criterion1},
        {"4-Ore arc identity, packing and potential", criterion2},
        {"4-Ore digraphs are 4-dicritical", criterion3},
        {"packing lemmas", criterion4},
        {"subdigraph potential", criterion5},
        {"oriented constructions", criterion6},
        {"parameter audit", criterion7},
        {"discharging", criterion8},
        {"census", criterion9},
        {"recognition round trip", criterion10},
        {"old clique colourings", criterion11},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        }
        catch (const std::exception & e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail << " ["
                  << secs << " s]" << std::endl;
    }
    return all ? 0 : 1;
}
