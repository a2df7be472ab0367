#include "oracles.hpp"

#include <dicrit/families.hpp>
#include <dicrit/ore.hpp>
#include <dicrit/structure.hpp>

#include <doctest.h>

#include <set>

using namespace dicrit;

namespace
{
    const Digraph k4 = complete_bidirected(4);
    const PotentialParams ref = PotentialParams::reference();

    auto seven() -> Digraph
    {
        std::vector<Vertex> z1{1}, z2{2, 3};
        return ore_compose(k4, 0, 1, k4, 0, z1, z2);
    }

    // Out-chelou straight from the definition, over sets.
    auto out_chelou_oracle(const Digraph & d) -> std::vector<Arc>
    {
        std::vector<Arc> out;
        for (auto [x, y] : d.arcs()) {
            std::set<Vertex> in_y(d.in_neighbours(y).begin(), d.in_neighbours(y).end());
            std::set<Vertex> out_y(d.out_neighbours(y).begin(), d.out_neighbours(y).end());
            bool found = false;
            for (auto z : in_y)
                found = found || (z != x && ! out_y.count(z));
            if (! d.has_arc(y, x) && d.out_degree(x) == 3 && in_y.size() == 3 && found)
                out.push_back({x, y});
        }
        return out;
    }

    auto reversed_arcs(std::vector<Arc> arcs) -> std::vector<Arc>
    {
        for (auto & a : arcs)
            std::swap(a.tail, a.head);
        std::sort(arcs.begin(), arcs.end());
        return arcs;
    }
}

TEST_CASE("out-chelou pattern")
{
    // x = 0, y = 1, z = 2; N+(x) = {1, 3, 4}, N-(x) = {5, 6, 7}, N-(y) = {0, 2, 8}, N+(y) = {9, 10, 11}.
    auto d = parse("n 12 m 11\n0 1\n0 3\n0 4\n5 0\n6 0\n7 0\n2 1\n8 1\n1 9\n1 10\n1 11\n");
    auto c = find_chelou_arcs(d);
    CHECK(c.out_chelou == std::vector<Arc>{{0, 1}});
    CHECK(find_out_chelou_arcs(d.with_arcs(std::vector<Arc>{{1, 2}, {1, 8}})).empty());
    CHECK(find_chelou_arcs(k4).out_chelou.empty());
    CHECK(find_chelou_arcs(k4).in_chelou.empty());
    CHECK(find_chelou_arcs(directed_cycle(3)).out_chelou.empty());
    CHECK(find_chelou_arcs(directed_cycle(3)).in_chelou.empty());
}

TEST_CASE("chelou arcs: oracle and directional duality")
{
    std::mt19937_64 rng(61);
    int hits = 0;
    for (int i = 0; i < 300; ++i) {
        auto d = oracle::random_digraph(5 + i % 6, 0.3, rng);
        auto c = find_chelou_arcs(d);
        CHECK(c.out_chelou == out_chelou_oracle(d));
        auto r = find_chelou_arcs(d.reversed());
        CHECK(reversed_arcs(r.out_chelou) == c.in_chelou);
        CHECK(reversed_arcs(r.in_chelou) == c.out_chelou);
        hits += int(c.out_chelou.size());
    }
    CHECK(hits > 0);
}

TEST_CASE("D6 components")
{
    auto comps = d6_components(k4);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].vertices.size() == 4);
    CHECK(comps[0].cls == D6Class::other);

    std::mt19937_64 rng(5);
    CHECK(d6_vertices(oracle::random_oriented(10, 0.7, rng)).empty());

    auto pair = parse("n 10 m 10\n0 1\n1 0\n0 2\n0 3\n4 0\n5 0\n1 6\n1 7\n8 1\n9 1\n");
    auto p = d6_components(pair);
    REQUIRE(p.size() == 1);
    CHECK(p[0].vertices == std::vector<Vertex>{0, 1});
    CHECK(p[0].cls == D6Class::path2);
    CHECK(to_string(D6Class::path2) == "path2");
}

TEST_CASE("D6 path of three and star of four")
{
    // Bidirected path 0-1-2; each vertex padded to degree 6 with simple arcs to private leaves.
    std::vector<Arc> arcs{{0, 1}, {1, 0}, {1, 2}, {2, 1}};
    Vertex next = 3;
    auto pad = [&](Vertex v, int count) {
        for (int i = 0; i < count; ++i)
            arcs.push_back(i % 2 ? Arc{v, next++} : Arc{next++, v});
    };
    pad(0, 4);
    pad(1, 2);
    pad(2, 4);
    auto path = Digraph(std::size_t(next), arcs);
    auto comps = d6_components(path);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].cls == D6Class::path3);
    CHECK(comps[0].extremities == std::vector<Vertex>{0, 2});
    CHECK_FALSE(comps[0].extremities_valency_ok);

    arcs = {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0}};
    next = 4;
    pad(1, 4);
    pad(2, 4);
    pad(3, 4);
    auto star = Digraph(std::size_t(next), arcs);
    comps = d6_components(star);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].cls == D6Class::star4);
    CHECK(comps[0].extremities == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("valency")
{
    auto s7 = seven();
    for (Vertex v = 0; v < 7; ++v) {
        int expected = 0;
        for (auto a : s7.arcs())
            if ((a.tail == v && s7.degree(a.head) >= 8) || (a.head == v && s7.degree(a.tail) >= 8))
                ++expected;
        CHECK(valency8(s7, v) == expected);
    }

    // v = 0 of degree 6 joined by a digon to u = 1 of degree 8.
    std::vector<Arc> arcs{{0, 1}, {1, 0}};
    Vertex next = 2;
    for (int i = 0; i < 4; ++i)
        arcs.push_back(i % 2 ? Arc{0, next++} : Arc{next++, 0});
    for (int i = 0; i < 6; ++i)
        arcs.push_back(i % 2 ? Arc{1, next++} : Arc{next++, 1});
    auto d = Digraph(std::size_t(next), arcs);
    CHECK(d.degree(0) == 6);
    CHECK(d.degree(1) == 8);
    CHECK(valency8(d, 0) == 2);
    CHECK(neighbourhood_valency(d, 0) == valency8(d, 1));
    CHECK(valency8(d, 1) == 0);
    CHECK_THROWS_AS((void)neighbourhood_valency(d, 1), InvalidArgument);

    // Star centre 0 with three neighbours of degree 8 through single arcs.
    arcs = {{0, 1}, {2, 0}, {0, 3}};
    next = 4;
    for (Vertex u = 1; u <= 3; ++u)
        for (int i = 0; i < 7; ++i)
            arcs.push_back(i % 2 ? Arc{u, next++} : Arc{next++, u});
    auto s = Digraph(std::size_t(next), arcs);
    CHECK(valency8(s, 0) == 3);
}

TEST_CASE("K4 charge ledger")
{
    auto l = discharge(k4, ref);
    for (Vertex v = 0; v < 4; ++v) {
        CHECK(l.sigma[v] == Rational(1, 34));
        CHECK(l.initial[v] == Rational(11, 34));
        CHECK(l.final[v] == Rational(11, 34));
    }
    CHECK(l.transfers.empty());
    CHECK(l.initial_total() == Rational(22, 17));
    CHECK(l.final_total() == Rational(22, 17));
    CHECK(l.initial_total() >= potential(k4, ref));
}

TEST_CASE("discharging rules")
{
    auto sparse = parse("n 4 m 4\n0 1\n1 2\n2 3\n3 0\n");
    auto l = discharge(sparse, ref);
    CHECK(l.transfers.empty());
    for (Vertex v = 0; v < 4; ++v)
        CHECK(l.initial[v] == Rational(10, 3) + ref.eps() - Rational(1));

    auto r1 = parse("n 7 m 6\n0 1\n0 2\n0 3\n4 0\n5 0\n6 0\n");
    auto ld = discharge(r1, ref);
    CHECK(ld.transfers.size() == 6);
    Rational sent;
    for (const auto & t : ld.transfers) {
        CHECK(t.rule == Rule::r1);
        CHECK(t.source == 0);
        CHECK(t.amount == Rational(1, 12) - ref.eps() / Rational(8));
        sent += t.amount;
    }
    CHECK(ld.initial[0] - ld.final[0] == Rational(6) * (Rational(1, 12) - ref.eps() / Rational(8)));
    CHECK(sent == Rational(1, 2) - Rational(6, 8) * ref.eps());

    // Degree 7 with in-degree 3 sends to its three in-neighbours.
    auto r3 = parse("n 8 m 7\n1 0\n2 0\n3 0\n0 4\n0 5\n0 6\n0 7\n");
    auto l3 = discharge(r3, ref);
    CHECK(l3.transfers.size() == 3);
    for (const auto & t : l3.transfers) {
        CHECK(t.rule == Rule::r3);
        CHECK(t.target >= 1);
        CHECK(t.target <= 3);
    }
}

TEST_CASE("R2 sends to neighbours of degree at least 8")
{
    // 0 has degree 6 and lies on a digon with 1 of degree 8.
    std::vector<Arc> arcs{{0, 1}, {1, 0}};
    Vertex next = 2;
    for (int i = 0; i < 4; ++i)
        arcs.push_back(i % 2 ? Arc{0, next++} : Arc{next++, 0});
    for (int i = 0; i < 6; ++i)
        arcs.push_back(i % 2 ? Arc{1, next++} : Arc{next++, 1});
    auto d = Digraph(std::size_t(next), arcs);
    auto l = discharge(d, ref);
    std::vector<Transfer> r2;
    for (const auto & t : l.transfers)
        if (t.rule == Rule::r2)
            r2.push_back(t);
    // nu(1) = 0, d(1) = 8: per arc (-10/3 + 4 - eps) / 8, along both arcs of the digon.
    REQUIRE_FALSE(r2.empty());
    Rational total;
    for (const auto & t : r2) {
        CHECK(t.source == 0);
        CHECK(t.target == 1);
        total += t.amount;
    }
    CHECK(total == Rational(2) * (Rational(2, 3) - ref.eps()) / Rational(8));
    CHECK(l.final_total() == l.initial_total());
}

TEST_CASE("discharging conserves charge")
{
    std::mt19937_64 rng(71);
    for (int i = 0; i < 200; ++i) {
        auto d = oracle::random_mixed(4 + i % 12, rng);
        auto l = discharge(d, ref);
        CHECK(l.final_total() == l.initial_total());
        Rational recomputed;
        for (Vertex v = 0; std::size_t(v) < d.vertex_count(); ++v)
            recomputed += Rational(10, 3) + ref.eps() - Rational((long long)d.degree(v), 2) - l.sigma[v];
        CHECK(recomputed == l.initial_total());
    }
}

TEST_CASE("total charge bounds the potential on 4-Ore and oriented digraphs")
{
    for (std::size_t n = 4; n <= 16; n += 3)
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            auto d = generate_4ore(n, seed).graph();
            CHECK(discharge(d, ref).initial_total() >= potential(d, ref));
        }
    std::mt19937_64 rng(73);
    for (int i = 0; i < 50; ++i) {
        auto d = oracle::random_oriented(4 + i % 10, 0.5, rng);
        CHECK(discharge(d, ref).initial_total() >= potential(d, ref));
    }
}

TEST_CASE("phi-identification")
{
    auto d = seven();
    std::vector<Vertex> r{0, 1, 2, 3};
    auto p = phi_identify(d, r, Colouring{3, {1, 1, 2, 3}});
    CHECK(p.graph.vertex_count() == 6);
    CHECK(p.x == std::array<Vertex, 3>{3, 4, 5});
    CHECK(p.graph.has_digon(3, 4));
    CHECK(p.graph.has_digon(4, 5));
    CHECK(p.graph.has_digon(3, 5));
    CHECK(p.image[0] == 3);
    CHECK(p.image[1] == 3);
    CHECK(p.image[4] == 0);
    CHECK(is_k_dicolourable(p.graph, 3).status == SearchStatus::none);

    std::vector<Vertex> r2{2, 3, 4, 5};
    auto q = phi_identify(d, r2, Colouring{3, {1, 2, 1, 2}});
    CHECK(q.graph.vertex_count() == 6);
    CHECK(q.graph.degree(q.x[2]) == 4);
    CHECK(q.graph.has_digon(q.x[2], q.x[0]));
    CHECK(q.graph.has_digon(q.x[2], q.x[1]));
    CHECK_THROWS_AS((void)phi_identify(d, r2, Colouring{3, {1, 2, 1, 2}}, true), InvalidArgument);

    CHECK_THROWS_AS((void)phi_identify(d, r, Colouring{3, {1, 2, 3, 3}}), InvalidArgument);
    std::vector<Vertex> small{0, 1, 2};
    CHECK_THROWS_AS((void)phi_identify(d, small, Colouring{3, {1, 1, 2}}), InvalidArgument);
    std::vector<Vertex> unsorted{1, 0, 2, 3};
    CHECK_THROWS_AS((void)phi_identify(d, unsorted, Colouring{3, {1, 1, 2, 3}}), InvalidArgument);
}

TEST_CASE("identifications of 4-Ore digraphs are not 3-dicolourable")
{
    for (std::size_t n = 7; n <= 10; n += 3)
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            auto d = generate_4ore(n, seed).graph();
            std::vector<Vertex> r{0, 1, 2, 3};
            auto sub = induced(d, r);
            (void)enumerate_dicolourings(sub.graph, 3, [&](const Colouring & phi) {
                auto p = phi_identify(d, r, phi);
                CHECK(is_k_dicolourable(p.graph, 3).status == SearchStatus::none);
                return true;
            });
        }
}

TEST_CASE("dicritical extension")
{
    auto d = seven();
    std::vector<Vertex> r{0, 1, 2, 3};
    auto e = dicritical_extension(d, r, Colouring{3, {1, 1, 2, 3}});
    CHECK(e.core == std::vector<Vertex>{3});
    CHECK(e.extension_is_whole);
    CHECK(e.extender == k4);
    CHECK(potential(induced(d, e.extension).graph, PotentialParams(0, 0)) >= potential(d, PotentialParams(0, 0)));

    CHECK_THROWS_AS((void)dicritical_extension(directed_cycle(5).with_arcs(std::vector<Arc>{{1, 0}, {2, 1}}),
                        std::vector<Vertex>{0, 1, 2, 3}, Colouring{3, {1, 2, 1, 2}}),
        InvalidArgument);
}

TEST_CASE("dicritical extensions are built on 4-dicritical extenders")
{
    for (std::size_t n = 7; n <= 10; n += 3)
        for (std::uint64_t seed = 1; seed <= 2; ++seed) {
            auto d = generate_4ore(n, seed).graph();
            std::vector<Vertex> r{1, 2, 3, 4, 5};
            auto sub = induced(d, r);
            (void)enumerate_dicolourings(sub.graph, 3, [&](const Colouring & phi) {
                auto e = dicritical_extension(d, r, phi);
                CHECK(is_k_dicritical(e.extender, 4).verdict);
                CHECK_FALSE(e.core.empty());
                CHECK(std::includes(e.extension.begin(), e.extension.end(), r.begin(), r.end()));
                for (auto v : e.extension)
                    if (! std::binary_search(r.begin(), r.end(), v))
                        CHECK(std::binary_search(e.extender_vertices.begin(), e.extender_vertices.end(), e.identified.image[v]));
                return true;
            });
        }
}

TEST_CASE("collapsibility")
{
    auto d = seven();
    auto yes = is_collapsible(d, std::vector<Vertex>{0, 1, 2, 3});
    CHECK(yes.collapsible);
    CHECK(yes.colourings_checked == 1);

    auto no = is_collapsible(d, std::vector<Vertex>{0, 2, 4, 5});
    CHECK_FALSE(no.collapsible);
    REQUIRE(no.witness);
    CHECK_FALSE(no.reason.empty());

    CHECK_THROWS_AS((void)is_collapsible(d, std::vector<Vertex>{0, 1, 2}), InvalidArgument);
}
