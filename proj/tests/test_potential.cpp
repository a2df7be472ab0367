#include "oracles.hpp"

#include <dicrit/constructions.hpp>
#include <dicrit/dicolour.hpp>
#include <dicrit/families.hpp>
#include <dicrit/ore.hpp>
#include <dicrit/potential.hpp>

#include <doctest.h>

using namespace dicrit;

namespace
{
    const Digraph k4 = complete_bidirected(4);
    const PotentialParams zero{0, 0};

    auto seven() -> Digraph
    {
        std::vector<Vertex> z1{1}, z2{2, 3};
        return ore_compose(k4, 0, 1, k4, 0, z1, z2);
    }
}

TEST_CASE("packing examples")
{
    std::mt19937_64 rng(1);
    CHECK(max_packing(oracle::random_oriented(9, 0.5, rng)).value == 0);
    CHECK(max_packing(directed_cycle(5)).value == 0);

    auto p = max_packing(k4);
    CHECK(p.value == 2);
    CHECK(p.optimal);
    CHECK(is_valid_packing(k4, p));

    CHECK(max_packing(bidirected_cycle(5)).value == 2);
    CHECK(max_packing(seven()).value == 4);
    CHECK(max_packing(complete_bidirected(6)).value == 4);
}

TEST_CASE("is_valid_packing")
{
    Packing overlap{{{0, 1}, {1, 2}}, {}, 2, true};
    CHECK_FALSE(is_valid_packing(k4, overlap));
    Packing missing{{{0, 1}}, {}, 1, true};
    CHECK_FALSE(is_valid_packing(directed_cycle(3), missing));
    Packing fine{{{0, 1}, {2, 3}}, {}, 2, true};
    CHECK(is_valid_packing(k4, fine));
    Packing wrong_value{{{0, 1}}, {}, 2, true};
    CHECK_FALSE(is_valid_packing(k4, wrong_value));
}

TEST_CASE("packing agrees with the exhaustive oracle")
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        auto d = oracle::random_mixed(1 + i % 9, rng);
        auto p = max_packing(d);
        CHECK(p.optimal);
        CHECK(is_valid_packing(d, p));
        CHECK(p.value == oracle::packing_value(d));
    }
}

TEST_CASE("removing a vertex costs at most one packing unit")
{
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        auto d = oracle::random_mixed(2 + i % 8, rng);
        auto t = max_packing(d).value;
        for (Vertex v = 0; std::size_t(v) < d.vertex_count(); ++v) {
            auto r = remove_vertices(d, std::vector<Vertex>{v});
            CHECK(max_packing(r.graph).value >= t - 1);
        }
    }
}

TEST_CASE("packing under Ore-composition")
{
    std::mt19937_64 rng(47);
    for (int i = 0; i < 40; ++i) {
        auto a = generate_4ore(4 + 3 * (rng() % 3), rng()).graph();
        auto b = generate_4ore(4 + 3 * (rng() % 3), rng()).graph();
        auto digons = a.digons();
        auto [x, y] = digons[rng() % digons.size()];
        Vertex z = Vertex(rng() % b.vertex_count());
        auto nb = b.neighbours(z);
        std::shuffle(nb.begin(), nb.end(), rng);
        auto cut = 1 + rng() % (nb.size() - 1);
        std::vector<Vertex> z1(nb.begin(), nb.begin() + long(cut)), z2(nb.begin() + long(cut), nb.end());
        std::sort(z1.begin(), z1.end());
        std::sort(z2.begin(), z2.end());
        auto d = ore_compose(a, x, y, b, z, z1, z2);
        auto td = max_packing(d).value, ta = max_packing(a).value, tb = max_packing(b).value;
        CHECK(td >= ta + tb - 2);
        if (a == k4 || b == k4)
            CHECK(td >= ta + tb - 1);
    }
}

TEST_CASE("packing along composition traces")
{
    auto check = [](auto & self, const OreTrace & t) -> int {
        auto value = max_packing(t.graph()).value;
        if (t.is_leaf()) {
            CHECK(value == 2);
            return value;
        }
        auto a = self(self, t.digon_side()), b = self(self, t.split_side());
        bool k4 = t.digon_side().is_leaf() || t.split_side().is_leaf();
        CHECK(value >= a + b - (k4 ? 1 : 2));
        return value;
    };
    for (std::size_t n = 4; n <= 19; n += 3)
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            auto t = generate_4ore(n, seed);
            (void)check(check, t);
            CHECK(potential(t.graph(), zero) == Rational(4, 3));
        }
}

TEST_CASE("a 4-Ore digraph below the 2(n-1)/3 packing bound")
{
    // 13 vertices, 21 digons; bidirected triangles {1,10,12}, {10,11,12}, {4,5,7}, {5,6,7}.
    // At most two of them are disjoint and the remaining seven vertices carry a matching of size 3, so T = 7 < 8.
    std::vector<std::pair<Vertex, Vertex>> edges{{0, 2}, {0, 3}, {0, 11}, {1, 2}, {1, 3}, {1, 10}, {1, 12}, {2, 9}, {3, 6}, {3, 8}, {4, 5},
        {4, 7}, {4, 8}, {5, 6}, {5, 7}, {6, 7}, {6, 9}, {8, 9}, {10, 11}, {10, 12}, {11, 12}};
    auto d = bidirected(13, edges);
    CHECK(check_4ore_arc_identity(d));
    CHECK(is_4ore(d).status == SearchStatus::found);
    CHECK(is_k_dicritical(d, 4).verdict);
    CHECK(max_packing(d).value == 7);
    CHECK(oracle::packing_value(d) == 7);
    CHECK(3 * 7 < 2 * (13 - 1));
    auto p = PotentialParams::reference();
    auto bound = Rational(4, 3) + p.eps() * Rational(13) - p.delta() * Rational(8);
    CHECK(potential(d, p) > bound);
}

TEST_CASE("subdigraphs of small 4-Ore digraphs")
{
    for (std::size_t n = 4; n <= 7; n += 3)
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            auto d = generate_4ore(n, seed).graph();
            for (std::uint32_t mask = 1; mask + 1 < (1U << n); ++mask) {
                std::vector<Vertex> r;
                for (Vertex v = 0; std::size_t(v) < n; ++v)
                    if (mask >> v & 1)
                        r.push_back(v);
                auto m = induced(d, r).graph.arc_count();
                CHECK(Rational(10 * (long long)r.size(), 3) - Rational((long long)m) >= Rational(10, 3));
            }
        }
}

TEST_CASE("potential of K4")
{
    CHECK(potential(k4, zero) == Rational(4, 3));
    auto form = potential_form(k4);
    CHECK(form == LinearForm{Rational(4, 3), 4, -2});
    CHECK(potential(k4, PotentialParams::reference()) == Rational(20, 17));
    CHECK(form.at(PotentialParams::reference()) == Rational(20, 17));
    CHECK(potential_from(4, 12, 2, PotentialParams::reference()) == Rational(20, 17));
    CHECK_THROWS_AS(PotentialParams(-1, 0), InvalidArgument);
    CHECK_THROWS_AS(PotentialParams(0, Rational(-1, 2)), InvalidArgument);
}

TEST_CASE("potential form matches direct evaluation")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        auto d = oracle::random_mixed(1 + i % 8, rng);
        PotentialParams p(Rational(long(rng() % 7), 97), Rational(long(rng() % 9), 31));
        auto n = (long long)d.vertex_count(), m = (long long)d.arc_count();
        auto direct = (Rational(10, 3) + p.eps()) * Rational(n) - Rational(m) - p.delta() * Rational(oracle::packing_value(d));
        CHECK(potential(d, p) == direct);
        CHECK(potential_form(d).at(p) == direct);
    }
}

TEST_CASE("parameter audit")
{
    auto rows = audit_params(PotentialParams::reference());
    CHECK(rows.size() == 22);
    for (const auto & r : rows)
        CHECK_MESSAGE(r.satisfied, r.label);

    for (const auto & r : audit_params(zero))
        CHECK_MESSAGE(r.satisfied, r.label);

    auto bad = audit_params(PotentialParams(Rational(1, 10), 0));
    auto it = std::find_if(bad.begin(), bad.end(), [](const AuditRow & r) { return r.label == "δ≥6ε"; });
    REQUIRE(it != bad.end());
    CHECK_FALSE(it->satisfied);
    CHECK(it->lhs == Rational(-6, 10));

    auto first = rows.front();
    CHECK(first.lhs == Rational(2, 17) - Rational(6, 51));
}

TEST_CASE("oriented bound")
{
    auto g4 = oriented_bound_slack(76, 330);
    CHECK(g4 == Rational(1295, 17));
    CHECK(oriented_bound_slack(17, 56) == Rational(0));
    auto c3 = check_oriented_bound(directed_cycle(3));
    CHECK_FALSE(c3.holds);
    CHECK(c3.slack == Rational(-103, 17));
    CHECK_THROWS_AS((void)check_oriented_bound(k4), InvalidArgument);

    auto g = build_gk(ConstructionSpec{4, 1, 0, {}});
    auto b = check_oriented_bound(g.graph);
    CHECK(b.holds);
    CHECK(b.slack == Rational(1295, 17));
}

TEST_CASE("4-Ore arc identity")
{
    CHECK(check_4ore_arc_identity(k4));
    CHECK(check_4ore_arc_identity(seven()));
    CHECK_FALSE(check_4ore_arc_identity(complete_bidirected(3)));
}

TEST_CASE("surface bound")
{
    auto sphere = surface_vertex_bound(2);
    CHECK(sphere.value == -15);
    CHECK(sphere.vacuous);
    CHECK(surface_vertex_bound(0).value == 2);
    CHECK_FALSE(surface_vertex_bound(0).vacuous);
    CHECK(surface_vertex_bound(-1).value == 11);
    CHECK(surface_vertex_bound(1).value == -6);
    CHECK_THROWS_AS((void)surface_vertex_bound(3), InvalidArgument);
}
