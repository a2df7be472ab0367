#include <dicrit/families.hpp>
#include <dicrit/isomorphism.hpp>
#include <dicrit/ore.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace dicrit
{
    namespace
    {
        auto sorted_copy(std::span<const Vertex> s) -> std::vector<Vertex>
        {
            std::vector<Vertex> v(s.begin(), s.end());
            std::sort(v.begin(), v.end());
            return v;
        }

        auto identity(std::size_t n) -> std::vector<Vertex>
        {
            std::vector<Vertex> v(n);
            std::iota(v.begin(), v.end(), 0);
            return v;
        }

        auto is_4ore_arc_count(const Digraph & d) -> bool
        {
            return 3 * d.arc_count() + 4 == 10 * d.vertex_count();
        }
    }

    auto ore_compose(const Digraph & d1, Vertex x, Vertex y, const Digraph & d2, Vertex z,
        std::span<const Vertex> z1, std::span<const Vertex> z2) -> Digraph
    {
        if (! d1.is_bidirected() || ! d2.is_bidirected())
            throw InvalidArgument("Ore-composition needs bidirected digraphs");
        if (x < 0 || y < 0 || std::size_t(x) >= d1.vertex_count() || std::size_t(y) >= d1.vertex_count() || x == y || ! d1.has_digon(x, y))
            throw InvalidArgument("[" + std::to_string(x) + ", " + std::to_string(y) + "] is not a digon of the digon side");
        if (z < 0 || std::size_t(z) >= d2.vertex_count())
            throw InvalidArgument("split vertex out of range");

        auto p1 = sorted_copy(z1), p2 = sorted_copy(z2);
        if (p1.empty() || p2.empty())
            throw InvalidArgument("both parts of the split must be non-empty");
        std::vector<Vertex> both;
        std::set_union(p1.begin(), p1.end(), p2.begin(), p2.end(), std::back_inserter(both));
        if (both.size() != p1.size() + p2.size() || both != d2.neighbours(z))
            throw InvalidArgument("(Z1, Z2) is not a partition of the split vertex's neighbourhood");

        const auto n1 = d1.vertex_count();
        std::vector<Arc> arcs;
        for (const auto & a : d1.arcs())
            if (! ((a.tail == x && a.head == y) || (a.tail == y && a.head == x)))
                arcs.push_back(a);
        auto img = [&](Vertex v) { return split_side_image(n1, z, v); };
        for (const auto & [u, v] : d2.arcs())
            if (u != z && v != z)
                arcs.push_back({img(u), img(v)});
        for (auto [part, end] : {std::pair{&p1, x}, std::pair{&p2, y}})
            for (auto w : *part) {
                if (d2.has_arc(z, w))
                    arcs.push_back({end, img(w)});
                if (d2.has_arc(w, z))
                    arcs.push_back({img(w), end});
            }
        return Digraph(n1 + d2.vertex_count() - 1, std::move(arcs));
    }

    auto OreTrace::leaf() -> OreTrace
    {
        auto node = std::make_shared<Node>();
        node->labels = identity(4);
        node->graph = complete_bidirected(4);
        return OreTrace(std::move(node));
    }

    auto OreTrace::compose(const OreTrace & digon_side, Vertex x, Vertex y, const OreTrace & split_side,
        Vertex z, std::vector<Vertex> z1, std::vector<Vertex> z2, bool j_preserving) -> OreTrace
    {
        auto node = std::make_shared<Node>();
        node->graph = ore_compose(digon_side.graph(), x, y, split_side.graph(), z, z1, z2);
        node->digon_side = std::make_shared<const OreTrace>(digon_side);
        node->split_side = std::make_shared<const OreTrace>(split_side);
        node->x = x;
        node->y = y;
        node->z = z;
        std::sort(z1.begin(), z1.end());
        std::sort(z2.begin(), z2.end());
        node->z1 = std::move(z1);
        node->z2 = std::move(z2);
        node->j_preserving = j_preserving;
        node->labels = identity(node->graph.vertex_count());
        return OreTrace(std::move(node));
    }

    auto OreTrace::relabelled(std::span<const Vertex> perm) const -> OreTrace
    {
        auto node = std::make_shared<Node>(*_node);
        for (auto & l : node->labels)
            l = perm[l];
        node->graph = relabel(_node->graph, perm);
        return OreTrace(std::move(node));
    }

    auto OreTrace::replay() const -> Digraph
    {
        if (is_leaf())
            return relabel(complete_bidirected(4), _node->labels);
        auto layout = ore_compose(digon_side().replay(), _node->x, _node->y, split_side().replay(), _node->z, _node->z1, _node->z2);
        return relabel(layout, _node->labels);
    }

    auto OreTrace::base_clique() const -> std::optional<std::array<Vertex, 4>>
    {
        if (is_leaf())
            return std::array{_node->labels[0], _node->labels[1], _node->labels[2], _node->labels[3]};
        if (! _node->j_preserving)
            return std::nullopt;
        auto inner = digon_side().base_clique();
        if (! inner)
            return std::nullopt;
        for (auto & v : *inner)
            v = _node->labels[v];
        return inner;
    }

    auto OreTrace::composition_count() const -> std::size_t
    {
        return is_leaf() ? 0 : 1 + digon_side().composition_count() + split_side().composition_count();
    }

    namespace
    {
        auto below(std::mt19937_64 & rng, std::uint64_t bound) -> std::uint64_t
        {
            return rng() % bound;
        }

        auto random_4ore(std::size_t n, std::mt19937_64 & rng, bool j_preserving) -> OreTrace
        {
            auto built = OreTrace::leaf();
            while (built.graph().vertex_count() < n) {
                auto remaining = (n - built.graph().vertex_count()) / 3;
                auto piece_size = 4 + 3 * below(rng, remaining);
                auto piece = random_4ore(piece_size, rng, false);

                bool built_is_digon_side = j_preserving || below(rng, 2) == 0;
                const auto & digon_side = built_is_digon_side ? built : piece;
                const auto & split_side = built_is_digon_side ? piece : built;

                auto digons = digon_side.graph().digons();
                auto [x, y] = digons[below(rng, digons.size())];
                if (below(rng, 2))
                    std::swap(x, y);
                auto z = Vertex(below(rng, split_side.graph().vertex_count()));
                auto nz = split_side.graph().neighbours(z);
                auto mask = 1 + below(rng, (std::uint64_t(1) << nz.size()) - 2);
                std::vector<Vertex> z1, z2;
                for (std::size_t i = 0; i < nz.size(); ++i)
                    ((mask >> i) & 1 ? z1 : z2).push_back(nz[i]);

                built = OreTrace::compose(digon_side, x, y, split_side, z, std::move(z1), std::move(z2), built_is_digon_side);
            }
            return built;
        }
    }

    auto generate_4ore(std::size_t n_target, std::uint64_t seed, bool j_preserving) -> OreTrace
    {
        if (n_target < 4 || n_target % 3 != 1)
            throw InvalidArgument("4-Ore digraphs have 4, 7, 10, ... vertices; " + std::to_string(n_target) + " is unreachable");
        std::mt19937_64 rng(seed);
        return random_4ore(n_target, rng, j_preserving);
    }

    namespace
    {
        class Recogniser
        {
        public:
            explicit Recogniser(Budget budget) : _budget(budget) {}

            auto recognise(const Digraph & d) -> std::optional<OreTrace>
            {
                const auto n = d.vertex_count();
                if (n < 4 || n % 3 != 1 || ! is_4ore_arc_count(d) || ! d.is_bidirected())
                    return std::nullopt;
                for (Vertex v = 0; std::size_t(v) < n; ++v)
                    if (d.out_degree(v) < 3)
                        return std::nullopt;
                if (n == 4)
                    return OreTrace::leaf(); // 12 arcs on 4 vertices is K4

                auto hash = invariant_hash(d);
                auto & bucket = _memo[hash];
                for (const auto & [g, t] : bucket)
                    if (auto iso = find_isomorphism(g, d)) {
                        if (! t)
                            return std::nullopt;
                        return t->relabelled(*iso);
                    }

                auto result = decompose(d);
                _memo[hash].emplace_back(d, result);
                return result;
            }

            [[nodiscard]] auto steps() const -> std::uint64_t { return _steps; }

        private:
            Budget _budget;
            std::uint64_t _steps = 0;
            std::unordered_map<std::uint64_t, std::vector<std::pair<Digraph, std::optional<OreTrace>>>> _memo;

            auto decompose(const Digraph & d) -> std::optional<OreTrace>
            {
                const auto n = d.vertex_count();
                for (Vertex x = 0; std::size_t(x) < n; ++x)
                    for (Vertex y = x + 1; std::size_t(y) < n; ++y) {
                        if (d.adjacent(x, y))
                            continue;
                        if (++_steps > _budget.nodes)
                            throw BudgetExceeded("is_4ore");

                        std::vector<bool> allowed(n, true);
                        allowed[x] = allowed[y] = false;
                        auto comps = underlying_components(d, allowed);
                        if (comps.size() != 2)
                            continue;

                        for (int side = 0; side < 2; ++side)
                            if (auto t = try_split(d, x, y, comps[side], comps[1 - side]))
                                return t;
                    }
                return std::nullopt;
            }

            // Digon side = a + {x, y} plus [x, y]; split side = b plus a vertex z standing for x and y.
            auto try_split(const Digraph & d, Vertex x, Vertex y, const std::vector<Vertex> & a, const std::vector<Vertex> & b)
                -> std::optional<OreTrace>
            {
                if ((a.size() + 2) % 3 != 1 || (b.size() + 1) % 3 != 1)
                    return std::nullopt;

                std::vector<Vertex> z1, z2;
                for (auto w : b) {
                    bool to_x = d.adjacent(x, w), to_y = d.adjacent(y, w);
                    if (to_x && to_y)
                        return std::nullopt;
                    if (to_x)
                        z1.push_back(w);
                    if (to_y)
                        z2.push_back(w);
                }
                if (z1.empty() || z2.empty())
                    return std::nullopt;

                auto side1_vertices = a;
                side1_vertices.push_back(x);
                side1_vertices.push_back(y);
                std::sort(side1_vertices.begin(), side1_vertices.end());
                auto side1 = induced(d, side1_vertices);
                auto local = [](const Subdigraph & s, Vertex v) {
                    return Vertex(std::lower_bound(s.origin.begin(), s.origin.end(), v) - s.origin.begin());
                };
                auto lx = local(side1, x), ly = local(side1, y);
                auto d1 = side1.graph.with_digon(lx, ly);

                // Split side: b in order, then z as the last vertex.
                auto side2 = induced(d, b);
                const auto z = Vertex(b.size());
                std::vector<Arc> arcs(side2.graph.arcs().begin(), side2.graph.arcs().end());
                std::vector<Vertex> lz1, lz2;
                for (auto w : z1)
                    lz1.push_back(local(side2, w));
                for (auto w : z2)
                    lz2.push_back(local(side2, w));
                for (auto part : {&lz1, &lz2})
                    for (auto w : *part) {
                        arcs.push_back({z, w});
                        arcs.push_back({w, z});
                    }
                Digraph d2(b.size() + 1, std::move(arcs));

                auto t1 = recognise(d1);
                if (! t1)
                    return std::nullopt;
                auto t2 = recognise(d2);
                if (! t2)
                    return std::nullopt;

                auto composed = OreTrace::compose(*t1, lx, ly, *t2, z, lz1, lz2, true);
                // Layout ids: side1 origin, then b (z is last in side 2, so no shift).
                std::vector<Vertex> labels = side1.origin;
                labels.insert(labels.end(), side2.origin.begin(), side2.origin.end());
                auto trace = composed.relabelled(labels);
                if (! (trace.graph() == d))
                    throw std::logic_error("is_4ore: reconstructed composition differs from the input");
                return trace;
            }
        };
    }

    auto is_4ore(const Digraph & d, Budget budget) -> Recognition
    {
        Recogniser r(budget);
        try {
            auto trace = r.recognise(d);
            return {trace ? SearchStatus::found : SearchStatus::none, std::move(trace), r.steps()};
        }
        catch (const BudgetExceeded &) {
            return {SearchStatus::unknown, std::nullopt, r.steps()};
        }
    }

    auto find_diamonds(const Digraph & d) -> std::vector<Diamond>
    {
        const auto n = Vertex(d.vertex_count());
        std::vector<Diamond> result;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex c = b + 1; c < n; ++c)
                    for (Vertex e = c + 1; e < n; ++e) {
                        std::array<Vertex, 4> q{a, b, c, e};
                        int digons = 0, empty = 0;
                        std::pair<Vertex, Vertex> missing{-1, -1};
                        bool ok = true;
                        for (int i = 0; i < 4 && ok; ++i)
                            for (int j = i + 1; j < 4 && ok; ++j) {
                                bool f = d.has_arc(q[i], q[j]), r = d.has_arc(q[j], q[i]);
                                if (f && r)
                                    ++digons;
                                else if (! f && ! r) {
                                    ++empty;
                                    missing = {q[i], q[j]};
                                }
                                else
                                    ok = false;
                            }
                        if (! ok || digons != 5 || empty != 1)
                            continue;
                        bool degrees = true;
                        for (auto v : q)
                            if (v != missing.first && v != missing.second && d.degree(v) != 6)
                                degrees = false;
                        if (degrees)
                            result.push_back({q, missing.first, missing.second});
                    }
        return result;
    }

    auto find_emeralds(const Digraph & d) -> std::vector<std::array<Vertex, 3>>
    {
        const auto n = Vertex(d.vertex_count());
        std::vector<std::array<Vertex, 3>> result;
        for (Vertex a = 0; a < n; ++a) {
            if (d.degree(a) != 6)
                continue;
            for (Vertex b = a + 1; b < n; ++b) {
                if (d.degree(b) != 6 || ! d.has_digon(a, b))
                    continue;
                for (Vertex c = b + 1; c < n; ++c)
                    if (d.degree(c) == 6 && d.has_digon(a, c) && d.has_digon(b, c))
                        result.push_back({a, b, c});
            }
        }
        return result;
    }

    auto find_ore_collapsible(const Digraph & d, std::size_t size_cap, Budget budget) -> std::vector<OreCollapsible>
    {
        const auto n = d.vertex_count();
        std::vector<OreCollapsible> result;
        std::uint64_t spent = 0;

        for (std::size_t size = 4; size <= std::min(size_cap, n - 1); size += 3) {
            // Lexicographic enumeration of size-subsets.
            std::vector<Vertex> subset(size);
            std::iota(subset.begin(), subset.end(), 0);
            while (true) {
                auto bd = boundary(d, subset);
                if (bd.size() == 2) {
                    auto r = induced(d, subset);
                    auto lu = Vertex(std::lower_bound(subset.begin(), subset.end(), bd[0]) - subset.begin());
                    auto lv = Vertex(std::lower_bound(subset.begin(), subset.end(), bd[1]) - subset.begin());
                    auto completion = r.graph.with_digon(lu, lv);
                    if (is_4ore_arc_count(completion) && completion.is_bidirected()) {
                        auto rec = is_4ore(completion, Budget{budget.nodes - std::min(budget.nodes, spent)});
                        spent += rec.steps;
                        if (rec.status == SearchStatus::unknown)
                            throw BudgetExceeded("find_ore_collapsible");
                        if (rec.trace)
                            result.push_back({subset, bd[0], bd[1], std::move(*rec.trace)});
                    }
                }

                int i = int(size) - 1;
                while (i >= 0 && std::size_t(subset[i]) == n - size + std::size_t(i))
                    --i;
                if (i < 0)
                    break;
                ++subset[i];
                for (auto j = std::size_t(i) + 1; j < size; ++j)
                    subset[j] = subset[j - 1] + 1;
            }
        }
        return result;
    }

    auto split_vertex(const Digraph & d, Vertex v,
        const std::pair<std::vector<Vertex>, std::vector<Vertex>> & out_parts,
        const std::pair<std::vector<Vertex>, std::vector<Vertex>> & in_parts) -> Digraph
    {
        const auto n = d.vertex_count();
        if (v < 0 || std::size_t(v) >= n)
            throw InvalidArgument("vertex out of range");

        auto check = [](const std::pair<std::vector<Vertex>, std::vector<Vertex>> & parts, std::span<const Vertex> whole, const char * what) {
            auto a = sorted_copy(parts.first), b = sorted_copy(parts.second);
            std::vector<Vertex> u;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
            if (u.size() != a.size() + b.size() || ! std::equal(u.begin(), u.end(), whole.begin(), whole.end()))
                throw InvalidArgument(std::string(what) + " parts do not partition the neighbourhood");
        };
        check(out_parts, d.out_neighbours(v), "out-neighbourhood");
        check(in_parts, d.in_neighbours(v), "in-neighbourhood");

        const auto v2 = Vertex(n);
        std::vector<Arc> arcs;
        for (const auto & a : d.arcs())
            if (a.tail != v && a.head != v)
                arcs.push_back(a);
        for (auto u : out_parts.first)
            arcs.push_back({v, u});
        for (auto u : out_parts.second)
            arcs.push_back({v2, u});
        for (auto u : in_parts.first)
            arcs.push_back({u, v});
        for (auto u : in_parts.second)
            arcs.push_back({u, v2});
        return Digraph(n + 1, std::move(arcs));
    }
}
