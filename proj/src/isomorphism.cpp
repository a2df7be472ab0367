#include <dicrit/error.hpp>
#include <dicrit/isomorphism.hpp>

#include <algorithm>
#include <numeric>

namespace dicrit
{
    namespace
    {
        auto mix(std::uint64_t h, std::uint64_t x) -> std::uint64_t
        {
            // splitmix64 finaliser over the combined word
            std::uint64_t z = h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        }

        auto distinct(std::vector<std::uint64_t> v) -> std::size_t
        {
            std::sort(v.begin(), v.end());
            return std::size_t(std::unique(v.begin(), v.end()) - v.begin());
        }
    }

    auto refine(const Digraph & d) -> std::vector<std::uint64_t>
    {
        const auto n = d.vertex_count();
        std::vector<std::uint64_t> colour(n);
        for (Vertex v = 0; std::size_t(v) < n; ++v)
            colour[v] = mix(mix(d.out_degree(v), d.in_degree(v)), d.incident_to_digon(v));

        auto classes = distinct(colour);
        std::vector<std::uint64_t> next(n), scratch;
        for (std::size_t round = 0; round < n; ++round) {
            for (Vertex v = 0; std::size_t(v) < n; ++v) {
                auto h = mix(colour[v], 0x51ed);
                for (auto [nbrs, tag] : {std::pair{d.out_neighbours(v), 1ULL}, std::pair{d.in_neighbours(v), 2ULL}}) {
                    scratch.clear();
                    for (auto u : nbrs)
                        scratch.push_back(colour[u]);
                    std::sort(scratch.begin(), scratch.end());
                    h = mix(h, tag);
                    for (auto c : scratch)
                        h = mix(h, c);
                }
                next[v] = h;
            }
            colour.swap(next);
            auto now = distinct(colour);
            if (now == classes)
                break;
            classes = now;
        }
        return colour;
    }

    auto invariant_hash(const Digraph & d) -> std::uint64_t
    {
        auto colour = refine(d);
        std::sort(colour.begin(), colour.end());
        std::uint64_t h = mix(d.vertex_count(), d.arc_count());
        for (auto c : colour)
            h = mix(h, c);
        return h;
    }

    auto find_isomorphism(const Digraph & a, const Digraph & b) -> std::optional<std::vector<Vertex>>
    {
        const auto n = a.vertex_count();
        if (n != b.vertex_count() || a.arc_count() != b.arc_count())
            return std::nullopt;

        auto ca = refine(a), cb = refine(b);
        {
            auto sa = ca, sb = cb;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            if (sa != sb)
                return std::nullopt;
        }

        std::vector<char> adj_a(n * n, 0), adj_b(n * n, 0);
        for (const auto & [u, v] : a.arcs())
            adj_a[u * n + v] = 1;
        for (const auto & [u, v] : b.arcs())
            adj_b[u * n + v] = 1;

        // Order: smallest colour classes first, then prefer vertices adjacent to already ordered ones.
        std::vector<std::size_t> class_size(n);
        for (std::size_t v = 0; v < n; ++v)
            class_size[v] = std::size_t(std::count(ca.begin(), ca.end(), ca[v]));
        std::vector<Vertex> order;
        std::vector<bool> placed(n, false);
        while (order.size() < n) {
            Vertex best = -1;
            std::size_t best_links = 0;
            for (Vertex v = 0; std::size_t(v) < n; ++v) {
                if (placed[v])
                    continue;
                std::size_t links = 0;
                for (auto u : order)
                    links += adj_a[u * n + v] + adj_a[v * n + u];
                if (best == -1 || class_size[v] < class_size[best]
                    || (class_size[v] == class_size[best] && links > best_links)) {
                    best = v;
                    best_links = links;
                }
            }
            placed[best] = true;
            order.push_back(best);
        }

        std::vector<Vertex> map(n, -1);
        std::vector<bool> used(n, false);

        auto consistent = [&](std::size_t depth, Vertex x, Vertex y) {
            for (std::size_t i = 0; i < depth; ++i) {
                auto u = order[i], w = map[u];
                if (adj_a[x * n + u] != adj_b[y * n + w] || adj_a[u * n + x] != adj_b[w * n + y])
                    return false;
            }
            return true;
        };

        auto search = [&](auto && self, std::size_t depth) -> bool {
            if (depth == n)
                return true;
            auto x = order[depth];
            for (Vertex y = 0; std::size_t(y) < n; ++y) {
                if (used[y] || cb[y] != ca[x] || ! consistent(depth, x, y))
                    continue;
                map[x] = y;
                used[y] = true;
                if (self(self, depth + 1))
                    return true;
                used[y] = false;
                map[x] = -1;
            }
            return false;
        };

        if (! search(search, 0))
            return std::nullopt;
        return map;
    }

    auto relabel(const Digraph & d, std::span<const Vertex> perm) -> Digraph
    {
        if (perm.size() != d.vertex_count())
            throw InvalidArgument("relabelling has the wrong length");
        std::vector<Arc> arcs;
        arcs.reserve(d.arc_count());
        for (const auto & [u, v] : d.arcs())
            arcs.push_back({perm[u], perm[v]});
        return Digraph(d.vertex_count(), std::move(arcs));
    }
}
