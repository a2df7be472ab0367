#include <dicrit/families.hpp>

#include <algorithm>

namespace dicrit
{
    auto complete_bidirected(std::size_t n) -> Digraph
    {
        std::vector<Arc> arcs;
        for (Vertex u = 0; std::size_t(u) < n; ++u)
            for (Vertex v = 0; std::size_t(v) < n; ++v)
                if (u != v)
                    arcs.push_back({u, v});
        return Digraph(n, std::move(arcs));
    }

    auto directed_cycle(std::size_t n) -> Digraph
    {
        std::vector<Arc> arcs;
        for (Vertex v = 0; std::size_t(v) < n; ++v)
            arcs.push_back({v, Vertex((v + 1) % n)});
        return Digraph(n, std::move(arcs));
    }

    auto bidirected(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) -> Digraph
    {
        std::vector<Arc> arcs;
        for (auto [u, v] : edges) {
            arcs.push_back({u, v});
            arcs.push_back({v, u});
        }
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        return Digraph(n, std::move(arcs));
    }

    auto bidirected_cycle(std::size_t n) -> Digraph
    {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex v = 0; std::size_t(v) < n; ++v)
            edges.emplace_back(v, Vertex((v + 1) % n));
        return bidirected(n, edges);
    }

    auto bidirected_path(std::size_t n) -> Digraph
    {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex v = 0; std::size_t(v) + 1 < n; ++v)
            edges.emplace_back(v, v + 1);
        return bidirected(n, edges);
    }
}
