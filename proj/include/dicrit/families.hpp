#pragma once

#include <dicrit/digraph.hpp>

#include <span>
#include <utility>

namespace dicrit
{
    [[nodiscard]] auto complete_bidirected(std::size_t n) -> Digraph;
    [[nodiscard]] auto directed_cycle(std::size_t n) -> Digraph;
    [[nodiscard]] auto bidirected_cycle(std::size_t n) -> Digraph;
    [[nodiscard]] auto bidirected_path(std::size_t n) -> Digraph;
    // Bidirected graph on n vertices with a digon for every listed edge.
    [[nodiscard]] auto bidirected(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) -> Digraph;
}
