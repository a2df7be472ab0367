#pragma once

#include <dicrit/digraph.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dicrit
{
    // Colour refinement on in/out neighbourhoods. The returned per-vertex
    // colours are isomorphism invariant.
    [[nodiscard]] auto refine(const Digraph & d) -> std::vector<std::uint64_t>;

    // Isomorphism-invariant fingerprint; equal digraphs up to relabelling hash equally.
    [[nodiscard]] auto invariant_hash(const Digraph & d) -> std::uint64_t;

    // A bijection f with uv in A(a) iff f(u)f(v) in A(b), as f[u]; nullopt if none.
    [[nodiscard]] auto find_isomorphism(const Digraph & a, const Digraph & b) -> std::optional<std::vector<Vertex>>;

    // The digraph with vertex v renamed to perm[v].
    [[nodiscard]] auto relabel(const Digraph & d, std::span<const Vertex> perm) -> Digraph;
}
