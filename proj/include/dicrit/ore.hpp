#pragma once

#include <dicrit/dicolour.hpp>
#include <dicrit/digraph.hpp>
#include <dicrit/error.hpp>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace dicrit
{
    // Ore-composition of two bidirected digraphs. The digon [x, y] of the digon
    // side d1 is removed, the vertex z of the split side d2 is removed, and z's
    // digons are re-attached to x (for z1) and to y (for z2).
    //
    // Layout of the result: vertices of d1 keep their ids; vertices of d2 - z
    // follow as n(d1) + (their id in d2, shifted down past z).
    [[nodiscard]] auto ore_compose(const Digraph & d1, Vertex x, Vertex y, const Digraph & d2, Vertex z,
        std::span<const Vertex> z1, std::span<const Vertex> z2) -> Digraph;

    // Id of split-side vertex v (v != z) in the composed layout.
    [[nodiscard]] constexpr auto split_side_image(std::size_t digon_side_order, Vertex z, Vertex v) -> Vertex
    {
        return Vertex(digon_side_order) + v - (v > z ? 1 : 0);
    }

    // Composition tree witnessing membership in the 4-Ore class. A leaf is a
    // labelled bidirected K4; a node records both sides and the surgery data.
    // Every node carries its digraph; `labels` maps the composed layout onto
    // the node's final vertex ids.
    class OreTrace
    {
    public:
        [[nodiscard]] static auto leaf() -> OreTrace;
        [[nodiscard]] static auto compose(const OreTrace & digon_side, Vertex x, Vertex y, const OreTrace & split_side,
            Vertex z, std::vector<Vertex> z1, std::vector<Vertex> z2, bool j_preserving) -> OreTrace;

        [[nodiscard]] auto is_leaf() const -> bool { return ! _node->digon_side; }
        [[nodiscard]] auto graph() const -> const Digraph & { return _node->graph; }
        [[nodiscard]] auto digon_side() const -> const OreTrace & { return *_node->digon_side; }
        [[nodiscard]] auto split_side() const -> const OreTrace & { return *_node->split_side; }
        [[nodiscard]] auto replaced_digon() const -> std::pair<Vertex, Vertex> { return {_node->x, _node->y}; }
        [[nodiscard]] auto split_vertex() const -> Vertex { return _node->z; }
        [[nodiscard]] auto z1() const -> const std::vector<Vertex> & { return _node->z1; }
        [[nodiscard]] auto z2() const -> const std::vector<Vertex> & { return _node->z2; }
        // True when the older digraph holding the base K4 was used as the digon side.
        [[nodiscard]] auto j_preserving() const -> bool { return _node->j_preserving; }
        [[nodiscard]] auto labels() const -> const std::vector<Vertex> & { return _node->labels; }

        // Same tree, final vertex ids renamed through perm (perm[old] = new).
        [[nodiscard]] auto relabelled(std::span<const Vertex> perm) const -> OreTrace;

        // Rebuilds the digraph bottom-up from the leaves, ignoring attached graphs.
        [[nodiscard]] auto replay() const -> Digraph;

        // Image of the base K4, available when every node on the path to it is J-preserving.
        [[nodiscard]] auto base_clique() const -> std::optional<std::array<Vertex, 4>>;

        [[nodiscard]] auto composition_count() const -> std::size_t;

    private:
        struct Node
        {
            std::shared_ptr<const OreTrace> digon_side, split_side;
            Vertex x = -1, y = -1, z = -1;
            std::vector<Vertex> z1, z2;
            bool j_preserving = true;
            std::vector<Vertex> labels;
            Digraph graph{1, {}};
        };

        explicit OreTrace(std::shared_ptr<const Node> node) : _node(std::move(node)) {}
        std::shared_ptr<const Node> _node;
    };

    // Random 4-Ore digraph of exactly n_target vertices (n_target = 4 or n_target = 1 mod 3, n_target >= 7).
    // Each step composes the digraph built so far with a fresh random 4-Ore piece;
    // with j_preserving the digraph built so far is always the digon side.
    [[nodiscard]] auto generate_4ore(std::size_t n_target, std::uint64_t seed, bool j_preserving = false) -> OreTrace;

    struct Recognition
    {
        SearchStatus status; // found = 4-Ore, none = not 4-Ore, unknown = budget
        std::optional<OreTrace> trace;
        std::uint64_t steps = 0;
    };

    // Decomposition search over non-adjacent 2-cutsets {x, y}, tried in
    // lexicographic order, memoised on isomorphism classes within one call.
    [[nodiscard]] auto is_4ore(const Digraph & d, Budget budget = {}) -> Recognition;

    struct Diamond
    {
        std::array<Vertex, 4> vertices;
        Vertex u, v; // the missing digon
    };

    // Induced K4 minus a digon [u, v] whose other two vertices have degree 6 in d.
    [[nodiscard]] auto find_diamonds(const Digraph & d) -> std::vector<Diamond>;
    // Bidirected triangles whose vertices all have degree 6 in d.
    [[nodiscard]] auto find_emeralds(const Digraph & d) -> std::vector<std::array<Vertex, 3>>;

    struct OreCollapsible
    {
        std::vector<Vertex> vertices;
        Vertex u, v; // boundary
        OreTrace trace; // for the completion R + [u, v]
    };

    // Every proper induced R with n(R) <= size_cap, boundary exactly {u, v} and R + [u, v] 4-Ore.
    [[nodiscard]] auto find_ore_collapsible(const Digraph & d, std::size_t size_cap, Budget budget = {}) -> std::vector<OreCollapsible>;

    // Replaces v by v1 (keeping id v) with N+(v1) = out_parts.first, N-(v1) = in_parts.first
    // and a new last vertex v2 with the second parts.
    [[nodiscard]] auto split_vertex(const Digraph & d, Vertex v,
        const std::pair<std::vector<Vertex>, std::vector<Vertex>> & out_parts,
        const std::pair<std::vector<Vertex>, std::vector<Vertex>> & in_parts) -> Digraph;
}
