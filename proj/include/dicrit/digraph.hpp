#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dicrit
{
    using Vertex = std::int32_t;

    struct Arc
    {
        Vertex tail;
        Vertex head;

        auto operator<=>(const Arc &) const = default;
    };

    // An immutable digraph on vertices 0..n-1 without loops or parallel arcs.
    // Arcs are kept in lexicographic order; adjacency is stored in CSR form in
    // both directions so that neighbourhood queries are spans.
    class Digraph
    {
    public:
        // Throws InvalidArgument on n == 0, out-of-range ids, loops or duplicates.
        Digraph(std::size_t n, std::vector<Arc> arcs);

        [[nodiscard]] auto vertex_count() const noexcept -> std::size_t { return _n; }
        [[nodiscard]] auto arc_count() const noexcept -> std::size_t { return _arcs.size(); }
        [[nodiscard]] auto arcs() const noexcept -> std::span<const Arc> { return _arcs; }

        [[nodiscard]] auto out_neighbours(Vertex v) const -> std::span<const Vertex>;
        [[nodiscard]] auto in_neighbours(Vertex v) const -> std::span<const Vertex>;
        // N+(v) union N-(v), sorted.
        [[nodiscard]] auto neighbours(Vertex v) const -> std::vector<Vertex>;

        [[nodiscard]] auto out_degree(Vertex v) const -> std::size_t { return out_neighbours(v).size(); }
        [[nodiscard]] auto in_degree(Vertex v) const -> std::size_t { return in_neighbours(v).size(); }
        [[nodiscard]] auto degree(Vertex v) const -> std::size_t { return out_degree(v) + in_degree(v); }

        [[nodiscard]] auto has_arc(Vertex u, Vertex v) const -> bool;
        [[nodiscard]] auto has_digon(Vertex u, Vertex v) const -> bool { return has_arc(u, v) && has_arc(v, u); }
        [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool { return has_arc(u, v) || has_arc(v, u); }
        [[nodiscard]] auto incident_to_digon(Vertex v) const -> bool;

        // Every digon {u, v} once, as (u, v) with u < v, in lexicographic order.
        [[nodiscard]] auto digons() const -> std::vector<std::pair<Vertex, Vertex>>;
        [[nodiscard]] auto digon_count() const -> std::size_t;

        [[nodiscard]] auto is_bidirected() const -> bool;
        [[nodiscard]] auto is_oriented() const -> bool;

        // Builders; the receiver is never modified.
        [[nodiscard]] auto reversed() const -> Digraph;
        [[nodiscard]] auto without_arcs(std::span<const Arc> arcs) const -> Digraph;
        [[nodiscard]] auto with_arcs(std::span<const Arc> arcs) const -> Digraph;
        [[nodiscard]] auto without_arc(Arc a) const -> Digraph { return without_arcs(std::span(&a, 1)); }
        [[nodiscard]] auto without_digon(Vertex u, Vertex v) const -> Digraph;
        [[nodiscard]] auto with_digon(Vertex u, Vertex v) const -> Digraph;

        friend auto operator==(const Digraph & a, const Digraph & b) -> bool
        {
            return a._n == b._n && a._arcs == b._arcs;
        }

    private:
        std::size_t _n;
        std::vector<Arc> _arcs;
        std::vector<std::uint32_t> _out_start, _in_start;
        std::vector<Vertex> _out, _in;

        auto check_vertex(Vertex v) const -> void;
    };

    struct VertexProfile
    {
        Vertex vertex;
        std::size_t in_degree;
        std::size_t out_degree;
        std::size_t degree;
        std::size_t neighbour_count;
        // Neighbours u such that [u, v] is not a digon.
        std::vector<Vertex> simple_neighbours;
    };

    // A digraph together with where each of its vertices came from.
    struct Subdigraph
    {
        Digraph graph;
        std::vector<Vertex> origin; // origin[new id] = id in the parent
    };

    struct Identified
    {
        Digraph graph;
        std::vector<Vertex> image; // image[old id] = new id
    };

    struct Connectivity
    {
        bool connected;
        // A cutset of size < k when not connected (may be empty if the digraph is disconnected).
        std::vector<Vertex> cutset;
    };

    // DG-v1: optional '#' comment lines, header "n <N> m <M>", then M lines "<u> <v>".
    [[nodiscard]] auto parse(std::string_view text) -> Digraph;
    [[nodiscard]] auto serialize(const Digraph & d) -> std::string;
    [[nodiscard]] auto read_digraph_file(const std::string & path) -> Digraph;

    [[nodiscard]] auto profiles(const Digraph & d) -> std::vector<VertexProfile>;

    // Relabels S to 0..|S|-1 preserving order.
    [[nodiscard]] auto induced(const Digraph & d, std::span<const Vertex> subset) -> Subdigraph;
    [[nodiscard]] auto remove_vertices(const Digraph & d, std::span<const Vertex> removed) -> Subdigraph;

    // Vertices of R with an in- or out-neighbour outside R.
    [[nodiscard]] auto boundary(const Digraph & d, std::span<const Vertex> subset) -> std::vector<Vertex>;

    // Each block collapses to one vertex; arcs inside a block vanish. New vertices
    // are ordered by the smallest original vertex they contain.
    [[nodiscard]] auto identify(const Digraph & d, const std::vector<std::vector<Vertex>> & blocks) -> Identified;

    // Underlying-graph k-connectivity by exhaustive removal of every set of fewer than k vertices.
    [[nodiscard]] auto is_k_connected(const Digraph & d, int k) -> Connectivity;

    // True iff the underlying graph of d minus `removed` is connected.
    [[nodiscard]] auto underlying_connected(const Digraph & d, std::span<const Vertex> removed = {}) -> bool;

    // Connected components of the underlying graph restricted to `allowed` (all vertices when empty).
    [[nodiscard]] auto underlying_components(const Digraph & d, const std::vector<bool> & allowed) -> std::vector<std::vector<Vertex>>;
}
