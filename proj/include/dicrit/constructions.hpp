#pragma once

#include <dicrit/dicolour.hpp>
#include <dicrit/digraph.hpp>
#include <dicrit/error.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dicrit
{
    struct ConstructionSpec
    {
        int k = 3;
        int n0 = 1;
        // 0: every cycle arc i -> i+1. Otherwise each cycle edge is oriented by a coin flip.
        std::uint64_t cycle_seed = 0;
        // Tournament used at level j (arcs on 0..j-1). Missing levels use the transitive tournament i -> j for i < j.
        std::map<int, std::vector<Arc>> tournaments;
    };

    // A directed triangle with every arc from y into it and from it to x.
    struct Gadget
    {
        Vertex x, y;
        std::array<Vertex, 3> triangle;
    };

    struct Construction
    {
        int k;
        int n0;
        Digraph graph;
        std::vector<Gadget> gadgets; // every gadget, including those inside copies

        // k = 3: the odd cycle on vertices 0..2n0 with its orientation.
        std::vector<Arc> cycle_arcs;

        // k >= 4: tournament on 0..k-1 and, per tournament arc (same order), the first id of its copy.
        std::vector<Arc> tournament;
        std::vector<Vertex> copy_offset;
        std::shared_ptr<const Construction> base;

        // Index of the copy holding v, or -1 for tournament vertices (k >= 4 only).
        [[nodiscard]] auto copy_of(Vertex v) const -> int;
    };

    [[nodiscard]] auto transitive_tournament(int k) -> std::vector<Arc>;
    // Throws InvalidArgument unless arcs form a tournament on 0..k-1.
    auto check_tournament(int k, const std::vector<Arc> & arcs) -> void;

    [[nodiscard]] auto build_g3(int n0, std::uint64_t cycle_seed = 0) -> Construction;
    [[nodiscard]] auto build_gk(const ConstructionSpec & spec) -> Construction;

    struct PredictedCounts
    {
        std::uint64_t n, m;
    };

    // n3 = 4(2n0+1), m3 = 10(2n0+1); n_k = k + C(k,2) n_{k-1}, m_k = C(k,2)(1 + 2 n_{k-1} + m_{k-1}).
    [[nodiscard]] auto predicted_counts(int k, int n0) -> PredictedCounts;

    // Every 2-colouring of {x, y} and the triangle with x, y equal has a monochromatic
    // directed cycle in the subdigraph of d they induce. Throws InvalidArgument unless
    // x != y, the triangle is disjoint from {x, y} and induces a directed triangle.
    [[nodiscard]] auto gadget_forces_distinct(const Digraph & d, Vertex x, Vertex y, const std::array<Vertex, 3> & triangle) -> bool;

    struct ArcClassCheck
    {
        std::string name; // "tournament", "copy-internal", "connection", or "all" at the base level
        std::size_t arcs = 0;
        std::optional<Arc> representative;
        bool representative_valid = false;
    };

    struct CompositionCertificate
    {
        int k;
        int n0;
        std::size_t n, m;

        // (a) chi >= k.
        std::string lower_bound_method; // "solver" or "compositional"
        bool lower_bound_ok = false;
        std::vector<std::string> lower_bound_checks;
        bool k_colouring_valid = false;
        Colouring k_colouring;

        // (b) one constructed witness per arc class.
        std::vector<ArcClassCheck> classes;

        // (c) witness validation over all arcs or a sample of them.
        bool sampled = false;
        std::size_t arcs_validated = 0;
        bool witnesses_valid = false;
        std::optional<Arc> failure_arc;

        std::shared_ptr<const CompositionCertificate> base;
        bool verdict = false;
    };

    // sample = 0 validates every arc; otherwise `sample` arcs drawn with `seed`.
    // The base level is certified by the solver; throws BudgetExceeded if it cannot be.
    [[nodiscard]] auto certify_dicritical_composition(const ConstructionSpec & spec, Budget budget = {},
        std::size_t sample = 0, std::uint64_t seed = 1) -> CompositionCertificate;

    // Constructed (k-1)-dicolouring of the level-k digraph minus arc, without any search.
    // Used by the certificate and exposed for tests. Level 3 witnesses come from the solver.
    class WitnessFactory
    {
    public:
        WitnessFactory(std::shared_ptr<const Construction> c, Budget budget);

        [[nodiscard]] auto construction() const -> const Construction & { return *_c; }
        // A k-dicolouring of the whole digraph.
        [[nodiscard]] auto k_colouring() const -> const Colouring & { return _k_colouring; }
        // A (k-1)-dicolouring of the digraph minus a.
        [[nodiscard]] auto arc_witness(Arc a) const -> Colouring;
        // A k-dicolouring in which v is the only vertex with colour k.
        [[nodiscard]] auto lonely_colouring(Vertex v) const -> Colouring;
        // Solver refutation of a (k-1)-dicolouring at level 3.
        [[nodiscard]] auto base_refuted() const -> bool { return _base_refuted; }

    private:
        std::shared_ptr<const Construction> _c;
        std::unique_ptr<WitnessFactory> _child;
        Colouring _k_colouring;
        std::map<Arc, Colouring> _solved; // level 3 only
        bool _base_refuted = false;
    };
}
