#pragma once

#include <dicrit/dicolour.hpp>
#include <dicrit/digraph.hpp>
#include <dicrit/potential.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dicrit
{
    struct ChelouArcs
    {
        std::vector<Arc> out_chelou;
        std::vector<Arc> in_chelou;
    };

    [[nodiscard]] auto find_out_chelou_arcs(const Digraph & d) -> std::vector<Arc>;
    [[nodiscard]] auto find_chelou_arcs(const Digraph & d) -> ChelouArcs;

    // Vertices of degree 6 incident to a digon.
    [[nodiscard]] auto d6_vertices(const Digraph & d) -> std::vector<Vertex>;

    enum class D6Class
    {
        singleton,
        path2,
        path3,
        star4,
        other
    };

    [[nodiscard]] auto to_string(D6Class c) -> std::string;

    struct D6Component
    {
        std::vector<Vertex> vertices;
        D6Class cls;
        // For path3: the two ends. For star4: the three leaves. Empty otherwise.
        std::vector<Vertex> extremities;
        // nu_N >= 4 at every extremity (meaningful only when extremities is non-empty).
        bool extremities_valency_ok = false;
    };

    // Components of D6 (connected in the underlying graph of D6).
    // path2/path3/star4 require every adjacency inside the component to be a digon.
    [[nodiscard]] auto d6_components(const Digraph & d) -> std::vector<D6Component>;

    // Arcs joining v to vertices of degree at least 8.
    [[nodiscard]] auto valency8(const Digraph & d, Vertex v) -> int;
    // Sum of valency8 over neighbours of degree at least 8. Throws InvalidArgument if v is not in D6.
    [[nodiscard]] auto neighbourhood_valency(const Digraph & d, Vertex v) -> int;

    enum class Rule
    {
        r1,
        r2,
        r3
    };

    [[nodiscard]] auto to_string(Rule r) -> std::string;

    struct Transfer
    {
        Rule rule;
        Vertex source;
        Vertex target;
        Rational amount;
    };

    struct ChargeLedger
    {
        PotentialParams params;
        std::vector<Rational> sigma;
        std::vector<Rational> initial; // w
        std::vector<Transfer> transfers;
        std::vector<Rational> final; // w*
        // R2 pairs skipped because d(u) = nu(u).
        std::vector<std::pair<Vertex, Vertex>> r2_inapplicable;
        std::vector<std::string> notes;

        [[nodiscard]] auto initial_total() const -> Rational;
        [[nodiscard]] auto final_total() const -> Rational;
    };

    // R1: a degree-6 vertex on no digon sends 1/12 - eps/8 to each neighbour.
    // R2: a degree-6 vertex on a digon sends (-10/3 + d(u)/2 - eps)/(d(u) - nu(u)) along
    //     every arc it shares with each neighbour u of degree at least 8.
    // R3: a degree-7 vertex with d- = 3 (resp. d+ = 3) sends 1/12 - eps/8 to each
    //     in-neighbour (resp. out-neighbour).
    [[nodiscard]] auto discharge(const Digraph & d, const PotentialParams & p) -> ChargeLedger;

    struct PhiIdentification
    {
        Digraph graph;
        std::vector<Vertex> image; // image[v] for every v of D
        std::array<Vertex, 3> x; // ids of x1, x2, x3
    };

    // phi colours the vertices of `subset` in the order given (sorted ascending).
    // Vertices outside R keep their relative order and come first; x1, x2, x3 are appended.
    // With strict set, every colour 1..3 must be used.
    [[nodiscard]] auto phi_identify(const Digraph & d, std::span<const Vertex> subset, const Colouring & phi,
        bool strict = false) -> PhiIdentification;

    struct ExtensionResult
    {
        PhiIdentification identified;
        Digraph extender; // W, as a subdigraph of the identification on its own vertex ids
        std::vector<Vertex> extender_vertices; // ids in the identification
        std::vector<Vertex> core; // X_W, ids among identified.x
        std::vector<Vertex> extension; // vertices of R' in D
        bool extension_is_whole = false; // R' = D
    };

    // Greedy lexicographic arc peeling keeps the identification 4-chromatic; isolated
    // vertices are then dropped. Throws BudgetExceeded, or InvalidArgument if the
    // identification is 3-dicolourable.
    [[nodiscard]] auto dicritical_extension(const Digraph & d, std::span<const Vertex> subset, const Colouring & phi,
        Budget budget = {}) -> ExtensionResult;

    struct CollapsibilityResult
    {
        bool collapsible;
        std::optional<Colouring> witness; // a 3-dicolouring of R breaking the definition
        std::string reason;
        std::uint64_t colourings_checked = 0;
    };

    // 3-dicolourings of R are enumerated up to permutation of colours.
    [[nodiscard]] auto is_collapsible(const Digraph & d, std::span<const Vertex> subset, Budget budget = {}) -> CollapsibilityResult;
}
