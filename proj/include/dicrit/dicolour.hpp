#pragma once

#include <dicrit/digraph.hpp>
#include <dicrit/error.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace dicrit
{
    // A k-colouring with colours 1..k, one per vertex.
    struct Colouring
    {
        int k = 0;
        std::vector<int> colours;

        friend auto operator==(const Colouring &, const Colouring &) -> bool = default;
    };

    struct DicolouringCheck
    {
        bool valid;
        // A monochromatic directed cycle (in order) when not valid.
        std::vector<Vertex> cycle;
    };

    // Throws InvalidArgument if the colouring is not total on V(D) or uses a colour outside 1..k.
    [[nodiscard]] auto check_dicolouring(const Digraph & d, const Colouring & c) -> DicolouringCheck;

    enum class SearchStatus
    {
        found,
        none,
        unknown // node budget exhausted before the search space was covered
    };

    struct SearchResult
    {
        SearchStatus status;
        std::optional<Colouring> colouring;
        std::uint64_t nodes = 0;
    };

    // Exhaustive backtracking: vertices by decreasing degree (ties by id),
    // colours in increasing order, colour j+1 only after colour j has appeared.
    [[nodiscard]] auto is_k_dicolourable(const Digraph & d, int k, Budget budget = {}) -> SearchResult;

    // Calls `visit` for every k-dicolouring up to permutation of colours (colours
    // numbered by first appearance in the branching order). Stops early when
    // `visit` returns false. Returns the number of colourings visited; throws
    // BudgetExceeded if the search is cut short by the budget.
    auto enumerate_dicolourings(const Digraph & d, int k, const std::function<bool(const Colouring &)> & visit,
        Budget budget = {}) -> std::uint64_t;

    // Throws BudgetExceeded when a step cannot be decided.
    [[nodiscard]] auto dichromatic_number(const Digraph & d, Budget budget = {}) -> int;

    struct ArcWitness
    {
        Arc arc;
        Colouring colouring; // a (k-1)-dicolouring of D minus arc
    };

    struct CriticalityReport
    {
        Digraph digraph;
        int k;
        bool verdict;
        std::optional<int> dichromatic_number_lower; // k if (k-1)-dicolouring refuted
        std::optional<Colouring> k_colouring;
        std::vector<ArcWitness> witnesses;
        std::optional<Arc> failure_arc;
        std::string reason; // empty when verdict is true
    };

    // Dicriticality by arc deletion: chi(D) = k and every D minus arc is (k-1)-dicolourable.
    // Digraphs with an isolated vertex (and more than one vertex) are rejected outright.
    [[nodiscard]] auto is_k_dicritical(const Digraph & d, int k, Budget budget = {}) -> CriticalityReport;
}
