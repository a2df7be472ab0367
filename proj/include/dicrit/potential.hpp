#pragma once

#include <dicrit/digraph.hpp>
#include <dicrit/error.hpp>
#include <dicrit/rational.hpp>

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace dicrit
{
    struct Packing
    {
        std::vector<std::pair<Vertex, Vertex>> digons;
        std::vector<std::array<Vertex, 3>> triangles;
        int value = 0; // digons + 2 * triangles
        bool optimal = true; // false when the budget ran out; value is then a lower bound
    };

    // Checks vertex-disjointness and that every item is present in d.
    [[nodiscard]] auto is_valid_packing(const Digraph & d, const Packing & p) -> bool;

    // Maximum d + 2t by branch and bound on the lowest uncovered vertex.
    [[nodiscard]] auto max_packing(const Digraph & d, Budget budget = {}) -> Packing;

    class PotentialParams
    {
    public:
        // Throws InvalidArgument when eps or delta is negative.
        PotentialParams(Rational eps, Rational delta);

        // eps = 1/51, delta = 2/17.
        [[nodiscard]] static auto reference() -> PotentialParams;

        [[nodiscard]] auto eps() const -> const Rational & { return _eps; }
        [[nodiscard]] auto delta() const -> const Rational & { return _delta; }

    private:
        Rational _eps, _delta;
    };

    // c0 + c_eps * eps + c_delta * delta.
    struct LinearForm
    {
        Rational c0, c_eps, c_delta;

        [[nodiscard]] auto at(const PotentialParams & p) const -> Rational { return c0 + c_eps * p.eps() + c_delta * p.delta(); }
        friend auto operator==(const LinearForm &, const LinearForm &) -> bool = default;
    };

    // rho(D) as a form in (eps, delta). Throws BudgetExceeded if T(D) is not settled.
    [[nodiscard]] auto potential_form(const Digraph & d, Budget budget = {}) -> LinearForm;
    [[nodiscard]] auto potential(const Digraph & d, const PotentialParams & p, Budget budget = {}) -> Rational;
    // Same value with T(D) already known.
    [[nodiscard]] auto potential_from(std::size_t n, std::size_t m, int packing_value, const PotentialParams & p) -> Rational;

    struct AuditRow
    {
        std::string label;
        Rational lhs; // value of the left-hand side at (eps, delta)
        Rational bound;
        bool satisfied;
    };

    [[nodiscard]] auto audit_params(const PotentialParams & p) -> std::vector<AuditRow>;

    struct BoundCheck
    {
        bool holds;
        Rational slack;
    };

    // m - (57/17) n + 1 >= 0. Throws InvalidArgument if d has a digon.
    [[nodiscard]] auto check_oriented_bound(const Digraph & d) -> BoundCheck;
    [[nodiscard]] auto oriented_bound_slack(std::size_t n, std::size_t m) -> Rational;

    // 3m = 10n - 4.
    [[nodiscard]] auto check_4ore_arc_identity(const Digraph & d) -> bool;

    struct SurfaceBound
    {
        long long value; // floor(17(1 - 3c)/6)
        bool vacuous; // value < 0
    };

    // Throws InvalidArgument for c > 2.
    [[nodiscard]] auto surface_vertex_bound(long long c) -> SurfaceBound;
}
