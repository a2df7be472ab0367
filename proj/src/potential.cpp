#include <dicrit/potential.hpp>

#include <algorithm>

namespace dicrit
{
    auto is_valid_packing(const Digraph & d, const Packing & p) -> bool
    {
        std::vector<bool> used(d.vertex_count(), false);
        auto take = [&](Vertex v) {
            if (v < 0 || std::size_t(v) >= used.size() || used[v])
                return false;
            used[v] = true;
            return true;
        };
        for (auto [u, v] : p.digons)
            if (! take(u) || ! take(v) || ! d.has_digon(u, v))
                return false;
        for (auto [a, b, c] : p.triangles)
            if (! take(a) || ! take(b) || ! take(c) || ! d.has_digon(a, b) || ! d.has_digon(a, c) || ! d.has_digon(b, c))
                return false;
        return p.value == int(p.digons.size() + 2 * p.triangles.size());
    }

    namespace
    {
        class PackingSearch
        {
        public:
            PackingSearch(const Digraph & d, Budget budget) : _d(d), _budget(budget), _free(d.vertex_count(), true)
            {
                const auto n = d.vertex_count();
                _partners.resize(n);
                for (auto [u, v] : d.digons()) {
                    _partners[u].push_back(v);
                    _partners[v].push_back(u);
                }
            }

            auto run() -> Packing
            {
                descend(0, 0);
                _best.optimal = ! _out_of_budget;
                return _best;
            }

        private:
            const Digraph & _d;
            Budget _budget;
            std::uint64_t _nodes = 0;
            bool _out_of_budget = false;
            std::vector<bool> _free;
            std::vector<std::vector<Vertex>> _partners; // sorted digon partners
            std::vector<std::pair<Vertex, Vertex>> _digons;
            std::vector<std::array<Vertex, 3>> _triangles;
            Packing _best;

            auto live(Vertex v) const -> bool
            {
                if (! _free[v])
                    return false;
                return std::any_of(_partners[v].begin(), _partners[v].end(), [&](Vertex u) { return _free[u]; });
            }

            auto descend(Vertex from, int value) -> void
            {
                if (_out_of_budget)
                    return;
                if (++_nodes > _budget.nodes) {
                    _out_of_budget = true;
                    return;
                }
                if (value > _best.value) {
                    _best.value = value;
                    _best.digons = _digons;
                    _best.triangles = _triangles;
                }

                const auto n = Vertex(_d.vertex_count());
                Vertex v = from;
                int live_count = 0;
                for (Vertex u = from; u < n; ++u)
                    if (live(u))
                        ++live_count;
                if (value + (2 * live_count) / 3 <= _best.value)
                    return;
                while (v < n && ! live(v))
                    ++v;
                if (v == n)
                    return;

                const auto & ps = _partners[v];
                _free[v] = false;
                for (std::size_t i = 0; i < ps.size(); ++i) {
                    auto a = ps[i];
                    if (a < v || ! _free[a])
                        continue;
                    for (std::size_t j = i + 1; j < ps.size(); ++j) {
                        auto b = ps[j];
                        if (! _free[b] || ! _d.has_digon(a, b))
                            continue;
                        _free[a] = _free[b] = false;
                        _triangles.push_back({v, a, b});
                        descend(v + 1, value + 2);
                        _triangles.pop_back();
                        _free[a] = _free[b] = true;
                    }
                }
                for (auto a : ps) {
                    if (a < v || ! _free[a])
                        continue;
                    _free[a] = false;
                    _digons.emplace_back(v, a);
                    descend(v + 1, value + 1);
                    _digons.pop_back();
                    _free[a] = true;
                }
                descend(v + 1, value);
                _free[v] = true;
            }
        };
    }

    auto max_packing(const Digraph & d, Budget budget) -> Packing
    {
        return PackingSearch(d, budget).run();
    }

    PotentialParams::PotentialParams(Rational eps, Rational delta) : _eps(std::move(eps)), _delta(std::move(delta))
    {
        if (_eps.sign() < 0 || _delta.sign() < 0)
            throw InvalidArgument("eps and delta must be non-negative");
    }

    auto PotentialParams::reference() -> PotentialParams
    {
        return {Rational(1, 51), Rational(2, 17)};
    }

    auto potential_form(const Digraph & d, Budget budget) -> LinearForm
    {
        auto p = max_packing(d, budget);
        if (! p.optimal)
            throw BudgetExceeded("potential: packing search");
        const auto n = (long long)(d.vertex_count());
        const auto m = (long long)(d.arc_count());
        return {Rational(10 * n, 3) - Rational(m), Rational(n), Rational(-p.value)};
    }

    auto potential(const Digraph & d, const PotentialParams & p, Budget budget) -> Rational
    {
        return potential_form(d, budget).at(p);
    }

    auto potential_from(std::size_t n, std::size_t m, int packing_value, const PotentialParams & p) -> Rational
    {
        return (Rational(10, 3) + p.eps()) * Rational((long long)(n)) - Rational((long long)(m)) - p.delta() * Rational(packing_value);
    }

    auto audit_params(const PotentialParams & p) -> std::vector<AuditRow>
    {
        struct Row
        {
            const char * label;
            Rational a, b; // a*eps + b*delta
            bool at_most; // <= bound, else >=
            Rational bound;
        };
        const std::vector<Row> rows = {
            {"δ≥6ε", -6, 1, false, 0},
            {"3δ−ε≤1/3", -1, 3, true, {1, 3}},
            {"δ≥3ε/2", {-3, 2}, 1, false, 0},
            {"4ε−2δ≥−1/3", 4, -2, false, {-1, 3}},
            {"10ε−3δ≤5/3", 10, -3, true, {5, 3}},
            {"2δ−7ε≤2/3", -7, 2, true, {2, 3}},
            {"2δ−ε≤1/3", -1, 2, true, {1, 3}},
            {"δ≥3ε", -3, 1, false, 0},
            {"5ε≤1/3", 5, 0, true, {1, 3}},
            {"ε−2δ≥−1/3", 1, -2, false, {-1, 3}},
            {"9ε−5δ≤1", 9, -5, true, 1},
            {"5ε−3δ≤1/3", 5, -3, true, {1, 3}},
            {"5ε+δ≤1/3", 5, 1, true, {1, 3}},
            {"6ε−4δ≤0", 6, -4, true, 0},
            {"6ε−δ≤1", 6, -1, true, 1},
            {"5ε−δ≤1/3", 5, -1, true, {1, 3}},
            {"2ε+2δ≤1/3", 2, 2, true, {1, 3}},
            {"9ε−2δ≤0", 9, -2, true, 0},
            {"6ε−δ≤0", 6, -1, true, 0},
            {"ε≤2/21", 1, 0, true, {2, 21}},
            {"ε≤1/6", 1, 0, true, {1, 6}},
            {"ε≤2/3", 1, 0, true, {2, 3}},
        };

        std::vector<AuditRow> out;
        for (const auto & r : rows) {
            auto lhs = r.a * p.eps() + r.b * p.delta();
            bool ok = r.at_most ? lhs <= r.bound : lhs >= r.bound;
            out.push_back({r.label, lhs, r.bound, ok});
        }
        return out;
    }

    auto oriented_bound_slack(std::size_t n, std::size_t m) -> Rational
    {
        return Rational((long long)(m)) - Rational(57, 17) * Rational((long long)(n)) + Rational(1);
    }

    auto check_oriented_bound(const Digraph & d) -> BoundCheck
    {
        if (! d.is_oriented())
            throw InvalidArgument("the oriented bound needs a digraph without digons");
        auto slack = oriented_bound_slack(d.vertex_count(), d.arc_count());
        return {slack.sign() >= 0, slack};
    }

    auto check_4ore_arc_identity(const Digraph & d) -> bool
    {
        return 3 * d.arc_count() + 4 == 10 * d.vertex_count();
    }

    auto surface_vertex_bound(long long c) -> SurfaceBound
    {
        if (c > 2)
            throw InvalidArgument("Euler characteristic is at most 2");
        auto value = (Rational(17) * Rational(1 - 3 * c) / Rational(6)).floor();
        return {value, value < 0};
    }
}
