#include <dicrit/dicolour.hpp>

#include <algorithm>
#include <bit>
#include <numeric>

namespace dicrit
{
    auto check_dicolouring(const Digraph & d, const Colouring & c) -> DicolouringCheck
    {
        const auto n = d.vertex_count();
        if (c.colours.size() != n)
            throw InvalidArgument("colouring is not total: " + std::to_string(c.colours.size()) + " colours for " + std::to_string(n) + " vertices");
        for (auto col : c.colours)
            if (col < 1 || col > c.k)
                throw InvalidArgument("colour " + std::to_string(col) + " outside 1.." + std::to_string(c.k));

        // Iterative DFS restricted to arcs inside a colour class; a grey-to-grey arc closes a cycle.
        enum : char { white, grey, black };
        std::vector<char> state(n, white);
        std::vector<Vertex> parent(n, -1);
        std::vector<std::pair<Vertex, std::size_t>> stack;

        for (Vertex root = 0; std::size_t(root) < n; ++root) {
            if (state[root] != white)
                continue;
            state[root] = grey;
            stack.emplace_back(root, 0);
            while (! stack.empty()) {
                auto & [v, next] = stack.back();
                auto out = d.out_neighbours(v);
                if (next == out.size()) {
                    state[v] = black;
                    stack.pop_back();
                    continue;
                }
                auto u = out[next++];
                if (c.colours[u] != c.colours[v])
                    continue;
                if (state[u] == grey) {
                    std::vector<Vertex> cycle;
                    for (auto w = v; w != u; w = parent[w])
                        cycle.push_back(w);
                    cycle.push_back(u);
                    std::reverse(cycle.begin(), cycle.end());
                    return {false, std::move(cycle)};
                }
                if (state[u] == white) {
                    state[u] = grey;
                    parent[u] = v;
                    stack.emplace_back(u, 0);
                }
            }
        }
        return {true, {}};
    }

    namespace
    {
        // Backtracking search shared by the decision and enumeration entry points.
        class Search
        {
        public:
            Search(const Digraph & d, int k, Budget budget) :
                _n(d.vertex_count()),
                _words((_n + 63) / 64),
                _k(k),
                _budget(budget),
                _out(_n * _words, 0),
                _in(_n * _words, 0),
                _members(std::size_t(k + 1) * _words, 0),
                _reach(_words),
                _frontier(_words),
                _colour(_n, 0)
            {
                for (const auto & [u, v] : d.arcs()) {
                    _out[u * _words + v / 64] |= std::uint64_t(1) << (v % 64);
                    _in[v * _words + u / 64] |= std::uint64_t(1) << (u % 64);
                }
                _order.resize(_n);
                std::iota(_order.begin(), _order.end(), 0);
                std::stable_sort(_order.begin(), _order.end(), [&](Vertex a, Vertex b) { return d.degree(a) > d.degree(b); });
            }

            enum class Outcome
            {
                exhausted,
                stopped,
                out_of_budget
            };

            auto run(const std::function<bool(const Colouring &)> & visit) -> Outcome
            {
                _visit = &visit;
                return descend(0, 0);
            }

            [[nodiscard]] auto nodes() const -> std::uint64_t { return _nodes; }

        private:
            std::size_t _n, _words;
            int _k;
            Budget _budget;
            std::uint64_t _nodes = 0;
            std::vector<std::uint64_t> _out, _in, _members, _reach, _frontier;
            std::vector<int> _colour;
            std::vector<Vertex> _order;
            const std::function<bool(const Colouring &)> * _visit = nullptr;

            auto row(const std::vector<std::uint64_t> & bits, std::size_t i) const -> const std::uint64_t *
            {
                return bits.data() + i * _words;
            }

            // Does giving v colour c close a directed cycle inside class c?
            auto closes_cycle(Vertex v, int c) -> bool
            {
                const auto * mem = row(_members, std::size_t(c));
                const auto * out = row(_out, std::size_t(v));
                const auto * in = row(_in, std::size_t(v));
                bool any = false;
                for (std::size_t w = 0; w < _words; ++w) {
                    _reach[w] = out[w] & mem[w];
                    if (_reach[w] & in[w])
                        return true;
                    _frontier[w] = _reach[w];
                    any = any || _reach[w];
                }
                while (any) {
                    any = false;
                    for (std::size_t w = 0; w < _words; ++w) {
                        while (_frontier[w]) {
                            auto bit = std::countr_zero(_frontier[w]);
                            _frontier[w] &= _frontier[w] - 1;
                            const auto * next = row(_out, w * 64 + std::size_t(bit));
                            for (std::size_t x = 0; x < _words; ++x) {
                                auto fresh = next[x] & mem[x] & ~_reach[x];
                                if (fresh & in[x])
                                    return true;
                                _reach[x] |= fresh;
                                _frontier[x] |= fresh;
                            }
                        }
                    }
                    for (std::size_t w = 0; w < _words; ++w)
                        any = any || _frontier[w];
                }
                return false;
            }

            auto descend(std::size_t depth, int used) -> Outcome
            {
                if (depth == _n) {
                    Colouring c{_k, _colour};
                    return (*_visit)(c) ? Outcome::exhausted : Outcome::stopped;
                }
                auto v = _order[depth];
                for (int c = 1; c <= std::min(_k, used + 1); ++c) {
                    if (++_nodes > _budget.nodes)
                        return Outcome::out_of_budget;
                    if (closes_cycle(v, c))
                        continue;
                    _colour[v] = c;
                    auto & word = _members[std::size_t(c) * _words + std::size_t(v) / 64];
                    word |= std::uint64_t(1) << (v % 64);
                    auto outcome = descend(depth + 1, std::max(used, c));
                    word &= ~(std::uint64_t(1) << (v % 64));
                    _colour[v] = 0;
                    if (outcome != Outcome::exhausted)
                        return outcome;
                }
                return Outcome::exhausted;
            }
        };
    }

    auto is_k_dicolourable(const Digraph & d, int k, Budget budget) -> SearchResult
    {
        if (k < 1)
            throw InvalidArgument("k must be at least 1");
        Search search(d, k, budget);
        std::optional<Colouring> found;
        auto outcome = search.run([&](const Colouring & c) {
            found = c;
            return false;
        });
        switch (outcome) {
            case Search::Outcome::stopped: return {SearchStatus::found, std::move(found), search.nodes()};
            case Search::Outcome::exhausted: return {SearchStatus::none, std::nullopt, search.nodes()};
            case Search::Outcome::out_of_budget: return {SearchStatus::unknown, std::nullopt, search.nodes()};
        }
        return {SearchStatus::unknown, std::nullopt, search.nodes()};
    }

    auto enumerate_dicolourings(const Digraph & d, int k, const std::function<bool(const Colouring &)> & visit,
        Budget budget) -> std::uint64_t
    {
        if (k < 1)
            throw InvalidArgument("k must be at least 1");
        Search search(d, k, budget);
        std::uint64_t count = 0;
        auto outcome = search.run([&](const Colouring & c) {
            ++count;
            return visit(c);
        });
        if (outcome == Search::Outcome::out_of_budget)
            throw BudgetExceeded("enumerate_dicolourings");
        return count;
    }

    auto dichromatic_number(const Digraph & d, Budget budget) -> int
    {
        for (int k = 1;; ++k) {
            auto r = is_k_dicolourable(d, k, budget);
            if (r.status == SearchStatus::found)
                return k;
            if (r.status == SearchStatus::unknown)
                throw BudgetExceeded("dichromatic_number at k = " + std::to_string(k));
        }
    }

    auto is_k_dicritical(const Digraph & d, int k, Budget budget) -> CriticalityReport
    {
        if (k < 2)
            throw InvalidArgument("dicriticality is defined here for k >= 2");

        CriticalityReport report{d, k, false, std::nullopt, std::nullopt, {}, std::nullopt, {}};

        if (d.vertex_count() > 1)
            for (Vertex v = 0; std::size_t(v) < d.vertex_count(); ++v)
                if (d.degree(v) == 0) {
                    report.reason = "vertex " + std::to_string(v) + " is isolated";
                    return report;
                }

        auto lower = is_k_dicolourable(d, k - 1, budget);
        if (lower.status == SearchStatus::unknown)
            throw BudgetExceeded("is_k_dicritical: refuting a " + std::to_string(k - 1) + "-dicolouring");
        if (lower.status == SearchStatus::found) {
            report.reason = "digraph is " + std::to_string(k - 1) + "-dicolourable";
            return report;
        }
        report.dichromatic_number_lower = k;

        auto upper = is_k_dicolourable(d, k, budget);
        if (upper.status == SearchStatus::unknown)
            throw BudgetExceeded("is_k_dicritical: finding a " + std::to_string(k) + "-dicolouring");
        if (upper.status == SearchStatus::none) {
            report.reason = "dichromatic number exceeds " + std::to_string(k);
            return report;
        }
        report.k_colouring = upper.colouring;

        for (const auto & arc : d.arcs()) {
            auto r = is_k_dicolourable(d.without_arc(arc), k - 1, budget);
            if (r.status == SearchStatus::unknown)
                throw BudgetExceeded("is_k_dicritical: arc " + std::to_string(arc.tail) + "->" + std::to_string(arc.head));
            if (r.status == SearchStatus::none) {
                report.failure_arc = arc;
                report.witnesses.clear();
                report.reason = "deleting arc " + std::to_string(arc.tail) + "->" + std::to_string(arc.head) + " keeps the dichromatic number at " + std::to_string(k);
                return report;
            }
            report.witnesses.push_back({arc, *r.colouring});
        }
        report.verdict = true;
        return report;
    }
}
