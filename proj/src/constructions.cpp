#include <dicrit/constructions.hpp>

#include <algorithm>
#include <random>
#include <set>

namespace dicrit
{
    auto Construction::copy_of(Vertex v) const -> int
    {
        if (v < Vertex(k))
            return -1;
        const auto size = Vertex(base->graph.vertex_count());
        return int((v - Vertex(k)) / size);
    }

    auto transitive_tournament(int k) -> std::vector<Arc>
    {
        std::vector<Arc> arcs;
        for (Vertex i = 0; i < k; ++i)
            for (Vertex j = i + 1; j < k; ++j)
                arcs.push_back({i, j});
        return arcs;
    }

    auto check_tournament(int k, const std::vector<Arc> & arcs) -> void
    {
        std::set<std::pair<Vertex, Vertex>> pairs;
        for (auto [u, v] : arcs) {
            if (u < 0 || v < 0 || u >= k || v >= k || u == v)
                throw InvalidArgument("tournament arc " + std::to_string(u) + "->" + std::to_string(v) + " is out of range");
            if (! pairs.insert({std::min(u, v), std::max(u, v)}).second)
                throw InvalidArgument("tournament has two arcs on the pair {" + std::to_string(u) + ", " + std::to_string(v) + "}");
        }
        if (pairs.size() != std::size_t(k) * std::size_t(k - 1) / 2)
            throw InvalidArgument("tournament misses a pair of vertices");
    }

    namespace
    {
        // Arcs y -> each of `part` and each of `part` -> x.
        auto attach(std::vector<Arc> & arcs, Vertex x, Vertex y, Vertex first, Vertex count) -> void
        {
            for (Vertex v = first; v < first + count; ++v) {
                arcs.push_back({y, v});
                arcs.push_back({v, x});
            }
        }
    }

    auto build_g3(int n0, std::uint64_t cycle_seed) -> Construction
    {
        if (n0 < 1)
            throw InvalidArgument("n0 must be at least 1");
        const Vertex len = 2 * n0 + 1;
        std::mt19937_64 rng(cycle_seed);

        Construction c{3, n0, Digraph(1, {}), {}, {}, {}, {}, nullptr};
        std::vector<Arc> arcs;
        for (Vertex i = 0; i < len; ++i) {
            Vertex a = i, b = (i + 1) % len;
            if (cycle_seed != 0 && rng() % 2)
                std::swap(a, b);
            c.cycle_arcs.push_back({a, b});
            arcs.push_back({a, b});

            const Vertex t = len + 3 * i;
            arcs.push_back({t, t + 1});
            arcs.push_back({t + 1, t + 2});
            arcs.push_back({t + 2, t});
            attach(arcs, a, b, t, 3);
            c.gadgets.push_back({a, b, {t, t + 1, t + 2}});
        }
        c.graph = Digraph(std::size_t(4 * len), std::move(arcs));
        return c;
    }

    auto build_gk(const ConstructionSpec & spec) -> Construction
    {
        if (spec.k < 3)
            throw InvalidArgument("k must be at least 3");
        if (spec.k == 3)
            return build_g3(spec.n0, spec.cycle_seed);

        auto lower = spec;
        lower.k = spec.k - 1;
        auto base = std::make_shared<const Construction>(build_gk(lower));

        const int k = spec.k;
        auto it = spec.tournaments.find(k);
        auto tournament = it != spec.tournaments.end() ? it->second : transitive_tournament(k);
        check_tournament(k, tournament);
        std::sort(tournament.begin(), tournament.end());

        const auto bn = Vertex(base->graph.vertex_count());
        Construction c{k, spec.n0, Digraph(1, {}), {}, {}, tournament, {}, base};
        std::vector<Arc> arcs(tournament.begin(), tournament.end());
        Vertex offset = k;
        for (auto [x, y] : tournament) {
            c.copy_offset.push_back(offset);
            for (auto [u, v] : base->graph.arcs())
                arcs.push_back({offset + u, offset + v});
            attach(arcs, x, y, offset, bn);
            for (auto g : base->gadgets)
                c.gadgets.push_back({offset + g.x, offset + g.y, {offset + g.triangle[0], offset + g.triangle[1], offset + g.triangle[2]}});
            offset += bn;
        }
        c.graph = Digraph(std::size_t(offset), std::move(arcs));
        return c;
    }

    auto predicted_counts(int k, int n0) -> PredictedCounts
    {
        if (k < 3 || n0 < 1)
            throw InvalidArgument("predicted_counts needs k >= 3 and n0 >= 1");
        std::uint64_t len = 2 * std::uint64_t(n0) + 1;
        PredictedCounts p{4 * len, 10 * len};
        for (std::uint64_t j = 4; j <= std::uint64_t(k); ++j) {
            auto pairs = j * (j - 1) / 2;
            p = {j + pairs * p.n, pairs + pairs * 2 * p.n + pairs * p.m};
        }
        return p;
    }

    auto gadget_forces_distinct(const Digraph & d, Vertex x, Vertex y, const std::array<Vertex, 3> & triangle) -> bool
    {
        std::array<Vertex, 5> vs{x, y, triangle[0], triangle[1], triangle[2]};
        for (auto v : vs)
            if (v < 0 || std::size_t(v) >= d.vertex_count())
                throw InvalidArgument("gadget vertex out of range");
        std::set<Vertex> distinct(vs.begin(), vs.end());
        if (distinct.size() != 5)
            throw InvalidArgument("gadget vertices and x, y must be five distinct vertices");
        auto [a, b, c] = triangle;
        bool forward = d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, a);
        bool backward = d.has_arc(b, a) && d.has_arc(c, b) && d.has_arc(a, c);
        if (! forward && ! backward)
            throw InvalidArgument("gadget vertices do not span a directed triangle");

        std::vector<Vertex> sorted(vs.begin(), vs.end());
        std::sort(sorted.begin(), sorted.end());
        auto sub = induced(d, sorted);
        auto local = [&](Vertex v) { return std::size_t(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()); };

        for (int mask = 0; mask < 32; ++mask) {
            Colouring col{2, std::vector<int>(5)};
            for (std::size_t i = 0; i < 5; ++i)
                col.colours[i] = 1 + ((mask >> i) & 1);
            if (col.colours[local(x)] != col.colours[local(y)])
                continue;
            if (check_dicolouring(sub.graph, col).valid)
                return false;
        }
        return true;
    }

    WitnessFactory::WitnessFactory(std::shared_ptr<const Construction> c, Budget budget) : _c(std::move(c))
    {
        const auto & g = _c->graph;
        const int k = _c->k;
        if (k == 3) {
            auto report = is_k_dicritical(g, 3, budget);
            if (! report.verdict)
                throw std::logic_error("base construction failed its dicriticality check: " + report.reason);
            _base_refuted = report.dichromatic_number_lower.has_value();
            _k_colouring = *report.k_colouring;
            for (auto & w : report.witnesses)
                _solved.emplace(w.arc, std::move(w.colouring));
            return;
        }

        _child = std::make_unique<WitnessFactory>(_c->base, budget);
        const auto & child = _child->k_colouring();
        _k_colouring = {k, std::vector<int>(g.vertex_count())};
        for (Vertex t = 0; t < k; ++t)
            _k_colouring.colours[t] = t + 1;
        for (auto offset : _c->copy_offset)
            for (std::size_t i = 0; i < child.colours.size(); ++i)
                _k_colouring.colours[offset + i] = child.colours[i];
    }

    auto WitnessFactory::lonely_colouring(Vertex v) const -> Colouring
    {
        const auto & g = _c->graph;
        auto out = g.out_neighbours(v);
        Arc a = out.empty() ? Arc{g.in_neighbours(v).front(), v} : Arc{v, out.front()};
        auto w = arc_witness(a);
        w.k = _c->k;
        w.colours[v] = _c->k;
        return w;
    }

    auto WitnessFactory::arc_witness(Arc a) const -> Colouring
    {
        const auto & g = _c->graph;
        if (! g.has_arc(a.tail, a.head))
            throw InvalidArgument("arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) + " is not in the construction");
        const int k = _c->k;
        if (k == 3)
            return _solved.at(a);

        const auto bn = Vertex(_c->base->graph.vertex_count());
        Colouring col{k - 1, std::vector<int>(g.vertex_count())};
        const auto & base_col = _child->k_colouring();

        // Tournament vertices p, q get colour k-1, the others 1..k-2 in order.
        auto colour_tournament = [&](Vertex p, Vertex q) {
            int next = 1;
            for (Vertex t = 0; t < k; ++t)
                col.colours[t] = (t == p || t == q) ? k - 1 : next++;
        };
        auto fill_copy = [&](std::size_t i, const Colouring & c) {
            for (Vertex j = 0; j < bn; ++j)
                col.colours[_c->copy_offset[i] + j] = c.colours[j];
        };

        const int cu = _c->copy_of(a.tail), cv = _c->copy_of(a.head);
        for (std::size_t i = 0; i < _c->copy_offset.size(); ++i)
            fill_copy(i, base_col);

        if (cu < 0 && cv < 0)
            colour_tournament(a.tail, a.head);
        else if (cu >= 0 && cv >= 0) {
            auto off = _c->copy_offset[std::size_t(cu)];
            fill_copy(std::size_t(cu), _child->arc_witness({a.tail - off, a.head - off}));
            auto [x, y] = _c->tournament[std::size_t(cu)];
            colour_tournament(x, y);
        }
        else {
            const int ci = cu >= 0 ? cu : cv;
            const Vertex inner = cu >= 0 ? a.tail : a.head;
            auto off = _c->copy_offset[std::size_t(ci)];
            fill_copy(std::size_t(ci), _child->lonely_colouring(inner - off));
            auto [x, y] = _c->tournament[std::size_t(ci)];
            colour_tournament(x, y);
        }
        return col;
    }

    namespace
    {
        auto arc_class(const Construction & c, Arc a) -> std::string
        {
            if (c.k == 3)
                return "all";
            const int cu = c.copy_of(a.tail), cv = c.copy_of(a.head);
            if (cu < 0 && cv < 0)
                return "tournament";
            if (cu >= 0 && cv >= 0)
                return "copy-internal";
            return "connection";
        }

        auto structural_checks(const Construction & c, std::vector<std::string> & log) -> bool
        {
            const auto & g = c.graph;
            const auto bn = Vertex(c.base->graph.vertex_count());
            bool ok = true;
            auto note = [&](bool cond, const std::string & what) {
                log.push_back(std::string(cond ? "ok: " : "FAILED: ") + what);
                ok = ok && cond;
            };

            bool tournament = true;
            for (Vertex i = 0; i < c.k; ++i)
                for (Vertex j = i + 1; j < c.k; ++j)
                    tournament = tournament && (g.has_arc(i, j) != g.has_arc(j, i));
            note(tournament, "vertices 0.." + std::to_string(c.k - 1) + " induce a tournament");

            bool attached = true, copies = true;
            for (std::size_t i = 0; i < c.tournament.size(); ++i) {
                auto [x, y] = c.tournament[i];
                auto off = c.copy_offset[i];
                for (Vertex v = off; v < off + bn; ++v) {
                    attached = attached && g.has_arc(y, v) && g.has_arc(v, x);
                    for (auto u : g.out_neighbours(v)) {
                        if (u == x)
                            continue;
                        copies = copies && u >= off && u < off + bn && c.base->graph.has_arc(v - off, u - off);
                    }
                }
                for (auto [u, v] : c.base->graph.arcs())
                    copies = copies && g.has_arc(off + u, off + v);
            }
            note(attached, "for every tournament arc xy, y dominates its copy and the copy dominates x");
            note(copies, "each copy induces the lower-level digraph and sends no other arcs");
            note(g.arc_count() == c.tournament.size() * (1 + 2 * std::size_t(bn) + c.base->graph.arc_count()),
                "no arcs beyond the tournament, the copies and their attachments");
            return ok;
        }
    }

    auto certify_dicritical_composition(const ConstructionSpec & spec, Budget budget, std::size_t sample, std::uint64_t seed)
        -> CompositionCertificate
    {
        auto c = std::make_shared<const Construction>(build_gk(spec));
        WitnessFactory factory(c, budget);
        const auto & g = c->graph;

        CompositionCertificate cert{};
        cert.k = spec.k;
        cert.n0 = spec.n0;
        cert.n = g.vertex_count();
        cert.m = g.arc_count();

        if (spec.k == 3) {
            cert.lower_bound_method = "solver";
            cert.lower_bound_ok = factory.base_refuted();
            cert.lower_bound_checks.push_back("exhaustive search found no 2-dicolouring");
        }
        else {
            auto lower = spec;
            lower.k = spec.k - 1;
            cert.base = std::make_shared<const CompositionCertificate>(certify_dicritical_composition(lower, budget, sample, seed));
            cert.lower_bound_method = "compositional";
            bool structure = structural_checks(*c, cert.lower_bound_checks);
            cert.lower_bound_checks.push_back(std::string(cert.base->verdict ? "ok: " : "FAILED: ") + "lower level certified " +
                std::to_string(spec.k - 1) + "-dicritical (" + cert.base->lower_bound_method + ")");
            cert.lower_bound_checks.push_back("pigeonhole: a (k-1)-dicolouring repeats a colour on some tournament arc xy; the copy for xy "
                "then holds z of that colour and x -> y -> z -> x is monochromatic");
            cert.lower_bound_ok = structure && cert.base->verdict;
        }

        cert.k_colouring = factory.k_colouring();
        cert.k_colouring_valid = check_dicolouring(g, cert.k_colouring).valid;

        auto arcs = g.arcs();
        std::map<std::string, ArcClassCheck> classes;
        for (const auto & a : arcs) {
            auto name = arc_class(*c, a);
            auto & cls = classes[name];
            cls.name = name;
            if (cls.arcs++ == 0) {
                cls.representative = a;
                cls.representative_valid = check_dicolouring(g.without_arc(a), factory.arc_witness(a)).valid;
            }
        }
        for (auto & [name, cls] : classes)
            cert.classes.push_back(cls);

        std::vector<Arc> chosen(arcs.begin(), arcs.end());
        if (sample != 0 && sample < chosen.size()) {
            std::mt19937_64 rng(seed);
            std::shuffle(chosen.begin(), chosen.end(), rng);
            chosen.resize(sample);
            std::sort(chosen.begin(), chosen.end());
            cert.sampled = true;
        }
        cert.witnesses_valid = true;
        for (const auto & a : chosen) {
            auto w = factory.arc_witness(a);
            ++cert.arcs_validated;
            if (w.k != spec.k - 1 || ! check_dicolouring(g.without_arc(a), w).valid) {
                cert.witnesses_valid = false;
                cert.failure_arc = a;
                break;
            }
        }

        bool classes_ok = std::all_of(cert.classes.begin(), cert.classes.end(), [](const ArcClassCheck & x) { return x.representative_valid; });
        cert.verdict = cert.lower_bound_ok && cert.k_colouring_valid && classes_ok && cert.witnesses_valid;
        return cert;
    }
}
