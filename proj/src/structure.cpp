#include <dicrit/structure.hpp>

#include <algorithm>

namespace dicrit
{
    auto find_out_chelou_arcs(const Digraph & d) -> std::vector<Arc>
    {
        std::vector<Arc> result;
        for (const auto & [x, y] : d.arcs()) {
            if (d.has_arc(y, x) || d.out_degree(x) != 3 || d.in_degree(y) != 3)
                continue;
            auto in = d.in_neighbours(y);
            bool witness = std::any_of(in.begin(), in.end(), [&](Vertex z) { return z != x && ! d.has_arc(y, z); });
            if (witness)
                result.push_back({x, y});
        }
        return result;
    }

    auto find_chelou_arcs(const Digraph & d) -> ChelouArcs
    {
        ChelouArcs result;
        result.out_chelou = find_out_chelou_arcs(d);
        for (const auto & [a, b] : find_out_chelou_arcs(d.reversed()))
            result.in_chelou.push_back({b, a});
        std::sort(result.in_chelou.begin(), result.in_chelou.end());
        return result;
    }

    auto d6_vertices(const Digraph & d) -> std::vector<Vertex>
    {
        std::vector<Vertex> vs;
        for (Vertex v = 0; std::size_t(v) < d.vertex_count(); ++v)
            if (d.degree(v) == 6 && d.incident_to_digon(v))
                vs.push_back(v);
        return vs;
    }

    auto to_string(D6Class c) -> std::string
    {
        switch (c) {
            case D6Class::singleton: return "singleton";
            case D6Class::path2: return "path2";
            case D6Class::path3: return "path3";
            case D6Class::star4: return "star4";
            case D6Class::other: return "other";
        }
        return "other";
    }

    auto valency8(const Digraph & d, Vertex v) -> int
    {
        int count = 0;
        for (auto u : d.out_neighbours(v))
            count += d.degree(u) >= 8;
        for (auto u : d.in_neighbours(v))
            count += d.degree(u) >= 8;
        return count;
    }

    auto neighbourhood_valency(const Digraph & d, Vertex v) -> int
    {
        if (d.degree(v) != 6 || ! d.incident_to_digon(v))
            throw InvalidArgument("vertex " + std::to_string(v) + " is not in D6");
        int total = 0;
        for (auto u : d.neighbours(v))
            if (d.degree(u) >= 8)
                total += valency8(d, u);
        return total;
    }

    auto d6_components(const Digraph & d) -> std::vector<D6Component>
    {
        std::vector<bool> allowed(d.vertex_count(), false);
        auto members = d6_vertices(d);
        if (members.empty())
            return {};
        for (auto v : members)
            allowed[v] = true;

        std::vector<D6Component> result;
        for (auto & comp : underlying_components(d, allowed)) {
            if (! allowed[comp.front()])
                continue;
            D6Component c{comp, D6Class::other, {}, false};
            const auto size = comp.size();

            // Degrees inside the component and whether every adjacency is a digon.
            std::vector<int> inner(size, 0);
            int edges = 0;
            bool all_digons = true;
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = i + 1; j < size; ++j)
                    if (d.adjacent(comp[i], comp[j])) {
                        ++inner[i];
                        ++inner[j];
                        ++edges;
                        all_digons = all_digons && d.has_digon(comp[i], comp[j]);
                    }

            if (size == 1)
                c.cls = D6Class::singleton;
            else if (all_digons && size == 2)
                c.cls = D6Class::path2;
            else if (all_digons && size == 3 && edges == 2) {
                c.cls = D6Class::path3;
                for (std::size_t i = 0; i < size; ++i)
                    if (inner[i] == 1)
                        c.extremities.push_back(comp[i]);
            }
            else if (all_digons && size == 4 && edges == 3 && std::count(inner.begin(), inner.end(), 3) == 1) {
                c.cls = D6Class::star4;
                for (std::size_t i = 0; i < size; ++i)
                    if (inner[i] == 1)
                        c.extremities.push_back(comp[i]);
            }
            if (! c.extremities.empty())
                c.extremities_valency_ok = std::all_of(c.extremities.begin(), c.extremities.end(),
                    [&](Vertex v) { return neighbourhood_valency(d, v) >= 4; });
            result.push_back(std::move(c));
        }
        return result;
    }

    auto to_string(Rule r) -> std::string
    {
        switch (r) {
            case Rule::r1: return "R1";
            case Rule::r2: return "R2";
            case Rule::r3: return "R3";
        }
        return "R?";
    }

    auto ChargeLedger::initial_total() const -> Rational
    {
        Rational t;
        for (const auto & w : initial)
            t += w;
        return t;
    }

    auto ChargeLedger::final_total() const -> Rational
    {
        Rational t;
        for (const auto & w : final)
            t += w;
        return t;
    }

    auto discharge(const Digraph & d, const PotentialParams & p) -> ChargeLedger
    {
        const auto n = d.vertex_count();
        ChargeLedger ledger{p, std::vector<Rational>(n), std::vector<Rational>(n), {}, {}, {}, {}};

        for (const auto & c : d6_components(d))
            if (c.vertices.size() >= 2)
                for (auto v : c.vertices)
                    ledger.sigma[v] = p.delta() / Rational((long long)(c.vertices.size()));

        const Rational base = Rational(10, 3) + p.eps();
        for (Vertex v = 0; std::size_t(v) < n; ++v)
            ledger.initial[v] = base - Rational((long long)(d.degree(v)), 2) - ledger.sigma[v];

        const Rational small = Rational(1, 12) - p.eps() / Rational(8);
        for (Vertex v = 0; std::size_t(v) < n; ++v) {
            const auto deg = d.degree(v);
            if (deg == 6 && ! d.incident_to_digon(v)) {
                for (auto u : d.neighbours(v))
                    ledger.transfers.push_back({Rule::r1, v, u, small});
            }
            else if (deg == 6) {
                for (auto u : d.neighbours(v)) {
                    const auto du = d.degree(u);
                    if (du < 8)
                        continue;
                    const auto nu = valency8(d, u);
                    if ((long long)(du) == nu) {
                        ledger.r2_inapplicable.emplace_back(v, u);
                        continue;
                    }
                    auto per_arc = (Rational(-10, 3) + Rational((long long)(du), 2) - p.eps()) / Rational((long long)(du) - nu);
                    auto arcs = int(d.has_arc(v, u)) + int(d.has_arc(u, v));
                    ledger.transfers.push_back({Rule::r2, v, u, per_arc * Rational(arcs)});
                }
            }
            else if (deg == 7) {
                if (d.in_degree(v) == 3)
                    for (auto u : d.in_neighbours(v))
                        ledger.transfers.push_back({Rule::r3, v, u, small});
                if (d.out_degree(v) == 3)
                    for (auto u : d.out_neighbours(v))
                        ledger.transfers.push_back({Rule::r3, v, u, small});
            }
        }

        ledger.final = ledger.initial;
        for (const auto & t : ledger.transfers) {
            ledger.final[t.source] -= t.amount;
            ledger.final[t.target] += t.amount;
        }
        ledger.notes.push_back("R2 sends the per-arc amount along every arc between the sender and the recipient, simple arcs included");
        return ledger;
    }

    namespace
    {
        auto check_subset(const Digraph & d, std::span<const Vertex> subset, const Colouring & phi) -> void
        {
            const auto n = d.vertex_count();
            if (subset.size() < 4 || subset.size() >= n)
                throw InvalidArgument("R must satisfy 4 <= n(R) < n(D)");
            if (! std::is_sorted(subset.begin(), subset.end()) || std::adjacent_find(subset.begin(), subset.end()) != subset.end())
                throw InvalidArgument("R must be listed in increasing order without repeats");
            if (subset.front() < 0 || std::size_t(subset.back()) >= n)
                throw InvalidArgument("R contains a vertex out of range");
            if (phi.k != 3 || phi.colours.size() != subset.size())
                throw InvalidArgument("phi must be a 3-colouring of R");
            auto r = induced(d, subset);
            auto check = check_dicolouring(r.graph, phi);
            if (! check.valid)
                throw InvalidArgument("phi is not a 3-dicolouring of R");
        }
    }

    auto phi_identify(const Digraph & d, std::span<const Vertex> subset, const Colouring & phi, bool strict) -> PhiIdentification
    {
        check_subset(d, subset, phi);
        if (strict)
            for (int c = 1; c <= 3; ++c)
                if (std::find(phi.colours.begin(), phi.colours.end(), c) == phi.colours.end())
                    throw InvalidArgument("strict identification needs every colour used; colour " + std::to_string(c) + " is empty");

        const auto n = d.vertex_count();
        const auto new_n = n - subset.size() + 3;
        std::vector<Vertex> image(n, -1);
        Vertex next = 0;
        std::size_t s = 0;
        for (Vertex v = 0; std::size_t(v) < n; ++v) {
            if (s < subset.size() && subset[s] == v) {
                ++s;
                continue;
            }
            image[v] = next++;
        }
        std::array<Vertex, 3> x{next, next + 1, next + 2};
        for (std::size_t i = 0; i < subset.size(); ++i)
            image[subset[i]] = x[phi.colours[i] - 1];

        std::vector<Arc> arcs;
        for (const auto & [u, v] : d.arcs())
            if (image[u] != image[v])
                arcs.push_back({image[u], image[v]});
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j)
                    arcs.push_back({x[i], x[j]});
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        return {Digraph(new_n, std::move(arcs)), std::move(image), x};
    }

    auto dicritical_extension(const Digraph & d, std::span<const Vertex> subset, const Colouring & phi, Budget budget) -> ExtensionResult
    {
        auto ident = phi_identify(d, subset, phi);
        auto colourable = [&](const Digraph & g) {
            auto r = is_k_dicolourable(g, 3, budget);
            if (r.status == SearchStatus::unknown)
                throw BudgetExceeded("dicritical_extension");
            return r.status == SearchStatus::found;
        };
        if (colourable(ident.graph))
            throw InvalidArgument("the identification is 3-dicolourable, so the host is not 4-dicritical");

        std::vector<Arc> kept(ident.graph.arcs().begin(), ident.graph.arcs().end());
        for (std::size_t i = 0; i < kept.size();) {
            std::vector<Arc> trial = kept;
            trial.erase(trial.begin() + std::ptrdiff_t(i));
            if (! colourable(Digraph(ident.graph.vertex_count(), trial)))
                kept = std::move(trial);
            else
                ++i;
        }

        Digraph peeled(ident.graph.vertex_count(), kept);
        std::vector<Vertex> w_vertices;
        for (Vertex v = 0; std::size_t(v) < peeled.vertex_count(); ++v)
            if (peeled.degree(v) > 0)
                w_vertices.push_back(v);
        auto w = induced(peeled, w_vertices);

        ExtensionResult result{ident, w.graph, w_vertices, {}, {}, false};
        for (auto xi : ident.x)
            if (std::binary_search(w_vertices.begin(), w_vertices.end(), xi))
                result.core.push_back(xi);

        std::vector<bool> in_ext(d.vertex_count(), false);
        for (auto v : subset)
            in_ext[v] = true;
        for (Vertex v = 0; std::size_t(v) < d.vertex_count(); ++v)
            if (! in_ext[v] && std::binary_search(w_vertices.begin(), w_vertices.end(), ident.image[v]))
                in_ext[v] = true;
        for (Vertex v = 0; std::size_t(v) < d.vertex_count(); ++v)
            if (in_ext[v])
                result.extension.push_back(v);
        result.extension_is_whole = result.extension.size() == d.vertex_count();

        if (result.core.empty() || result.core.size() > 3)
            throw std::logic_error("dicritical_extension: core size outside 1..3");
        return result;
    }

    auto is_collapsible(const Digraph & d, std::span<const Vertex> subset, Budget budget) -> CollapsibilityResult
    {
        if (subset.size() < 4 || subset.size() >= d.vertex_count())
            throw InvalidArgument("R must satisfy 4 <= n(R) < n(D)");
        auto r = induced(d, subset);
        auto border = boundary(d, subset);
        std::vector<std::size_t> border_local;
        for (auto b : border)
            border_local.push_back(std::size_t(std::lower_bound(subset.begin(), subset.end(), b) - subset.begin()));

        CollapsibilityResult result{true, std::nullopt, {}, 0};
        enumerate_dicolourings(r.graph, 3, [&](const Colouring & phi) {
            ++result.colourings_checked;
            for (auto i : border_local)
                if (phi.colours[i] != phi.colours[border_local.front()]) {
                    result = {false, phi, "the boundary is not monochromatic", result.colourings_checked};
                    return false;
                }
            auto ext = dicritical_extension(d, subset, phi, budget);
            if (! ext.extension_is_whole) {
                result = {false, phi, "the dicritical extension is a proper subdigraph", result.colourings_checked};
                return false;
            }
            if (ext.core.size() != 1) {
                result = {false, phi, "the core has " + std::to_string(ext.core.size()) + " vertices", result.colourings_checked};
                return false;
            }
            return true;
        }, budget);
        return result;
    }
}
