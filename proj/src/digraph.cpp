#include <dicrit/digraph.hpp>
#include <dicrit/error.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace dicrit
{
    Digraph::Digraph(std::size_t n, std::vector<Arc> arcs) :
        _n(n),
        _arcs(std::move(arcs))
    {
        if (n == 0)
            throw InvalidArgument("a digraph needs at least one vertex");

        for (const auto & [u, v] : _arcs) {
            if (u < 0 || v < 0 || std::size_t(u) >= n || std::size_t(v) >= n)
                throw InvalidArgument("arc (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
            if (u == v)
                throw InvalidArgument("self-loop at " + std::to_string(u));
        }

        std::sort(_arcs.begin(), _arcs.end());
        if (auto dup = std::adjacent_find(_arcs.begin(), _arcs.end()); dup != _arcs.end())
            throw InvalidArgument("duplicate arc (" + std::to_string(dup->tail) + ", " + std::to_string(dup->head) + ")");

        _out_start.assign(n + 1, 0);
        _in_start.assign(n + 1, 0);
        for (const auto & [u, v] : _arcs) {
            ++_out_start[u + 1];
            ++_in_start[v + 1];
        }
        for (std::size_t i = 0; i < n; ++i) {
            _out_start[i + 1] += _out_start[i];
            _in_start[i + 1] += _in_start[i];
        }

        _out.resize(_arcs.size());
        _in.resize(_arcs.size());
        std::vector<std::uint32_t> in_fill(_in_start.begin(), _in_start.end() - 1);
        // Arcs are sorted by tail then head, so both CSR arrays come out sorted.
        for (std::size_t i = 0; i < _arcs.size(); ++i) {
            _out[i] = _arcs[i].head;
            _in[in_fill[_arcs[i].head]++] = _arcs[i].tail;
        }
    }

    auto Digraph::check_vertex(Vertex v) const -> void
    {
        if (v < 0 || std::size_t(v) >= _n)
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    }

    auto Digraph::out_neighbours(Vertex v) const -> std::span<const Vertex>
    {
        check_vertex(v);
        return std::span(_out).subspan(_out_start[v], _out_start[v + 1] - _out_start[v]);
    }

    auto Digraph::in_neighbours(Vertex v) const -> std::span<const Vertex>
    {
        check_vertex(v);
        return std::span(_in).subspan(_in_start[v], _in_start[v + 1] - _in_start[v]);
    }

    auto Digraph::neighbours(Vertex v) const -> std::vector<Vertex>
    {
        auto out = out_neighbours(v), in = in_neighbours(v);
        std::vector<Vertex> result;
        result.reserve(out.size() + in.size());
        std::set_union(out.begin(), out.end(), in.begin(), in.end(), std::back_inserter(result));
        return result;
    }

    auto Digraph::has_arc(Vertex u, Vertex v) const -> bool
    {
        auto out = out_neighbours(u);
        return std::binary_search(out.begin(), out.end(), v);
    }

    auto Digraph::incident_to_digon(Vertex v) const -> bool
    {
        auto out = out_neighbours(v), in = in_neighbours(v);
        auto i = out.begin(), j = in.begin();
        while (i != out.end() && j != in.end()) {
            if (*i == *j)
                return true;
            if (*i < *j)
                ++i;
            else
                ++j;
        }
        return false;
    }

    auto Digraph::digons() const -> std::vector<std::pair<Vertex, Vertex>>
    {
        std::vector<std::pair<Vertex, Vertex>> result;
        for (const auto & [u, v] : _arcs)
            if (u < v && has_arc(v, u))
                result.emplace_back(u, v);
        return result;
    }

    auto Digraph::digon_count() const -> std::size_t
    {
        std::size_t count = 0;
        for (const auto & [u, v] : _arcs)
            if (u < v && has_arc(v, u))
                ++count;
        return count;
    }

    auto Digraph::is_bidirected() const -> bool
    {
        return std::all_of(_arcs.begin(), _arcs.end(), [&](const Arc & a) { return has_arc(a.head, a.tail); });
    }

    auto Digraph::is_oriented() const -> bool
    {
        return std::none_of(_arcs.begin(), _arcs.end(), [&](const Arc & a) { return has_arc(a.head, a.tail); });
    }

    auto Digraph::reversed() const -> Digraph
    {
        std::vector<Arc> arcs;
        arcs.reserve(_arcs.size());
        for (const auto & [u, v] : _arcs)
            arcs.push_back({v, u});
        return Digraph(_n, std::move(arcs));
    }

    auto Digraph::without_arcs(std::span<const Arc> removed) const -> Digraph
    {
        std::vector<Arc> sorted(removed.begin(), removed.end());
        std::sort(sorted.begin(), sorted.end());
        std::vector<Arc> arcs;
        arcs.reserve(_arcs.size());
        std::set_difference(_arcs.begin(), _arcs.end(), sorted.begin(), sorted.end(), std::back_inserter(arcs));
        return Digraph(_n, std::move(arcs));
    }

    auto Digraph::with_arcs(std::span<const Arc> added) const -> Digraph
    {
        std::vector<Arc> sorted(added.begin(), added.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<Arc> arcs;
        arcs.reserve(_arcs.size() + sorted.size());
        std::set_union(_arcs.begin(), _arcs.end(), sorted.begin(), sorted.end(), std::back_inserter(arcs));
        return Digraph(_n, std::move(arcs));
    }

    auto Digraph::without_digon(Vertex u, Vertex v) const -> Digraph
    {
        const Arc pair[] = {{u, v}, {v, u}};
        return without_arcs(pair);
    }

    auto Digraph::with_digon(Vertex u, Vertex v) const -> Digraph
    {
        const Arc pair[] = {{u, v}, {v, u}};
        return with_arcs(pair);
    }

    namespace
    {
        auto tokens(std::string_view line) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> result;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                std::size_t j = i;
                while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                    ++j;
                if (j > i)
                    result.push_back(line.substr(i, j - i));
                i = j;
            }
            return result;
        }

        auto to_integer(std::string_view token, std::size_t line) -> long long
        {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size())
                throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
            return value;
        }
    }

    auto parse(std::string_view text) -> Digraph
    {
        std::optional<std::pair<long long, long long>> header;
        std::vector<Arc> arcs;
        std::size_t line_no = 0, header_line = 0;

        while (! text.empty()) {
            auto eol = text.find('\n');
            auto line = text.substr(0, eol);
            text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
            ++line_no;

            auto toks = tokens(line);
            if (toks.empty() || toks.front().front() == '#')
                continue;

            if (! header) {
                if (toks.size() != 4 || toks[0] != "n" || toks[2] != "m")
                    throw ParseError(line_no, "malformed header, expected 'n <N> m <M>'");
                auto n = to_integer(toks[1], line_no), m = to_integer(toks[3], line_no);
                if (n <= 0)
                    throw ParseError(line_no, "vertex count must be positive");
                if (m < 0)
                    throw ParseError(line_no, "arc count must be non-negative");
                header = {n, m};
                header_line = line_no;
                continue;
            }

            if (toks.size() != 2)
                throw ParseError(line_no, "expected '<u> <v>'");
            auto u = to_integer(toks[0], line_no), v = to_integer(toks[1], line_no);
            if (u < 0 || v < 0 || u >= header->first || v >= header->first)
                throw ParseError(line_no, "vertex index out of range");
            if (u == v)
                throw ParseError(line_no, "self-loop at " + std::to_string(u));
            if (arcs.size() == std::size_t(header->second))
                throw ParseError(line_no, "more arcs than announced in the header");
            arcs.push_back({Vertex(u), Vertex(v)});
            for (std::size_t i = 0; i + 1 < arcs.size(); ++i)
                if (arcs[i] == arcs.back())
                    throw ParseError(line_no, "duplicate arc " + std::to_string(u) + " " + std::to_string(v));
        }

        if (! header)
            throw ParseError(line_no, "missing header");
        if (arcs.size() != std::size_t(header->second))
            throw ParseError(header_line, "header announces " + std::to_string(header->second) + " arcs, found " + std::to_string(arcs.size()));

        return Digraph(std::size_t(header->first), std::move(arcs));
    }

    auto serialize(const Digraph & d) -> std::string
    {
        std::string out = "n " + std::to_string(d.vertex_count()) + " m " + std::to_string(d.arc_count()) + "\n";
        for (const auto & [u, v] : d.arcs()) {
            out += std::to_string(u);
            out += ' ';
            out += std::to_string(v);
            out += '\n';
        }
        return out;
    }

    auto read_digraph_file(const std::string & path) -> Digraph
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidArgument("cannot open " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse(buffer.str());
    }

    auto profiles(const Digraph & d) -> std::vector<VertexProfile>
    {
        std::vector<VertexProfile> result;
        result.reserve(d.vertex_count());
        for (Vertex v = 0; std::size_t(v) < d.vertex_count(); ++v) {
            auto nbrs = d.neighbours(v);
            VertexProfile p{v, d.in_degree(v), d.out_degree(v), d.degree(v), nbrs.size(), {}};
            for (auto u : nbrs)
                if (! d.has_digon(u, v))
                    p.simple_neighbours.push_back(u);
            result.push_back(std::move(p));
        }
        return result;
    }

    namespace
    {
        auto membership(const Digraph & d, std::span<const Vertex> subset) -> std::vector<bool>
        {
            std::vector<bool> in(d.vertex_count(), false);
            for (auto v : subset) {
                if (v < 0 || std::size_t(v) >= d.vertex_count())
                    throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
                in[v] = true;
            }
            return in;
        }
    }

    auto induced(const Digraph & d, std::span<const Vertex> subset) -> Subdigraph
    {
        auto in = membership(d, subset);
        std::vector<Vertex> origin;
        std::vector<Vertex> index(d.vertex_count(), -1);
        for (Vertex v = 0; std::size_t(v) < d.vertex_count(); ++v)
            if (in[v]) {
                index[v] = Vertex(origin.size());
                origin.push_back(v);
            }
        if (origin.empty())
            throw InvalidArgument("induced subdigraph on an empty vertex set");

        std::vector<Arc> arcs;
        for (const auto & [u, v] : d.arcs())
            if (in[u] && in[v])
                arcs.push_back({index[u], index[v]});
        return {Digraph(origin.size(), std::move(arcs)), std::move(origin)};
    }

    auto remove_vertices(const Digraph & d, std::span<const Vertex> removed) -> Subdigraph
    {
        auto out = membership(d, removed);
        std::vector<Vertex> kept;
        for (Vertex v = 0; std::size_t(v) < d.vertex_count(); ++v)
            if (! out[v])
                kept.push_back(v);
        return induced(d, kept);
    }

    auto boundary(const Digraph & d, std::span<const Vertex> subset) -> std::vector<Vertex>
    {
        auto in = membership(d, subset);
        auto size = std::count(in.begin(), in.end(), true);
        if (size == 0)
            throw InvalidArgument("boundary of an empty set");
        if (std::size_t(size) == d.vertex_count())
            throw InvalidArgument("boundary of the whole vertex set is undefined");

        std::vector<Vertex> result;
        for (Vertex v = 0; std::size_t(v) < d.vertex_count(); ++v) {
            if (! in[v])
                continue;
            auto outside = [&](Vertex u) { return ! in[u]; };
            auto out = d.out_neighbours(v), inn = d.in_neighbours(v);
            if (std::any_of(out.begin(), out.end(), outside) || std::any_of(inn.begin(), inn.end(), outside))
                result.push_back(v);
        }
        return result;
    }

    auto identify(const Digraph & d, const std::vector<std::vector<Vertex>> & blocks) -> Identified
    {
        const auto n = d.vertex_count();
        std::vector<int> block_of(n, -1);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].empty())
                throw InvalidArgument("empty block in identification");
            for (auto v : blocks[b]) {
                if (v < 0 || std::size_t(v) >= n)
                    throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
                if (block_of[v] != -1)
                    throw InvalidArgument("blocks overlap at vertex " + std::to_string(v));
                block_of[v] = int(b);
            }
        }

        // Representative = smallest member; new ids follow representatives in order.
        std::vector<Vertex> rep(n);
        std::vector<Vertex> block_min(blocks.size(), Vertex(n));
        for (Vertex v = 0; std::size_t(v) < n; ++v)
            if (block_of[v] != -1)
                block_min[block_of[v]] = std::min(block_min[block_of[v]], v);
        for (Vertex v = 0; std::size_t(v) < n; ++v)
            rep[v] = block_of[v] == -1 ? v : block_min[block_of[v]];

        std::vector<Vertex> id_of_rep(n, -1);
        Vertex next = 0;
        for (Vertex v = 0; std::size_t(v) < n; ++v)
            if (rep[v] == v)
                id_of_rep[v] = next++;

        Identified result{Digraph(1, {}), std::vector<Vertex>(n)};
        for (Vertex v = 0; std::size_t(v) < n; ++v)
            result.image[v] = id_of_rep[rep[v]];

        std::vector<Arc> arcs;
        for (const auto & [u, v] : d.arcs())
            if (result.image[u] != result.image[v])
                arcs.push_back({result.image[u], result.image[v]});
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        result.graph = Digraph(std::size_t(next), std::move(arcs));
        return result;
    }

    auto underlying_components(const Digraph & d, const std::vector<bool> & allowed) -> std::vector<std::vector<Vertex>>
    {
        const auto n = d.vertex_count();
        auto ok = [&](Vertex v) { return allowed.empty() || allowed[v]; };
        std::vector<bool> seen(n, false);
        std::vector<std::vector<Vertex>> result;
        std::vector<Vertex> stack;
        for (Vertex s = 0; std::size_t(s) < n; ++s) {
            if (seen[s] || ! ok(s))
                continue;
            result.emplace_back();
            seen[s] = true;
            stack.push_back(s);
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                result.back().push_back(v);
                for (auto span : {d.out_neighbours(v), d.in_neighbours(v)})
                    for (auto u : span)
                        if (! seen[u] && ok(u)) {
                            seen[u] = true;
                            stack.push_back(u);
                        }
            }
            std::sort(result.back().begin(), result.back().end());
        }
        return result;
    }

    auto underlying_connected(const Digraph & d, std::span<const Vertex> removed) -> bool
    {
        std::vector<bool> allowed(d.vertex_count(), true);
        for (auto v : removed)
            allowed[v] = false;
        return underlying_components(d, allowed).size() <= 1;
    }

    auto is_k_connected(const Digraph & d, int k) -> Connectivity
    {
        if (k != 2 && k != 3)
            throw InvalidArgument("connectivity is only checked for k = 2 or 3");
        const auto n = d.vertex_count();
        if (n <= std::size_t(k))
            throw InvalidArgument("k-connectivity needs more than k vertices");

        if (! underlying_connected(d))
            return {false, {}};
        for (Vertex a = 0; std::size_t(a) < n; ++a) {
            const Vertex one[] = {a};
            if (! underlying_connected(d, one))
                return {false, {a}};
        }
        if (k == 3)
            for (Vertex a = 0; std::size_t(a) < n; ++a)
                for (Vertex b = a + 1; std::size_t(b) < n; ++b) {
                    const Vertex two[] = {a, b};
                    if (! underlying_connected(d, two))
                        return {false, {a, b}};
                }
        return {true, {}};
    }
}
