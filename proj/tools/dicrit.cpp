#include <dicrit/census.hpp>
#include <dicrit/constructions.hpp>
#include <dicrit/dicolour.hpp>
#include <dicrit/ore.hpp>
#include <dicrit/potential.hpp>
#include <dicrit/report.hpp>
#include <dicrit/structure.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <numeric>

using namespace dicrit;
using nlohmann::json;

namespace
{
    enum Exit
    {
        ok = 0,
        violated = 1,
        input_error = 2,
        budget_exceeded = 3
    };

    struct Globals
    {
        std::uint64_t budget = Budget{}.nodes;
        std::uint64_t seed = 1;
        bool json = false;

        [[nodiscard]] auto limit() const -> Budget { return Budget{budget}; }
    };

    auto parse_list(const std::string & text) -> std::vector<int>
    {
        std::vector<int> out;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto comma = text.find(',', pos);
            auto item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            try {
                std::size_t used = 0;
                out.push_back(std::stoi(item, &used));
                if (used != item.size())
                    throw std::invalid_argument(item);
            }
            catch (const std::exception &) {
                throw InvalidArgument("'" + item + "' is not an integer in list '" + text + "'");
            }
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        return out;
    }

    auto as_vertices(const std::vector<int> & v) -> std::vector<Vertex>
    {
        return {v.begin(), v.end()};
    }

    auto emit(const Globals & g, const json & j, const std::string & text) -> void
    {
        if (g.json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text;
    }

    auto subset_colouring(const std::string & subset, const std::string & colours) -> std::pair<std::vector<Vertex>, Colouring>
    {
        auto s = as_vertices(parse_list(subset));
        auto c = parse_list(colours);
        if (s.size() != c.size())
            throw InvalidArgument("--subset and --colours must have the same length");
        std::vector<std::size_t> order(s.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return s[a] < s[b]; });
        std::vector<Vertex> sorted;
        Colouring phi{3, {}};
        for (auto i : order) {
            sorted.push_back(s[i]);
            phi.colours.push_back(c[i]);
        }
        return {sorted, phi};
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"dicrit: dicolouring, 4-Ore digraphs, potentials and dicritical constructions"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--budget", g.budget, "search node budget");
    app.add_option("--seed", g.seed, "random seed");
    app.add_flag("--json", g.json, "machine-readable output");

    int result = ok;
    std::string file, file2, eps = "1/51", delta = "2/17";

    auto * chi = app.add_subcommand("chi", "dichromatic number");
    chi->add_option("file", file)->required();
    chi->callback([&] {
        auto d = read_digraph_file(file);
        auto x = dichromatic_number(d, g.limit());
        emit(g, {{"dichromatic_number", x}}, std::to_string(x) + "\n");
    });

    int k = 4;
    auto * critical = app.add_subcommand("critical", "k-dicriticality with per-arc witnesses");
    critical->add_option("file", file)->required();
    critical->add_option("--k", k)->required();
    critical->callback([&] {
        auto r = is_k_dicritical(read_digraph_file(file), k, g.limit());
        emit(g, report::criticality(r), (r.verdict ? std::to_string(k) + "-dicritical\n" : "not " + std::to_string(k) + "-dicritical: " + r.reason + "\n"));
        result = r.verdict ? ok : violated;
    });

    auto * ore = app.add_subcommand("ore", "4-Ore digraphs");
    ore->require_subcommand(1);
    ore->fallthrough();
    std::size_t n_target = 4;
    bool preserve_j = false;
    auto * ore_gen = ore->add_subcommand("gen", "random 4-Ore digraph");
    ore_gen->add_option("--n", n_target)->required();
    ore_gen->add_flag("--preserve-j", preserve_j);
    ore_gen->callback([&] {
        auto t = generate_4ore(n_target, g.seed, preserve_j);
        emit(g, {{"digraph", serialize(t.graph())}, {"trace", report::trace(t)}}, serialize(t.graph()));
    });
    auto * ore_check = ore->add_subcommand("check", "4-Ore recognition");
    ore_check->add_option("file", file)->required();
    ore_check->callback([&] {
        auto r = is_4ore(read_digraph_file(file), g.limit());
        std::string verdict = r.status == SearchStatus::found ? "4-Ore" : r.status == SearchStatus::none ? "not 4-Ore" : "unknown";
        json j = {{"verdict", verdict}, {"steps", r.steps}};
        if (r.trace)
            j["trace"] = report::trace(*r.trace);
        emit(g, j, verdict + "\n");
        result = r.status == SearchStatus::found ? ok : r.status == SearchStatus::none ? violated : budget_exceeded;
    });
    std::string digon, z1;
    int split = 0;
    auto * ore_compose_cmd = ore->add_subcommand("compose", "Ore-composition of two digraphs");
    ore_compose_cmd->add_option("file1", file)->required();
    ore_compose_cmd->add_option("file2", file2)->required();
    ore_compose_cmd->add_option("--digon", digon, "x,y")->required();
    ore_compose_cmd->add_option("--split", split)->required();
    ore_compose_cmd->add_option("--z1", z1, "part of N(z) attached to x; the rest goes to y")->required();
    ore_compose_cmd->callback([&] {
        auto d1 = read_digraph_file(file), d2 = read_digraph_file(file2);
        auto xy = parse_list(digon);
        if (xy.size() != 2)
            throw InvalidArgument("--digon takes x,y");
        auto part1 = as_vertices(parse_list(z1));
        if (split < 0 || std::size_t(split) >= d2.vertex_count())
            throw InvalidArgument("--split out of range");
        std::vector<Vertex> part2;
        for (auto w : d2.neighbours(split))
            if (std::find(part1.begin(), part1.end(), w) == part1.end())
                part2.push_back(w);
        auto d = ore_compose(d1, xy[0], xy[1], d2, split, part1, part2);
        emit(g, {{"digraph", serialize(d)}}, serialize(d));
    });

    auto * packing_cmd = app.add_subcommand("packing", "maximum digon/triangle packing T(D)");
    packing_cmd->add_option("file", file)->required();
    packing_cmd->callback([&] {
        auto p = max_packing(read_digraph_file(file), g.limit());
        emit(g, report::packing(p), std::to_string(p.value) + (p.optimal ? "" : " (lower bound, budget exceeded)") + "\n");
        result = p.optimal ? ok : budget_exceeded;
    });

    auto * potential_cmd = app.add_subcommand("potential", "exact potential");
    potential_cmd->add_option("file", file)->required();
    potential_cmd->add_option("--eps", eps);
    potential_cmd->add_option("--delta", delta);
    potential_cmd->callback([&] {
        PotentialParams p(Rational::parse(eps), Rational::parse(delta));
        auto d = read_digraph_file(file);
        auto form = potential_form(d, g.limit());
        auto rho = form.at(p);
        emit(g, {{"potential", rho.str()}, {"n", d.vertex_count()}, {"m", d.arc_count()}, {"T", (-form.c_delta).str()}}, rho.str() + "\n");
    });

    auto * audit = app.add_subcommand("audit", "(eps, delta) inequality audit");
    audit->add_option("--eps", eps)->required();
    audit->add_option("--delta", delta)->required();
    audit->callback([&] {
        PotentialParams p(Rational::parse(eps), Rational::parse(delta));
        auto rows = audit_params(p);
        std::string text;
        bool all = true;
        for (const auto & r : rows) {
            text += (r.satisfied ? "PASS " : "FAIL ") + r.label + "  (lhs " + r.lhs.str() + ")\n";
            all = all && r.satisfied;
        }
        emit(g, report::audit(p, rows), text);
        result = all ? ok : violated;
    });

    auto * bound = app.add_subcommand("bound", "arc-count bounds");
    bound->require_subcommand(1);
    bound->fallthrough();
    auto * bound_oriented = bound->add_subcommand("oriented", "m >= (10/3 + 1/51) n - 1 for oriented graphs");
    bound_oriented->add_option("file", file)->required();
    bound_oriented->callback([&] {
        auto b = check_oriented_bound(read_digraph_file(file));
        emit(g, {{"holds", b.holds}, {"slack", b.slack.str()}}, (b.holds ? "holds, slack " : "violated, slack ") + b.slack.str() + "\n");
        result = b.holds ? ok : violated;
    });
    long long euler = 0;
    auto * bound_surface = bound->add_subcommand("surface", "vertex bound on a surface of Euler characteristic c");
    bound_surface->add_option("--chi", euler)->required();
    bound_surface->callback([&] {
        auto s = surface_vertex_bound(euler);
        emit(g, {{"bound", s.value}, {"vacuous", s.vacuous}}, std::to_string(s.value) + (s.vacuous ? " (vacuous)" : "") + "\n");
    });

    auto * structure_cmd = app.add_subcommand("structure", "chelou arcs, D6 components and valencies");
    structure_cmd->add_option("file", file)->required();
    structure_cmd->callback([&] { std::cout << report::structure(read_digraph_file(file)).dump(2) << "\n"; });

    auto * discharge_cmd = app.add_subcommand("discharge", "discharging ledger");
    discharge_cmd->add_option("file", file)->required();
    discharge_cmd->add_option("--eps", eps);
    discharge_cmd->add_option("--delta", delta);
    discharge_cmd->callback([&] {
        auto l = discharge(read_digraph_file(file), PotentialParams(Rational::parse(eps), Rational::parse(delta)));
        std::cout << report::ledger(l).dump(2) << "\n";
        result = l.initial_total() == l.final_total() ? ok : violated;
    });

    std::string subset, colours;
    bool strict = false;
    auto * identify_cmd = app.add_subcommand("identify", "phi-identification");
    identify_cmd->add_option("file", file)->required();
    identify_cmd->add_option("--subset", subset)->required();
    identify_cmd->add_option("--colours", colours)->required();
    identify_cmd->add_flag("--strict", strict, "require every colour to be used");
    identify_cmd->callback([&] {
        auto [s, phi] = subset_colouring(subset, colours);
        auto p = phi_identify(read_digraph_file(file), s, phi, strict);
        emit(g, report::identification(p), serialize(p.graph));
    });

    auto * extend_cmd = app.add_subcommand("extend", "dicritical extension");
    extend_cmd->add_option("file", file)->required();
    extend_cmd->add_option("--subset", subset)->required();
    extend_cmd->add_option("--colours", colours)->required();
    extend_cmd->callback([&] {
        auto [s, phi] = subset_colouring(subset, colours);
        auto e = dicritical_extension(read_digraph_file(file), s, phi, g.limit());
        std::cout << report::extension(e).dump(2) << "\n";
    });

    auto * construct = app.add_subcommand("construct", "dicritical oriented constructions");
    construct->require_subcommand(1);
    construct->fallthrough();
    int n0 = 1;
    std::string tournament_file;
    std::size_t sample = 0;
    auto * c_g3 = construct->add_subcommand("g3", "3-dicritical oriented graph from an odd cycle");
    c_g3->add_option("--n0", n0);
    c_g3->add_flag("--random-orientation", "orient the cycle using --seed");
    c_g3->callback([&] {
        auto c = build_g3(n0, c_g3->count("--random-orientation") ? g.seed : 0);
        emit(g, {{"digraph", serialize(c.graph)}, {"n", c.graph.vertex_count()}, {"m", c.graph.arc_count()}}, serialize(c.graph));
    });
    auto spec_from = [&](int level) {
        ConstructionSpec spec;
        spec.k = level;
        spec.n0 = n0;
        if (! tournament_file.empty()) {
            auto t = read_digraph_file(tournament_file);
            spec.tournaments[int(t.vertex_count())] = {t.arcs().begin(), t.arcs().end()};
        }
        return spec;
    };
    auto * c_gk = construct->add_subcommand("gk", "k-dicritical oriented graph from a tournament");
    c_gk->add_option("--k", k)->required();
    c_gk->add_option("--n0", n0);
    c_gk->add_option("--tournament", tournament_file, "DG-v1 tournament used at its own level");
    c_gk->callback([&] {
        auto c = build_gk(spec_from(k));
        emit(g, {{"digraph", serialize(c.graph)}, {"n", c.graph.vertex_count()}, {"m", c.graph.arc_count()}}, serialize(c.graph));
    });
    auto * c_cert = construct->add_subcommand("certify", "compositional dicriticality certificate");
    c_cert->add_option("--k", k)->required();
    c_cert->add_option("--n0", n0);
    c_cert->add_option("--tournament", tournament_file);
    c_cert->add_option("--sample", sample, "validate only this many arc witnesses (0 = all)");
    c_cert->callback([&] {
        auto cert = certify_dicritical_composition(spec_from(k), g.limit(), sample, g.seed);
        std::cout << report::certificate(cert).dump(2) << "\n";
        result = cert.verdict ? ok : violated;
    });

    int n_max = 5;
    unsigned threads = 0;
    std::string out_dir;
    auto * census_cmd = app.add_subcommand("census", "exhaustive d_k(n), o_k(n) for n <= 5");
    census_cmd->add_option("--k", k)->required();
    census_cmd->add_option("--n-max", n_max);
    census_cmd->add_option("--threads", threads);
    census_cmd->add_option("--out", out_dir, "write the records as a corpus");
    census_cmd->callback([&] {
        auto r = census(k, n_max, g.limit(), threads);
        if (! out_dir.empty())
            write_corpus(out_dir, r.records);
        std::string text;
        for (const auto & row : r.rows)
            text += "n=" + std::to_string(row.n) + " d_k=" + (row.d_k ? std::to_string(*row.d_k) : "-") +
                " o_k=" + (row.o_k ? std::to_string(*row.o_k) : "-") + " classes=" + std::to_string(row.classes) + "\n";
        emit(g, report::census(r), text);
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::Success & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return input_error;
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "error: " << e.what() << "\n";
        return budget_exceeded;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    catch (const std::logic_error & e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return violated;
    }
    return result;
}
