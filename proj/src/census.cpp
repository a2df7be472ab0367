#include <dicrit/census.hpp>
#include <dicrit/dicolour.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <set>
#include <thread>

namespace dicrit
{
    namespace
    {
        auto bit_index(int n, int u, int v) -> int
        {
            return u * (n - 1) + (v > u ? v - 1 : v);
        }

        // For every permutation p, where bit i of a code lands under p.
        auto permutation_tables(int n) -> std::vector<std::vector<int>>
        {
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<std::vector<int>> tables;
            do {
                std::vector<int> t(std::size_t(n * (n - 1)));
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        if (u != v)
                            t[std::size_t(bit_index(n, u, v))] = bit_index(n, perm[u], perm[v]);
                tables.push_back(std::move(t));
            } while (std::next_permutation(perm.begin(), perm.end()));
            return tables;
        }

        auto canonical(std::uint32_t code, const std::vector<std::vector<int>> & tables) -> std::uint32_t
        {
            std::uint32_t best = UINT32_MAX;
            for (const auto & t : tables) {
                std::uint32_t image = 0;
                for (auto rest = code; rest; rest &= rest - 1)
                    image |= std::uint32_t(1) << t[std::size_t(__builtin_ctz(rest))];
                best = std::min(best, image);
            }
            return best;
        }

        auto degrees_ok(int n, std::uint32_t code, int k) -> bool
        {
            for (int v = 0; v < n; ++v) {
                int out = 0, in = 0;
                for (int u = 0; u < n; ++u)
                    if (u != v) {
                        out += (code >> bit_index(n, v, u)) & 1;
                        in += (code >> bit_index(n, u, v)) & 1;
                    }
                if (out < k - 1 || in < k - 1)
                    return false;
            }
            return true;
        }

        auto code_of(const Digraph & d) -> std::uint32_t
        {
            const int n = int(d.vertex_count());
            std::uint32_t code = 0;
            for (auto [u, v] : d.arcs())
                code |= std::uint32_t(1) << bit_index(n, u, v);
            return code;
        }
    }

    auto canonical_code(const Digraph & d) -> std::uint32_t
    {
        const int n = int(d.vertex_count());
        if (n > 5)
            throw InvalidArgument("canonical codes are limited to 5 vertices");
        return canonical(code_of(d), permutation_tables(n));
    }

    auto from_code(int n, std::uint32_t code) -> Digraph
    {
        std::vector<Arc> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && ((code >> bit_index(n, u, v)) & 1))
                    arcs.push_back({u, v});
        return Digraph(std::size_t(n), std::move(arcs));
    }

    auto census(int k, int n_max, Budget budget, unsigned threads) -> CensusResult
    {
        if (k < 2)
            throw InvalidArgument("census needs k >= 2");
        if (n_max < 1 || n_max > 5)
            throw InvalidArgument("census is limited to 1 <= n_max <= 5");
        if (threads == 0)
            threads = std::max(1U, std::thread::hardware_concurrency());

        CensusResult result{k, n_max, {}, {}};
        for (int n = 1; n <= n_max; ++n) {
            const auto tables = permutation_tables(n);
            const std::uint64_t total = std::uint64_t(1) << (n * (n - 1));

            // Shard the arc sets; each worker collects canonical codes passing the degree filter.
            std::vector<std::set<std::uint32_t>> shards(threads);
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back([&, t] {
                    for (std::uint64_t code = t; code < total; code += threads)
                        if (degrees_ok(n, std::uint32_t(code), k))
                            shards[t].insert(canonical(std::uint32_t(code), tables));
                });
            for (auto & th : pool)
                th.join();
            std::set<std::uint32_t> classes;
            for (auto & s : shards)
                classes.merge(s);

            std::vector<std::uint32_t> todo(classes.begin(), classes.end());
            std::vector<char> dicritical(todo.size(), 0);
            std::atomic<std::size_t> next{0};
            std::atomic<bool> over_budget{false};
            pool.clear();
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back([&] {
                    for (std::size_t i; (i = next++) < todo.size();) {
                        try {
                            dicritical[i] = is_k_dicritical(from_code(n, todo[i]), k, budget).verdict;
                        }
                        catch (const BudgetExceeded &) {
                            over_budget = true;
                        }
                    }
                });
            for (auto & th : pool)
                th.join();
            if (over_budget)
                throw BudgetExceeded("census at n = " + std::to_string(n));

            CensusRow row{n, std::nullopt, std::nullopt, 0, 0};
            std::vector<CensusRecord> found;
            for (std::size_t i = 0; i < todo.size(); ++i) {
                if (! dicritical[i])
                    continue;
                auto d = from_code(n, todo[i]);
                CensusRecord rec{n, k, d, d.arc_count(), d.is_oriented(), true};
                ++row.classes;
                row.d_k = std::min(row.d_k.value_or(SIZE_MAX), rec.arc_count);
                if (rec.oriented) {
                    ++row.oriented_classes;
                    row.o_k = std::min(row.o_k.value_or(SIZE_MAX), rec.arc_count);
                }
                found.push_back(std::move(rec));
            }
            std::stable_sort(found.begin(), found.end(), [](const CensusRecord & a, const CensusRecord & b) { return a.arc_count < b.arc_count; });
            result.rows.push_back(row);
            for (auto & r : found)
                result.records.push_back(std::move(r));
        }
        return result;
    }

    auto write_corpus(const std::filesystem::path & dir, const std::vector<CensusRecord> & records) -> void
    {
        std::filesystem::create_directories(dir);
        std::size_t index = 0;
        for (const auto & r : records) {
            auto name = "k" + std::to_string(r.k) + "_n" + std::to_string(r.n) + "_" + std::to_string(index++);
            std::ofstream dg(dir / (name + ".dg"));
            dg << serialize(r.digraph);
            nlohmann::json side = {
                {"n", r.n},
                {"k", r.k},
                {"arcs", r.arc_count},
                {"oriented", r.oriented},
                {"verified_dicritical", r.verified_dicritical},
            };
            std::ofstream js(dir / (name + ".json"));
            js << side.dump(2) << "\n";
            if (! dg || ! js)
                throw Error("could not write corpus record " + name);
        }
    }

    auto load_corpus(const std::filesystem::path & dir, Budget budget) -> std::vector<CensusRecord>
    {
        std::vector<std::filesystem::path> files;
        for (const auto & e : std::filesystem::directory_iterator(dir))
            if (e.path().extension() == ".dg")
                files.push_back(e.path());
        std::sort(files.begin(), files.end());

        std::vector<CensusRecord> records;
        for (const auto & f : files) {
            auto d = read_digraph_file(f.string());
            auto side_path = f;
            side_path.replace_extension(".json");
            std::ifstream in(side_path);
            if (! in)
                throw Error(f.string() + ": missing sidecar");
            nlohmann::json side;
            try {
                in >> side;
            }
            catch (const nlohmann::json::exception & e) {
                throw Error(side_path.string() + ": " + e.what());
            }
            CensusRecord r{side.at("n").get<int>(), side.at("k").get<int>(), d, side.at("arcs").get<std::size_t>(),
                side.at("oriented").get<bool>(), side.at("verified_dicritical").get<bool>()};
            if (std::size_t(r.n) != d.vertex_count() || r.arc_count != d.arc_count() || r.oriented != d.is_oriented())
                throw Error(f.string() + ": sidecar does not match the digraph");
            auto report = is_k_dicritical(d, r.k, budget);
            if (report.verdict != r.verified_dicritical || ! report.verdict)
                throw Error(f.string() + ": record is not " + std::to_string(r.k) + "-dicritical: " + report.reason);
            records.push_back(std::move(r));
        }
        return records;
    }
}
