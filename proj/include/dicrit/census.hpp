#pragma once

#include <dicrit/digraph.hpp>
#include <dicrit/error.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace dicrit
{
    struct CensusRecord
    {
        int n;
        int k;
        Digraph digraph; // canonical representative
        std::size_t arc_count;
        bool oriented;
        bool verified_dicritical;
    };

    struct CensusRow
    {
        int n;
        std::optional<std::size_t> d_k; // minimum arcs of a k-dicritical digraph of order n
        std::optional<std::size_t> o_k; // same among oriented graphs
        std::size_t classes = 0; // k-dicritical digraphs of order n up to isomorphism
        std::size_t oriented_classes = 0;
    };

    struct CensusResult
    {
        int k;
        int n_max;
        std::vector<CensusRow> rows;
        std::vector<CensusRecord> records; // every k-dicritical class found, by n then arc count
    };

    // Minimum over all permutations of the adjacency bit code (bit u*(n-1) + v', v' = v - (v > u)).
    // Only for n <= 5.
    [[nodiscard]] auto canonical_code(const Digraph & d) -> std::uint32_t;
    [[nodiscard]] auto from_code(int n, std::uint32_t code) -> Digraph;

    // Exhaustive over every arc set on 1..n_max vertices (n_max <= 5), sharded across threads
    // (0 = hardware concurrency). Throws InvalidArgument if n_max > 5.
    [[nodiscard]] auto census(int k, int n_max, Budget budget = {}, unsigned threads = 0) -> CensusResult;

    // One <name>.dg file (DG-v1) and one <name>.json sidecar per record.
    auto write_corpus(const std::filesystem::path & dir, const std::vector<CensusRecord> & records) -> void;
    // Re-verifies every record: sidecar fields must match the digraph and the digraph must be
    // k-dicritical. Throws Error naming the first stale record.
    [[nodiscard]] auto load_corpus(const std::filesystem::path & dir, Budget budget = {}) -> std::vector<CensusRecord>;
}
