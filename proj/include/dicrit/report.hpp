#pragma once

#include <dicrit/census.hpp>
#include <dicrit/constructions.hpp>
#include <dicrit/dicolour.hpp>
#include <dicrit/ore.hpp>
#include <dicrit/potential.hpp>
#include <dicrit/structure.hpp>

#include <json.hpp>

namespace dicrit::report
{
    using nlohmann::json;

    // {"k": k, "colours": [...]}
    [[nodiscard]] auto colouring(const Colouring & c) -> json;
    [[nodiscard]] auto criticality(const CriticalityReport & r) -> json;
    [[nodiscard]] auto trace(const OreTrace & t) -> json;
    [[nodiscard]] auto packing(const Packing & p) -> json;
    [[nodiscard]] auto audit(const PotentialParams & p, const std::vector<AuditRow> & rows) -> json;
    [[nodiscard]] auto ledger(const ChargeLedger & l) -> json;
    [[nodiscard]] auto structure(const Digraph & d) -> json;
    [[nodiscard]] auto identification(const PhiIdentification & p) -> json;
    [[nodiscard]] auto extension(const ExtensionResult & e) -> json;
    [[nodiscard]] auto certificate(const CompositionCertificate & c) -> json;
    [[nodiscard]] auto census(const CensusResult & r) -> json;
}
