#pragma once

// Seeded verification campaigns over generated configurations.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gyro/config_gen.hpp"
#include "gyro/menelaus.hpp"

namespace gyro {

enum class CampaignKind { Triangle, Quadrilateral, Transversal, Converse };

std::string_view to_string(CampaignKind kind) noexcept;  // "t2", "t3", "t5", "t4-converse"
std::optional<CampaignKind> campaign_from_string(std::string_view text) noexcept;

struct CaseResult {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    int attempts = 0;
    double deviation = 0.0;
    std::optional<double> recovery_gap;      ///< converse: max of both recovery routes
    std::optional<double> telescoping_gap;   ///< quadrilateral: |Eq2·Eq3 - product| when T exists
    bool passed = false;
    std::string error;
    std::optional<MenelausReport> report;
    std::string repro;  ///< scene text, failing cases only
};

struct CampaignReport {
    std::string command;
    CampaignKind kind = CampaignKind::Quadrilateral;
    std::size_t n = 0;
    GenPolicy policy;
    double tolerance = kVerificationTolerance;
    std::vector<CaseResult> cases;
    std::size_t failures = 0;
    double max_deviation = 0.0;
    long total_attempts = 0;
    std::map<std::string, long> rejections;
    std::optional<double> elapsed_ms;  ///< excluded from JSON unless requested
};

/// Runs n cases; case i uses seed derive_seed(policy.seed, i). Throws
/// GeneratorExhausted if any case cannot be generated.
CampaignReport run_campaign(CampaignKind kind, std::size_t n, const GenPolicy& policy, double tolerance,
                            std::string command = {});

nlohmann::json to_json(const CampaignReport& report, bool include_cases = true, bool include_timing = false);

}  // namespace gyro
