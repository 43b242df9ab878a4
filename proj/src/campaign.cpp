#include "gyro/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "gyro/report_json.hpp"
#include "gyro/scene.hpp"

namespace gyro {

std::string_view to_string(CampaignKind kind) noexcept {
    switch (kind) {
        case CampaignKind::Triangle: return "t2";
        case CampaignKind::Quadrilateral: return "t3";
        case CampaignKind::Transversal: return "t5";
        case CampaignKind::Converse: return "t4-converse";
    }
    return "unknown";
}

std::optional<CampaignKind> campaign_from_string(std::string_view text) noexcept {
    for (const auto k : {CampaignKind::Triangle, CampaignKind::Quadrilateral, CampaignKind::Transversal,
                         CampaignKind::Converse}) {
        if (text == to_string(k)) return k;
    }
    return std::nullopt;
}

namespace {

void merge(CampaignReport& report, const GenStats& stats) {
    report.total_attempts += stats.attempts;
    for (const auto& [reason, count] : stats.rejections) report.rejections[reason] += count;
}

CaseResult run_case(CampaignReport& report, std::size_t index) {
    GenPolicy policy = report.policy;
    policy.seed = derive_seed(report.policy.seed, index);
    CaseResult result;
    result.index = index;
    result.seed = policy.seed;
    const double tol = report.tolerance;

    auto evaluate = [&](auto&& body) {
        try {
            body();
        } catch (const GeneratorExhausted&) {
            throw;
        } catch (const GyroError& e) {
            result.error = std::string(to_string(e.kind())) + ": " + e.what();
            result.passed = false;
        }
    };

    switch (report.kind) {
        case CampaignKind::Triangle: {
            const TriangleCase c = gen_triangle_transversal(policy);
            merge(report, c.stats);
            result.attempts = c.stats.attempts;
            evaluate([&] {
                result.report = triangle_menelaus(c.config, c.line(), policy.vertex_guard);
                result.deviation = result.report->deviation;
                result.passed = result.deviation <= tol;
            });
            if (!result.passed) result.repro = scene::unparse(scene::scene_from(c, tol));
            break;
        }
        case CampaignKind::Quadrilateral: {
            const QuadCase c = gen_quad_transversal(policy);
            merge(report, c.stats);
            result.attempts = c.stats.attempts;
            evaluate([&] {
                result.report = quad_menelaus(c.config, c.line(), policy.vertex_guard);
                result.deviation = result.report->deviation;
                if (const auto& d = result.report->decomposition) {
                    result.telescoping_gap = std::abs(d->abd_product * d->bcd_product - result.report->product);
                }
                result.passed = result.deviation <= tol;
            });
            if (!result.passed) result.repro = scene::unparse(scene::scene_from(c, tol));
            break;
        }
        case CampaignKind::Transversal: {
            const CevianCase c = gen_cevian_config(policy);
            merge(report, c.stats);
            result.attempts = c.stats.attempts;
            evaluate([&] {
                result.report = transversal_product(c.config, c.D, c.line(), policy.vertex_guard);
                result.deviation = result.report->deviation;
                result.passed = result.deviation <= tol;
            });
            if (!result.passed) result.repro = scene::unparse(scene::scene_from(c, tol));
            break;
        }
        case CampaignKind::Converse: {
            const QuadCase c = gen_quad_transversal(policy);
            merge(report, c.stats);
            result.attempts = c.stats.attempts;
            evaluate([&] {
                const MenelausReport forward = quad_menelaus(c.config, c.line(), policy.vertex_guard);
                const auto& hits = forward.intersections;
                const ConverseResult conv = converse_check(c.config, hits[0].point, hits[2].point, hits[3].point);
                const double geometric = hyp_distance(conv.Y, hits[1].point).v;
                result.report = conv.report;
                result.recovery_gap = std::max(geometric, conv.recovery_gap);
                result.deviation = std::max(conv.report.deviation, *result.recovery_gap);
                result.passed = result.deviation <= tol;
            });
            if (!result.passed) result.repro = scene::unparse(scene::scene_from(c, tol, true));
            break;
        }
    }
    return result;
}

}  // namespace

CampaignReport run_campaign(CampaignKind kind, std::size_t n, const GenPolicy& policy, double tolerance,
                            std::string command) {
    policy.validate();
    if (n < 1) throw GyroError(ErrorKind::Domain, "campaign needs at least one case");
    CampaignReport report;
    report.command = std::move(command);
    report.kind = kind;
    report.n = n;
    report.policy = policy;
    report.tolerance = tolerance;
    const auto start = std::chrono::steady_clock::now();
    report.cases.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        CaseResult r = run_case(report, i);
        if (!r.passed) ++report.failures;
        report.max_deviation = std::max(report.max_deviation, r.deviation);
        report.cases.push_back(std::move(r));
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::json to_json(const CampaignReport& report, bool include_cases, bool include_timing) {
    using nlohmann::json;
    json out{{"schema", 1},
             {"command", report.command},
             {"theorem", std::string(to_string(report.kind))},
             {"n", report.n},
             {"seed", report.policy.seed},
             {"policy",
              {{"max_radius", report.policy.max_radius},
               {"vertex_guard", report.policy.vertex_guard},
               {"max_retries", report.policy.max_retries}}},
             {"tolerance", report.tolerance}};
    long successes = static_cast<long>(report.cases.size());
    out["aggregate"] = {{"count", report.cases.size()},
                        {"max_deviation", report.max_deviation},
                        {"failures", report.failures},
                        {"generator_attempts", report.total_attempts},
                        {"acceptance_rate", report.total_attempts > 0
                                                ? static_cast<double>(successes) / report.total_attempts
                                                : 0.0},
                        {"rejections", report.rejections}};
    if (include_cases) {
        json cases = json::array();
        for (const auto& c : report.cases) {
            json jc{{"index", c.index}, {"seed", c.seed}, {"attempts", c.attempts},
                    {"deviation", c.deviation}, {"passed", c.passed}};
            if (c.recovery_gap) jc["recovery_gap"] = *c.recovery_gap;
            if (c.telescoping_gap) jc["telescoping_gap"] = *c.telescoping_gap;
            if (!c.error.empty()) jc["error"] = c.error;
            if (c.report) jc["report"] = to_json(*c.report);
            cases.push_back(std::move(jc));
        }
        out["cases"] = std::move(cases);
    }
    if (include_timing && report.elapsed_ms) out["timing"] = {{"elapsed_ms", *report.elapsed_ms}};
    return out;
}

}  // namespace gyro
