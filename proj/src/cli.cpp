#include "gyro/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "gyro/campaign.hpp"
#include "gyro/report_json.hpp"
#include "gyro/scene.hpp"
#include "gyro/svg.hpp"

namespace gyro::cli {

namespace {

using nlohmann::json;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
}

// --tolerance beats GYRO_TOLERANCE beats the built-in default.
double resolve_tolerance(const CLI::Option* flag, double flag_value, double fallback) {
    if (flag->count() > 0) return flag_value;
    if (const char* env = std::getenv("GYRO_TOLERANCE")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v >= 0.0)) throw InputError("GYRO_TOLERANCE is not a non-negative real");
        return v;
    }
    return fallback;
}

scene::Model load_scene(const std::string& path, std::ostream& err) {
    const std::string text = read_file(path);
    try {
        return scene::resolve(scene::parse(text));
    } catch (const scene::ParseError& e) {
        for (const auto& d : e.diagnostics()) err << path << ":" << d.format() << "\n";
        throw InputError("scene '" + path + "' has " + std::to_string(e.diagnostics().size()) + " error(s)");
    }
}

std::string sci(double v) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(3) << v;
    return s.str();
}

int cmd_verify(const std::string& path, bool as_json, double recovery_tol, std::ostream& out, std::ostream& err) {
    const scene::Model model = load_scene(path, err);
    scene::ExecutionOptions options;
    options.recovery_tolerance = recovery_tol;
    const auto outcomes = scene::execute(model, options);
    bool all = true;
    json jassert = json::array();
    for (const auto& a : outcomes) {
        all = all && a.passed;
        if (as_json) {
            json figs = json::array();
            for (const auto& f : a.figures) {
                json jf{{"figure", f.figure}, {"passed", f.passed}, {"deviation", f.deviation}};
                if (f.recovery_gap) jf["recovery_gap"] = *f.recovery_gap;
                if (!f.error.empty()) jf["error"] = f.error;
                if (f.report) jf["report"] = to_json(*f.report);
                figs.push_back(std::move(jf));
            }
            jassert.push_back({{"theorem", std::string(scene::to_string(a.assertion.theorem))},
                               {"code", std::string(theorem_code(scene::to_theorem(a.assertion.theorem)))},
                               {"bound", a.assertion.bound},
                               {"passed", a.passed},
                               {"figures", std::move(figs)}});
        } else {
            out << (a.passed ? "PASS " : "FAIL ") << scene::to_string(a.assertion.theorem)
                << " deviation<=" << scene::format_real(a.assertion.bound) << "\n";
            for (const auto& f : a.figures) {
                out << "  " << (f.passed ? "ok   " : "fail ") << f.figure;
                if (f.error.empty()) out << "  deviation=" << sci(f.deviation);
                if (f.recovery_gap) out << "  recovery_gap=" << sci(*f.recovery_gap);
                if (!f.error.empty()) out << "  error: " << f.error;
                out << "\n";
            }
        }
    }
    if (as_json) {
        out << json{{"schema", 1}, {"command", "verify"}, {"scene", path}, {"passed", all}, {"assertions", jassert}}
                   .dump(2)
            << "\n";
    }
    return all ? kPass : kAssertionFailed;
}

int cmd_random(const std::string& theorem, std::size_t n, const GenPolicy& policy, double tol, bool as_json,
               bool timing, const std::string& out_dir, const std::string& echo, std::ostream& out) {
    const auto kind = campaign_from_string(theorem);
    if (!kind) throw InputError("unknown theorem '" + theorem + "' (expected t2, t3, t5 or t4-converse)");
    if (n < 1) throw InputError("-n must be at least 1");
    const CampaignReport report = run_campaign(*kind, n, policy, tol, echo);

    if (report.failures > 0) {
        std::filesystem::create_directories(out_dir);
        for (const auto& c : report.cases) {
            if (c.passed) continue;
            const auto file = std::filesystem::path(out_dir) /
                              ("fail_" + std::string(to_string(*kind)) + "_" + std::to_string(c.index) + ".gyro");
            write_file(file.string(), "# seed " + std::to_string(c.seed) + "\n" + c.repro);
        }
    }
    if (as_json) {
        out << to_json(report, true, timing).dump(2) << "\n";
    } else {
        out << "theorem " << to_string(*kind) << "  cases " << report.cases.size() << "  seed " << policy.seed
            << "\n";
        out << "max deviation " << sci(report.max_deviation) << "  tolerance " << sci(tol) << "\n";
        out << "failures " << report.failures << "\n";
        out << "generator attempts " << report.total_attempts << "\n";
        if (timing && report.elapsed_ms) out << "elapsed " << *report.elapsed_ms << " ms\n";
    }
    return report.failures == 0 && report.max_deviation <= tol ? kPass : kAssertionFailed;
}

int cmd_render(const std::string& path, const std::string& svg_out, std::ostream& out, std::ostream& err) {
    const scene::Model model = load_scene(path, err);
    const std::string svg = render_svg(model);
    if (svg_out.empty() || svg_out == "-") out << svg;
    else write_file(svg_out, svg);
    return kPass;
}

int cmd_limit(const std::string& path, const std::vector<double>& s_values, double threshold, bool as_json,
              std::ostream& out, std::ostream& err) {
    const scene::Model model = load_scene(path, err);
    if (model.quads.empty()) throw InputError("limit needs a quad figure in '" + path + "'");
    if (s_values.empty()) throw InputError("empty s list");
    for (std::size_t i = 1; i < s_values.size(); ++i) {
        if (!(s_values[i] > s_values[i - 1])) throw InputError("s values must be strictly ascending");
    }
    const auto& q = model.quads.front();
    const scene::ResolvedLine* line = model.find_line(q.line);
    const EuclideanQuad config{q.config.A.z(), q.config.B.z(), q.config.C.z(), q.config.D.z(), line->p.z(),
                               line->q.z()};
    std::vector<LimitRow> rows;
    try {
        rows = euclidean_limit_sweep(config, s_values);
    } catch (const GyroError& e) {
        if (e.kind() == ErrorKind::Domain) throw InputError(e.what());
        throw;
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        decreasing = decreasing && rows[i].euclidean_deviation < rows[i - 1].euclidean_deviation;
    }
    const bool final_ok = rows.back().euclidean_deviation <= threshold;
    std::optional<double> slope;
    if (rows.size() >= 2) {
        try {
            slope = loglog_slope(rows);
        } catch (const GyroError&) {
        }
    }
    if (as_json) {
        json jr = json::array();
        for (const auto& r : rows) {
            jr.push_back({{"s", r.s}, {"gyro_deviation", r.gyro_deviation},
                          {"euclidean_deviation", r.euclidean_deviation}});
        }
        json j{{"schema", 1}, {"command", "limit"}, {"scene", path}, {"rows", jr}, {"threshold", threshold},
               {"decreasing", decreasing}, {"final_within_threshold", final_ok}};
        if (slope) j["loglog_slope"] = *slope;
        out << j.dump(2) << "\n";
    } else {
        out << std::setw(14) << "s" << std::setw(18) << "gyro_dev" << std::setw(18) << "euclid_dev" << "\n";
        for (const auto& r : rows) {
            out << std::setw(14) << scene::format_real(r.s) << std::setw(18) << sci(r.gyro_deviation)
                << std::setw(18) << sci(r.euclidean_deviation) << "\n";
        }
        if (slope) out << "log-log slope " << std::fixed << std::setprecision(3) << *slope << "\n";
        out << "monotone " << (decreasing ? "yes" : "no") << "  final<=" << sci(threshold) << " "
            << (final_ok ? "yes" : "no") << "\n";
    }
    return decreasing && final_ok ? kPass : kAssertionFailed;
}

std::string join(const std::vector<std::string>& args) {
    std::string s = "gyro";
    for (const auto& a : args) s += " " + a;
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Möbius gyrovector geometry: Menelaus-type identity verification", "gyro"};
    app.require_subcommand(1);

    bool as_json = false;
    double tol_value = kVerificationTolerance;

    auto* verify = app.add_subcommand("verify", "execute the assertions of a .gyro scene");
    std::string scene_path;
    verify->add_option("scene", scene_path, "scene file")->required();
    verify->add_flag("--json", as_json, "emit a JSON report");
    auto* verify_tol = verify->add_option("--tolerance", tol_value, "converse recovery tolerance");

    auto* random = app.add_subcommand("random", "run a seeded campaign of generated configurations");
    std::string theorem;
    std::size_t count = 100;
    GenPolicy policy;
    std::string out_dir = ".";
    bool timing = false;
    random->add_option("theorem", theorem, "t2 | t3 | t5 | t4-converse")->required();
    random->add_option("-n", count, "number of cases");
    random->add_option("--seed", policy.seed, "base seed");
    random->add_option("--max-radius", policy.max_radius, "vertex radius bound in (0, 1)");
    random->add_option("--vertex-guard", policy.vertex_guard, "minimum gyrodistance from vertices to the transversal");
    random->add_option("--max-retries", policy.max_retries, "rejection-sampling budget per case");
    auto* random_tol = random->add_option("--tolerance", tol_value, "maximum allowed deviation");
    random->add_flag("--json", as_json, "emit the JSON campaign report");
    random->add_option("--out", out_dir, "directory for failing-case .gyro repro files");
    random->add_flag("--timing", timing, "include wall-clock timing");

    auto* render = app.add_subcommand("render", "render a scene as SVG");
    std::string svg_out;
    render->add_option("scene", scene_path, "scene file")->required();
    render->add_option("svg", svg_out, "output file (stdout when omitted)");
    render->add_option("--out", svg_out, "output file");

    auto* limit = app.add_subcommand("limit", "sweep the ball radius s toward the Euclidean limit");
    std::vector<double> s_values{10.0, 100.0, 1000.0, 10000.0};
    double threshold = 1e-7;
    limit->add_option("scene", scene_path, "scene file")->required();
    limit->add_option("--s", s_values, "ascending list of s values")->delimiter(',');
    limit->add_option("--threshold", threshold, "bound on the final Euclidean deviation");
    limit->add_flag("--json", as_json, "emit JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kInputError;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(scene_path, as_json, resolve_tolerance(verify_tol, tol_value, kVerificationTolerance),
                              out, err);
        }
        if (random->parsed()) {
            return cmd_random(theorem, count, policy, resolve_tolerance(random_tol, tol_value, kVerificationTolerance),
                              as_json, timing, out_dir, join(args), out);
        }
        if (render->parsed()) return cmd_render(scene_path, svg_out, out, err);
        if (limit->parsed()) return cmd_limit(scene_path, s_values, threshold, as_json, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const GeneratorExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kGeneratorExhausted;
    } catch (const GyroError& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace gyro::cli
