#pragma once

// The ".gyro" scene format: one statement per line, whitespace-separated
// tokens, '#' comments.
//
//   ball REAL
//   point NAME REAL REAL
//   line NAME NAME NAME            line name, two defining points
//   triangle NAME NAME NAME NAME   three vertices, transversal line
//   quad NAME NAME NAME NAME NAME  four vertices, transversal line
//   cevian NAME NAME REAL          new point, line name, gyroline parameter t
//   assert THEOREM_ID deviation<= REAL

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gyro/config_gen.hpp"
#include "gyro/gyroline.hpp"
#include "gyro/menelaus.hpp"

namespace gyro::scene {

struct SourceSpan {
    int line = 0;    ///< 1-based
    int column = 0;  ///< 1-based
    int length = 0;
};

struct Diagnostic {
    enum class Kind { Lexical, Syntax, Semantic };
    Kind kind = Kind::Syntax;
    SourceSpan span;
    std::string token;
    std::string message;

    /// "line:column: error: message [token]"
    std::string format() const;
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

enum class TheoremId { MenelausTriangle, MenelausQuad, ConverseQuad, Transversal };

std::string_view to_string(TheoremId id) noexcept;
std::optional<TheoremId> theorem_from_string(std::string_view text) noexcept;
Theorem to_theorem(TheoremId id) noexcept;

struct BallStmt {
    double s = 1.0;
    friend bool operator==(const BallStmt&, const BallStmt&) = default;
};
struct PointStmt {
    std::string name;
    double re = 0.0, im = 0.0;
    friend bool operator==(const PointStmt&, const PointStmt&) = default;
};
struct LineStmt {
    std::string name, p, q;
    friend bool operator==(const LineStmt&, const LineStmt&) = default;
};
struct TriangleStmt {
    std::string a, b, c, line;
    friend bool operator==(const TriangleStmt&, const TriangleStmt&) = default;
};
struct QuadStmt {
    std::string a, b, c, d, line;
    friend bool operator==(const QuadStmt&, const QuadStmt&) = default;
};
struct CevianStmt {
    std::string name, line;
    double t = 0.0;
    friend bool operator==(const CevianStmt&, const CevianStmt&) = default;
};
struct AssertStmt {
    TheoremId theorem = TheoremId::MenelausQuad;
    double bound = 0.0;
    friend bool operator==(const AssertStmt&, const AssertStmt&) = default;
};

using Node = std::variant<BallStmt, PointStmt, LineStmt, TriangleStmt, QuadStmt, CevianStmt, AssertStmt>;

struct Statement {
    Node node;
    SourceSpan span;

    /// AST equality ignores source positions.
    friend bool operator==(const Statement& a, const Statement& b) { return a.node == b.node; }
};

struct Scene {
    std::vector<Statement> statements;

    BallParam ball() const;
    friend bool operator==(const Scene&, const Scene&) = default;
};

/// Parses and semantically checks a scene; throws ParseError with every diagnostic found.
Scene parse(std::string_view text);

/// Canonical text; reals use the shortest round-trip decimal form.
std::string unparse(const Scene& scene);

/// Formats a double in shortest round-trip decimal form.
std::string format_real(double value);

// ---- Resolution and execution ----

struct ResolvedLine {
    std::string name;
    std::string p_name, q_name;
    DiscPoint p, q;
    Gyroline line;
};

struct ResolvedTriangle {
    std::string a, b, c, line;
    TriangleConfig config;
    Gyroline transversal;
};

struct ResolvedQuad {
    std::string a, b, c, d, line;
    QuadConfig config;
    Gyroline transversal;
};

struct ResolvedCevian {
    std::string name, line;
    double t = 0.0;
    DiscPoint point;
};

/// Points, lines and figures with every reference bound.
struct Model {
    BallParam ball;
    std::vector<std::string> point_order;
    std::map<std::string, DiscPoint> points;
    std::vector<ResolvedLine> lines;
    std::vector<ResolvedTriangle> triangles;
    std::vector<ResolvedQuad> quads;
    std::vector<ResolvedCevian> cevians;
    std::vector<AssertStmt> assertions;

    const ResolvedLine* find_line(std::string_view name) const;
};

Model resolve(const Scene& scene);

struct FigureOutcome {
    std::string figure;  ///< e.g. "quad A B C D L"
    std::optional<MenelausReport> report;
    std::optional<double> recovery_gap;  ///< converse only
    std::string error;
    double deviation = 0.0;
    bool passed = false;
};

struct AssertionOutcome {
    AssertStmt assertion;
    std::vector<FigureOutcome> figures;
    bool passed = false;
};

struct ExecutionOptions {
    double vertex_guard = kVertexGuard;
    double recovery_tolerance = kVerificationTolerance;
};

std::vector<AssertionOutcome> execute(const Model& model, const ExecutionOptions& options = {});

// ---- Generated configurations as scenes ----

Scene scene_from(const TriangleCase& c, double bound = kVerificationTolerance);
Scene scene_from(const QuadCase& c, double bound = kVerificationTolerance, bool converse = false);
Scene scene_from(const CevianCase& c, double bound = kVerificationTolerance);

}  // namespace gyro::scene
