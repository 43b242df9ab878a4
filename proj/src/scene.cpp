#include "gyro/scene.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace gyro::scene {

namespace {

struct Token {
    std::string text;
    SourceSpan span;
};

bool is_name_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool is_name_char(char c) { return is_name_start(c) || (c >= '0' && c <= '9') || c == '\''; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_name(std::string_view s) {
    if (s.empty() || !is_name_start(s.front())) return false;
    for (const char c : s) {
        if (!is_name_char(c)) return false;
    }
    return true;
}

// Decimal or scientific notation: [+-]? (d+ (. d*)? | . d+) ([eE] [+-]? d+)?
bool is_real_literal(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t int_digits = 0, frac_digits = 0;
    while (i < s.size() && is_digit(s[i])) ++i, ++int_digits;
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && is_digit(s[i])) ++i, ++frac_digits;
    }
    if (int_digits + frac_digits == 0) return false;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t exp_digits = 0;
        while (i < s.size() && is_digit(s[i])) ++i, ++exp_digits;
        if (exp_digits == 0) return false;
    }
    return i == s.size();
}

std::optional<double> parse_real(std::string_view s) {
    if (!is_real_literal(s)) return std::nullopt;
    if (s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
    return value;
}

class Parser {
public:
    explicit Parser(std::vector<Diagnostic>& diags) : diags_(diags) {}

    void error(Diagnostic::Kind kind, const SourceSpan& span, std::string token, std::string message) {
        diags_.push_back(Diagnostic{kind, span, std::move(token), std::move(message)});
    }

    // Splits one line into tokens; returns false on a lexical error.
    bool lex(std::string_view line, int line_no, std::vector<Token>& out) {
        int column = 1;
        std::size_t i = 0;
        while (i < line.size()) {
            const char c = line[i];
            if (c == '#') break;
            if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
                ++i;
                ++column;
                continue;
            }
            const std::size_t start = i;
            const int start_col = column;
            bool bad = false;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') {
                const auto byte = static_cast<unsigned char>(line[i]);
                if (byte >= 0x80 || byte < 0x20) bad = true;
                // Columns count code points, not UTF-8 continuation bytes.
                if ((byte & 0xC0) != 0x80) ++column;
                ++i;
            }
            Token tok{std::string(line.substr(start, i - start)), {line_no, start_col, column - start_col}};
            if (bad) {
                error(Diagnostic::Kind::Lexical, tok.span, tok.text, "invalid character in token");
                return false;
            }
            out.push_back(std::move(tok));
        }
        return true;
    }

    std::optional<Statement> statement(const std::vector<Token>& toks) {
        const Token& head = toks.front();
        const std::string& kw = head.text;
        std::size_t arity = 0;
        if (kw == "ball") arity = 1;
        else if (kw == "point") arity = 3;
        else if (kw == "line") arity = 3;
        else if (kw == "triangle") arity = 4;
        else if (kw == "quad") arity = 5;
        else if (kw == "cevian") arity = 3;
        else if (kw == "assert") return assertion(toks);
        else {
            error(Diagnostic::Kind::Syntax, head.span, kw, "unknown statement keyword");
            return std::nullopt;
        }
        if (!arity_ok(toks, arity)) return std::nullopt;

        bool ok = true;
        auto name = [&](std::size_t i) {
            if (!is_name(toks[i].text)) {
                error(Diagnostic::Kind::Syntax, toks[i].span, toks[i].text, "expected a name");
                ok = false;
            }
            return toks[i].text;
        };
        auto real = [&](std::size_t i) {
            const auto v = parse_real(toks[i].text);
            if (!v) {
                error(Diagnostic::Kind::Syntax, toks[i].span, toks[i].text, "expected a decimal or scientific real");
                ok = false;
                return 0.0;
            }
            return *v;
        };

        Node node;
        if (kw == "ball") node = BallStmt{real(1)};
        else if (kw == "point") node = PointStmt{name(1), real(2), real(3)};
        else if (kw == "line") node = LineStmt{name(1), name(2), name(3)};
        else if (kw == "triangle") node = TriangleStmt{name(1), name(2), name(3), name(4)};
        else if (kw == "quad") node = QuadStmt{name(1), name(2), name(3), name(4), name(5)};
        else node = CevianStmt{name(1), name(2), real(3)};
        if (!ok) return std::nullopt;
        return Statement{std::move(node), head.span};
    }

private:
    bool arity_ok(const std::vector<Token>& toks, std::size_t arity) {
        if (toks.size() == arity + 1) return true;
        if (toks.size() > arity + 1) {
            error(Diagnostic::Kind::Syntax, toks[arity + 1].span, toks[arity + 1].text,
                  "unexpected token after '" + toks.front().text + "' statement");
        } else {
            const Token& last = toks.back();
            error(Diagnostic::Kind::Syntax, {last.span.line, last.span.column + last.span.length, 0}, "",
                  "'" + toks.front().text + "' expects " + std::to_string(arity) + " arguments");
        }
        return false;
    }

    std::optional<Statement> assertion(const std::vector<Token>& toks) {
        constexpr std::string_view kOp = "deviation<=";
        if (toks.size() < 3) {
            const Token& last = toks.back();
            error(Diagnostic::Kind::Syntax, {last.span.line, last.span.column + last.span.length, 0}, "",
                  "'assert' expects THEOREM_ID deviation<= REAL");
            return std::nullopt;
        }
        const auto id = theorem_from_string(toks[1].text);
        if (!id) {
            error(Diagnostic::Kind::Syntax, toks[1].span, toks[1].text, "unknown theorem id");
            return std::nullopt;
        }
        const Token& op = toks[2];
        if (op.text.rfind(kOp, 0) != 0) {
            error(Diagnostic::Kind::Syntax, op.span, op.text, "expected 'deviation<='");
            return std::nullopt;
        }
        Token bound_tok;
        std::size_t consumed = 3;
        if (op.text.size() > kOp.size()) {
            bound_tok = Token{op.text.substr(kOp.size()),
                              {op.span.line, op.span.column + static_cast<int>(kOp.size()),
                               op.span.length - static_cast<int>(kOp.size())}};
        } else if (toks.size() > 3) {
            bound_tok = toks[3];
            consumed = 4;
        } else {
            error(Diagnostic::Kind::Syntax, {op.span.line, op.span.column + op.span.length, 0}, "",
                  "missing deviation bound");
            return std::nullopt;
        }
        if (toks.size() > consumed) {
            error(Diagnostic::Kind::Syntax, toks[consumed].span, toks[consumed].text,
                  "unexpected token after assertion");
            return std::nullopt;
        }
        const auto bound = parse_real(bound_tok.text);
        if (!bound || *bound < 0.0) {
            error(Diagnostic::Kind::Syntax, bound_tok.span, bound_tok.text, "expected a non-negative real bound");
            return std::nullopt;
        }
        return Statement{AssertStmt{*id, *bound}, toks.front().span};
    }

    std::vector<Diagnostic>& diags_;
};

// Builds the model, appending a diagnostic for every semantic problem.
Model build_model(const Scene& scene, std::vector<Diagnostic>& diags) {
    auto semantic = [&](const SourceSpan& span, std::string token, std::string message) {
        diags.push_back(Diagnostic{Diagnostic::Kind::Semantic, span, std::move(token), std::move(message)});
    };

    Model model;
    const BallStmt* ball_stmt = nullptr;
    for (const auto& st : scene.statements) {
        if (const auto* b = std::get_if<BallStmt>(&st.node)) {
            if (ball_stmt) {
                semantic(st.span, "ball", "duplicate ball statement");
                continue;
            }
            ball_stmt = b;
            if (!(b->s > 0.0)) {
                semantic(st.span, format_real(b->s), "ball radius must be positive");
            } else {
                model.ball = BallParam(b->s);
            }
        }
    }

    std::set<std::string> names;
    auto declare = [&](const std::string& name, const SourceSpan& span) {
        if (!names.insert(name).second) {
            semantic(span, name, "duplicate name '" + name + "'");
            return false;
        }
        return true;
    };
    auto point_ref = [&](const std::string& name, const SourceSpan& span) -> const DiscPoint* {
        const auto it = model.points.find(name);
        if (it == model.points.end()) {
            semantic(span, name, "unresolved point '" + name + "'");
            return nullptr;
        }
        return &it->second;
    };
    auto line_ref = [&](const std::string& name, const SourceSpan& span) -> const ResolvedLine* {
        const ResolvedLine* l = model.find_line(name);
        if (!l) semantic(span, name, "unresolved line '" + name + "'");
        return l;
    };
    auto outside = [&](const SourceSpan& span, const std::string& name, Complex z) {
        std::ostringstream msg;
        msg << "point '" << name << "' (" << format_real(z.real()) << ", " << format_real(z.imag())
            << ") is outside ball of radius " << format_real(model.ball.s());
        semantic(span, name, msg.str());
    };

    for (const auto& st : scene.statements) {
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, PointStmt>) {
                    const Complex z{n.re, n.im};
                    if (!declare(n.name, st.span)) return;
                    if (!(std::abs(z) < model.ball.s())) {
                        outside(st.span, n.name, z);
                        return;
                    }
                    model.points.emplace(n.name, DiscPoint(z, model.ball));
                    model.point_order.push_back(n.name);
                } else if constexpr (std::is_same_v<T, LineStmt>) {
                    if (!declare(n.name, st.span)) return;
                    const DiscPoint* p = point_ref(n.p, st.span);
                    const DiscPoint* q = point_ref(n.q, st.span);
                    if (!p || !q) return;
                    if (points_equal(*p, *q)) {
                        semantic(st.span, n.name, "line '" + n.name + "' needs two distinct points");
                        return;
                    }
                    model.lines.push_back(ResolvedLine{n.name, n.p, n.q, *p, *q, gyroline_through(*p, *q)});
                } else if constexpr (std::is_same_v<T, TriangleStmt>) {
                    const DiscPoint* a = point_ref(n.a, st.span);
                    const DiscPoint* b = point_ref(n.b, st.span);
                    const DiscPoint* c = point_ref(n.c, st.span);
                    const ResolvedLine* l = line_ref(n.line, st.span);
                    if (!a || !b || !c || !l) return;
                    model.triangles.push_back(ResolvedTriangle{n.a, n.b, n.c, n.line, {*a, *b, *c}, l->line});
                } else if constexpr (std::is_same_v<T, QuadStmt>) {
                    const DiscPoint* a = point_ref(n.a, st.span);
                    const DiscPoint* b = point_ref(n.b, st.span);
                    const DiscPoint* c = point_ref(n.c, st.span);
                    const DiscPoint* d = point_ref(n.d, st.span);
                    const ResolvedLine* l = line_ref(n.line, st.span);
                    if (!a || !b || !c || !d || !l) return;
                    model.quads.push_back(ResolvedQuad{n.a, n.b, n.c, n.d, n.line, {*a, *b, *c, *d}, l->line});
                } else if constexpr (std::is_same_v<T, CevianStmt>) {
                    if (!declare(n.name, st.span)) return;
                    const ResolvedLine* l = line_ref(n.line, st.span);
                    if (!l) return;
                    try {
                        const DiscPoint p = gyroline_point(l->p, l->q, n.t);
                        model.points.emplace(n.name, p);
                        model.point_order.push_back(n.name);
                        model.cevians.push_back(ResolvedCevian{n.name, n.line, n.t, p});
                    } catch (const GyroError&) {
                        semantic(st.span, n.name, "cevian point '" + n.name + "' falls outside the ball");
                    }
                } else if constexpr (std::is_same_v<T, AssertStmt>) {
                    model.assertions.push_back(n);
                }
            },
            st.node);
    }

    // Every assertion needs at least one figure it applies to.
    for (const auto& st : scene.statements) {
        const auto* a = std::get_if<AssertStmt>(&st.node);
        if (!a) continue;
        bool has_subject = false;
        switch (a->theorem) {
            case TheoremId::MenelausTriangle: has_subject = !model.triangles.empty(); break;
            case TheoremId::MenelausQuad:
            case TheoremId::ConverseQuad: has_subject = !model.quads.empty(); break;
            case TheoremId::Transversal:
                for (const auto& t : model.triangles) {
                    for (const auto& c : model.cevians) {
                        const ResolvedLine* l = model.find_line(c.line);
                        const std::set<std::string> verts{t.a, t.b, t.c};
                        if (l && verts.size() == 3 && verts.count(l->p_name) && verts.count(l->q_name)) {
                            has_subject = true;
                        }
                    }
                }
                break;
        }
        if (!has_subject) {
            semantic(st.span, std::string(to_string(a->theorem)), "assertion has no matching figure");
        }
    }
    return model;
}

std::string describe(const ResolvedTriangle& t) { return "triangle " + t.a + " " + t.b + " " + t.c + " " + t.line; }
std::string describe(const ResolvedQuad& q) {
    return "quad " + q.a + " " + q.b + " " + q.c + " " + q.d + " " + q.line;
}

template <typename Evaluate>
FigureOutcome run_figure(std::string label, double bound, Evaluate evaluate) {
    FigureOutcome out;
    out.figure = std::move(label);
    try {
        evaluate(out);
        out.passed = out.passed && out.deviation <= bound;
    } catch (const GyroError& e) {
        out.error = std::string(to_string(e.kind())) + ": " + e.what();
        out.passed = false;
    }
    return out;
}

}  // namespace

std::string Diagnostic::format() const {
    std::ostringstream out;
    out << span.line << ":" << span.column << ": error: " << message;
    if (!token.empty()) out << " [" << token << "]";
    return out.str();
}

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(diagnostics.empty() ? std::string("scene error") : diagnostics.front().format()),
      diagnostics_(std::move(diagnostics)) {}

std::string_view to_string(TheoremId id) noexcept {
    switch (id) {
        case TheoremId::MenelausTriangle: return "menelaus_triangle";
        case TheoremId::MenelausQuad: return "menelaus_quad";
        case TheoremId::ConverseQuad: return "converse_quad";
        case TheoremId::Transversal: return "transversal";
    }
    return "unknown";
}

std::optional<TheoremId> theorem_from_string(std::string_view text) noexcept {
    for (const auto id : {TheoremId::MenelausTriangle, TheoremId::MenelausQuad, TheoremId::ConverseQuad,
                          TheoremId::Transversal}) {
        if (text == to_string(id)) return id;
    }
    return std::nullopt;
}

Theorem to_theorem(TheoremId id) noexcept {
    switch (id) {
        case TheoremId::MenelausTriangle: return Theorem::Triangle;
        case TheoremId::MenelausQuad: return Theorem::Quadrilateral;
        case TheoremId::ConverseQuad: return Theorem::Converse;
        case TheoremId::Transversal: return Theorem::Transversal;
    }
    return Theorem::Triangle;
}

BallParam Scene::ball() const {
    for (const auto& st : statements) {
        if (const auto* b = std::get_if<BallStmt>(&st.node)) return BallParam(b->s);
    }
    return BallParam{};
}

const ResolvedLine* Model::find_line(std::string_view name) const {
    for (const auto& l : lines) {
        if (l.name == name) return &l;
    }
    return nullptr;
}

Scene parse(std::string_view text) {
    std::vector<Diagnostic> diags;
    Parser parser(diags);
    Scene scene;
    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        ++line_no;
        std::vector<Token> toks;
        if (parser.lex(text.substr(pos, end - pos), line_no, toks) && !toks.empty()) {
            if (auto st = parser.statement(toks)) scene.statements.push_back(std::move(*st));
        }
        if (end == text.size()) break;
        pos = end + 1;
    }

    build_model(scene, diags);
    if (!diags.empty()) throw ParseError(std::move(diags));
    return scene;
}

std::string format_real(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) throw GyroError(ErrorKind::Domain, "cannot format real");
    return std::string(buf, ptr);
}

std::string unparse(const Scene& scene) {
    std::ostringstream out;
    for (const auto& st : scene.statements) {
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, BallStmt>) {
                    out << "ball " << format_real(n.s);
                } else if constexpr (std::is_same_v<T, PointStmt>) {
                    out << "point " << n.name << ' ' << format_real(n.re) << ' ' << format_real(n.im);
                } else if constexpr (std::is_same_v<T, LineStmt>) {
                    out << "line " << n.name << ' ' << n.p << ' ' << n.q;
                } else if constexpr (std::is_same_v<T, TriangleStmt>) {
                    out << "triangle " << n.a << ' ' << n.b << ' ' << n.c << ' ' << n.line;
                } else if constexpr (std::is_same_v<T, QuadStmt>) {
                    out << "quad " << n.a << ' ' << n.b << ' ' << n.c << ' ' << n.d << ' ' << n.line;
                } else if constexpr (std::is_same_v<T, CevianStmt>) {
                    out << "cevian " << n.name << ' ' << n.line << ' ' << format_real(n.t);
                } else {
                    out << "assert " << to_string(n.theorem) << " deviation<=" << format_real(n.bound);
                }
            },
            st.node);
        out << '\n';
    }
    return out.str();
}

Model resolve(const Scene& scene) {
    std::vector<Diagnostic> diags;
    Model model = build_model(scene, diags);
    if (!diags.empty()) throw ParseError(std::move(diags));
    return model;
}

std::vector<AssertionOutcome> execute(const Model& model, const ExecutionOptions& options) {
    std::vector<AssertionOutcome> outcomes;
    for (const auto& a : model.assertions) {
        AssertionOutcome outcome{a, {}, true};
        switch (a.theorem) {
            case TheoremId::MenelausTriangle:
                for (const auto& t : model.triangles) {
                    outcome.figures.push_back(run_figure(describe(t), a.bound, [&](FigureOutcome& f) {
                        f.report = triangle_menelaus(t.config, t.transversal, options.vertex_guard);
                        f.deviation = f.report->deviation;
                        f.passed = true;
                    }));
                }
                break;
            case TheoremId::MenelausQuad:
                for (const auto& q : model.quads) {
                    outcome.figures.push_back(run_figure(describe(q), a.bound, [&](FigureOutcome& f) {
                        f.report = quad_menelaus(q.config, q.transversal, options.vertex_guard);
                        f.deviation = f.report->deviation;
                        f.passed = true;
                    }));
                }
                break;
            case TheoremId::ConverseQuad:
                for (const auto& q : model.quads) {
                    outcome.figures.push_back(run_figure(describe(q), a.bound, [&](FigureOutcome& f) {
                        const MenelausReport forward = quad_menelaus(q.config, q.transversal, options.vertex_guard);
                        const auto& hits = forward.intersections;
                        const ConverseResult c = converse_check(q.config, hits[0].point, hits[2].point, hits[3].point);
                        const double geometric_gap = hyp_distance(c.Y, hits[1].point).v / model.ball.s();
                        f.report = c.report;
                        f.recovery_gap = std::max(c.recovery_gap, geometric_gap);
                        f.deviation = c.report.deviation;
                        f.passed = *f.recovery_gap <= options.recovery_tolerance;
                    }));
                }
                break;
            case TheoremId::Transversal:
                for (const auto& t : model.triangles) {
                    for (const auto& c : model.cevians) {
                        const ResolvedLine* side = model.find_line(c.line);
                        const std::map<std::string, DiscPoint> verts{
                            {t.a, t.config.A}, {t.b, t.config.B}, {t.c, t.config.C}};
                        if (!side || verts.size() != 3 || !verts.count(side->p_name) ||
                            !verts.count(side->q_name)) {
                            continue;
                        }
                        std::string apex;
                        for (const auto& [name, _] : verts) {
                            if (name != side->p_name && name != side->q_name) apex = name;
                        }
                        const TriangleConfig cfg{verts.at(apex), side->p, side->q};
                        outcome.figures.push_back(
                            run_figure(describe(t) + " cevian " + c.name, a.bound, [&](FigureOutcome& f) {
                                f.report = transversal_product(cfg, c.point, t.transversal, options.vertex_guard);
                                f.deviation = f.report->deviation;
                                f.passed = true;
                            }));
                    }
                }
                break;
        }
        for (const auto& f : outcome.figures) outcome.passed = outcome.passed && f.passed;
        outcome.passed = outcome.passed && !outcome.figures.empty();
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

namespace {

Statement stmt(Node node) { return Statement{std::move(node), {}}; }

void add_point(Scene& s, const std::string& name, const DiscPoint& p) {
    s.statements.push_back(stmt(PointStmt{name, p.re(), p.im()}));
}

}  // namespace

Scene scene_from(const TriangleCase& c, double bound) {
    Scene s;
    s.statements.push_back(stmt(BallStmt{1.0}));
    add_point(s, "A", c.config.A);
    add_point(s, "B", c.config.B);
    add_point(s, "C", c.config.C);
    add_point(s, "P", c.P);
    add_point(s, "Q", c.Q);
    s.statements.push_back(stmt(LineStmt{"L", "P", "Q"}));
    s.statements.push_back(stmt(TriangleStmt{"A", "B", "C", "L"}));
    s.statements.push_back(stmt(AssertStmt{TheoremId::MenelausTriangle, bound}));
    return s;
}

Scene scene_from(const QuadCase& c, double bound, bool converse) {
    Scene s;
    s.statements.push_back(stmt(BallStmt{1.0}));
    add_point(s, "A", c.config.A);
    add_point(s, "B", c.config.B);
    add_point(s, "C", c.config.C);
    add_point(s, "D", c.config.D);
    add_point(s, "P", c.P);
    add_point(s, "Q", c.Q);
    s.statements.push_back(stmt(LineStmt{"L", "P", "Q"}));
    s.statements.push_back(stmt(QuadStmt{"A", "B", "C", "D", "L"}));
    s.statements.push_back(
        stmt(AssertStmt{converse ? TheoremId::ConverseQuad : TheoremId::MenelausQuad, bound}));
    return s;
}

Scene scene_from(const CevianCase& c, double bound) {
    Scene s;
    s.statements.push_back(stmt(BallStmt{1.0}));
    add_point(s, "A", c.config.A);
    add_point(s, "B", c.config.B);
    add_point(s, "C", c.config.C);
    add_point(s, "P", c.P);
    add_point(s, "Q", c.Q);
    s.statements.push_back(stmt(LineStmt{"S", "B", "C"}));
    s.statements.push_back(stmt(CevianStmt{"D", "S", c.t}));
    s.statements.push_back(stmt(LineStmt{"L", "P", "Q"}));
    s.statements.push_back(stmt(TriangleStmt{"A", "B", "C", "L"}));
    s.statements.push_back(stmt(AssertStmt{TheoremId::Transversal, bound}));
    return s;
}

}  // namespace gyro::scene
