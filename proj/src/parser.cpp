#include "parser.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace liesym {

namespace {

enum class Tok {
    word,
    number,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    lbracket,
    rbracket,
    equals,
    end,
};

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto span_at = [&](size_t len) {
        return SourceSpan{line, col, i, len};
    };
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (s[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    auto is_word_char = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_';
    };
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') advance(1);
            continue;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            size_t len = 1;
            while (i + len < s.size() && is_word_char(s[i + len])) ++len;
            out.push_back({Tok::word, s.substr(i, len), span_at(len)});
            advance(len);
            continue;
        }
        if (c >= '0' && c <= '9') {
            size_t len = 1;
            while (i + len < s.size() && s[i + len] >= '0' && s[i + len] <= '9') ++len;
            out.push_back({Tok::number, s.substr(i, len), span_at(len)});
            advance(len);
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '/': k = Tok::slash; break;
            case '^': k = Tok::caret; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            case '[': k = Tok::lbracket; break;
            case ']': k = Tok::rbracket; break;
            case '=': k = Tok::equals; break;
            default:
                throw ParseError(span_at(1), std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, s.substr(i, 1), span_at(1)});
        advance(1);
    }
    out.push_back({Tok::end, "", span_at(0)});
    return out;
}

// Derivative word after the symbol name: groups of x|y|u|u1 separated by
// optional underscores, e.g. "_xu1u1". "u1" is taken greedily; that is
// unambiguous because a lone digit is never valid.
struct Suffix {
    int nx = 0, ny = 0, nu = 0, nu1 = 0;
};

Suffix scan_suffix(const std::string& s, const SourceSpan& span) {
    Suffix d;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == '_') {
            ++i;
            continue;
        }
        if (c == 'u' && i + 1 < s.size() && s[i + 1] == '1') {
            ++d.nu1;
            i += 2;
            continue;
        }
        if (c == 'x')
            ++d.nx;
        else if (c == 'y')
            ++d.ny;
        else if (c == 'u')
            ++d.nu;
        else
            throw ParseError(span, std::string("bad derivative suffix character '") + c + "'");
        ++i;
    }
    return d;
}

std::optional<Fn> fn_of(const std::string& h) {
    if (h == "xi") return Fn::xi;
    if (h == "tau") return Fn::tau;
    if (h == "phi") return Fn::phi;
    return std::nullopt;
}

std::optional<Rhs> rhs_of(const std::string& h) {
    if (h == "F1") return Rhs::F1;
    if (h == "F2") return Rhs::F2;
    if (h == "F3") return Rhs::F3;
    if (h == "G") return Rhs::G;
    return std::nullopt;
}

Atom classify(const std::string& word, const std::string& suffix_text, int series,
              const SourceSpan& span) {
    size_t p = word.find('_');
    std::string head = word.substr(0, p);
    std::string suffix = (p == std::string::npos ? "" : word.substr(p)) + suffix_text;

    if (head == "x" || head == "y" || head == "u") {
        if (!suffix.empty())
            throw ParseError(span, "variable " + head + " takes no derivative suffix");
        return head == "x" ? Atom::x() : head == "y" ? Atom::y() : Atom::u();
    }
    if (head.size() > 1 && head[0] == 'u') {
        int nx = 0, ny = 0;
        for (size_t i = 1; i < head.size(); ++i) {
            if (head[i] == '1' && ny == 0)
                ++nx;
            else if (head[i] == '2')
                ++ny;
            else
                throw ParseError(span, "unknown identifier \"" + word + "\" (jet indices are "
                                       "1s then 2s, e.g. u112)");
        }
        if (!suffix.empty())
            throw ParseError(span, "jet coordinate " + head + " takes no derivative suffix");
        if (nx + ny > kBoundaryJetOrder)
            throw ParseError(span, "jet order exceeds " + std::to_string(kBoundaryJetOrder));
        return Atom::jet(nx, ny);
    }
    if (auto f = fn_of(head)) {
        Suffix d = scan_suffix(suffix, span);
        if (d.nu1 > 0) throw ParseError(span, head + " does not depend on u1");
        if (d.nx + d.ny + d.nu > kMaxFnOrder)
            throw ParseError(span, "derivative order exceeds " + std::to_string(kMaxFnOrder));
        return Atom::fn(*f, d.nx, d.ny, d.nu);
    }
    if (auto f = rhs_of(head)) {
        Suffix d = scan_suffix(suffix, span);
        if (d.nx + d.ny + d.nu + d.nu1 > kMaxFnOrder)
            throw ParseError(span, "derivative order exceeds " + std::to_string(kMaxFnOrder));
        if (series >= 0) {
            if (d.nu1 > 0) throw ParseError(span, "series coefficients do not depend on u1");
            return Atom::rhs_series(*f, series, d.nx, d.ny, d.nu);
        }
        if (d.nu1 > 0 && (*f == Rhs::F1 || *f == Rhs::F2))
            throw ParseError(span, head + " does not depend on u1");
        return Atom::rhs(*f, d.nx, d.ny, d.nu, d.nu1);
    }
    throw ParseError(span, "unknown identifier \"" + word + "\"");
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Expr parse_full() {
        Expr e = parse_sum();
        if (peek().kind != Tok::end)
            throw ParseError(peek().span, "unexpected token \"" + peek().text + "\"");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    Expr parse_sum() {
        Expr e = parse_product();
        for (;;) {
            if (accept(Tok::plus))
                e += parse_product();
            else if (accept(Tok::minus))
                e -= parse_product();
            else
                return e;
        }
    }

    Expr parse_product() {
        Expr e = parse_unary();
        for (;;) {
            if (accept(Tok::star)) {
                e = e * parse_unary();
            } else if (peek().kind == Tok::slash) {
                Token slash = next();
                Expr d = parse_unary();
                if (!d.is_constant())
                    throw ParseError(slash.span, "division by non-literal divisor");
                if (d.is_zero()) throw ParseError(slash.span, "division by zero");
                e = (Rational(1) / d.constant_value()) * e;
            } else {
                return e;
            }
        }
    }

    Expr parse_unary() {
        if (accept(Tok::minus)) return -parse_unary();
        if (accept(Tok::plus)) return parse_unary();
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_atom();
        if (peek().kind != Tok::caret) return base;
        Token caret = next();
        if (peek().kind != Tok::number)
            throw ParseError(caret.span, "exponent must be a positive integer");
        Token n = next();
        mpz_class v(n.text);
        if (v < 1) throw ParseError(n.span, "exponent must be a positive integer");
        if (v > kMaxExponent)
            throw ParseError(n.span, "exponent exceeds " + std::to_string(kMaxExponent));
        return base.pow(static_cast<int>(v.get_si()));
    }

    Expr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: {
                Token n = next();
                return Expr::constant(Rational(mpz_class(n.text)));
            }
            case Tok::lparen: {
                next();
                Expr e = parse_sum();
                if (!accept(Tok::rparen)) throw ParseError(peek().span, "expected ')'");
                return e;
            }
            case Tok::word: {
                Token w = next();
                int series = -1;
                std::string suffix;
                if (peek().kind == Tok::lbracket) {
                    Token lb = next();
                    if (w.text != "F3" && w.text != "G")
                        throw ParseError(lb.span, "series index only applies to F3 and G");
                    if (peek().kind != Tok::number)
                        throw ParseError(peek().span, "series index must be an integer");
                    Token idx = next();
                    mpz_class v(idx.text);
                    if (v > 1000) throw ParseError(idx.span, "series index out of range");
                    series = static_cast<int>(v.get_si());
                    if (!accept(Tok::rbracket)) throw ParseError(peek().span, "expected ']'");
                    if (peek().kind == Tok::word && peek().text[0] == '_') suffix = next().text;
                }
                return Expr::from_atom(classify(w.text, suffix, series, w.span));
            }
            default:
                if (t.kind == Tok::end) throw ParseError(t.span, "unexpected end of input");
                throw ParseError(t.span, "unexpected token \"" + t.text + "\"");
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

// Splits a token stream into `<target> = <expr tokens>` groups. A target
// word is recognized only when immediately followed by '='; '=' cannot
// otherwise occur, so the split is unambiguous.
struct Assignment {
    Token target;
    Expr value;
};

std::vector<Assignment> split_assignments(const std::string& text,
                                          const std::vector<std::string>& targets) {
    std::vector<Token> toks = tokenize(text);
    std::vector<Assignment> out;
    size_t i = 0;
    while (toks[i].kind != Tok::end) {
        const Token& t = toks[i];
        bool is_target =
            t.kind == Tok::word &&
            std::find(targets.begin(), targets.end(), t.text) != targets.end() &&
            toks[i + 1].kind == Tok::equals;
        if (!is_target)
            throw ParseError(t.span, "expected an assignment (one of " +
                                         [&] {
                                             std::string s;
                                             for (const auto& n : targets)
                                                 s += (s.empty() ? "" : ", ") + n;
                                             return s;
                                         }() +
                                         ")");
        size_t j = i + 2;
        std::vector<Token> slice;
        while (toks[j].kind != Tok::end &&
               !(toks[j].kind == Tok::word &&
                 std::find(targets.begin(), targets.end(), toks[j].text) != targets.end() &&
                 toks[j + 1].kind == Tok::equals)) {
            slice.push_back(toks[j]);
            ++j;
        }
        if (slice.empty())
            throw ParseError(t.span, "empty expression for " + t.text);
        slice.push_back({Tok::end, "", toks[j].span});
        out.push_back({t, Parser(std::move(slice)).parse_full()});
        i = j;
    }
    return out;
}

Expr find_assignment(const std::vector<Assignment>& as, const std::string& name,
                     const std::string& what) {
    const Assignment* found = nullptr;
    for (const auto& a : as) {
        if (a.target.text != name) continue;
        if (found) throw ParseError(a.target.span, "duplicate assignment for " + name);
        found = &a;
    }
    if (!found)
        throw ParseError(SourceSpan{1, 1, 0, 0}, "missing assignment for " + name + " in " + what);
    return found->value;
}

// Restricts the atoms a component may mention; jet_u1 admits the jet u1.
void require_point_atoms(const Expr& e, const Token& target, bool jet_u1,
                         const std::string& allowed) {
    for (const auto& [m, c] : e.terms()) {
        for (const auto& [atom, exp] : m) {
            if (atom.is_base()) continue;
            if (jet_u1 && atom.is_jet() && atom.nx() == 1 && atom.ny() == 0) continue;
            throw ParseError(target.span, target.text + " may use " + allowed +
                                              " only; found " + atom.name());
        }
    }
}

const Token& target_token(const std::vector<Assignment>& as, const std::string& name) {
    for (const auto& a : as)
        if (a.target.text == name) return a.target;
    throw KernelError("target not present");
}

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(tokenize(text)).parse_full(); }

PdeSystem parse_system(const std::string& text) {
    auto as = split_assignments(text, {"F1", "F2", "F3", "G"});
    PdeSystem sys;
    sys.f1 = find_assignment(as, "F1", "system file");
    sys.f2 = find_assignment(as, "F2", "system file");
    sys.f3 = find_assignment(as, "F3", "system file");
    sys.g = find_assignment(as, "G", "system file");
    require_point_atoms(sys.f1, target_token(as, "F1"), false, "x, y, u");
    require_point_atoms(sys.f2, target_token(as, "F2"), false, "x, y, u");
    require_point_atoms(sys.f3, target_token(as, "F3"), true, "x, y, u, u1");
    require_point_atoms(sys.g, target_token(as, "G"), true, "x, y, u, u1");
    if (sys.f2.is_zero())
        throw DegenerateError("degenerate system: F2 is identically zero");
    return sys;
}

VectorField parse_vector_field(const std::string& text) {
    auto as = split_assignments(text, {"xi", "tau", "phi"});
    VectorField v;
    v.xi = find_assignment(as, "xi", "vector-field file");
    v.tau = find_assignment(as, "tau", "vector-field file");
    v.phi = find_assignment(as, "phi", "vector-field file");
    for (const char* n : {"xi", "tau", "phi"}) {
        const Expr& e = n[0] == 'x' ? v.xi : n[0] == 't' ? v.tau : v.phi;
        require_point_atoms(e, target_token(as, n), false, "x, y, u");
    }
    return v;
}

}  // namespace liesym
