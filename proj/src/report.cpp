#include "report.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>

#include "closure.hpp"
#include "detgen.hpp"
#include "errors.hpp"
#include "liealg.hpp"
#include "prolong.hpp"
#include "solver.hpp"

namespace liesym {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string origin_tag(const EquationOrigin& o) {
    return "[cond" + std::to_string(o.cond) + " : u11^" + std::to_string(o.u11_power) + " u1^" +
           std::to_string(o.u1_power) + "]";
}

std::string system_line(const PdeSystem& s) {
    return "rhs: F1 = " + to_string(s.f1) + "; F2 = " + to_string(s.f2) +
           "; F3 = " + to_string(s.f3) + "; G = " + to_string(s.g);
}

ordered_json system_json(const PdeSystem& s, const std::string& source) {
    ordered_json j;
    j["source"] = source;
    j["f1"] = to_string(s.f1);
    j["f2"] = to_string(s.f2);
    j["f3"] = to_string(s.f3);
    j["g"] = to_string(s.g);
    return j;
}

ordered_json document(const std::string& command, const PdeSystem& s, const std::string& source) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    j["system"] = system_json(s, source);
    j["result"] = ordered_json::object();
    j["diagnostics"] = ordered_json::array();
    return j;
}

ordered_json origin_json(const EquationOrigin& o) {
    ordered_json j;
    j["cond"] = o.cond;
    j["u11"] = o.u11_power;
    j["u1"] = o.u1_power;
    return j;
}

// A coefficient rendered so that "*name" can be appended unambiguously.
std::string coefficient_prefix(const RationalFn& c) {
    if (c.den() == Expr::constant(1)) {
        std::string n = to_string(c.num());
        if (c.num().term_count() <= 1) return n;
        return "(" + n + ")";
    }
    return c.str();
}

std::string form_string(const LinearForm& form) {
    auto initial = initial_coefficients();
    std::string out;
    for (int k = 0; k < 10; ++k) {
        const RationalFn& c = form.coeff[k];
        if (c.is_zero()) continue;
        std::string term;
        if (c.equals(RationalFn::constant(Rational(1))))
            term = initial[k].name();
        else if (c.equals(RationalFn::constant(Rational(-1))))
            term = "-" + initial[k].name();
        else
            term = coefficient_prefix(c) + "*" + initial[k].name();
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string vf_text(const VectorField& v) {
    return "xi = " + to_string(v.xi) + "\ntau = " + to_string(v.tau) +
           "\nphi = " + to_string(v.phi) + "\n";
}

Report detgen_report(const PdeSystem& s, const std::string& source, const DetgenOptions& opt) {
    DeterminingSystem ds = determining_equations(s);

    std::ostringstream text;
    ordered_json doc = document("detgen", s, source);
    text << "system: " << source << "\n" << system_line(s) << "\n";

    if (opt.show_prolongation) {
        VectorField v = symbolic_vector_field();
        const std::array<std::pair<int, int>, 3> engaged{{{1, 0}, {0, 1}, {3, 0}}};
        ordered_json pj = ordered_json::object();
        for (auto [jx, jy] : engaged) {
            std::string label =
                "phi^(" + std::to_string(jx) + "," + std::to_string(jy) + ")";
            std::string value = to_string(prolong_coefficient(v, jx, jy));
            text << "prolongation " << label << " = " << value << "\n";
            pj[label] = value;
        }
        ordered_json bj = ordered_json::array();
        for (const auto& [jet, value] : on_shell_bindings(s)) {
            text << "on-shell " << jet.name() << " = " << to_string(value) << "\n";
            ordered_json b;
            b["jet"] = jet.name();
            b["value"] = to_string(value);
            bj.push_back(b);
        }
        doc["result"]["prolongation"] = pj;
        doc["result"]["bindings"] = bj;
    }

    text << "equations: " << ds.equations.size() << "\n";
    ordered_json ej = ordered_json::array();
    for (const DeterminingEquation& eq : ds.equations) {
        text << origin_tag(eq.origins.front()) << " " << to_string(eq.lhs) << " = 0\n";
        ordered_json e;
        e["origin"] = origin_json(eq.origins.front());
        e["lhs"] = to_string(eq.lhs);
        ej.push_back(e);
    }
    doc["result"]["count"] = ds.equations.size();
    doc["result"]["equations"] = ej;

    if (opt.cross_check) {
        CrossCheckReport cc = cross_check();
        size_t bad = 0;
        for (const CrossCheckItem& item : cc.items)
            if (!item.ok) ++bad;
        text << "cross-check: " << cc.items.size() << " comparisons, "
             << (bad == 0 ? "all consistent" : std::to_string(bad) + " inconsistent") << "\n";
        ordered_json cj = ordered_json::array();
        for (const CrossCheckItem& item : cc.items) {
            text << "  [" << (item.ok ? "ok" : "MISMATCH") << "] " << item.label << ": "
                 << item.detail << "\n";
            ordered_json c;
            c["label"] = item.label;
            c["ok"] = item.ok;
            c["detail"] = item.detail;
            cj.push_back(c);
        }
        doc["result"]["cross_check"] = cj;
        doc["result"]["cross_check_ok"] = cc.all_ok();
    }

    return {0, text.str(), doc.dump(2) + "\n"};
}

Report solve_report(const PdeSystem& s, const std::string& source, const SolveOptions& opt) {
    std::ostringstream text;
    ordered_json doc = document("solve", s, source);
    text << "system: " << source << "\n" << system_line(s) << "\n";

    if (opt.sweep) {
        auto [dmin, dmax] = *opt.sweep;
        ordered_json sj = ordered_json::array();
        for (int d = dmin; d <= dmax; ++d) {
            SolveResult res = symmetry_basis(s, d);
            text << "degree " << d << ": dimension " << res.kernel.size() << "\n";
            ordered_json r;
            r["degree"] = d;
            r["dimension"] = res.kernel.size();
            sj.push_back(r);
        }
        doc["result"]["sweep"] = sj;
        return {0, text.str(), doc.dump(2) + "\n"};
    }

    SolveResult res = symmetry_basis(s, opt.degree);
    text << "dimension: " << res.fields.size() << "\n";
    ordered_json fj = ordered_json::array();
    for (size_t k = 0; k < res.fields.size(); ++k) {
        const VectorField& f = res.fields[k];
        text << "# field " << k + 1 << "\n" << vf_text(f);
        ordered_json v;
        v["xi"] = to_string(f.xi);
        v["tau"] = to_string(f.tau);
        v["phi"] = to_string(f.phi);
        fj.push_back(v);
    }
    doc["result"]["degree"] = opt.degree;
    doc["result"]["dimension"] = res.fields.size();
    doc["result"]["fields"] = fj;
    return {0, text.str(), doc.dump(2) + "\n"};
}

Report algebra_report(const PdeSystem& s, const std::string& source, int degree) {
    std::ostringstream text;
    ordered_json doc = document("algebra", s, source);
    text << "system: " << source << "\n" << system_line(s) << "\n";

    SolveResult res = symmetry_basis(s, degree);
    size_t n = res.fields.size();
    text << "dimension: " << n << "\n";
    doc["result"]["degree"] = degree;
    doc["result"]["dimension"] = n;

    StructureConstants sc;
    try {
        sc = structure_constants(res.fields);
    } catch (const NotClosedError& e) {
        text << "closure: FAILED\n" << e.what() << "\n";
        doc["result"]["closed"] = false;
        doc["diagnostics"].push_back(e.what());
        return {1, text.str(), doc.dump(2) + "\n"};
    }

    text << "structure constants (i j k: c, 1-based, i < j, nonzero):\n";
    ordered_json tj = ordered_json::array();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            for (size_t k = 0; k < n; ++k) {
                if (sc.c[i][j][k] == 0) continue;
                text << i + 1 << " " << j + 1 << " " << k + 1 << ": "
                     << rat_to_string(sc.c[i][j][k]) << "\n";
                ordered_json t;
                t["i"] = i + 1;
                t["j"] = j + 1;
                t["k"] = k + 1;
                t["c"] = rat_to_string(sc.c[i][j][k]);
                tj.push_back(t);
            }
        }
    }
    bool antisym = true;
    for (size_t i = 0; i < n && antisym; ++i)
        for (size_t j = 0; j < n && antisym; ++j)
            for (size_t k = 0; k < n; ++k)
                if (sc.c[i][j][k] != -sc.c[j][i][k]) {
                    antisym = false;
                    break;
                }
    bool jacobi = jacobi_check(sc);
    text << "closure: verified\n";
    text << "antisymmetry: " << (antisym ? "verified" : "FAILED") << "\n";
    text << "jacobi: " << (jacobi ? "verified" : "FAILED") << "\n";
    doc["result"]["closed"] = true;
    doc["result"]["triples"] = tj;
    doc["result"]["antisymmetry"] = antisym;
    doc["result"]["jacobi"] = jacobi;
    int status = (antisym && jacobi) ? 0 : 1;
    return {status, text.str(), doc.dump(2) + "\n"};
}

Report closure_report(const PdeSystem& s, const std::string& source, const ClosureOptions& opt) {
    std::ostringstream text;
    ordered_json doc = document("closure", s, source);
    text << "system: " << source << "\n" << system_line(s) << "\n";

    std::optional<ReductionTable> completed;
    try {
        completed = complete_table(s);
    } catch (const IncompleteError& e) {
        text << "reduction: INCOMPLETE\n" << e.what() << "\n";
        doc["result"]["complete"] = false;
        ordered_json uj = ordered_json::array();
        for (const std::string& name : e.symbols) uj.push_back(name);
        doc["result"]["unreduced"] = uj;
        doc["diagnostics"].push_back(e.what());
        return {1, text.str(), doc.dump(2) + "\n"};
    }
    const ReductionTable& t = *completed;

    size_t reduced = t.entries.size() - t.initial.size();
    text << "entries: " << t.entries.size() << " (" << t.initial.size() << " initial, " << reduced
         << " reduced)\n";
    text << "initial coefficients reduce to themselves; the remaining entries:\n";
    ordered_json ej = ordered_json::array();
    for (const TableEntry& e : t.entries) {
        ordered_json row;
        row["symbol"] = e.symbol.name();
        row["form"] = form_string(e.form);
        row["pivot"] = to_string(e.pivot);
        ej.push_back(row);
        if (is_initial_coefficient(e.symbol)) continue;
        text << e.symbol.name() << " = " << form_string(e.form) << "\n";
    }
    doc["result"]["complete"] = true;
    doc["result"]["entries"] = ej;

    ordered_json oj = ordered_json::array();
    if (t.obligations.empty()) {
        text << "obligations: none\n";
    } else {
        for (const auto& [sym, q] : t.obligations) {
            text << "obligation " << sym.name() << ": " << to_string(q) << " must not vanish\n";
            ordered_json o;
            o["symbol"] = sym.name();
            o["polynomial"] = to_string(q);
            oj.push_back(o);
        }
    }
    doc["result"]["obligations"] = oj;

    ordered_json kj = ordered_json::array();
    if (t.constraints.empty()) {
        text << "constraints: none\n";
    } else {
        for (const Expr& c : t.constraints) {
            text << "constraint: " << to_string(c) << " = 0\n";
            kj.push_back(to_string(c));
        }
    }
    doc["result"]["constraints"] = kj;

    int status = 0;
    if (opt.check) {
        ReconstructReport rep = reconstruct_check(s, *opt.check, opt.point);
        text << "reconstruction at (" << rat_to_string(opt.point[0]) << ", "
             << rat_to_string(opt.point[1]) << ", " << rat_to_string(opt.point[2]) << "):\n";
        auto initial = initial_coefficients();
        ordered_json ij = ordered_json::object();
        text << "initial:";
        for (int k = 0; k < 10; ++k) {
            text << " " << initial[k].name() << " = " << rat_to_string(rep.initial_values[k]);
            if (k < 9) text << ",";
            ij[initial[k].name()] = rat_to_string(rep.initial_values[k]);
        }
        text << "\n";
        size_t bad = 0;
        ordered_json rj = ordered_json::array();
        for (const ReconstructItem& item : rep.items) {
            text << item.symbol.name() << ": direct " << rat_to_string(item.direct)
                 << ", predicted " << rat_to_string(item.predicted) << ", "
                 << (item.ok ? "ok" : "MISMATCH") << "\n";
            if (!item.ok) ++bad;
            ordered_json r;
            r["symbol"] = item.symbol.name();
            r["direct"] = rat_to_string(item.direct);
            r["predicted"] = rat_to_string(item.predicted);
            r["ok"] = item.ok;
            rj.push_back(r);
        }
        if (bad == 0)
            text << "reconstruction: all " << rep.items.size() << " symbols agree\n";
        else
            text << "reconstruction: " << bad << " of " << rep.items.size()
                 << " symbols disagree\n";
        ordered_json cj;
        cj["point"] = ordered_json::array({rat_to_string(opt.point[0]),
                                           rat_to_string(opt.point[1]),
                                           rat_to_string(opt.point[2])});
        cj["initial"] = ij;
        cj["items"] = rj;
        cj["all_ok"] = rep.all_ok();
        doc["result"]["check"] = cj;
        if (!rep.all_ok()) status = 1;
    }

    return {status, text.str(), doc.dump(2) + "\n"};
}

Report verify_report(const PdeSystem& s, const std::string& source,
                     const std::string& field_source, const VectorField& v) {
    std::ostringstream text;
    ordered_json doc = document("verify", s, source);
    text << "system: " << source << "\n" << system_line(s) << "\n";
    text << "field: " << field_source << "\n";
    doc["result"]["field"] = field_source;

    DeterminingSystem ds = determining_equations(s);
    SymmetryVerdict verdict = is_symmetry(ds, v);
    text << "symmetry: " << (verdict.ok ? "true" : "false") << "\n";
    doc["result"]["symmetry"] = verdict.ok;
    ordered_json vj = ordered_json::array();
    if (!verdict.ok) {
        text << "violated equations:\n";
        for (size_t idx : verdict.violated) {
            const DeterminingEquation& eq = ds.equations[idx];
            text << "  " << origin_tag(eq.origins.front()) << " " << to_string(eq.lhs)
                 << " = 0\n";
            ordered_json e;
            e["origin"] = origin_json(eq.origins.front());
            e["lhs"] = to_string(eq.lhs);
            vj.push_back(e);
        }
    }
    doc["result"]["violated"] = vj;
    return {verdict.ok ? 0 : 1, text.str(), doc.dump(2) + "\n"};
}

}  // namespace liesym
