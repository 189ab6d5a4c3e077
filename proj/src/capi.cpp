#include "liesym/liesym.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "errors.hpp"
#include "parser.hpp"
#include "report.hpp"
#include "system.hpp"

struct liesym_system {
    liesym::PdeSystem sys;
};

struct liesym_vfield {
    liesym::VectorField field;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

liesym_status fail(liesym_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Runs the body and maps the exception taxonomy onto status codes.
template <typename F>
liesym_status guarded(F&& body) {
    g_last_error.clear();
    try {
        return body();
    } catch (const liesym::ParseError& e) {
        return fail(LIESYM_EPARSE, e.what());
    } catch (const liesym::DegenerateError& e) {
        return fail(LIESYM_EDEGENERATE, e.what());
    } catch (const liesym::PivotVanishesError& e) {
        return fail(LIESYM_EDEGENERATE, e.what());
    } catch (const liesym::NotClosedError& e) {
        return fail(LIESYM_EVERIFY, e.what());
    } catch (const liesym::IncompleteError& e) {
        return fail(LIESYM_EVERIFY, e.what());
    } catch (const std::exception& e) {
        return fail(LIESYM_EINTERNAL, e.what());
    }
}

liesym_status emit(const liesym::Report& r, int as_json, char** out) {
    *out = dup_string(as_json != 0 ? r.json : r.text);
    if (*out == nullptr) return fail(LIESYM_EINTERNAL, "out of memory");
    return r.status == 0 ? LIESYM_OK : LIESYM_EVERIFY;
}

std::string label(const char* source) { return source != nullptr ? source : "-"; }

// Point coordinates arrive as expression text but must be rational numbers.
liesym::Rational point_coordinate(const char* text, const char* axis) {
    if (text == nullptr) throw liesym::KernelError(std::string("null ") + axis + " coordinate");
    liesym::Expr e = liesym::parse_expr(text);
    if (!e.is_constant())
        throw liesym::KernelError(std::string("point coordinate ") + axis +
                                  " must be a rational constant, got: " + text);
    return e.constant_value();
}

}  // namespace

extern "C" {

const char* liesym_last_error(void) { return g_last_error.c_str(); }

const char* liesym_version(void) { return "1.0.0"; }

liesym_status liesym_system_parse(const char* text, liesym_system** out) {
    if (out == nullptr) return fail(LIESYM_EINVALID, "null output parameter");
    *out = nullptr;
    if (text == nullptr) return fail(LIESYM_EINVALID, "null system text");
    return guarded([&] {
        *out = new liesym_system{liesym::parse_system(text)};
        return LIESYM_OK;
    });
}

void liesym_system_free(liesym_system* s) { delete s; }

liesym_status liesym_vfield_parse(const char* text, liesym_vfield** out) {
    if (out == nullptr) return fail(LIESYM_EINVALID, "null output parameter");
    *out = nullptr;
    if (text == nullptr) return fail(LIESYM_EINVALID, "null field text");
    return guarded([&] {
        *out = new liesym_vfield{liesym::parse_vector_field(text)};
        return LIESYM_OK;
    });
}

void liesym_vfield_free(liesym_vfield* v) { delete v; }

void liesym_string_free(char* s) { std::free(s); }

liesym_status liesym_report_detgen(const liesym_system* s, const char* source,
                                   int show_prolongation, int cross_check, int as_json,
                                   char** out) {
    if (out == nullptr) return fail(LIESYM_EINVALID, "null output parameter");
    *out = nullptr;
    if (s == nullptr) return fail(LIESYM_EINVALID, "null system handle");
    return guarded([&] {
        liesym::DetgenOptions opt;
        opt.show_prolongation = show_prolongation != 0;
        opt.cross_check = cross_check != 0;
        return emit(liesym::detgen_report(s->sys, label(source), opt), as_json, out);
    });
}

liesym_status liesym_report_solve(const liesym_system* s, const char* source, int degree,
                                  int sweep_min, int sweep_max, int as_json, char** out) {
    if (out == nullptr) return fail(LIESYM_EINVALID, "null output parameter");
    *out = nullptr;
    if (s == nullptr) return fail(LIESYM_EINVALID, "null system handle");
    bool sweeping = sweep_min != 0 || sweep_max != 0;
    if (sweeping && (sweep_min < 1 || sweep_max < sweep_min))
        return fail(LIESYM_EINVALID, "sweep range needs 1 <= min <= max");
    if (!sweeping && degree < 1) return fail(LIESYM_EINVALID, "degree must be at least 1");
    return guarded([&] {
        liesym::SolveOptions opt;
        opt.degree = degree;
        if (sweeping) opt.sweep = {{sweep_min, sweep_max}};
        return emit(liesym::solve_report(s->sys, label(source), opt), as_json, out);
    });
}

liesym_status liesym_report_algebra(const liesym_system* s, const char* source, int degree,
                                    int as_json, char** out) {
    if (out == nullptr) return fail(LIESYM_EINVALID, "null output parameter");
    *out = nullptr;
    if (s == nullptr) return fail(LIESYM_EINVALID, "null system handle");
    if (degree < 1) return fail(LIESYM_EINVALID, "degree must be at least 1");
    return guarded(
        [&] { return emit(liesym::algebra_report(s->sys, label(source), degree), as_json, out); });
}

liesym_status liesym_report_closure(const liesym_system* s, const char* source,
                                    const liesym_vfield* check, const char* x, const char* y,
                                    const char* u, int as_json, char** out) {
    if (out == nullptr) return fail(LIESYM_EINVALID, "null output parameter");
    *out = nullptr;
    if (s == nullptr) return fail(LIESYM_EINVALID, "null system handle");
    return guarded([&] {
        liesym::ClosureOptions opt;
        if (check != nullptr) {
            opt.check = check->field;
            try {
                opt.point = {point_coordinate(x, "x"), point_coordinate(y, "y"),
                             point_coordinate(u, "u")};
            } catch (const liesym::KernelError& e) {
                return fail(LIESYM_EINVALID, e.what());
            }
        }
        return emit(liesym::closure_report(s->sys, label(source), opt), as_json, out);
    });
}

liesym_status liesym_report_verify(const liesym_system* s, const char* source,
                                   const liesym_vfield* v, const char* field_source,
                                   int as_json, char** out) {
    if (out == nullptr) return fail(LIESYM_EINVALID, "null output parameter");
    *out = nullptr;
    if (s == nullptr) return fail(LIESYM_EINVALID, "null system handle");
    if (v == nullptr) return fail(LIESYM_EINVALID, "null field handle");
    return guarded([&] {
        return emit(
            liesym::verify_report(s->sys, label(source), label(field_source), v->field),
            as_json, out);
    });
}

}  // extern "C"
