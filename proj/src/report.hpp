#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "rational.hpp"
#include "system.hpp"

namespace liesym {

// Rendered output of one pipeline run. Both renderings are always produced;
// the caller picks one. status is 0 for success and 1 when the run itself
// succeeded but the verification it performed came out negative (a field
// that is not a symmetry, an algebra that does not close, an incomplete
// reduction table). Hard failures are exceptions, not statuses.
struct Report {
    int status = 0;
    std::string text;
    std::string json;
};

struct DetgenOptions {
    bool show_prolongation = false;
    bool cross_check = false;
};

struct SolveOptions {
    int degree = 4;
    std::optional<std::pair<int, int>> sweep;
};

struct ClosureOptions {
    std::optional<VectorField> check;
    std::array<Rational, 3> point{Rational(1), Rational(1), Rational(1)};
};

Report detgen_report(const PdeSystem& s, const std::string& source, const DetgenOptions& opt);
Report solve_report(const PdeSystem& s, const std::string& source, const SolveOptions& opt);
Report algebra_report(const PdeSystem& s, const std::string& source, int degree);
Report closure_report(const PdeSystem& s, const std::string& source, const ClosureOptions& opt);
Report verify_report(const PdeSystem& s, const std::string& source,
                     const std::string& field_source, const VectorField& v);

// Canonical serialization of a concrete field, parseable as a .vf document.
std::string vf_text(const VectorField& v);

}  // namespace liesym
