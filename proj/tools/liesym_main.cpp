#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <liesym/liesym.h>

namespace {

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

// Shared cleanup for the one string every subcommand produces.
int finish(liesym_status st, char* report) {
    if (report != nullptr) {
        std::fputs(report, stdout);
        liesym_string_free(report);
    }
    if (st != LIESYM_OK && st != LIESYM_EVERIFY)
        std::cerr << "error: " << liesym_last_error() << "\n";
    return static_cast<int>(st);
}

struct SystemHandle {
    liesym_system* ptr = nullptr;
    ~SystemHandle() { liesym_system_free(ptr); }
};

struct FieldHandle {
    liesym_vfield* ptr = nullptr;
    ~FieldHandle() { liesym_vfield_free(ptr); }
};

int load_system(const std::string& path, SystemHandle& sys) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return LIESYM_EPARSE;
    }
    liesym_status st = liesym_system_parse(text.c_str(), &sys.ptr);
    if (st != LIESYM_OK) {
        std::cerr << "error: " << path << ": " << liesym_last_error() << "\n";
        return static_cast<int>(st);
    }
    return LIESYM_OK;
}

int load_field(const std::string& path, FieldHandle& field) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return LIESYM_EPARSE;
    }
    liesym_status st = liesym_vfield_parse(text.c_str(), &field.ptr);
    if (st != LIESYM_OK) {
        std::cerr << "error: " << path << ": " << liesym_last_error() << "\n";
        return static_cast<int>(st);
    }
    return LIESYM_OK;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact point-symmetry analysis of u_y = F1 u_x + F2 u_x^2 + F3 u_x^3, "
        "u_xxx = G"};
    app.require_subcommand(1);
    app.set_version_flag("--version", liesym_version());

    std::string sys_path, field_path, check_path;
    std::vector<std::string> point{"1", "1", "1"};
    std::vector<int> sweep;
    int degree = 4;
    bool show_prolongation = false, do_cross_check = false, as_json = false;

    CLI::App* detgen = app.add_subcommand("detgen", "derive the determining equations");
    detgen->add_option("system", sys_path, "input .sys file")->required();
    detgen->add_flag("--show-prolongation", show_prolongation,
                     "also print the engaged prolongation coefficients and on-shell bindings");
    detgen->add_flag("--cross-check", do_cross_check,
                     "compare generated objects against the stored reference forms");
    detgen->add_flag("--json", as_json, "structured output");

    CLI::App* solve = app.add_subcommand("solve", "polynomial symmetry basis");
    solve->add_option("system", sys_path, "input .sys file")->required();
    solve->add_option("--degree", degree, "total degree bound of the ansatz (default 4)");
    solve->add_option("--sweep", sweep, "report dimension for each degree in [min, max]")
        ->expected(2);
    solve->add_flag("--json", as_json, "structured output");

    CLI::App* algebra = app.add_subcommand("algebra", "structure constants of the basis");
    algebra->add_option("system", sys_path, "input .sys file")->required();
    algebra->add_option("--degree", degree, "total degree bound of the ansatz (default 4)");
    algebra->add_flag("--json", as_json, "structured output");

    CLI::App* closure = app.add_subcommand(
        "closure", "reduce order <= 3 generator derivatives to the ten initial coefficients");
    closure->add_option("system", sys_path, "input .sys file")->required();
    closure->add_option("--check", check_path, "reconstruct this .vf field pointwise");
    closure->add_option("--point", point, "evaluation point x y u (rationals, default 1 1 1)")
        ->expected(3);
    closure->add_flag("--json", as_json, "structured output");

    CLI::App* verify = app.add_subcommand("verify", "test one field against the system");
    verify->add_option("system", sys_path, "input .sys file")->required();
    verify->add_option("field", field_path, "input .vf file")->required();
    verify->add_flag("--json", as_json, "structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return LIESYM_EPARSE;
    }

    SystemHandle sys;
    if (int rc = load_system(sys_path, sys); rc != LIESYM_OK) return rc;

    char* report = nullptr;
    if (detgen->parsed()) {
        liesym_status st =
            liesym_report_detgen(sys.ptr, sys_path.c_str(), show_prolongation ? 1 : 0,
                                 do_cross_check ? 1 : 0, as_json ? 1 : 0, &report);
        return finish(st, report);
    }
    if (solve->parsed()) {
        int dmin = sweep.empty() ? 0 : sweep[0];
        int dmax = sweep.empty() ? 0 : sweep[1];
        liesym_status st = liesym_report_solve(sys.ptr, sys_path.c_str(), degree, dmin, dmax,
                                               as_json ? 1 : 0, &report);
        return finish(st, report);
    }
    if (algebra->parsed()) {
        liesym_status st =
            liesym_report_algebra(sys.ptr, sys_path.c_str(), degree, as_json ? 1 : 0, &report);
        return finish(st, report);
    }
    if (closure->parsed()) {
        FieldHandle check;
        if (!check_path.empty()) {
            if (int rc = load_field(check_path, check); rc != LIESYM_OK) return rc;
        }
        liesym_status st = liesym_report_closure(sys.ptr, sys_path.c_str(), check.ptr,
                                                 point[0].c_str(), point[1].c_str(),
                                                 point[2].c_str(), as_json ? 1 : 0, &report);
        return finish(st, report);
    }
    FieldHandle field;
    if (int rc = load_field(field_path, field); rc != LIESYM_OK) return rc;
    liesym_status st = liesym_report_verify(sys.ptr, sys_path.c_str(), field.ptr,
                                            field_path.c_str(), as_json ? 1 : 0, &report);
    return finish(st, report);
}
