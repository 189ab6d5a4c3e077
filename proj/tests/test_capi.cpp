#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <liesym/liesym.h>

namespace {

const char* kModel = "F1 = 0\nF2 = 1\nF3 = 0\nG = 0\n";
const char* kSmoke = "F1 = u\nF2 = 1\nF3 = 0\nG = u1\n";
const char* kPivot = "F1 = 0\nF2 = 1 + x^2\nF3 = 0\nG = 0\n";

// Owning wrappers so a failing CHECK cannot leak handles.
struct Sys {
    liesym_system* p = nullptr;
    explicit Sys(const char* text) { status = liesym_system_parse(text, &p); }
    ~Sys() { liesym_system_free(p); }
    liesym_status status;
};

struct Field {
    liesym_vfield* p = nullptr;
    explicit Field(const char* text) { status = liesym_vfield_parse(text, &p); }
    ~Field() { liesym_vfield_free(p); }
    liesym_status status;
};

struct Out {
    char* p = nullptr;
    ~Out() { liesym_string_free(p); }
    std::string str() const { return p == nullptr ? std::string() : std::string(p); }
};

}  // namespace

TEST_CASE("version and error channel basics") {
    CHECK(std::string(liesym_version()) == "1.0.0");

    Sys ok(kModel);
    CHECK(ok.status == LIESYM_OK);
    CHECK(ok.p != nullptr);
    CHECK(std::string(liesym_last_error()).empty());

    Sys broken("F1 = 0\nF2 = 1 +\nF3 = 0\nG = 0\n");
    CHECK(broken.status == LIESYM_EPARSE);
    CHECK(broken.p == nullptr);
    CHECK(std::string(liesym_last_error()).find("line") != std::string::npos);

    // The next successful call clears the error.
    Sys again(kModel);
    CHECK(again.status == LIESYM_OK);
    CHECK(std::string(liesym_last_error()).empty());
}

TEST_CASE("degenerate systems are rejected at parse time") {
    Sys s("F1 = x\nF2 = 0\nF3 = 1\nG = 0\n");
    CHECK(s.status == LIESYM_EDEGENERATE);
    CHECK(s.p == nullptr);
    CHECK(std::string(liesym_last_error()).find("identically zero") != std::string::npos);
}

TEST_CASE("field parsing") {
    Field f("xi = -2*u\ntau = x\nphi = 0\n");
    CHECK(f.status == LIESYM_OK);

    Field g("xi = u1\ntau = 0\nphi = 0\n");
    CHECK(g.status == LIESYM_EPARSE);
    CHECK(g.p == nullptr);
}

TEST_CASE("null arguments come back as EINVALID") {
    Out out;
    liesym_system* sp = nullptr;
    CHECK(liesym_system_parse(nullptr, &sp) == LIESYM_EINVALID);
    CHECK(liesym_system_parse(kModel, nullptr) == LIESYM_EINVALID);
    CHECK(liesym_report_detgen(nullptr, "x", 0, 0, 0, &out.p) == LIESYM_EINVALID);
    CHECK(std::string(liesym_last_error()).find("null") != std::string::npos);

    Sys s(kModel);
    CHECK(liesym_report_detgen(s.p, "x", 0, 0, 0, nullptr) == LIESYM_EINVALID);
    CHECK(liesym_report_verify(s.p, "x", nullptr, "v", 0, &out.p) == LIESYM_EINVALID);

    liesym_string_free(nullptr);  // must be harmless
    liesym_system_free(nullptr);
    liesym_vfield_free(nullptr);
}

TEST_CASE("detgen report through the C boundary") {
    Sys s(kModel);
    Out text;
    CHECK(liesym_report_detgen(s.p, "sm.sys", 0, 0, 0, &text.p) == LIESYM_OK);
    CHECK(text.str().find("equations: 13") != std::string::npos);
    CHECK(text.str().find("[cond1 : u11^0 u1^1] xi_y + 2*phi_x = 0") != std::string::npos);

    Out json;
    CHECK(liesym_report_detgen(s.p, "sm.sys", 0, 1, 1, &json.p) == LIESYM_OK);
    CHECK(json.str().find("\"schema\": 1") != std::string::npos);
    CHECK(json.str().find("\"command\": \"detgen\"") != std::string::npos);
    CHECK(json.str().find("disagrees as documented") != std::string::npos);
}

TEST_CASE("solve report and its argument validation") {
    Sys s(kSmoke);
    Out out;
    CHECK(liesym_report_solve(s.p, "smoke.sys", 4, 0, 0, 0, &out.p) == LIESYM_OK);
    CHECK(out.str().find("dimension: 4") != std::string::npos);

    Out sweep;
    CHECK(liesym_report_solve(s.p, "smoke.sys", 4, 2, 3, 0, &sweep.p) == LIESYM_OK);
    CHECK(sweep.str().find("degree 2: dimension") != std::string::npos);
    CHECK(sweep.str().find("degree 3: dimension 4") != std::string::npos);

    Out bad;
    CHECK(liesym_report_solve(s.p, "smoke.sys", 0, 0, 0, 0, &bad.p) == LIESYM_EINVALID);
    CHECK(bad.p == nullptr);
    CHECK(liesym_report_solve(s.p, "smoke.sys", 4, 3, 2, 0, &bad.p) == LIESYM_EINVALID);
}

TEST_CASE("algebra report") {
    Sys s(kModel);
    Out out;
    CHECK(liesym_report_algebra(s.p, "sm.sys", 2, 0, &out.p) == LIESYM_OK);
    CHECK(out.str().find("dimension: 10") != std::string::npos);
    CHECK(out.str().find("closure: verified") != std::string::npos);
    CHECK(out.str().find("jacobi: verified") != std::string::npos);
}

TEST_CASE("closure report, reconstruction and point handling") {
    Sys s(kModel);
    Field gen10("xi = 1/2*x^2 - 2*y*u\ntau = x*y\nphi = x*u\n");
    REQUIRE(gen10.status == LIESYM_OK);

    Out table;
    CHECK(liesym_report_closure(s.p, "sm.sys", nullptr, "1", "1", "1", 0, &table.p) == LIESYM_OK);
    CHECK(table.str().find("entries: 60 (10 initial, 50 reduced)") != std::string::npos);

    Out good;
    CHECK(liesym_report_closure(s.p, "sm.sys", gen10.p, "1", "1", "1", 0, &good.p) == LIESYM_OK);
    CHECK(good.str().find("reconstruction: all 60 symbols agree") != std::string::npos);

    Field bad("xi = 0\ntau = 0\nphi = y\n");
    Out mismatch;
    CHECK(liesym_report_closure(s.p, "sm.sys", bad.p, "1", "1", "1", 0, &mismatch.p) ==
          LIESYM_EVERIFY);
    CHECK(mismatch.str().find("MISMATCH") != std::string::npos);

    Out invalid;
    CHECK(liesym_report_closure(s.p, "sm.sys", gen10.p, "x", "1", "1", 0, &invalid.p) ==
          LIESYM_EINVALID);
    CHECK(std::string(liesym_last_error()).find("rational constant") != std::string::npos);

    Sys pivot(kPivot);
    Field dy("xi = 0\ntau = 1\nphi = 0\n");
    Out degenerate;
    CHECK(liesym_report_closure(pivot.p, "pivot.sys", dy.p, "1", "1", "1", 0, &degenerate.p) ==
          LIESYM_EDEGENERATE);
    CHECK(degenerate.p == nullptr);
    CHECK(std::string(liesym_last_error()).find("vanishes at the evaluation point") !=
          std::string::npos);

    Out off;
    CHECK(liesym_report_closure(pivot.p, "pivot.sys", dy.p, "2", "1", "1", 0, &off.p) ==
          LIESYM_OK);
    CHECK(off.str().find("reconstruction: all 60 symbols agree") != std::string::npos);
}

TEST_CASE("verify report statuses") {
    Sys s(kModel);
    Field gen9("xi = 1/2*x*y\ntau = 1/2*y^2\nphi = -1/8*x^2\n");
    Out yes;
    CHECK(liesym_report_verify(s.p, "sm.sys", gen9.p, "gen9.vf", 0, &yes.p) == LIESYM_OK);
    CHECK(yes.str().find("symmetry: true") != std::string::npos);

    Field bad("xi = 0\ntau = 0\nphi = y\n");
    Out no;
    CHECK(liesym_report_verify(s.p, "sm.sys", bad.p, "bad.vf", 0, &no.p) == LIESYM_EVERIFY);
    CHECK(no.str().find("symmetry: false") != std::string::npos);
    CHECK(no.str().find("phi_y = 0") != std::string::npos);
}

TEST_CASE("reports are byte identical across calls") {
    Sys s(kModel);
    Out a, b;
    CHECK(liesym_report_solve(s.p, "sm.sys", 3, 0, 0, 1, &a.p) == LIESYM_OK);
    CHECK(liesym_report_solve(s.p, "sm.sys", 3, 0, 0, 1, &b.p) == LIESYM_OK);
    CHECK(a.str() == b.str());

    Out c, d;
    CHECK(liesym_report_closure(s.p, "sm.sys", nullptr, "1", "1", "1", 0, &c.p) == LIESYM_OK);
    CHECK(liesym_report_closure(s.p, "sm.sys", nullptr, "1", "1", "1", 0, &d.p) == LIESYM_OK);
    CHECK(c.str() == d.str());
}
