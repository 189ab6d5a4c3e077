#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parser.hpp"
#include "solver.hpp"

using namespace liesym;

namespace {

// Independent rank oracle: plain rational Gauss-Jordan, first-nonzero
// pivoting, no shortcuts shared with the production elimination.
size_t oracle_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    size_t rank = 0, ncols = m[0].size();
    for (size_t c = 0; c < ncols && rank < m.size(); ++c) {
        size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[rank], m[p]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (size_t cc = c; cc < ncols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

LinearSystem toy(size_t ncols, std::vector<std::vector<Rational>> rows) {
    LinearSystem ls;
    for (size_t c = 0; c < ncols; ++c) ls.columns.push_back({Fn::xi, static_cast<int>(c), 0, 0});
    ls.rows = std::move(rows);
    return ls;
}

const char* kGenerators[10] = {
    "xi = 1\ntau = 0\nphi = 0",
    "xi = 0\ntau = 1\nphi = 0",
    "xi = 0\ntau = 0\nphi = 1",
    "xi = -2*u\ntau = x\nphi = 0",
    "xi = -2*y\ntau = 0\nphi = x",
    "xi = x/2\ntau = y\nphi = 0",
    "xi = x/2\ntau = 0\nphi = u",
    "xi = -2*u*x\ntau = x^2/2\nphi = -2*u^2",
    "xi = x*y/2\ntau = y^2/2\nphi = -x^2/8",
    "xi = x^2/2 - 2*y*u\ntau = x*y\nphi = x*u",
};

}  // namespace

TEST_CASE("toy kernels") {
    CHECK(nullspace(toy(2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}})).empty());
    auto basis = nullspace(toy(2, {{Rational(1), Rational(-1)}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<Rational>{Rational(1), Rational(1)});
    auto everything = nullspace(toy(3, {}));
    CHECK(everything.size() == 3);
    CHECK(everything[0] == std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
}

TEST_CASE("ansatz column count") {
    DeterminingSystem ds = determining_equations(model_system());
    CHECK(build_linear_system(ds, 3).columns.size() == 60);
    CHECK(build_linear_system(ds, 2).columns.size() == 30);
    CHECK_THROWS_AS(build_linear_system(ds, 0), KernelError);
}

TEST_CASE("model system: kernel dimension ten at several degrees") {
    for (int d : {2, 3, 4}) {
        SolveResult res = symmetry_basis(model_system(), d);
        INFO("degree ", d);
        CHECK(res.kernel.size() == 10);
        CHECK(res.fields.size() == 10);
        CHECK(matrix_rank(res.kernel) == 10);
    }
}

TEST_CASE("model system: span contents") {
    SolveResult res = symmetry_basis(model_system(), 3);
    auto coords = [&](const char* text) {
        return field_coordinates(parse_vector_field(text), res.system.columns);
    };
    CHECK(in_span(res.kernel, coords("xi = 1\ntau = 0\nphi = 0")));
    CHECK(in_span(res.kernel, coords("xi = 0\ntau = 1\nphi = 0")));
    CHECK(in_span(res.kernel, coords("xi = 0\ntau = 0\nphi = 1")));
    CHECK(in_span(res.kernel, coords("xi = -2*u*x\ntau = x^2/2\nphi = -2*u^2")));
    CHECK(!in_span(res.kernel, coords("xi = 0\ntau = 0\nphi = y")));
}

TEST_CASE("model system: degree-2 and degree-4 bases span the same space") {
    SolveResult lo = symmetry_basis(model_system(), 2);
    SolveResult hi = symmetry_basis(model_system(), 4);
    std::vector<std::vector<Rational>> stacked;
    for (const auto& f : lo.fields) stacked.push_back(field_coordinates(f, hi.system.columns));
    for (const auto& v : hi.kernel) stacked.push_back(v);
    CHECK(matrix_rank(stacked) == 10);
}

TEST_CASE("the ten stored generators lie in the span, and combinations too") {
    SolveResult res = symmetry_basis(model_system(), 2);
    std::vector<std::vector<Rational>> gens;
    for (const char* text : kGenerators)
        gens.push_back(field_coordinates(parse_vector_field(text), res.system.columns));
    for (const auto& g : gens) CHECK(in_span(res.kernel, g));
    CHECK(matrix_rank(gens) == 10);

    std::mt19937 rng(5577001);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int it = 0; it < 200; ++it) {
        std::vector<Rational> combo(res.system.columns.size(), Rational(0));
        for (const auto& g : gens) {
            Rational c = rat_of(pick(-4, 4), pick(1, 3));
            for (size_t i = 0; i < combo.size(); ++i) combo[i] += c * g[i];
        }
        CHECK(in_span(res.kernel, combo));
    }
}

TEST_CASE("round trip between coordinates and fields") {
    SolveResult res = symmetry_basis(model_system(), 2);
    for (const auto& v : res.kernel) {
        VectorField f = field_from_coordinates(res.system.columns, v);
        CHECK(field_coordinates(f, res.system.columns) == v);
    }
    VectorField tall = parse_vector_field("xi = x^3\ntau = 0\nphi = 0");
    CHECK_THROWS_AS(field_coordinates(tall, res.system.columns), KernelError);
}

TEST_CASE("smoke system: bounded dimension, translations present") {
    PdeSystem smoke = parse_system("F1 = u\nF2 = 1\nF3 = 0\nG = u1");
    SolveResult res = symmetry_basis(smoke, 4);
    CHECK(res.kernel.size() <= 10);
    CHECK(in_span(res.kernel, field_coordinates(parse_vector_field("xi = 1\ntau = 0\nphi = 0"),
                                                res.system.columns)));
    CHECK(in_span(res.kernel, field_coordinates(parse_vector_field("xi = 0\ntau = 1\nphi = 0"),
                                                res.system.columns)));
}

TEST_CASE("property: elimination agrees with the oracle on random matrices") {
    std::mt19937 rng(24601);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int it = 0; it < 1000; ++it) {
        size_t nrows = static_cast<size_t>(pick(1, 5));
        size_t ncols = static_cast<size_t>(pick(1, 6));
        std::vector<std::vector<Rational>> rows(nrows, std::vector<Rational>(ncols));
        for (auto& row : rows)
            for (auto& v : row) v = rat_of(pick(-3, 3), pick(1, 2));
        size_t rank = oracle_rank(rows);
        CHECK(matrix_rank(rows) == rank);

        LinearSystem ls = toy(ncols, rows);
        auto basis = nullspace(ls);
        CHECK(basis.size() == ncols - rank);
        for (const auto& v : basis)
            for (const auto& row : rows) {
                Rational dot(0);
                for (size_t c = 0; c < ncols; ++c) dot += row[c] * v[c];
                CHECK(dot == 0);
            }
        if (!basis.empty()) CHECK(oracle_rank(basis) == basis.size());
    }
}
