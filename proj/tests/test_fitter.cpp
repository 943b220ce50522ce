#include "pairkit/fitter.hpp"
#include "pairkit/oracle.hpp"

#include "doctest.h"

#include <random>

using namespace pairkit;

namespace {

std::vector<Sample> samples_for(const PiecewiseMapping& m, const std::vector<Int>& values) {
    std::vector<Sample> out;
    for (const Int& z : values) out.push_back({invert(m, z).point, z});
    return out;
}

const QuadForm kTriangularForm{Rational(1, 2), 0, 0, Rational(1, 2), 1, 0};
const QuadForm kRotCantorForm{Rational(1, 2), -1, Rational(1, 2), Rational(1, 2),
                              Rational(-3, 2), 0};
const QuadForm kWrongSetForm{Rational(3, 4), Rational(-3, 2), Rational(3, 4), Rational(-1, 2),
                        Rational(-1, 2), Rational(3, 4)};

}  // namespace

TEST_CASE("build_system emits the documented rows") {
    std::vector<Sample> s = {{{2, 1}, 4}, {{0, 0}, 0}, {{1, 1}, 7},
                             {{1, 0}, 1}, {{2, 0}, 3}, {{2, 2}, 5}};
    auto [m, rhs] = build_system(s);
    CHECK(m[0] == RatVec{4, 2, 1, 2, 1, 1});
    CHECK(m[1] == RatVec{0, 0, 0, 0, 0, 1});
    CHECK(m[2] == RatVec{1, 1, 1, 1, 1, 1});
    CHECK(rhs[0] == Rational(4));
    CHECK_THROWS_AS(build_system({}), DomainError);
}

TEST_CASE("determinant patterns of the canonical sets") {
    auto tri = builtin("triangular");
    auto setA = samples_for(tri, {0, 1, 2, 3, 4, 5});
    auto setB = samples_for(tri, {5, 8, 9, 12, 13, 14});
    CHECK(det6(build_system(setA).first) == Rational(-4));
    CHECK(det6(build_system(setB).first) == Rational(-4));

    auto saw3 = builtin("saw3");
    auto degenerate = samples_for(saw3, {0, 1, 2, 3, 4, 6});
    CHECK(det6(build_system(degenerate).first) == Rational(0));

    auto rect = builtin("rectangle_spiral");
    auto alternative = samples_for(rect, {2, 12, 13, 14, 31, 33});
    CHECK(det6(build_system(alternative).first) == Rational(-8));
    auto regular = samples_for(rect, {2, 13, 14, 32, 33, 34});
    CHECK(det6(build_system(regular).first) == Rational(-4));
}

TEST_CASE("determinant depends on the pattern, not its position") {
    auto tri = builtin("triangular");
    auto setA = samples_for(tri, {0, 1, 2, 3, 4, 5});
    Rational base = det6(build_system(setA).first);
    for (Int dx = -50; dx <= 50; dx += 10)
        for (Int dy = -50; dy <= 50; dy += 10) {
            auto shifted = setA;
            for (auto& s : shifted) s.p = {s.p.x + dx, s.p.y + dy};
            CHECK(det6(build_system(shifted).first) == base);
        }
    // quarter-turn image of the rotated-Cantor set A
    auto rc = builtin("cantor1_rot");
    auto rcA = samples_for(rc, {0, 1, 2, 3, 4, 5});
    Rational rc_det = det6(build_system(rcA).first);
    auto rotated = rcA;
    for (auto& s : rotated) s.p = {s.p.y, -s.p.x};
    CHECK(det6(build_system(rotated).first) == rc_det);
}

TEST_CASE("solve_exact reproduces the published solutions") {
    auto tri = builtin("triangular");
    auto [ma, ra] = build_system(samples_for(tri, {0, 1, 2, 3, 4, 5}));
    RatVec xa = solve_exact(ma, ra);
    CHECK(QuadForm{xa[0], xa[1], xa[2], xa[3], xa[4], xa[5]} == kTriangularForm);

    auto rc = builtin("cantor1_rot");
    auto [mb, rb] = build_system(samples_for(rc, {0, 1, 2, 3, 4, 5}));
    RatVec xb = solve_exact(mb, rb);
    CHECK(QuadForm{xb[0], xb[1], xb[2], xb[3], xb[4], xb[5]} == kRotCantorForm);

    auto saw3 = builtin("saw3");
    auto [mc, rcs] = build_system(samples_for(saw3, {0, 1, 2, 3, 4, 6}));
    CHECK_THROWS_AS(solve_exact(mc, rcs), SingularSystem);
}

TEST_CASE("solving then substituting leaves zero residual (randomized)") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> coord(-30, 30), val(-500, 500);
    int solved = 0;
    while (solved < 1000) {
        std::vector<Sample> s;
        for (int i = 0; i < 6; ++i) s.push_back({{coord(rng), coord(rng)}, val(rng)});
        auto [m, rhs] = build_system(s);
        if (det6(m) == Rational(0)) continue;
        RatVec x = solve_exact(m, rhs);
        for (int i = 0; i < 6; ++i) {
            Rational acc;
            for (int j = 0; j < 6; ++j) acc += m[static_cast<std::size_t>(i)]
                                                 [static_cast<std::size_t>(j)] *
                                               x[static_cast<std::size_t>(j)];
            REQUIRE(acc == rhs[static_cast<std::size_t>(i)]);
        }
        ++solved;
    }
}

TEST_CASE("the wrong set is singular; its solution family contains the published form") {
    // Values {1,2,6,7,8,9} on the rotated-Cantor domain: the matrix has rank 5,
    // so no unique polynomial exists.  The one-parameter family contains both
    // the true mapping polynomial (the particular solution) and the published
    // wrong-fit form (at parameter 3/4).
    auto rc = builtin("cantor1_rot");
    auto wrong = samples_for(rc, {1, 2, 6, 7, 8, 9});
    auto [m, rhs] = build_system(wrong);
    CHECK(det6(m) == Rational(0));
    SolutionFamily fam = solve_family(m, rhs);
    CHECK(fam.consistent);
    CHECK(fam.rank == 5);
    REQUIRE(fam.nullspace.size() == 1);
    auto part = fam.particular;
    CHECK(QuadForm{part[0], part[1], part[2], part[3], part[4], part[5]} == kRotCantorForm);
    // membership of the published form: one consistent scale factor
    const auto& d = fam.nullspace[0];
    auto wrong_coeffs = kWrongSetForm.coeffs();
    std::optional<Rational> t;
    bool member = true;
    for (int i = 0; i < 6; ++i) {
        auto di = d[static_cast<std::size_t>(i)];
        Rational delta = wrong_coeffs[static_cast<std::size_t>(i)] - part[static_cast<std::size_t>(i)];
        if (di == Rational(0)) {
            member = member && delta == Rational(0);
        } else {
            Rational ti = delta / di;
            if (!t)
                t = ti;
            else
                member = member && ti == *t;
        }
    }
    CHECK(member);
    REQUIRE(t.has_value());
    CHECK(*t == Rational(3, 4));
}

TEST_CASE("fit_and_validate verdicts") {
    auto rc = builtin("cantor1_rot");
    auto good = fit_and_validate(samples_for(rc, {0, 1, 2, 3, 4, 5}), rc);
    CHECK(good.validation == FitValidation::Valid);
    CHECK(good.form == kRotCantorForm);

    auto singular = fit_and_validate(samples_for(rc, {1, 2, 6, 7, 8, 9}), rc);
    CHECK(singular.validation == FitValidation::Singular);
    CHECK(!singular.form.has_value());

    auto saw3 = builtin("saw3");
    auto saw_fit = fit_and_validate(samples_for(saw3, {3, 6, 7, 9, 10, 11}), saw3,
                                    Box2{2, 12, 0, 2});
    CHECK(saw_fit.validation == FitValidation::Valid);
    CHECK(saw_fit.form == QuadForm{0, 0, 0, 3, 4, -3});
}

TEST_CASE("the published wrong form fails validation with the documented witnesses") {
    auto rc = builtin("cantor1_rot");
    auto mism = validate_form(kWrongSetForm, rc, Box2{0, 5, -5, 0});
    CHECK(!mism.empty());
    bool saw_origin = false, saw_40 = false;
    for (const auto& m : mism) {
        if (m.p == Point2{0, 0}) {
            saw_origin = true;
            CHECK(m.expected == 0);
            CHECK(m.fitted == Rational(3, 4));
        }
        if (m.p == Point2{4, 0}) {
            saw_40 = true;
            CHECK(m.expected == 10);
            CHECK(m.fitted == Rational(43, 4));
        }
    }
    CHECK(saw_origin);
    CHECK(saw_40);
}

TEST_CASE("fit3d recovers the 3D cubic from the initial tetrahedron") {
    auto trace = enumerate_walk3("p3d", 20);
    std::vector<Sample3> s;
    for (std::size_t i = 0; i < 20; ++i) s.push_back({trace.points[i], Int(i)});
    CubicForm3D f = fit3d(s);
    CHECK(f.c[0] == Rational(1, 6));   // x^3
    CHECK(f.c[1] == Rational(1, 6));   // y^3
    CHECK(f.c[2] == Rational(1, 6));   // z^3
    for (int i = 3; i <= 8; ++i) CHECK(f.c[static_cast<std::size_t>(i)] == Rational(1, 2));
    CHECK(f.c[9] == Rational(1));      // xyz
    CHECK(f.c[10] == Rational(1));     // x^2
    CHECK(f.c[11] == Rational(1));     // y^2
    CHECK(f.c[12] == Rational(1, 2));  // z^2
    CHECK(f.c[13] == Rational(2));     // xy
    CHECK(f.c[14] == Rational(1));     // xz
    CHECK(f.c[15] == Rational(1));     // yz
    CHECK(f.c[16] == Rational(5, 6));  // x
    CHECK(f.c[17] == Rational(11, 6)); // y
    CHECK(f.c[18] == Rational(1, 3));  // z
    CHECK(f.c[19] == Rational(0));     // constant
    // whole-window agreement
    for (Int x = 0; x <= 10; ++x)
        for (Int y = 0; y <= 10; ++y)
            for (Int z = 0; z <= 10; ++z)
                CHECK(f.eval({x, y, z}) == Rational(eval_p3d({x, y, z})));

    auto degenerate = s;
    degenerate[1] = degenerate[0];
    CHECK_THROWS_AS(fit3d(degenerate), SingularSystem);
}

TEST_CASE("axis-restricted 3x3 block solve") {
    // P(0,0,z) = a z^3 + b z^2 + c z through (1,1), (2,4), (3,10)
    RatMat m{{1, 1, 1}, {8, 4, 2}, {27, 9, 3}};
    RatVec rhs{1, 4, 10};
    RatVec x = solve_exact(m, rhs);
    CHECK(x[0] == Rational(1, 6));
    CHECK(x[1] == Rational(1, 2));
    CHECK(x[2] == Rational(1, 3));
}

TEST_CASE("fitting a region's own canonical samples returns its stored form") {
    struct Entry {
        std::string id;
        std::vector<std::size_t> full_rank_regions;
        std::vector<std::size_t> deficient_regions;  // strip too narrow for a quadratic
    };
    std::vector<Entry> entries = {
        {"cantor1", {0}, {}},
        {"cantor2", {0}, {}},
        {"cantor1_rot", {0}, {}},
        {"triangular", {0}, {}},
        {"triangle_x", {0}, {}},
        {"triangle_y", {0}, {}},
        {"rosenberg_strong", {0, 1}, {}},
        {"half_square_spiral", {0, 1, 2}, {}},
        {"rhombus_spiral", {0, 1, 2, 3}, {}},
        {"square_spiral", {0, 1, 2, 3, 4}, {}},
        {"rectangle_spiral", {0, 1, 2, 3}, {}},
        {"connected_triangle", {0, 1}, {}},
        // width-2 strips: y^2 = y (or x^2 = x) on the whole region, so six
        // independent rows cannot exist and the quadratic fit is inherently
        // underdetermined there.
        {"saw(2)", {}, {0}},
        {"saw(5)", {0}, {}},
        {"comb(3)", {0}, {}},
        {"saw3", {1}, {0}},
        {"zigzag_full_plane", {0, 1, 2, 3, 4, 5}, {}},
        {"alternating", {0, 1}, {}},
        {"sheared(2)", {0}, {}},
    };
    for (const auto& e : entries) {
        auto m = builtin_from_spec(e.id);
        CAPTURE(e.id);
        for (std::size_t ri : e.full_rank_regions) {
            CAPTURE(ri);
            auto s = initial_samples(m, ri);
            auto [mat, rhs] = build_system(s);
            RatVec x = solve_exact(mat, rhs);
            CHECK(QuadForm{x[0], x[1], x[2], x[3], x[4], x[5]} == m.regions()[ri].form);
        }
        for (std::size_t ri : e.deficient_regions) {
            CAPTURE(ri);
            CHECK_THROWS_AS(initial_samples(m, ri), DomainError);
        }
    }
}
