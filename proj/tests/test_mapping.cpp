#include "pairkit/mapping.hpp"

#include "doctest.h"

using namespace pairkit;

namespace {

const std::vector<std::string> kAllIds = {
    "cantor1",         "cantor2",        "cantor1_rot",        "triangular",
    "triangle_x",      "triangle_y",     "rosenberg_strong",   "half_square_spiral",
    "rhombus_spiral",  "square_spiral",  "rectangle_spiral",   "connected_triangle",
    "saw(2)",          "saw(5)",         "comb(3)",            "saw3",
    "zigzag_full_plane", "zigzag_full_plane_z", "alternating", "sheared(2)"};

}  // namespace

TEST_CASE("catalogue spot values") {
    auto c1 = builtin("cantor1");
    CHECK(c1.eval({0, 0}) == 0);
    CHECK(c1.eval({1, 0}) == 2);
    CHECK(c1.eval({1, 1}) == 4);
    CHECK(builtin("cantor2").eval({1, 0}) == 1);
    CHECK(builtin("cantor1_rot").eval({1, -1}) == 4);
    CHECK(builtin("triangular").eval({3, 0}) == 6);
    CHECK(builtin("rosenberg_strong").eval({0, 2}) == 8);
    CHECK(builtin("rosenberg_strong").eval({2, 0}) == 4);
    CHECK(builtin("half_square_spiral").eval({5, 0}) == 55);
    CHECK(builtin("square_spiral").eval({5, 0}) == 81);
    CHECK(builtin("rhombus_spiral").eval({0, 0}) == 0);
    for (Int x = 1; x <= 5; ++x)
        CHECK(builtin("rectangle_spiral").eval({x, x}) == 4 * x * x - 1);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(builtin("cantor1").eval({-1, 0}), DomainError);
    CHECK_THROWS_AS(builtin("rectangle_spiral").eval({0, -1}), DomainError);
    CHECK_THROWS_AS(builtin("triangular").eval({1, 2}), DomainError);
    CHECK_THROWS_AS(builtin("saw", Int(1)), DomainError);
    CHECK_THROWS_AS(builtin("no_such_map"), DomainError);
    CHECK_THROWS_AS(builtin_from_spec("saw(2"), DomainError);
}

TEST_CASE("region partition is sound on [-200,200]^2") {
    for (const auto& id : kAllIds) {
        auto m = builtin_from_spec(id);
        CAPTURE(id);
        long long claimed_total = 0;
        for (Int x = -200; x <= 200; ++x)
            for (Int y = -200; y <= 200; ++y) {
                Point2 p{x, y};
                int claims = 0;
                for (const auto& r : m.regions())
                    if (r.where.contains(p)) ++claims;
                bool excluded = m.excluded_points().count(p) > 0;
                bool exceptional = m.exceptional_values().count(p) > 0;
                if (excluded || exceptional) {
                    REQUIRE(claims == 0);
                } else {
                    REQUIRE(claims <= 1);
                    REQUIRE((claims == 1) == m.in_domain(p));
                }
                claimed_total += claims;
            }
        CHECK(claimed_total > 0);
    }
}

TEST_CASE("affine image transforms values and exceptionals") {
    auto m = affine_image(builtin("rhombus_spiral"), 3, 5);
    auto base = builtin("rhombus_spiral");
    for (Int x = -10; x <= 10; ++x)
        for (Int y = -10; y <= 10; ++y)
            CHECK(m.eval({x, y}) == 3 * base.eval({x, y}) + 5);
    CHECK(m.image_kind() == ImageKind::N0);
    CHECK(affine_image(base, -1, 0).image_kind() == ImageKind::Z);
}

TEST_CASE("shift_domain translates everything") {
    auto base = builtin("rectangle_spiral");
    auto m = shift_domain(base, 7, -4);
    CHECK(m.eval({7, -4}) == 0);                       // shifted origin
    CHECK_THROWS_AS(m.eval({7, -5}), DomainError);     // shifted excluded point
    for (Int x = -8; x <= 8; ++x)
        for (Int y = -8; y <= 8; ++y) {
            if (x == 0 && y == -1) continue;
            CHECK(m.eval({x + 7, y - 4}) == base.eval({x, y}));
        }
    // shifting a parity-constrained mapping
    auto alt = shift_domain(builtin("alternating"), 1, 0);
    auto alt_base = builtin("alternating");
    for (Int x = 0; x <= 20; ++x)
        for (Int y = 0; y <= 20; ++y) CHECK(alt.eval({x + 1, y}) == alt_base.eval({x, y}));
}

TEST_CASE("rotate_quarter turns clockwise") {
    auto base = builtin("cantor1");
    auto rot = rotate_quarter(base, 1);
    // clockwise: the new mapping at (x,y) sees the old point (-y, x)
    for (Int x = 0; x <= 25; ++x)
        for (Int y = 0; y <= 25; ++y) CHECK(rot.eval({y, -x}) == base.eval({x, y}));
    // four turns are the identity
    auto full = rotate_quarter(builtin("rectangle_spiral"), 4);
    for (Int x = -10; x <= 10; ++x)
        for (Int y = -10; y <= 10; ++y) {
            if (x == 0 && y == -1) continue;
            CHECK(full.eval({x, y}) == builtin("rectangle_spiral").eval({x, y}));
        }
    // one clockwise turn of cantor1 equals the built-in rotated catalogue entry
    auto cat = builtin("cantor1_rot");
    for (Int x = 0; x <= 25; ++x)
        for (Int y = -25; y <= 0; ++y) CHECK(rot.eval({x, y}) == cat.eval({x, y}));
}

TEST_CASE("compose_image wraps the value") {
    auto doubled = compose_image(builtin("cantor1"), [](const Int& v) { return 2 * v + 1; });
    CHECK(doubled.eval({1, 0}) == 5);
    CHECK(doubled.eval({0, 0}) == 1);
}

TEST_CASE("b_transform lands on (x+y, x)") {
    for (Int x = 0; x <= 40; ++x)
        for (Int y = 0; y <= 40; ++y) {
            Point2 out = b_transform({x, y});
            CHECK(out.x == x + y);
            CHECK(out.y == x);
        }
    CHECK_THROWS_AS(b_transform({-1, 0}), DomainError);
}

TEST_CASE("consolidated rhombus formula matches the four-region mapping") {
    auto m = builtin("rhombus_spiral");
    for (Int x = -40; x <= 40; ++x)
        for (Int y = -40; y <= 40; ++y) {
            if (x == 0 && y == 0) continue;
            CHECK(rhombus_consolidated({x, y}) == m.eval({x, y}));
        }
    CHECK_THROWS_AS(rhombus_consolidated({0, 0}), DomainError);
}

TEST_CASE("3D values and the k-d reconciliation") {
    CHECK(eval_p3d({0, 0, 0}) == 0);
    CHECK(eval_p3d({1, 1, 1}) == 14);
    CHECK(eval_p3d({0, 3, 0}) == 19);
    CHECK_THROWS_AS(eval_p3d({-1, 0, 0}), DomainError);
    CHECK(eval_pkd({Int(0)}) == 0);
    CHECK(eval_pkd({Int(5)}) == 5);  // k = 1 is the identity
    auto perm = pkd_p3d_permutation();
    CHECK(perm == std::array<int, 3>{1, 0, 2});
    for (Int x = 0; x <= 7; ++x)
        for (Int y = 0; y <= 7; ++y)
            for (Int z = 0; z <= 7; ++z) {
                std::array<Int, 3> c{x, y, z};
                CHECK(eval_pkd({x, y, z}) ==
                      eval_p3d({c[static_cast<std::size_t>(perm[0])],
                                c[static_cast<std::size_t>(perm[1])],
                                c[static_cast<std::size_t>(perm[2])]}));
            }
}

TEST_CASE("saw2 family members all restrict to 2x - y on the strip") {
    for (Int a = -3; a <= 3; ++a) {
        auto m = saw2_family(a);
        for (Int x = 0; x <= 30; ++x) {
            CHECK(m.eval({x, 0}) == 2 * x);
            if (x >= 1) CHECK(m.eval({x, 1}) == 2 * x - 1);
        }
    }
}

TEST_CASE("builtin_ids lists every spec family") {
    auto ids = builtin_ids();
    CHECK(ids.size() == 19);
}
