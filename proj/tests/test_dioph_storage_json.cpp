#include "pairkit/diophantine.hpp"
#include "pairkit/json_io.hpp"
#include "pairkit/storage.hpp"

#include "doctest.h"

#include <sstream>

using namespace pairkit;

TEST_CASE("cantor diophantine solver") {
    auto r = solve_cantor_dioph(7);
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions[0] == Point2{1, 2});
    CHECK(solve_cantor_dioph(0).solutions[0] == Point2{0, 0});
    for (Int z = 0; z <= 2000; ++z)
        CHECK(solve_cantor_dioph(z).solutions[0] == invert_cantor1(z));
    // brute force agrees and still finds exactly one solution
    for (Int z : {Int(0), Int(7), Int(100), Int(9999)}) {
        auto b = solve_cantor_dioph(z, true);
        REQUIRE(b.solutions.size() == 1);
        CHECK(b.solutions[0] == invert_cantor1(z));
    }
}

TEST_CASE("discriminant probe explains forced-a queries") {
    auto p = cantor_discriminant_probe(7, 2);
    CHECK(p.discriminant == 41);
    CHECK(!p.perfect_square);
    CHECK(!p.b.has_value());
    auto q = cantor_discriminant_probe(7, 1);
    CHECK(q.b == Int(2));
}

TEST_CASE("triangular diophantine solver") {
    CHECK(solve_triangular_dioph(6).solutions[0] == Point2{3, 0});
    CHECK(solve_triangular_dioph(0).solutions[0] == Point2{0, 0});
    CHECK(solve_triangular_dioph(5).solutions[0] == Point2{2, 2});
    auto b = solve_triangular_dioph(5, true);
    REQUIRE(b.solutions.size() == 1);
    CHECK(b.solutions[0] == Point2{2, 2});
}

TEST_CASE("parity lemma and uniqueness scans") {
    CHECK(check_parity_lemma(1000));
    CHECK(check_parity_lemma(1));
    auto cs = uniqueness_scan("cantor", 60);
    CHECK(!cs.collision_found);
    CHECK(cs.full_coverage);
    auto ts = uniqueness_scan("triangular", 60);
    CHECK(!ts.collision_found);
    CHECK(ts.full_coverage);
    auto ds = uniqueness_scan("degraded", 10);
    CHECK(ds.collision_found);
    CHECK_THROWS_AS(uniqueness_scan("nonsense", 5), DomainError);
}

TEST_CASE("triangular packed storage") {
    CHECK(tri_index(3, 0) == 6);
    CHECK(tri_index(0, 0) == 0);
    CHECK(tri_index(2, 1) == 4);
    CHECK_THROWS_AS(tri_index(1, 2), IndexError);
    CHECK(tri_unindex(6) == std::pair<Int, Int>{3, 0});
    CHECK(tri_unindex(4) == std::pair<Int, Int>{2, 1});
    for (Int r = 0; r < 512; ++r)
        for (Int c = 0; c <= r; ++c) CHECK(tri_unindex(tri_index(r, c)) == std::pair<Int, Int>{r, c});

    PackedTriangular<int> m(10);
    CHECK(m.size() == 55);
    std::vector<bool> touched(m.size(), false);
    for (Int r = 0; r < 10; ++r)
        for (Int c = 0; c <= r; ++c) {
            Int idx = tri_index(r, c);
            CHECK(!touched[static_cast<std::size_t>(idx)]);
            touched[static_cast<std::size_t>(idx)] = true;
            m.at(r, c) = static_cast<int>(10 * static_cast<int>(r) + static_cast<int>(c));
        }
    for (bool b : touched) CHECK(b);
    CHECK(m.at(5, 3) == 53);
    CHECK(m.at_symmetric(3, 5) == 53);
    CHECK_THROWS_AS(m.at(10, 0), IndexError);
    CHECK_THROWS_AS(m.at(4, 5), IndexError);
}

TEST_CASE("simplex packed storage") {
    PackedSimplex3<int> s(3);
    CHECK(s.size() == 20);
    std::vector<bool> touched(s.size(), false);
    for (Int x = 0; x <= 3; ++x)
        for (Int y = 0; x + y <= 3; ++y)
            for (Int z = 0; x + y + z <= 3; ++z) {
                Point3 p{x, y, z};
                auto idx = static_cast<std::size_t>(eval_p3d(p));
                CHECK(!touched[idx]);
                touched[idx] = true;
                s.at(p) = static_cast<int>(idx);
            }
    for (bool b : touched) CHECK(b);
    CHECK_THROWS_AS(s.at({2, 1, 1}), IndexError);

    PackedSimplex3<int> big(40);
    CHECK(big.size() == 41 * 42 * 43 / 6);
}

TEST_CASE("storage CSV round trip") {
    PackedTriangular<long long> m(7);
    for (Int r = 0; r < 7; ++r)
        for (Int c = 0; c <= r; ++c) m.at(r, c) = static_cast<long long>(tri_index(r, c) * 3);
    std::stringstream ss;
    save_csv(m, ss);
    auto back = load_triangular_csv<long long>(ss);
    CHECK(back.order() == 7);
    CHECK(back.data() == m.data());

    PackedSimplex3<int> s(2);
    for (std::size_t i = 0; i < s.size(); ++i) s.data()[i] = static_cast<int>(i * i);
    std::stringstream s2;
    save_csv(s, s2);
    auto sback = load_simplex_csv<int>(s2);
    CHECK(sback.extent() == 2);
    CHECK(sback.data() == s.data());
}

TEST_CASE("mapping JSON round trip is bit-exact") {
    for (const char* id :
         {"cantor1", "cantor1_rot", "rosenberg_strong", "rhombus_spiral", "square_spiral",
          "rectangle_spiral", "connected_triangle", "saw(5)", "comb(3)", "saw3",
          "zigzag_full_plane", "zigzag_full_plane_z", "alternating", "sheared(2)"}) {
        CAPTURE(id);
        auto m = builtin_from_spec(id);
        Json j = to_json(m);
        auto back = mapping_from_json(j);
        CHECK(back.name() == m.name());
        CHECK(back.image_kind() == m.image_kind());
        REQUIRE(back.regions().size() == m.regions().size());
        for (std::size_t i = 0; i < m.regions().size(); ++i) {
            CHECK(back.regions()[i].form == m.regions()[i].form);
            CHECK(back.regions()[i].where == m.regions()[i].where);
        }
        CHECK(back.exceptional_values() == m.exceptional_values());
        CHECK(back.excluded_points() == m.excluded_points());
        CHECK(back.domain() == m.domain());
        // serialization is deterministic
        CHECK(to_json(back).dump() == j.dump());
    }
}

TEST_CASE("FitReport JSON carries exact rationals") {
    auto rc = builtin("cantor1_rot");
    std::vector<Sample> s;
    for (Int z = 0; z < 6; ++z) s.push_back({invert(rc, z).point, z});
    FitReport rep = fit_and_validate(s, rc);
    Json j = to_json(rep);
    CHECK(j["validation"] == "valid");
    CHECK(j["form"][4] == "-3/2");
    CHECK(j["determinant"].get<std::string>() != "0");
    CHECK(j["samples"].size() == 6);
}
