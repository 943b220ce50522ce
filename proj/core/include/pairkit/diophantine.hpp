#ifndef PAIRKIT_DIOPHANTINE_HPP
#define PAIRKIT_DIOPHANTINE_HPP

#include "pairkit/inverse.hpp"

namespace pairkit {

struct DiophResult {
    Int query;
    std::vector<Point2> solutions;  // (a, b) pairs, exact
    std::string explanation;
};

// 2z = a^2 + 2ab + b^2 + 3a + b over N0^2 (the Cantor value equation).
// Exactly one solution, equal to invert_cantor1(z); brute force optional
// independent check up to a+b <= bound.
DiophResult solve_cantor_dioph(const Int& z, bool brute_force = false);

// Per-a discriminant probe for the same equation: the integer b (if any) with
// 2z = (a+b)^2 + (a+b) + 2a for a fixed a, plus a human-readable explanation
// of the +-sqrt(1+8(z-a)) test.
struct DiscriminantProbe {
    Int a;
    std::optional<Int> b;
    Int discriminant;  // 1 + 8(z - a)
    bool perfect_square = false;
    std::string explanation;
};
DiscriminantProbe cantor_discriminant_probe(const Int& z, const Int& a);

// 2c = a^2 + a + 2b with 0 <= b <= a (the triangular value equation).
DiophResult solve_triangular_dioph(const Int& c, bool brute_force = false);

// a^2 + a even for all a <= bound.
bool check_parity_lemma(const Int& bound);

struct CollisionReport {
    bool collision_found = false;
    Int value;        // colliding value
    Point2 first;     // witnesses
    Point2 second;
    std::size_t pairs_scanned = 0;
    bool full_coverage = true;  // prefix coverage, where applicable
};

// Exhaustive distinctness scan over a,b <= bound.  eq_id: "cantor",
// "triangular", or "degraded" (2c = a + 2b, the non-bijective counter-model;
// expected to collide).
CollisionReport uniqueness_scan(const std::string& eq_id, const Int& bound);

}  // namespace pairkit

#endif
