#include "pairkit/diophantine.hpp"

#include <map>

namespace pairkit {

namespace {

Int cantor_value(const Int& a, const Int& b) {
    // (a^2 + 2ab + b^2 + 3a + b) / 2
    return ((a + b) * (a + b) + 3 * a + b) / 2;
}

Int triangular_value(const Int& a, const Int& b) { return a * (a + 1) / 2 + b; }

}  // namespace

DiophResult solve_cantor_dioph(const Int& z, bool brute_force) {
    require_nat(z, "z");
    DiophResult r;
    r.query = z;
    if (brute_force) {
        Int limit = (isqrt(8 * z + 1) - 1) / 2 + 1;
        for (Int a = 0; a <= limit; ++a)
            for (Int b = 0; a + b <= limit; ++b)
                if (cantor_value(a, b) == z) r.solutions.push_back({a, b});
    } else {
        Point2 p = invert_cantor1(z);
        if (cantor_value(p.x, p.y) != z)
            throw std::logic_error("cantor diophantine closed form failed substitution");
        r.solutions.push_back(p);
    }
    r.explanation = "2z = a^2 + 2ab + b^2 + 3a + b; unique solution from the closed-form inverse";
    return r;
}

DiscriminantProbe cantor_discriminant_probe(const Int& z, const Int& a) {
    require_nat(z, "z");
    DiscriminantProbe pr;
    pr.a = a;
    pr.discriminant = 1 + 8 * (z - a);
    if (pr.discriminant >= 0) {
        Int s = isqrt(pr.discriminant);
        pr.perfect_square = s * s == pr.discriminant;
        if (pr.perfect_square && (s - 1) % 2 == 0) {
            Int b = (s - 1) / 2 - a;
            if (b >= 0 && cantor_value(a, b) == z) pr.b = b;
        }
    }
    pr.explanation = "b = +-(1/2)sqrt(" + pr.discriminant.str() + ") - " + a.str() + " - 1/2: " +
                     (pr.b ? "integer solution b = " + pr.b->str()
                           : "no nonnegative integer solution");
    return pr;
}

DiophResult solve_triangular_dioph(const Int& c, bool brute_force) {
    require_nat(c, "c");
    DiophResult r;
    r.query = c;
    if (brute_force) {
        Int limit = isqrt(2 * c) + 1;
        for (Int a = 0; a <= limit; ++a)
            for (Int b = 0; b <= a; ++b)
                if (triangular_value(a, b) == c) r.solutions.push_back({a, b});
    } else {
        Int a = (isqrt(8 * c + 1) - 1) / 2;
        Int b = c - a * (a + 1) / 2;
        if (triangular_value(a, b) != c || b < 0 || b > a)
            throw std::logic_error("triangular diophantine closed form failed substitution");
        r.solutions.push_back({a, b});
    }
    r.explanation = "2c = a^2 + a + 2b with 0 <= b <= a; a^2 + a is always even";
    return r;
}

bool check_parity_lemma(const Int& bound) {
    if (bound < 1) throw DomainError("check_parity_lemma requires bound >= 1");
    for (Int a = 0; a <= bound; ++a)
        if ((a * a + a) % 2 != 0) return false;
    return true;
}

CollisionReport uniqueness_scan(const std::string& eq_id, const Int& bound) {
    CollisionReport rep;
    std::map<Int, Point2> seen;
    auto record = [&](const Int& v, const Point2& p) {
        ++rep.pairs_scanned;
        auto [it, fresh] = seen.emplace(v, p);
        if (!fresh && !rep.collision_found) {
            rep.collision_found = true;
            rep.value = v;
            rep.first = it->second;
            rep.second = p;
        }
    };

    if (eq_id == "cantor") {
        for (Int a = 0; a <= bound; ++a)
            for (Int b = 0; b <= bound; ++b) record(cantor_value(a, b), {a, b});
        // Prefix coverage over the closed triangle a + b <= bound.
        Int expect = (bound + 1) * (bound + 2) / 2;
        for (Int z = 0; z < expect; ++z) {
            auto it = seen.find(z);
            if (it == seen.end() || it->second.x + it->second.y > bound) {
                rep.full_coverage = false;
                break;
            }
        }
    } else if (eq_id == "triangular") {
        for (Int a = 0; a <= bound; ++a)
            for (Int b = 0; b <= a; ++b) record(triangular_value(a, b), {a, b});
        Int expect = (bound + 1) * (bound + 2) / 2;
        for (Int z = 0; z < expect; ++z)
            if (!seen.count(z)) {
                rep.full_coverage = false;
                break;
            }
    } else if (eq_id == "degraded") {
        // 2c = a + 2b: only even a yields integer c; known non-bijective.
        rep.full_coverage = false;
        for (Int a = 0; a <= bound; a += 2)
            for (Int b = 0; b <= bound; ++b) record(a / 2 + b, {a, b});
    } else {
        throw DomainError("unknown equation id '" + eq_id + "'");
    }
    return rep;
}

}  // namespace pairkit
