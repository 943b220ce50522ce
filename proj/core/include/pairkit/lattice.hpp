#ifndef PAIRKIT_LATTICE_HPP
#define PAIRKIT_LATTICE_HPP

#include "pairkit/ints.hpp"

#include <compare>
#include <optional>
#include <ostream>
#include <vector>

namespace pairkit {

struct Point2 {
    Int x;
    Int y;

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
    friend bool operator<(const Point2& a, const Point2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
    friend std::ostream& operator<<(std::ostream& os, const Point2& p) {
        return os << "(" << p.x << "," << p.y << ")";
    }
};

struct Point3 {
    Int x;
    Int y;
    Int z;

    friend bool operator==(const Point3& a, const Point3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const Point3& a, const Point3& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Point3& p) {
        return os << "(" << p.x << "," << p.y << "," << p.z << ")";
    }
};

// Fixed-length tuple of integers; length chosen at construction.
using PointK = std::vector<Int>;

// One linear condition a*x + b*y + c  <rel>  0.
struct LinearConstraint {
    enum class Rel { Ge, Gt, Le, Lt, Eq };
    Int a;
    Int b;
    Int c;
    Rel rel = Rel::Ge;

    bool holds(const Point2& p) const {
        Int v = a * p.x + b * p.y + c;
        switch (rel) {
            case Rel::Ge: return v >= 0;
            case Rel::Gt: return v > 0;
            case Rel::Le: return v <= 0;
            case Rel::Lt: return v < 0;
            case Rel::Eq: return v == 0;
        }
        return false;
    }
    friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

// (a*x + b*y) mod 2 == residue.  Needed for parity-selected regions.
struct ParityConstraint {
    Int a;
    Int b;
    int residue = 0;

    bool holds(const Point2& p) const {
        Int v = a * p.x + b * p.y;
        Int m = v % 2;
        if (m < 0) m += 2;
        return m == residue;
    }
    friend bool operator==(const ParityConstraint&, const ParityConstraint&) = default;
};

// Decidable, exactly-evaluated membership test: conjunction of linear
// inequalities (and an optional parity condition), finite include points
// unioned in, finite exclude points removed.
struct RegionPredicate {
    std::vector<LinearConstraint> constraints;
    std::optional<ParityConstraint> parity;
    std::vector<Point2> include_points;
    std::vector<Point2> exclude_points;

    bool contains(const Point2& p) const {
        for (const auto& q : exclude_points)
            if (q == p) return false;
        for (const auto& q : include_points)
            if (q == p) return true;
        for (const auto& c : constraints)
            if (!c.holds(p)) return false;
        if (parity && !parity->holds(p)) return false;
        return true;
    }

    friend bool operator==(const RegionPredicate&, const RegionPredicate&) = default;
};

// Convenience builders for the common comparisons.
inline LinearConstraint x_ge(Int c) { return {1, 0, -std::move(c), LinearConstraint::Rel::Ge}; }
inline LinearConstraint x_le(Int c) { return {1, 0, -std::move(c), LinearConstraint::Rel::Le}; }
inline LinearConstraint y_ge(Int c) { return {0, 1, -std::move(c), LinearConstraint::Rel::Ge}; }
inline LinearConstraint y_le(Int c) { return {0, 1, -std::move(c), LinearConstraint::Rel::Le}; }
// a*x + b*y + c >= 0 / <= 0
inline LinearConstraint lin_ge(Int a, Int b, Int c) {
    return {std::move(a), std::move(b), std::move(c), LinearConstraint::Rel::Ge};
}
inline LinearConstraint lin_le(Int a, Int b, Int c) {
    return {std::move(a), std::move(b), std::move(c), LinearConstraint::Rel::Le};
}

}  // namespace pairkit

#endif
