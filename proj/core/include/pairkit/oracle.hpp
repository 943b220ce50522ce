#ifndef PAIRKIT_ORACLE_HPP
#define PAIRKIT_ORACLE_HPP

#include "pairkit/mapping.hpp"

#include <iosfwd>

namespace pairkit {

// Geometric enumeration order of a mapping's image: entry i is the point whose
// value is i.  Produced purely by the walk rule, never by the polynomial.
struct EnumerationTrace {
    std::string map_id;
    std::vector<Point2> points;  // points[i] has value i
};

struct EnumerationTrace3 {
    std::string map_id;
    std::vector<Point3> points;
};

// First n points of the built-in walk; map_id accepts the same "name" /
// "name(param)" grammar as builtin_from_spec.  Throws DomainError for maps
// without a defined walk (derived/composed maps, the Z-image zigzag).
EnumerationTrace enumerate_walk(const std::string& map_id, std::size_t n);

// 3D walks: "p3d" (plane sweep, z decreasing) and "pkd3" (colex shells).
EnumerationTrace3 enumerate_walk3(const std::string& map_id, std::size_t n);

struct BijectionReport {
    bool ok = true;
    std::size_t checked = 0;
    // First divergence, when !ok:
    std::optional<Point2> at;
    std::optional<Point3> at3;
    Int expected;  // trace index
    Int got;       // polynomial value
    std::string detail;
};

// Polynomial-vs-walk equivalence on the first n values.
BijectionReport verify_bijection(const PiecewiseMapping& m, std::size_t n);
BijectionReport verify_bijection(const PiecewiseMapping& m, const EnumerationTrace& trace);
BijectionReport verify_bijection3(const std::string& map_id, std::size_t n);

struct NonConstantShift : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TileAxis { Rows, Cols };

// Raw-form differences between consecutive tiles (rows of constant y, or
// columns of constant x) of one region: entry i is form(t0+i+1) - form(t0+i),
// checked constant along the tile over probe range [-50, 50].  Throws
// NonConstantShift if any difference varies along the tile.
std::vector<Int> tile_profile(const PiecewiseMapping& m, std::size_t region_index, TileAxis axis,
                              const Int& t0, const Int& t1);

// CSV lines "x,y,value" / "x,y,z,value".
void trace_to_csv(const EnumerationTrace& t, std::ostream& os);
void trace_to_csv(const EnumerationTrace3& t, std::ostream& os);

}  // namespace pairkit

#endif
