#ifndef PAIRKIT_MAPPING_HPP
#define PAIRKIT_MAPPING_HPP

#include "pairkit/quadform.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pairkit {

enum class ImageKind { N0, Z };

struct Region {
    RegionPredicate where;
    QuadForm form;
};

// A named pairing mapping: ordered regions with exact polynomial pieces,
// a finite table of exceptional values (spiral origins) and excluded points.
// Immutable after construction; evaluation is pure.
class PiecewiseMapping {
public:
    PiecewiseMapping(std::string name, std::vector<Region> regions,
                     std::map<Point2, Int> exceptional, std::set<Point2> excluded,
                     RegionPredicate domain, ImageKind image)
        : name_(std::move(name)),
          regions_(std::move(regions)),
          exceptional_(std::move(exceptional)),
          excluded_(std::move(excluded)),
          domain_(std::move(domain)),
          image_(std::move(image)) {}

    const std::string& name() const { return name_; }
    const std::vector<Region>& regions() const { return regions_; }
    const std::map<Point2, Int>& exceptional_values() const { return exceptional_; }
    const std::set<Point2>& excluded_points() const { return excluded_; }
    const RegionPredicate& domain() const { return domain_; }
    ImageKind image_kind() const { return image_; }

    bool in_domain(const Point2& p) const {
        if (excluded_.count(p)) return false;
        if (exceptional_.count(p)) return true;
        // The domain predicate is an outer bound; for non-convex domains
        // (e.g. a triangle joined to a half-strip) a point also needs a region.
        return domain_.contains(p) && region_index_of(p).has_value();
    }

    // Index of the region claiming p, or nullopt (exceptional / out of domain).
    std::optional<std::size_t> region_index_of(const Point2& p) const {
        for (std::size_t i = 0; i < regions_.size(); ++i)
            if (regions_[i].where.contains(p)) return i;
        return std::nullopt;
    }

    Int eval(const Point2& p) const;

    // Raw polynomial value of one region at p, domain ignored.
    Rational eval_unchecked(const Point2& p, std::size_t region_index) const;

private:
    std::string name_;
    std::vector<Region> regions_;
    std::map<Point2, Int> exceptional_;
    std::set<Point2> excluded_;
    RegionPredicate domain_;
    ImageKind image_;
};

// ---- built-in catalogue ----

// Ids: cantor1, cantor2, cantor1_rot, triangular, triangle_x, triangle_y,
// rosenberg_strong, half_square_spiral, rhombus_spiral, square_spiral,
// rectangle_spiral, connected_triangle, saw(n>=2), comb(n>=2), saw3,
// zigzag_full_plane, zigzag_full_plane_z, alternating, sheared(k>=0).
PiecewiseMapping builtin(const std::string& map_id, std::optional<Int> param = std::nullopt);

// Parses "name" or "name(param)" and dispatches to builtin().
PiecewiseMapping builtin_from_spec(const std::string& spec);

// Ids accepted by builtin(), parameterized families listed as "saw(n)" etc.
std::vector<std::string> builtin_ids();

// One-parameter family of width-2 saws: P = (2+a) y^2 + 2x - (3+a) y.
PiecewiseMapping saw2_family(const Int& a);

// ---- combinators ----

// Every value v becomes k1*v + k2.
PiecewiseMapping affine_image(const PiecewiseMapping& m, const Int& k1, const Int& k2);

// eval'(p) = eval(p - (k1,k2)); domain translated by (k1,k2).
PiecewiseMapping shift_domain(const PiecewiseMapping& m, const Int& k1, const Int& k2);

// Clockwise quarter turns; one turn evaluates the original at (-y, x).
PiecewiseMapping rotate_quarter(const PiecewiseMapping& m, const Int& quarters);

// f applied to the image; the result need not be polynomial, so it is an
// evaluator, not a PiecewiseMapping.
class MappedEvaluator {
public:
    MappedEvaluator(PiecewiseMapping base, std::function<Int(const Int&)> f)
        : base_(std::move(base)), f_(std::move(f)) {}
    Int eval(const Point2& p) const { return f_(base_.eval(p)); }
    const PiecewiseMapping& base() const { return base_; }

private:
    PiecewiseMapping base_;
    std::function<Int(const Int&)> f_;
};
MappedEvaluator compose_image(const PiecewiseMapping& m, std::function<Int(const Int&)> f);

// c^{-1}(C1(p)); asserts the closed form (x+y, x) on the way out.
Point2 b_transform(const Point2& p);

// ---- direct evaluators ----

// Single-formula rhombus spiral (sign/step selector form); origin undefined.
Int rhombus_consolidated(const Point2& p);

// 3D Cantor cubic, exact; the /6 always divides.
Int eval_p3d(const Point3& p);

// Canonical k-dimensional Cantor value, binomial-sum orientation.
Int eval_pkd(const PointK& p);

// Coordinate permutation reconciling eval_pkd (k=3) with eval_p3d:
// eval_pkd({x,y,z}) == eval_p3d({perm applied}).  Returns indices {1,0,2},
// i.e. eval_pkd(x,y,z) == eval_p3d(y,x,z); verified by a scan.
std::array<int, 3> pkd_p3d_permutation();

}  // namespace pairkit

#endif
