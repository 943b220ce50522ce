#ifndef PAIRKIT_FITTER_HPP
#define PAIRKIT_FITTER_HPP

#include "pairkit/inverse.hpp"
#include "pairkit/mapping.hpp"

namespace pairkit {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

struct Sample {
    Point2 p;
    Int value;
};

struct Sample3 {
    Point3 p;
    Int value;
};

// Inclusive axis-aligned lattice box.
struct Box2 {
    Int x0, x1, y0, y1;
};

// Rows [x^2, xy, y^2, x, y, 1]; right-hand side is the sample values.
std::pair<RatMat, RatVec> build_system(const std::vector<Sample>& samples);

// Exact determinant by rational Gaussian elimination (any square size).
Rational det(const RatMat& m);
Rational det6(const RatMat& m);

// Unique solution; throws SingularSystem when det = 0.
RatVec solve_exact(const RatMat& m, const RatVec& rhs);

// Full solution set of a possibly singular system: x = particular + span(null
// basis).  consistent = false means no solution at all (then particular/null
// are empty).
struct SolutionFamily {
    bool consistent = true;
    std::size_t rank = 0;
    RatVec particular;            // empty iff inconsistent
    std::vector<RatVec> nullspace;  // basis of the homogeneous solutions
};
SolutionFamily solve_family(const RatMat& m, const RatVec& rhs);

enum class FitValidation { Valid, Invalid, Singular };

struct Mismatch {
    Point2 p;
    Int expected;       // reference value
    Rational fitted;    // what the form produced
};

struct FitReport {
    std::optional<QuadForm> form;  // absent when singular
    Rational determinant;
    FitValidation validation = FitValidation::Singular;
    std::vector<Mismatch> mismatches;
    std::vector<Sample> samples;
};

// Mismatches of `form` against the reference on every in-domain point of the
// window (exceptional and excluded points are skipped: the form is a single
// polynomial piece, the reference decides membership).
std::vector<Mismatch> validate_form(const QuadForm& form, const PiecewiseMapping& reference,
                                    const Box2& window);

// Bounding box of the sample coordinates expanded by `margin` on each side.
Box2 default_window(const std::vector<Sample>& samples, const Int& margin = 3);

// Fit six samples, then check against the reference over the window (default:
// sample bounding box + 3).  A singular system yields validation = Singular.
FitReport fit_and_validate(const std::vector<Sample>& samples, const PiecewiseMapping& reference,
                           std::optional<Box2> window = std::nullopt);

// Exact 20-coefficient cubic from twenty 3D samples (monomial order of
// CubicForm3D).  Throws SingularSystem.
CubicForm3D fit3d(const std::vector<Sample3>& samples);

// The canonical fit set for one region of a bijective mapping: walk the image
// values upward (via invert), keep points claimed by the region whose rows
// increase the system rank, stop at six.  Guarantees a nonsingular fit whose
// unique solution is the region's own form.
std::vector<Sample> initial_samples(const PiecewiseMapping& m, std::size_t region_index = 0);

const char* validation_name(FitValidation v);

}  // namespace pairkit

#endif
