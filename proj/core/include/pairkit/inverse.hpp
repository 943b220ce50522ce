#ifndef PAIRKIT_INVERSE_HPP
#define PAIRKIT_INVERSE_HPP

#include "pairkit/mapping.hpp"

namespace pairkit {

enum class InverseMethod { ClosedForm, ShellArithmetic, BoundedSearch };

struct InverseResult {
    Point2 point;
    InverseMethod method;
};

struct InverseResult3 {
    Point3 point;
    InverseMethod method;
};

// Closed form: w = (isqrt(1+8z)-1)/2, x = z - w(w+1)/2, y = w - x.
Point2 invert_cantor1(const Int& z);

// Unique preimage of z under a built-in mapping (dispatch by name); derived
// mappings (shift/rot names) fall back to a growing-box bounded search.
// Throws NotInImage when z is outside the image.
InverseResult invert(const PiecewiseMapping& m, const Int& z);

// Unique preimage under eval_p3d.
InverseResult3 invert_p3d(const Int& z);

// Unique preimage under eval_pkd for dimension k >= 1.
PointK invert_pkd(const Int& z, unsigned k);

const char* method_name(InverseMethod m);

}  // namespace pairkit

#endif
