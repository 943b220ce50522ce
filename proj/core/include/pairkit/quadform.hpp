#ifndef PAIRKIT_QUADFORM_HPP
#define PAIRKIT_QUADFORM_HPP

#include "pairkit/lattice.hpp"
#include "pairkit/rational.hpp"

#include <array>

namespace pairkit {

// a6*x^2 + a5*xy + a4*y^2 + a3*x + a2*y + a1, exact rational coefficients.
struct QuadForm {
    Rational a6, a5, a4, a3, a2, a1;

    Rational eval(const Point2& p) const {
        return a6 * Rational(p.x * p.x) + a5 * Rational(p.x * p.y) + a4 * Rational(p.y * p.y) +
               a3 * Rational(p.x) + a2 * Rational(p.y) + a1;
    }

    std::array<Rational, 6> coeffs() const { return {a6, a5, a4, a3, a2, a1}; }
    static QuadForm from_coeffs(const std::array<Rational, 6>& c) {
        return {c[0], c[1], c[2], c[3], c[4], c[5]};
    }

    friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

// Full 3-variable cubic.  Monomial order is fixed (it is the serialization
// and fitting order): x^3 y^3 z^3 x^2y x^2z y^2x y^2z z^2x z^2y xyz
//                     x^2 y^2 z^2 xy xz yz x y z 1.
struct CubicForm3D {
    std::array<Rational, 20> c{};

    static std::array<Int, 20> monomials(const Point3& p) {
        const Int &x = p.x, &y = p.y, &z = p.z;
        return {x * x * x, y * y * y, z * z * z, x * x * y, x * x * z, y * y * x, y * y * z,
                z * z * x, z * z * y, x * y * z, x * x,     y * y,     z * z,     x * y,
                x * z,     y * z,     x,         y,         z,         Int(1)};
    }

    Rational eval(const Point3& p) const {
        auto m = monomials(p);
        Rational acc;
        for (int i = 0; i < 20; ++i) acc += c[i] * Rational(m[i]);
        return acc;
    }

    friend bool operator==(const CubicForm3D&, const CubicForm3D&) = default;
};

}  // namespace pairkit

#endif
