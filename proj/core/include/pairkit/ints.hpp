#ifndef PAIRKIT_INTS_HPP
#define PAIRKIT_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace pairkit {

// Exact signed integer; all arithmetic in the library goes through this type.
using Int = boost::multiprecision::cpp_int;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInImage : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Step function, open at zero: H(v<=0)=0, H(v>0)=1.
inline Int heaviside(const Int& v) { return v > 0 ? 1 : 0; }

// Step function closed at zero: H(v>=0)=1.  Integer-lattice form of H(x+eps), eps>0.
inline Int heaviside_plus(const Int& v) { return v >= 0 ? 1 : 0; }

inline Int sgn(const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign step closed at zero: +1 for v>=0, -1 for v<0.
inline Int sgn_plus(const Int& v) { return v >= 0 ? 1 : -1; }

// Floor square root by Newton iteration; no floating point anywhere.
inline Int isqrt(const Int& n) {
    if (n < 0) throw DomainError("isqrt of negative value");
    if (n == 0) return 0;
    unsigned bits = boost::multiprecision::msb(n);
    Int x = Int(1) << (bits / 2 + 1);
    for (;;) {
        Int y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    return x;
}

inline Int require_nat(const Int& v, const char* what = "value") {
    if (v < 0) throw DomainError(std::string(what) + " must be >= 0");
    return v;
}

}  // namespace pairkit

#endif
