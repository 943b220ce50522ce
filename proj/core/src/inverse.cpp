#include "pairkit/inverse.hpp"

namespace pairkit {

namespace {

Int tri(const Int& s) { return s * (s + 1) / 2; }

// Largest w with w(w+1)/2 <= z.
Int w_of(const Int& z) { return (isqrt(8 * z + 1) - 1) / 2; }

Point2 inv_cantor2(const Int& z) {
    Int w = w_of(z), y = z - tri(w);
    return {w - y, y};
}

Point2 inv_triangular(const Int& z) {
    Int x = w_of(z);
    return {x, z - tri(x)};
}

Point2 inv_triangle_x(const Int& z) {
    Int x = isqrt(z);
    return {x, z - x * (x + 1)};
}

Point2 inv_triangle_y(const Int& z) {
    Int y = isqrt(z);
    return {y * (y + 1) - z, y};
}

Point2 inv_rosenberg_strong(const Int& z) {
    Int k = isqrt(z);
    if (z <= k * k + k) return {k, z - k * k};
    return {k * k + 2 * k - z, k};
}

Point2 inv_half_square_spiral(const Int& z) {
    if (z == 0) return {0, 0};
    Int k = (isqrt(8 * z + 1) + 1) / 4;
    Int t = z - (2 * k * k - k);
    if (t <= k) return {t, -k};
    if (t <= 3 * k) return {k, t - 2 * k};
    return {4 * k - t, k};
}

Point2 inv_rhombus_spiral(const Int& z) {
    if (z == 0) return {0, 0};
    Int n = (isqrt(2 * z - 1) + 1) / 2;
    Int t = z - (2 * n * n - 2 * n + 1);
    Int q = t / n, i = t % n;
    switch (static_cast<int>(q)) {
        case 0: return {n - i, i};
        case 1: return {-i, n - i};
        case 2: return {-(n - i), -i};
        default: return {i, -(n - i)};
    }
}

Point2 inv_square_spiral(const Int& z) {
    if (z == 0) return {0, 0};
    Int k = (isqrt(z) + 1) / 2;
    Int t = z - (2 * k - 1) * (2 * k - 1);
    if (t <= k) return {k, t};
    if (t <= 3 * k) return {2 * k - t, k};
    if (t <= 5 * k) return {-k, 4 * k - t};
    if (t <= 7 * k) return {t - 6 * k, -k};
    return {k, t - 8 * k};
}

Point2 inv_rectangle_spiral(const Int& z) {
    static const Point2 small[12] = {{0, 0}, {1, -1}, {1, 0},  {1, 1},  {0, 1},  {-1, 1},
                                     {-1, 0}, {-1, -1}, {-1, -2}, {0, -2}, {1, -2}, {2, -2}};
    if (z <= 11) return small[static_cast<std::size_t>(z)];
    Int n = (isqrt(4 * z + 1) + 1) / 4;
    Int t = z - (4 * n * n - 2 * n);
    if (t <= 2 * n - 1) return {n, t - n + 1};
    if (t <= 4 * n - 1) return {4 * n * n + n - 1 - z, n};
    if (t <= 6 * n - 1) return {-n, 4 * n * n + 3 * n - 1 - z};
    return {z - 4 * n * n - 5 * n, -(n + 1)};
}

Point2 inv_connected_triangle(const Int& z) {
    if (z <= 8) return inv_triangle_x(z);
    Int u = z - 9, r = w_of(u);
    return {r + 3, u - tri(r)};
}

Point2 inv_saw(const Int& z, const Int& n) {
    Int c = z / n, y = z % n;
    return {c + y, y};
}

Point2 inv_saw3(const Int& z) {
    static const Point2 small[3] = {{0, 0}, {1, 0}, {0, 1}};
    if (z <= 2) return small[static_cast<std::size_t>(z)];
    Int y = (z + 3) % 3;
    return {(z + 3) / 3 - y, y};
}

Point2 inv_zigzag(const Int& z) {
    if (z % 2 == 0) return inv_half_square_spiral(z / 2);
    Point2 p = inv_half_square_spiral((z - 1) / 2);
    return {-1 - p.x, p.y};
}

Point2 inv_zigzag_z(const Int& z) {
    if (z >= 0) return inv_half_square_spiral(z);
    Point2 p = inv_half_square_spiral(-z - 1);
    return {-1 - p.x, p.y};
}

Point2 inv_alternating(const Int& z) {
    Int w = w_of(z);
    if (w % 2 == 1) {
        Int x = z - tri(w);
        return {x, w - x};
    }
    Int y = z - tri(w);
    return {w - y, y};
}

// Growing-ring scan of the domain; exact, used for derived mappings only.
Point2 bounded_search(const PiecewiseMapping& m, const Int& z) {
    Int limit = 4 * isqrt(abs(z) + 1) + 1024;
    for (Int L = 0; L <= limit; ++L) {
        auto probe = [&](const Point2& p) -> bool {
            if (!m.in_domain(p)) return false;
            return m.eval(p) == z;
        };
        if (L == 0) {
            if (probe({0, 0})) return {0, 0};
            continue;
        }
        for (Int x = -L; x <= L; ++x) {
            if (probe({x, L})) return {x, L};
            if (probe({x, -L})) return {x, -L};
        }
        for (Int y = -L + 1; y <= L - 1; ++y) {
            if (probe({L, y})) return {L, y};
            if (probe({-L, y})) return {-L, y};
        }
    }
    throw NotInImage("no preimage of " + z.str() + " under " + m.name() +
                     " within the search bound");
}

}  // namespace

Point2 invert_cantor1(const Int& z) {
    require_nat(z, "z");
    Int w = w_of(z), x = z - tri(w);
    return {x, w - x};
}

InverseResult invert(const PiecewiseMapping& m, const Int& z) {
    if (m.image_kind() == ImageKind::N0 && z < 0)
        throw NotInImage(z.str() + " is negative but " + m.name() + " has image N0");

    const std::string& name = m.name();
    std::string base = name.substr(0, name.find('~'));
    if (base != name) return {bounded_search(m, z), InverseMethod::BoundedSearch};

    std::optional<Int> param;
    if (auto open = base.find('('); open != std::string::npos) {
        param = Int(base.substr(open + 1, base.size() - open - 2));
        base = base.substr(0, open);
    }

    if (base == "cantor1") return {invert_cantor1(z), InverseMethod::ClosedForm};
    if (base == "cantor2") return {inv_cantor2(z), InverseMethod::ClosedForm};
    if (base == "cantor1_rot") {
        Point2 p = invert_cantor1(z);
        return {{p.y, -p.x}, InverseMethod::ClosedForm};
    }
    if (base == "triangular") return {inv_triangular(z), InverseMethod::ClosedForm};
    if (base == "triangle_x") return {inv_triangle_x(z), InverseMethod::ClosedForm};
    if (base == "triangle_y") return {inv_triangle_y(z), InverseMethod::ClosedForm};
    if (base == "rosenberg_strong") return {inv_rosenberg_strong(z), InverseMethod::ShellArithmetic};
    if (base == "half_square_spiral")
        return {inv_half_square_spiral(z), InverseMethod::ShellArithmetic};
    if (base == "rhombus_spiral") return {inv_rhombus_spiral(z), InverseMethod::ShellArithmetic};
    if (base == "square_spiral") return {inv_square_spiral(z), InverseMethod::ShellArithmetic};
    if (base == "rectangle_spiral")
        return {inv_rectangle_spiral(z), InverseMethod::ShellArithmetic};
    if (base == "connected_triangle")
        return {inv_connected_triangle(z), InverseMethod::ShellArithmetic};
    if (base == "saw") return {inv_saw(z, *param), InverseMethod::ClosedForm};
    if (base == "saw2_family") return {inv_saw(z, 2), InverseMethod::ClosedForm};
    if (base == "comb") return {{z / *param, z % *param}, InverseMethod::ClosedForm};
    if (base == "saw3") return {inv_saw3(z), InverseMethod::ClosedForm};
    if (base == "zigzag_full_plane") return {inv_zigzag(z), InverseMethod::ShellArithmetic};
    if (base == "zigzag_full_plane_z") return {inv_zigzag_z(z), InverseMethod::ShellArithmetic};
    if (base == "alternating") return {inv_alternating(z), InverseMethod::ClosedForm};
    if (base == "sheared") {
        Point2 p = invert_cantor1(z);
        return {{p.x - *param * p.y, p.y}, InverseMethod::ClosedForm};
    }
    return {bounded_search(m, z), InverseMethod::BoundedSearch};
}

InverseResult3 invert_p3d(const Int& z) {
    require_nat(z, "z");
    auto tet = [](const Int& n) { return n * (n + 1) * (n + 2) / 6; };
    // Plane index: largest N with tet(N) <= z, bracketed from an isqrt bound
    // (tet(N) > N^3/6, so N <= isqrt(isqrt(36 z^... )) is messy; grow instead).
    Int N = 0;
    while (tet(N + 1) <= z) {
        Int step = 1;
        while (tet(N + step * 2) <= z) step *= 2;
        N += step;
    }
    Int t = z - tet(N);
    Int j = w_of(t), r = t - tri(j);
    return {{j - r, r, N - j}, InverseMethod::ShellArithmetic};
}

PointK invert_pkd(const Int& z, unsigned k) {
    require_nat(z, "z");
    if (k < 1) throw DomainError("invert_pkd requires k >= 1");
    auto binom = [](const Int& n, unsigned j) {
        if (n < Int(j)) return Int(0);
        Int r = 1;
        for (unsigned i = 1; i <= j; ++i) r = r * (n - Int(j) + i) / i;
        return r;
    };
    // Greedy combinatorial number system: z = sum_j C(m_j, j), m_j strictly
    // increasing; m_j = s_j + j - 1 recovers the partial coordinate sums.
    std::vector<Int> m(k);
    Int rem = z;
    for (unsigned j = k; j >= 1; --j) {
        Int lo = Int(j) - 1, hi = lo;
        while (binom(hi + 1, j) <= rem) hi = 2 * hi + 2;
        while (lo < hi) {
            Int mid = (lo + hi + 1) / 2;
            if (binom(mid, j) <= rem)
                lo = mid;
            else
                hi = mid - 1;
        }
        m[j - 1] = lo;
        rem -= binom(lo, j);
    }
    if (rem != 0) throw std::logic_error("invert_pkd: greedy decomposition left a remainder");
    PointK c(k);
    Int prev_s = 0;
    for (unsigned j = 1; j <= k; ++j) {
        Int s = m[j - 1] - Int(j) + 1;
        c[j - 1] = s - prev_s;
        prev_s = s;
    }
    return c;
}

const char* method_name(InverseMethod m) {
    switch (m) {
        case InverseMethod::ClosedForm: return "closed_form";
        case InverseMethod::ShellArithmetic: return "shell_arithmetic";
        case InverseMethod::BoundedSearch: return "bounded_search";
    }
    return "?";
}

}  // namespace pairkit
