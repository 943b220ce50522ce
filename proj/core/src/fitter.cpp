#include "pairkit/fitter.hpp"

namespace pairkit {

namespace {

RatVec quad_row(const Point2& p) {
    Rational x(p.x), y(p.y);
    return {x * x, x * y, y * y, x, y, Rational(1)};
}

// Row-echelon elimination with partial pivoting on magnitude.  Returns the
// echelon form of [m | rhs...] in place; `det_out` (if given) accumulates the
// determinant of the leading square part.
void eliminate(RatMat& a, Rational* det_out) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    Rational d(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = r;
        for (std::size_t i = r + 1; i < rows; ++i)
            if (a[i][c].abs() > a[best][c].abs()) best = i;
        if (a[best][c] == Rational(0)) {
            d = Rational(0);
            continue;
        }
        if (best != r) {
            std::swap(a[best], a[r]);
            d = -d;
        }
        d *= a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == Rational(0)) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    if (det_out) *det_out = d;
}

}  // namespace

std::pair<RatMat, RatVec> build_system(const std::vector<Sample>& samples) {
    if (samples.size() != 6)
        throw DomainError("build_system needs exactly 6 samples, got " +
                          std::to_string(samples.size()));
    RatMat m;
    RatVec rhs;
    for (const auto& s : samples) {
        m.push_back(quad_row(s.p));
        rhs.push_back(Rational(s.value));
    }
    return {std::move(m), std::move(rhs)};
}

Rational det(const RatMat& m) {
    if (m.empty()) return Rational(1);
    for (const auto& row : m)
        if (row.size() != m.size()) throw DomainError("det requires a square matrix");
    RatMat a = m;
    Rational d;
    eliminate(a, &d);
    return d;
}

Rational det6(const RatMat& m) {
    if (m.size() != 6) throw DomainError("det6 requires a 6x6 matrix");
    return det(m);
}

RatVec solve_exact(const RatMat& m, const RatVec& rhs) {
    std::size_t n = m.size();
    if (rhs.size() != n) throw DomainError("solve_exact: size mismatch");
    RatMat a = m;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw DomainError("solve_exact requires a square matrix");
        a[i].push_back(rhs[i]);
    }
    Rational d;
    eliminate(a, &d);
    if (d == Rational(0)) throw SingularSystem("coefficient matrix is singular (det = 0)");
    RatVec x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = a[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

SolutionFamily solve_family(const RatMat& m, const RatVec& rhs) {
    std::size_t rows = m.size(), n = rows ? m[0].size() : 0;
    RatMat a = m;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(rhs[i]);
    eliminate(a, nullptr);

    // Identify pivot columns of the echelon form.
    std::vector<std::ptrdiff_t> pivot_of_row(rows, -1);
    std::vector<bool> is_pivot(n, false);
    SolutionFamily out;
    for (std::size_t i = 0, c = 0; i < rows; ++i) {
        while (c < n && a[i][c] == Rational(0)) ++c;
        if (c == n) {
            if (a[i][n] != Rational(0)) {
                out.consistent = false;
                return out;
            }
            continue;
        }
        pivot_of_row[i] = static_cast<std::ptrdiff_t>(c);
        is_pivot[c] = true;
        ++out.rank;
    }

    auto back_substitute = [&](const RatVec& rhs_col, const RatVec& free_vals) {
        RatVec x(n);
        for (std::size_t c = 0; c < n; ++c)
            if (!is_pivot[c]) x[c] = free_vals[c];
        for (std::size_t i = rows; i-- > 0;) {
            if (pivot_of_row[i] < 0) continue;
            auto pc = static_cast<std::size_t>(pivot_of_row[i]);
            Rational acc = rhs_col[i];
            for (std::size_t j = pc + 1; j < n; ++j) acc -= a[i][j] * x[j];
            x[pc] = acc / a[i][pc];
        }
        return x;
    };

    RatVec rhs_echelon(rows), zero_rhs(rows);
    for (std::size_t i = 0; i < rows; ++i) rhs_echelon[i] = a[i][n];
    out.particular = back_substitute(rhs_echelon, RatVec(n));
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        RatVec free_vals(n);
        free_vals[c] = Rational(1);
        out.nullspace.push_back(back_substitute(zero_rhs, free_vals));
    }
    return out;
}

std::vector<Mismatch> validate_form(const QuadForm& form, const PiecewiseMapping& reference,
                                    const Box2& window) {
    std::vector<Mismatch> out;
    for (Int x = window.x0; x <= window.x1; ++x)
        for (Int y = window.y0; y <= window.y1; ++y) {
            Point2 p{x, y};
            if (!reference.in_domain(p)) continue;
            if (reference.exceptional_values().count(p)) continue;
            Int expected = reference.eval(p);
            Rational got = form.eval(p);
            if (got != Rational(expected)) out.push_back({p, expected, got});
        }
    return out;
}

Box2 default_window(const std::vector<Sample>& samples, const Int& margin) {
    if (samples.empty()) throw DomainError("default_window: no samples");
    Box2 b{samples[0].p.x, samples[0].p.x, samples[0].p.y, samples[0].p.y};
    for (const auto& s : samples) {
        b.x0 = std::min(b.x0, s.p.x);
        b.x1 = std::max(b.x1, s.p.x);
        b.y0 = std::min(b.y0, s.p.y);
        b.y1 = std::max(b.y1, s.p.y);
    }
    b.x0 -= margin;
    b.x1 += margin;
    b.y0 -= margin;
    b.y1 += margin;
    return b;
}

FitReport fit_and_validate(const std::vector<Sample>& samples, const PiecewiseMapping& reference,
                           std::optional<Box2> window) {
    auto [m, rhs] = build_system(samples);
    FitReport report;
    report.samples = samples;
    report.determinant = det6(m);
    if (report.determinant == Rational(0)) {
        report.validation = FitValidation::Singular;
        return report;
    }
    RatVec x = solve_exact(m, rhs);
    report.form = QuadForm{x[0], x[1], x[2], x[3], x[4], x[5]};
    report.mismatches =
        validate_form(*report.form, reference, window ? *window : default_window(samples));
    report.validation =
        report.mismatches.empty() ? FitValidation::Valid : FitValidation::Invalid;
    return report;
}

CubicForm3D fit3d(const std::vector<Sample3>& samples) {
    if (samples.size() != 20)
        throw DomainError("fit3d needs exactly 20 samples, got " +
                          std::to_string(samples.size()));
    RatMat m;
    RatVec rhs;
    for (const auto& s : samples) {
        auto mono = CubicForm3D::monomials(s.p);
        RatVec row;
        for (const Int& v : mono) row.push_back(Rational(v));
        m.push_back(std::move(row));
        rhs.push_back(Rational(s.value));
    }
    RatVec x = solve_exact(m, rhs);
    CubicForm3D f;
    for (std::size_t i = 0; i < 20; ++i) f.c[i] = x[i];
    return f;
}

std::vector<Sample> initial_samples(const PiecewiseMapping& m, std::size_t region_index) {
    if (region_index >= m.regions().size())
        throw IndexError(m.name() + ": no region " + std::to_string(region_index));
    std::vector<Sample> out;
    RatMat reduced;  // independent rows kept in reduced form
    const Int scan_limit = 100000;
    for (Int z = 0; z <= scan_limit && out.size() < 6; ++z) {
        Point2 p = invert(m, z).point;
        auto ri = m.region_index_of(p);
        if (!ri || *ri != region_index) continue;
        RatVec row = quad_row(p);
        // reduce against the accepted rows; accept iff something survives
        RatVec r = row;
        for (const auto& base : reduced) {
            std::size_t lead = 0;
            while (lead < 6 && base[lead] == Rational(0)) ++lead;
            if (lead < 6 && r[lead] != Rational(0)) {
                Rational f = r[lead] / base[lead];
                for (std::size_t j = lead; j < 6; ++j) r[j] -= f * base[j];
            }
        }
        bool nonzero = false;
        for (const auto& v : r) nonzero = nonzero || v != Rational(0);
        if (!nonzero) continue;
        reduced.push_back(std::move(r));
        std::sort(reduced.begin(), reduced.end(), [](const RatVec& a, const RatVec& b) {
            auto lead = [](const RatVec& v) {
                std::size_t i = 0;
                while (i < 6 && v[i] == Rational(0)) ++i;
                return i;
            };
            return lead(a) < lead(b);
        });
        out.push_back({p, m.eval(p)});
    }
    if (out.size() < 6)
        throw DomainError(m.name() + ": region " + std::to_string(region_index) +
                          " spans fewer than six independent sample rows");
    return out;
}

const char* validation_name(FitValidation v) {
    switch (v) {
        case FitValidation::Valid: return "valid";
        case FitValidation::Invalid: return "invalid";
        case FitValidation::Singular: return "singular";
    }
    return "?";
}

}  // namespace pairkit
