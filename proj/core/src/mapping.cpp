#include "pairkit/mapping.hpp"

#include <sstream>

namespace pairkit {

namespace {

Rational half(int n) { return Rational(n, 2); }

QuadForm qf(Rational a6, Rational a5, Rational a4, Rational a3, Rational a2, Rational a1) {
    return {std::move(a6), std::move(a5), std::move(a4), std::move(a3), std::move(a2),
            std::move(a1)};
}

RegionPredicate pred(std::vector<LinearConstraint> cs) {
    RegionPredicate r;
    r.constraints = std::move(cs);
    return r;
}

const QuadForm kC1 = qf(half(1), 1, half(1), half(3), half(1), 0);
const QuadForm kC2 = qf(half(1), 1, half(1), half(1), half(3), 0);

}  // namespace

Int PiecewiseMapping::eval(const Point2& p) const {
    if (excluded_.count(p))
        throw DomainError(name_ + " is not defined at " + p.x.str() + "," + p.y.str());
    if (auto it = exceptional_.find(p); it != exceptional_.end()) return it->second;
    auto idx = region_index_of(p);
    if (!idx)
        throw DomainError(name_ + ": point " + p.x.str() + "," + p.y.str() + " outside domain");
    Rational v = regions_[*idx].form.eval(p);
    return v.as_int();
}

Rational PiecewiseMapping::eval_unchecked(const Point2& p, std::size_t region_index) const {
    if (region_index >= regions_.size())
        throw IndexError(name_ + ": no region " + std::to_string(region_index));
    return regions_[region_index].form.eval(p);
}

PiecewiseMapping builtin(const std::string& id, std::optional<Int> param) {
    auto no_param = [&] {
        if (param) throw DomainError("mapping '" + id + "' takes no parameter");
    };
    std::vector<Region> regions;
    std::map<Point2, Int> exceptional;
    std::set<Point2> excluded;
    RegionPredicate domain;
    ImageKind image = ImageKind::N0;

    if (id == "cantor1" || id == "cantor2" || id == "alternating") {
        no_param();
        domain = pred({x_ge(0), y_ge(0)});
        if (id == "cantor1") {
            regions.push_back({domain, kC1});
        } else if (id == "cantor2") {
            regions.push_back({domain, kC2});
        } else {
            // C1 on odd anti-diagonals, C2 on even.
            RegionPredicate odd = domain, even = domain;
            odd.parity = ParityConstraint{1, 1, 1};
            even.parity = ParityConstraint{1, 1, 0};
            regions.push_back({odd, kC1});
            regions.push_back({even, kC2});
        }
    } else if (id == "cantor1_rot") {
        no_param();
        domain = pred({x_ge(0), y_le(0)});
        regions.push_back({domain, qf(half(1), -1, half(1), half(1), half(-3), 0)});
    } else if (id == "triangular") {
        no_param();
        domain = pred({y_ge(0), lin_ge(1, -1, 0)});  // 0 <= y <= x
        regions.push_back({domain, qf(half(1), 0, 0, half(1), 1, 0)});
    } else if (id == "triangle_x") {
        no_param();
        domain = pred({x_ge(0), lin_ge(1, 1, 0), lin_ge(1, -1, 0)});  // -x <= y <= x
        regions.push_back({domain, qf(1, 0, 0, 1, 1, 0)});
    } else if (id == "triangle_y") {
        no_param();
        domain = pred({y_ge(0), lin_ge(1, 1, 0), lin_le(1, -1, 0)});  // -y <= x <= y
        regions.push_back({domain, qf(0, 0, 1, -1, 1, 0)});
    } else if (id == "rosenberg_strong") {
        no_param();
        domain = pred({x_ge(0), y_ge(0)});
        // region I strictly left of y=x; the shared line carries equal values
        // and is claimed by region II.
        regions.push_back({pred({x_ge(0), lin_ge(-1, 1, -1)}), qf(0, 0, 1, -1, 2, 0)});
        regions.push_back({pred({y_ge(0), lin_ge(1, -1, 0)}), qf(1, 0, 0, 0, 1, 0)});
    } else if (id == "half_square_spiral") {
        no_param();
        domain = pred({x_ge(0)});
        regions.push_back(
            {pred({x_ge(0), y_ge(1), lin_ge(-1, 1, -1)}), qf(0, 0, 2, -1, 3, 0)});  // x < y
        regions.push_back(
            {pred({lin_ge(1, 1, 0), lin_ge(1, -1, 0)}), qf(2, 0, 0, 1, 1, 0)});  // |y| <= x
        regions.push_back(
            {pred({x_ge(0), y_le(-1), lin_ge(-1, -1, -1)}), qf(0, 0, 2, 1, 1, 0)});  // x < -y
    } else if (id == "rhombus_spiral") {
        no_param();
        exceptional[{0, 0}] = 0;
        RegionPredicate q1 = pred({x_ge(0), y_ge(0)});
        q1.exclude_points.push_back({0, 0});
        regions.push_back({q1, qf(2, 4, 2, -2, -1, 1)});
        regions.push_back({pred({x_le(-1), y_ge(0)}), qf(2, -4, 2, 0, -1, 1)});
        regions.push_back({pred({x_le(-1), y_le(-1)}), qf(2, 4, 2, 0, -1, 1)});
        regions.push_back({pred({x_ge(0), y_le(-1)}), qf(2, -4, 2, 2, -1, 1)});
    } else if (id == "square_spiral") {
        no_param();
        exceptional[{0, 0}] = 0;
        regions.push_back(
            {pred({x_ge(1), y_ge(0), lin_ge(1, -1, 0)}), qf(4, 0, 0, -4, 1, 1)});  // I
        regions.push_back(
            {pred({y_ge(1), lin_ge(1, 1, 0), lin_ge(-1, 1, -1)}), qf(0, 0, 4, -1, -2, 1)});  // II
        regions.push_back(
            {pred({x_le(-1), lin_ge(-1, 1, 0), lin_ge(-1, -1, -1)}), qf(4, 0, 0, 0, -1, 1)});
        regions.push_back(
            {pred({y_le(-1), lin_ge(1, -1, -1), lin_ge(-1, -1, 0)}), qf(0, 0, 4, 1, -2, 1)});
        regions.push_back(
            {pred({x_ge(1), y_le(-1), lin_ge(1, 1, -1)}), qf(4, 0, 0, 4, 1, 1)});  // V
    } else if (id == "rectangle_spiral") {
        no_param();
        exceptional[{0, 0}] = 0;
        excluded.insert({0, -1});
        domain.exclude_points.push_back({0, -1});
        // Region I leaves y=-x to region IV except at (1,-1), which exists
        // only because (0,-1) has no image value.
        RegionPredicate r1 = pred({x_ge(1), lin_ge(1, -1, 0), lin_ge(1, 1, -1)});
        r1.include_points.push_back({1, -1});
        regions.push_back({r1, qf(4, 0, 0, -1, 1, -1)});
        regions.push_back(
            {pred({y_ge(1), lin_ge(1, 1, 0), lin_ge(-1, 1, -1)}), qf(0, 0, 4, -1, 1, -1)});
        regions.push_back(
            {pred({x_le(-1), lin_ge(-1, 1, 0), lin_ge(-1, -1, -1)}), qf(4, 0, 0, -3, -1, -1)});
        regions.push_back(
            {pred({y_le(-2), lin_ge(1, -1, -1), lin_ge(-1, -1, 0)}), qf(0, 0, 4, 1, 3, -1)});
    } else if (id == "connected_triangle") {
        no_param();
        domain = pred({x_ge(0)});
        regions.push_back(
            {pred({x_ge(0), x_le(2), lin_ge(1, 1, 0), lin_ge(1, -1, 0)}), qf(1, 0, 0, 1, 1, 0)});
        regions.push_back(
            {pred({x_ge(3), y_ge(0), lin_ge(1, -1, -3)}), qf(half(1), 0, 0, half(-5), 1, 12)});
    } else if (id == "saw") {
        Int n = param.value_or(0);
        if (n < 2) throw DomainError("saw(n) requires n >= 2");
        // Table 1 saw-tooth domain: 0 <= y <= min(x, n-1).
        domain = pred({y_ge(0), y_le(n - 1), lin_ge(1, -1, 0)});
        regions.push_back({domain, qf(0, 0, 0, Rational(n), Rational(-(n - 1)), 0)});
    } else if (id == "comb") {
        Int n = param.value_or(0);
        if (n < 2) throw DomainError("comb(n) requires n >= 2");
        domain = pred({x_ge(0), y_ge(0), y_le(n - 1)});
        regions.push_back({domain, qf(0, 0, 0, Rational(n), 1, 0)});
    } else if (id == "saw3") {
        no_param();
        domain = pred({x_ge(0), y_ge(0), y_le(2)});
        regions.push_back({pred({x_ge(0), x_le(1), y_ge(0), y_le(2)}), kC2});
        regions.push_back({pred({x_ge(2), y_ge(0), y_le(2)}), qf(0, 0, 0, 3, 4, -3)});
    } else if (id == "zigzag_full_plane" || id == "zigzag_full_plane_z") {
        no_param();
        bool to_z = (id == "zigzag_full_plane_z");
        image = to_z ? ImageKind::Z : ImageKind::N0;
        // Right half: the half-square spiral (doubled for the N0 image);
        // left half: its mirror through x = -1/2 (odds, or -P-1).
        auto right = [&](QuadForm f) {
            if (to_z) return f;
            for (Rational* a : {&f.a6, &f.a5, &f.a4, &f.a3, &f.a2, &f.a1}) *a = *a * 2;
            return f;
        };
        auto left = [&](QuadForm f) {
            // substitute x -> -1-x, then 2P+1 (or -P-1 for the Z image)
            QuadForm g;
            g.a6 = f.a6;
            g.a5 = -f.a5;
            g.a4 = f.a4;
            g.a3 = f.a6 * 2 - f.a3;
            g.a2 = f.a2 - f.a5;
            g.a1 = f.a1 + f.a6 - f.a3;
            Rational s = to_z ? Rational(-1) : Rational(2);
            Rational t = to_z ? Rational(-1) : Rational(1);
            for (Rational* a : {&g.a6, &g.a5, &g.a4, &g.a3, &g.a2, &g.a1}) *a = *a * s;
            g.a1 += t;
            return g;
        };
        const QuadForm hI = qf(0, 0, 2, -1, 3, 0), hII = qf(2, 0, 0, 1, 1, 0),
                       hIII = qf(0, 0, 2, 1, 1, 0);
        regions.push_back({pred({x_ge(0), y_ge(1), lin_ge(-1, 1, -1)}), right(hI)});
        regions.push_back({pred({x_ge(0), lin_ge(1, 1, 0), lin_ge(1, -1, 0)}), right(hII)});
        regions.push_back({pred({x_ge(0), y_le(-1), lin_ge(-1, -1, -1)}), right(hIII)});
        regions.push_back({pred({x_le(-1), y_ge(1), lin_ge(1, 1, 0)}), left(hI)});
        regions.push_back({pred({x_le(-1), lin_ge(-1, 1, -1), lin_ge(-1, -1, -1)}), left(hII)});
        regions.push_back({pred({x_le(-1), y_le(-1), lin_ge(1, -1, 0)}), left(hIII)});
    } else if (id == "sheared") {
        Int k = param.value_or(-1);
        if (k < 0) throw DomainError("sheared(k) requires k >= 0");
        // C1(x + k*y, y): y >= 0 and x + k*y >= 0.
        domain = pred({y_ge(0), lin_ge(1, k, 0)});
        Rational kk(k);
        regions.push_back({domain, qf(half(1), kk + 1, (kk * kk + kk * 2 + 1) * half(1), half(3),
                                      (kk * 3 + 1) * half(1), 0)});
    } else {
        throw DomainError("unknown mapping id '" + id + "'");
    }

    std::string name = id;
    if (param) name += "(" + param->str() + ")";
    return PiecewiseMapping(std::move(name), std::move(regions), std::move(exceptional),
                            std::move(excluded), std::move(domain), image);
}

PiecewiseMapping builtin_from_spec(const std::string& spec) {
    auto open = spec.find('(');
    if (open == std::string::npos) return builtin(spec);
    if (spec.back() != ')') throw DomainError("malformed mapping spec '" + spec + "'");
    std::string id = spec.substr(0, open);
    std::string arg = spec.substr(open + 1, spec.size() - open - 2);
    if (arg.empty()) throw DomainError("malformed mapping spec '" + spec + "'");
    return builtin(id, Int(arg));
}

std::vector<std::string> builtin_ids() {
    return {"cantor1",
            "cantor2",
            "cantor1_rot",
            "triangular",
            "triangle_x",
            "triangle_y",
            "rosenberg_strong",
            "half_square_spiral",
            "rhombus_spiral",
            "square_spiral",
            "rectangle_spiral",
            "connected_triangle",
            "saw(n)",
            "comb(n)",
            "saw3",
            "zigzag_full_plane",
            "zigzag_full_plane_z",
            "alternating",
            "sheared(k)"};
}

PiecewiseMapping saw2_family(const Int& a) {
    Rational ra(a);
    RegionPredicate domain = pred({y_ge(0), y_le(1), lin_ge(1, -1, 0)});
    std::vector<Region> regions{{domain, qf(0, 0, ra + 2, 2, -(ra + 3), 0)}};
    return PiecewiseMapping("saw2_family(" + a.str() + ")", std::move(regions), {}, {},
                            std::move(domain), ImageKind::N0);
}

PiecewiseMapping affine_image(const PiecewiseMapping& m, const Int& k1, const Int& k2) {
    Rational r1(k1), r2(k2);
    std::vector<Region> regions = m.regions();
    for (auto& r : regions) {
        for (Rational* a : {&r.form.a6, &r.form.a5, &r.form.a4, &r.form.a3, &r.form.a2})
            *a = *a * r1;
        r.form.a1 = r.form.a1 * r1 + r2;
    }
    std::map<Point2, Int> exc;
    for (const auto& [p, v] : m.exceptional_values()) exc[p] = k1 * v + k2;
    ImageKind image =
        (m.image_kind() == ImageKind::N0 && k1 >= 1 && k2 >= 0) ? ImageKind::N0 : ImageKind::Z;
    return PiecewiseMapping(m.name() + "~affine(" + k1.str() + "," + k2.str() + ")",
                            std::move(regions), std::move(exc), m.excluded_points(), m.domain(),
                            image);
}

namespace {

QuadForm shift_form(const QuadForm& f, const Int& k1, const Int& k2) {
    Rational r1(k1), r2(k2);
    QuadForm g;
    g.a6 = f.a6;
    g.a5 = f.a5;
    g.a4 = f.a4;
    g.a3 = f.a3 - f.a6 * r1 * 2 - f.a5 * r2;
    g.a2 = f.a2 - f.a4 * r2 * 2 - f.a5 * r1;
    g.a1 = f.a1 + f.a6 * r1 * r1 + f.a5 * r1 * r2 + f.a4 * r2 * r2 - f.a3 * r1 - f.a2 * r2;
    return g;
}

RegionPredicate shift_pred(RegionPredicate p, const Int& k1, const Int& k2) {
    for (auto& c : p.constraints) c.c -= c.a * k1 + c.b * k2;
    if (p.parity) {
        Int r = (Int(p.parity->residue) + p.parity->a * k1 + p.parity->b * k2) % 2;
        if (r < 0) r += 2;
        p.parity->residue = static_cast<int>(r);
    }
    for (auto& q : p.include_points) q = {q.x + k1, q.y + k2};
    for (auto& q : p.exclude_points) q = {q.x + k1, q.y + k2};
    return p;
}

QuadForm rotate_form(const QuadForm& f) {
    // newF(x,y) = oldF(-y, x)
    return {f.a4, -f.a5, f.a6, f.a2, -f.a3, f.a1};
}

RegionPredicate rotate_pred(RegionPredicate p) {
    for (auto& c : p.constraints) {
        Int a = c.a, b = c.b;
        c.a = b;
        c.b = -a;
    }
    if (p.parity) {
        Int a = p.parity->a, b = p.parity->b;
        p.parity->a = b;
        p.parity->b = -a;
    }
    for (auto& q : p.include_points) q = {q.y, -q.x};
    for (auto& q : p.exclude_points) q = {q.y, -q.x};
    return p;
}

}  // namespace

PiecewiseMapping shift_domain(const PiecewiseMapping& m, const Int& k1, const Int& k2) {
    std::vector<Region> regions = m.regions();
    for (auto& r : regions) {
        r.form = shift_form(r.form, k1, k2);
        r.where = shift_pred(r.where, k1, k2);
    }
    std::map<Point2, Int> exc;
    for (const auto& [p, v] : m.exceptional_values()) exc[{p.x + k1, p.y + k2}] = v;
    std::set<Point2> excl;
    for (const auto& p : m.excluded_points()) excl.insert({p.x + k1, p.y + k2});
    return PiecewiseMapping(m.name() + "~shift(" + k1.str() + "," + k2.str() + ")",
                            std::move(regions), std::move(exc), std::move(excl),
                            shift_pred(m.domain(), k1, k2), m.image_kind());
}

PiecewiseMapping rotate_quarter(const PiecewiseMapping& m, const Int& quarters) {
    Int q = quarters % 4;
    if (q < 0) q += 4;
    std::vector<Region> regions = m.regions();
    std::map<Point2, Int> exc(m.exceptional_values().begin(), m.exceptional_values().end());
    std::set<Point2> excl(m.excluded_points().begin(), m.excluded_points().end());
    RegionPredicate domain = m.domain();
    for (Int i = 0; i < q; ++i) {
        for (auto& r : regions) {
            r.form = rotate_form(r.form);
            r.where = rotate_pred(r.where);
        }
        std::map<Point2, Int> e2;
        for (const auto& [p, v] : exc) e2[{p.y, -p.x}] = v;
        exc = std::move(e2);
        std::set<Point2> x2;
        for (const auto& p : excl) x2.insert({p.y, -p.x});
        excl = std::move(x2);
        domain = rotate_pred(domain);
    }
    return PiecewiseMapping(m.name() + "~rot(" + q.str() + ")", std::move(regions), std::move(exc),
                            std::move(excl), std::move(domain), m.image_kind());
}

MappedEvaluator compose_image(const PiecewiseMapping& m, std::function<Int(const Int&)> f) {
    return MappedEvaluator(m, std::move(f));
}

Point2 b_transform(const Point2& p) {
    if (p.x < 0 || p.y < 0) throw DomainError("b_transform requires a point of N0^2");
    Int s = p.x + p.y;
    Int z = s * (s + 1) / 2 + p.x;
    // invert the triangular mapping c(r, c0) = r(r+1)/2 + c0
    Int r = (isqrt(8 * z + 1) - 1) / 2;
    Int c0 = z - r * (r + 1) / 2;
    Point2 out{r, c0};
    if (out.x != p.x + p.y || out.y != p.x)
        throw std::logic_error("b_transform: c^-1(C1(p)) != (x+y, x)");
    return out;
}

Int rhombus_consolidated(const Point2& p) {
    if (p.x == 0 && p.y == 0) throw DomainError("consolidated rhombus formula undefined at origin");
    const Int &x = p.x, &y = p.y;
    return 2 * x * x + 4 * sgn(x) * sgn(y) * x * y + 2 * y * y -
           2 * heaviside(x) * sgn_plus(y) * x - y + 1;
}

Int eval_p3d(const Point3& p) {
    if (p.x < 0 || p.y < 0 || p.z < 0) throw DomainError("eval_p3d requires a point of N0^3");
    const Int &x = p.x, &y = p.y, &z = p.z;
    Int n = x * x * x + y * y * y + z * z * z +
            3 * (x * z * z + y * z * z + z * x * x + 2 * x * y * z + z * y * y + y * x * x +
                 x * y * y) +
            3 * (2 * x * x + 2 * y * y + z * z + 2 * x * z + 2 * y * z + 4 * x * y) + 5 * x +
            11 * y + 2 * z;
    if (n % 6 != 0) throw std::logic_error("eval_p3d numerator not divisible by 6");
    return n / 6;
}

namespace {
Int binom(const Int& n, unsigned k) {
    if (n < Int(k)) return 0;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - Int(k) + i) / i;
    return r;
}
}  // namespace

Int eval_pkd(const PointK& p) {
    if (p.empty()) throw DomainError("eval_pkd requires k >= 1");
    Int acc = 0, sum = 0;
    unsigned j = 0;
    for (const Int& c : p) {
        if (c < 0) throw DomainError("eval_pkd requires nonnegative coordinates");
        sum += c;
        ++j;
        acc += binom(sum + j - 1, j);
    }
    return acc;
}

std::array<int, 3> pkd_p3d_permutation() { return {1, 0, 2}; }

}  // namespace pairkit
