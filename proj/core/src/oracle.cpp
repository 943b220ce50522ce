#include "pairkit/oracle.hpp"

#include <ostream>

namespace pairkit {

namespace {

using Emit = std::function<bool(Point2)>;  // returns false when n reached

void walk_cantor1(const Emit& emit) {
    for (Int N = 0;; ++N)
        for (Int x = 0; x <= N; ++x)
            if (!emit({x, N - x})) return;
}

void walk_cantor2(const Emit& emit) {
    for (Int N = 0;; ++N)
        for (Int y = 0; y <= N; ++y)
            if (!emit({N - y, y})) return;
}

void walk_half_square_spiral(const Emit& emit) {
    if (!emit({0, 0})) return;
    for (Int k = 1;; ++k) {
        for (Int x = 0; x <= k; ++x)
            if (!emit({x, -k})) return;
        for (Int y = -k + 1; y <= k; ++y)
            if (!emit({k, y})) return;
        for (Int x = k - 1; x >= 0; --x)
            if (!emit({x, k})) return;
    }
}

void dispatch_walk(const std::string& base, const std::optional<Int>& param, const Emit& emit) {
    if (base == "cantor1") return walk_cantor1(emit);
    if (base == "cantor2") return walk_cantor2(emit);
    if (base == "cantor1_rot")
        return walk_cantor1([&](Point2 p) { return emit({p.y, -p.x}); });
    if (base == "triangular") {
        for (Int x = 0;; ++x)
            for (Int y = 0; y <= x; ++y)
                if (!emit({x, y})) return;
    }
    if (base == "triangle_x") {
        for (Int x = 0;; ++x)
            for (Int y = -x; y <= x; ++y)
                if (!emit({x, y})) return;
    }
    if (base == "triangle_y") {
        for (Int y = 0;; ++y)
            for (Int x = y; x >= -y; --x)
                if (!emit({x, y})) return;
    }
    if (base == "rosenberg_strong") {
        for (Int k = 0;; ++k) {
            for (Int y = 0; y <= k; ++y)
                if (!emit({k, y})) return;
            for (Int x = k - 1; x >= 0; --x)
                if (!emit({x, k})) return;
        }
    }
    if (base == "half_square_spiral") return walk_half_square_spiral(emit);
    if (base == "rhombus_spiral") {
        if (!emit({0, 0})) return;
        for (Int n = 1;; ++n) {
            for (Int i = 0; i < n; ++i)
                if (!emit({n - i, i})) return;
            for (Int i = 0; i < n; ++i)
                if (!emit({-i, n - i})) return;
            for (Int i = 0; i < n; ++i)
                if (!emit({-(n - i), -i})) return;
            for (Int i = 0; i < n; ++i)
                if (!emit({i, -(n - i)})) return;
        }
    }
    if (base == "square_spiral") {
        if (!emit({0, 0})) return;
        for (Int k = 1;; ++k) {
            for (Int y = 0; y <= k; ++y)
                if (!emit({k, y})) return;
            for (Int x = k - 1; x >= -k; --x)
                if (!emit({x, k})) return;
            for (Int y = k - 1; y >= -k; --y)
                if (!emit({-k, y})) return;
            for (Int x = -k + 1; x <= k; ++x)
                if (!emit({x, -k})) return;
            for (Int y = -k + 1; y <= -1; ++y)
                if (!emit({k, y})) return;
        }
    }
    if (base == "rectangle_spiral") {
        if (!emit({0, 0})) return;
        for (Int n = 1;; ++n) {
            Int ylo = (n == 1) ? Int(-1) : -(n - 1);
            for (Int y = ylo; y <= n; ++y)
                if (!emit({n, y})) return;
            for (Int x = n - 1; x >= -n; --x)
                if (!emit({x, n})) return;
            for (Int y = n - 1; y >= -n; --y)
                if (!emit({-n, y})) return;
            for (Int x = -n; x <= n + 1; ++x)
                if (!emit({x, -(n + 1)})) return;
        }
    }
    if (base == "connected_triangle") {
        for (Int x = 0; x <= 2; ++x)
            for (Int y = -x; y <= x; ++y)
                if (!emit({x, y})) return;
        for (Int x = 3;; ++x)
            for (Int y = 0; y <= x - 3; ++y)
                if (!emit({x, y})) return;
    }
    if (base == "saw") {
        Int n = param.value();
        for (Int c = 0;; ++c)
            for (Int y = 0; y < n; ++y)
                if (!emit({c + y, y})) return;
    }
    if (base == "comb") {
        Int n = param.value();
        for (Int x = 0;; ++x)
            for (Int y = 0; y < n; ++y)
                if (!emit({x, y})) return;
    }
    if (base == "saw3") {
        for (Int N = 0;; ++N) {
            Int top = N < 2 ? N : Int(2);
            for (Int y = 0; y <= top; ++y)
                if (!emit({N - y, y})) return;
        }
    }
    if (base == "zigzag_full_plane") {
        return walk_half_square_spiral([&](Point2 p) {
            if (!emit(p)) return false;
            return emit({-1 - p.x, p.y});
        });
    }
    if (base == "alternating") {
        for (Int N = 0;; ++N) {
            if (N % 2 == 0) {
                for (Int y = 0; y <= N; ++y)
                    if (!emit({N - y, y})) return;
            } else {
                for (Int x = 0; x <= N; ++x)
                    if (!emit({x, N - x})) return;
            }
        }
    }
    if (base == "sheared") {
        Int k = param.value();
        return walk_cantor1([&](Point2 p) { return emit({p.x - k * p.y, p.y}); });
    }
    throw DomainError("no enumeration walk for map id '" + base + "'");
}

}  // namespace

EnumerationTrace enumerate_walk(const std::string& map_id, std::size_t n) {
    std::string base = map_id;
    std::optional<Int> param;
    if (auto open = base.find('('); open != std::string::npos) {
        if (base.back() != ')') throw DomainError("malformed map id '" + map_id + "'");
        param = Int(base.substr(open + 1, base.size() - open - 2));
        base = base.substr(0, open);
    }
    if ((base == "saw" || base == "comb") && (!param || *param < 2))
        throw DomainError(base + "(n) requires n >= 2");
    if (base == "sheared" && (!param || *param < 0)) throw DomainError("sheared(k) requires k >= 0");

    EnumerationTrace t;
    t.map_id = map_id;
    if (n == 0) return t;
    t.points.reserve(n);
    dispatch_walk(base, param, [&](Point2 p) {
        t.points.push_back(std::move(p));
        return t.points.size() < n;
    });
    return t;
}

EnumerationTrace3 enumerate_walk3(const std::string& map_id, std::size_t n) {
    EnumerationTrace3 t;
    t.map_id = map_id;
    t.points.reserve(n);
    if (map_id == "p3d") {
        for (Int N = 0; t.points.size() < n; ++N)
            for (Int z = N; z >= 0 && t.points.size() < n; --z)
                for (Int x = N - z; x >= 0 && t.points.size() < n; --x)
                    t.points.push_back({x, N - z - x, z});
    } else if (map_id == "pkd3") {
        for (Int N = 0; t.points.size() < n; ++N)
            for (Int m = 0; m <= N && t.points.size() < n; ++m)
                for (Int x = 0; x <= m && t.points.size() < n; ++x)
                    t.points.push_back({x, m - x, N - m});
    } else {
        throw DomainError("no 3D enumeration walk for map id '" + map_id + "'");
    }
    return t;
}

BijectionReport verify_bijection(const PiecewiseMapping& m, const EnumerationTrace& trace) {
    BijectionReport r;
    std::set<Point2> seen;
    for (std::size_t i = 0; i < trace.points.size(); ++i) {
        const Point2& p = trace.points[i];
        if (!seen.insert(p).second) {
            r.ok = false;
            r.at = p;
            r.detail = "walk revisited a point";
            return r;
        }
        Int got;
        try {
            got = m.eval(p);
        } catch (const DomainError& e) {
            r.ok = false;
            r.at = p;
            r.expected = Int(i);
            r.detail = std::string("polynomial domain error: ") + e.what();
            return r;
        }
        if (got != Int(i)) {
            r.ok = false;
            r.at = p;
            r.expected = Int(i);
            r.got = got;
            r.detail = "polynomial value differs from walk index";
            return r;
        }
        ++r.checked;
    }
    return r;
}

BijectionReport verify_bijection(const PiecewiseMapping& m, std::size_t n) {
    return verify_bijection(m, enumerate_walk(m.name(), n));
}

BijectionReport verify_bijection3(const std::string& map_id, std::size_t n) {
    EnumerationTrace3 trace = enumerate_walk3(map_id, n);
    BijectionReport r;
    std::set<std::array<Int, 3>> seen;
    for (std::size_t i = 0; i < trace.points.size(); ++i) {
        const Point3& p = trace.points[i];
        if (!seen.insert({p.x, p.y, p.z}).second) {
            r.ok = false;
            r.at3 = p;
            r.detail = "walk revisited a point";
            return r;
        }
        Int got = map_id == "p3d" ? eval_p3d(p) : eval_pkd({p.x, p.y, p.z});
        if (got != Int(i)) {
            r.ok = false;
            r.at3 = p;
            r.expected = Int(i);
            r.got = got;
            r.detail = "polynomial value differs from walk index";
            return r;
        }
        ++r.checked;
    }
    return r;
}

std::vector<Int> tile_profile(const PiecewiseMapping& m, std::size_t region_index, TileAxis axis,
                              const Int& t0, const Int& t1) {
    if (region_index >= m.regions().size())
        throw IndexError(m.name() + ": no region " + std::to_string(region_index));
    const QuadForm& f = m.regions()[region_index].form;
    std::vector<Int> shifts;
    auto value = [&](const Int& t, const Int& s) {
        Point2 p = axis == TileAxis::Rows ? Point2{s, t} : Point2{t, s};
        return f.eval(p);
    };
    for (Int t = t0; t < t1; ++t) {
        Rational d = value(t + 1, -50) - value(t, -50);
        for (Int s = -49; s <= 50; ++s) {
            if (value(t + 1, s) - value(t, s) != d)
                throw NonConstantShift(m.name() + ": shift between tiles " + t.str() + " and " +
                                       Int(t + 1).str() + " varies along the tile");
        }
        shifts.push_back(d.as_int());
    }
    return shifts;
}

void trace_to_csv(const EnumerationTrace& t, std::ostream& os) {
    os << "x,y,value\n";
    for (std::size_t i = 0; i < t.points.size(); ++i)
        os << t.points[i].x << "," << t.points[i].y << "," << i << "\n";
}

void trace_to_csv(const EnumerationTrace3& t, std::ostream& os) {
    os << "x,y,z,value\n";
    for (std::size_t i = 0; i < t.points.size(); ++i)
        os << t.points[i].x << "," << t.points[i].y << "," << t.points[i].z << "," << i << "\n";
}

}  // namespace pairkit
