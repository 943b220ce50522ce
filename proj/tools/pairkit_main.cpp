#include "pairkit/diophantine.hpp"
#include "pairkit/fitter.hpp"
#include "pairkit/json_io.hpp"
#include "pairkit/oracle.hpp"
#include "pairkit/storage.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace pairkit;

constexpr int kExitParse = 1;
constexpr int kExitDomain = 2;
constexpr int kExitSingular = 3;
constexpr int kExitVerifyFail = 4;

std::vector<Int> parse_coords(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty coordinate in '" + s + "'");
        out.push_back(Int(tok));
    }
    if (out.empty()) throw std::invalid_argument("no coordinates in '" + s + "'");
    return out;
}

void print_error(const std::string& kind, const std::string& message) {
    Json j{{"error", kind}, {"message", message}};
    std::cerr << j.dump() << "\n";
}

int cmd_eval(const std::string& map_id, const std::string& point, unsigned k, bool as_json) {
    auto coords = parse_coords(point);
    Int value;
    if (map_id == "p3d") {
        if (coords.size() != 3) throw std::invalid_argument("p3d needs a 3D point");
        value = eval_p3d({coords[0], coords[1], coords[2]});
    } else if (map_id == "pkd") {
        if (k != 0 && coords.size() != k)
            throw std::invalid_argument("--k disagrees with the point arity");
        value = eval_pkd(coords);
    } else {
        if (coords.size() != 2) throw std::invalid_argument("2D maps need a 2D point");
        value = builtin_from_spec(map_id).eval({coords[0], coords[1]});
    }
    if (as_json)
        std::cout << Json{{"map", map_id}, {"point", point}, {"value", value.str()}}.dump()
                  << "\n";
    else
        std::cout << value << "\n";
    return 0;
}

int cmd_invert(const std::string& map_id, const std::string& z_str, unsigned k, bool as_json) {
    Int z(z_str);
    if (map_id == "p3d") {
        auto r = invert_p3d(z);
        if (as_json)
            std::cout << Json{{"map", map_id},
                              {"point", {r.point.x.str(), r.point.y.str(), r.point.z.str()}},
                              {"method", method_name(r.method)}}
                             .dump()
                      << "\n";
        else
            std::cout << r.point.x << "," << r.point.y << "," << r.point.z << "\n";
        return 0;
    }
    if (map_id == "pkd") {
        if (k == 0) throw std::invalid_argument("pkd inversion needs --k");
        PointK p = invert_pkd(z, k);
        std::string joined;
        for (std::size_t i = 0; i < p.size(); ++i) joined += (i ? "," : "") + p[i].str();
        if (as_json)
            std::cout << Json{{"map", map_id}, {"point", joined}, {"method", "shell_arithmetic"}}
                             .dump()
                      << "\n";
        else
            std::cout << joined << "\n";
        return 0;
    }
    auto m = builtin_from_spec(map_id);
    auto r = invert(m, z);
    if (as_json)
        std::cout << Json{{"map", map_id},
                          {"point", {r.point.x.str(), r.point.y.str()}},
                          {"method", method_name(r.method)}}
                         .dump()
                  << "\n";
    else
        std::cout << r.point.x << "," << r.point.y << "\n";
    return 0;
}

int cmd_fit(const std::string& points_file, const std::string& reference,
            std::optional<long long> window_margin, const std::string& out_file) {
    std::ifstream in(points_file);
    if (!in) throw std::invalid_argument("cannot open " + points_file);
    std::vector<std::vector<Int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("x,", 0) == 0) continue;  // header
        rows.push_back(parse_coords(line));
    }

    Json report_json;
    std::string summary;
    int rc = 0;

    if (!rows.empty() && rows[0].size() == 4) {
        if (rows.size() != 20)
            throw std::invalid_argument("3D fit needs exactly 20 rows x,y,z,value");
        std::vector<Sample3> samples;
        for (auto& r : rows) samples.push_back({{r[0], r[1], r[2]}, r[3]});
        try {
            CubicForm3D f = fit3d(samples);
            Json coeffs = Json::array();
            for (const auto& c : f.c) coeffs.push_back(c.str());
            report_json = {{"form3d", coeffs}, {"validation", "unvalidated"}};
            summary = "SOLVED";
        } catch (const SingularSystem& e) {
            report_json = {{"form3d", nullptr}, {"validation", "singular"}};
            summary = "SINGULAR";
            rc = kExitSingular;
        }
    } else {
        if (rows.size() != 6 || rows[0].size() != 3)
            throw std::invalid_argument("2D fit needs exactly 6 rows x,y,value");
        std::vector<Sample> samples;
        for (auto& r : rows) samples.push_back({{r[0], r[1]}, r[2]});
        if (reference.empty()) {
            auto [m, rhs] = build_system(samples);
            Rational d = det6(m);
            if (d == Rational(0)) {
                report_json = {{"determinant", d.str()}, {"form", nullptr},
                               {"validation", "singular"}};
                summary = "SINGULAR";
                rc = kExitSingular;
            } else {
                RatVec x = solve_exact(m, rhs);
                Json coeffs = Json::array();
                for (const auto& c : x) coeffs.push_back(c.str());
                report_json = {{"determinant", d.str()}, {"form", coeffs},
                               {"validation", "unvalidated"}};
                summary = "SOLVED";
            }
        } else {
            auto ref = builtin_from_spec(reference);
            std::optional<Box2> window;
            if (window_margin) window = default_window(samples, Int(*window_margin));
            FitReport report = fit_and_validate(samples, ref, window);
            report_json = to_json(report);
            switch (report.validation) {
                case FitValidation::Valid: summary = "VALID"; break;
                case FitValidation::Invalid: summary = "INVALID"; break;
                case FitValidation::Singular:
                    summary = "SINGULAR";
                    rc = kExitSingular;
                    break;
            }
        }
    }

    if (!out_file.empty()) {
        std::ofstream out(out_file);
        out << report_json.dump(2) << "\n";
    } else {
        std::cout << report_json.dump(2) << "\n";
    }
    std::cout << summary << "\n";
    return rc;
}

int cmd_verify(const std::string& map_id, std::size_t count) {
    BijectionReport r;
    if (map_id == "p3d" || map_id == "pkd3")
        r = verify_bijection3(map_id, count);
    else
        r = verify_bijection(builtin_from_spec(map_id), count);
    if (r.ok) {
        std::cout << "PASS " << r.checked << " points\n";
        return 0;
    }
    std::cout << "FAIL: " << r.detail;
    if (r.at) std::cout << " at " << *r.at;
    if (r.at3) std::cout << " at " << *r.at3;
    std::cout << " (expected " << r.expected << ", got " << r.got << ")\n";
    return kExitVerifyFail;
}

int cmd_enumerate(const std::string& map_id, std::size_t count, const std::string& out_file) {
    std::ostringstream csv;
    if (map_id == "p3d" || map_id == "pkd3")
        trace_to_csv(enumerate_walk3(map_id, count), csv);
    else
        trace_to_csv(enumerate_walk(map_id, count), csv);
    if (out_file.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_file);
        out << csv.str();
    }
    return 0;
}

std::pair<Int, Int> parse_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("range must be a:b, got " + s);
    return {Int(s.substr(0, colon)), Int(s.substr(colon + 1))};
}

int cmd_render(const std::string& map_id, const std::string& xrange, const std::string& yrange,
               bool brackets) {
    auto [x0, x1] = parse_range(xrange);
    auto [y0, y1] = parse_range(yrange);
    if (x1 < x0 || y1 < y0) throw std::invalid_argument("empty range");
    Int cells = (x1 - x0 + 1) * (y1 - y0 + 1);
    Int max_cells = 10000;
    if (const char* env = std::getenv("PAIRKIT_MAX_GRID")) max_cells = Int(env);
    if (cells > max_cells)
        throw std::invalid_argument("grid of " + cells.str() + " cells exceeds limit " +
                                    max_cells.str() + " (PAIRKIT_MAX_GRID)");

    auto m = builtin_from_spec(map_id);
    std::vector<std::vector<std::string>> grid;
    std::size_t width = 1;
    for (Int y = y1; y >= y0; --y) {
        std::vector<std::string> row;
        for (Int x = x0; x <= x1; ++x) {
            Point2 p{x, y};
            std::string cell;
            if (m.excluded_points().count(p)) {
                cell = "x";
            } else if (m.in_domain(p)) {
                cell = m.eval(p).str();
            } else if (brackets && !m.regions().empty()) {
                Rational raw = m.eval_unchecked(p, 0);
                cell = "[" + raw.str() + "]";
            }
            width = std::max(width, cell.size());
            row.push_back(std::move(cell));
        }
        grid.push_back(std::move(row));
    }
    for (const auto& row : grid) {
        std::string line;
        for (const auto& cell : row) {
            line += std::string(width - cell.size() + 1, ' ');
            line += cell;
        }
        // strip the single leading pad space for stable golden files
        std::cout << line.substr(1) << "\n";
    }
    return 0;
}

int cmd_dioph(const std::string& eq, const std::string& z_str,
              std::optional<long long> scan_bound, std::optional<long long> probe_a, bool brute) {
    if (scan_bound) {
        CollisionReport rep = uniqueness_scan(eq, Int(*scan_bound));
        Json j{{"equation", eq},
               {"bound", *scan_bound},
               {"pairs_scanned", rep.pairs_scanned},
               {"collision_found", rep.collision_found},
               {"full_coverage", rep.full_coverage}};
        if (rep.collision_found) {
            j["value"] = rep.value.str();
            j["witnesses"] = {{rep.first.x.str(), rep.first.y.str()},
                              {rep.second.x.str(), rep.second.y.str()}};
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    Int z(z_str);
    if (probe_a) {
        DiscriminantProbe pr = cantor_discriminant_probe(z, Int(*probe_a));
        Json j{{"query", z.str()},
               {"a", pr.a.str()},
               {"discriminant", pr.discriminant.str()},
               {"perfect_square", pr.perfect_square},
               {"explanation", pr.explanation}};
        if (pr.b) j["b"] = pr.b->str();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    DiophResult r = eq == "triangular" ? solve_triangular_dioph(z, brute)
                                       : solve_cantor_dioph(z, brute);
    Json sols = Json::array();
    for (const auto& p : r.solutions) sols.push_back({p.x.str(), p.y.str()});
    std::cout << Json{{"query", r.query.str()}, {"solutions", sols},
                      {"explanation", r.explanation}}
                     .dump(2)
              << "\n";
    return 0;
}

int cmd_bench(std::size_t order) {
    using clock = std::chrono::steady_clock;
    PackedTriangular<long long> packed(order);
    std::vector<std::vector<long long>> padded(order, std::vector<long long>(order));

    auto t0 = clock::now();
    long long acc1 = 0;
    for (std::size_t r = 0; r < order; ++r)
        for (std::size_t c = 0; c <= r; ++c) {
            packed.at(Int(r), Int(c)) = static_cast<long long>(r + c);
            acc1 += packed.at(Int(r), Int(c));
        }
    auto t1 = clock::now();
    long long acc2 = 0;
    for (std::size_t r = 0; r < order; ++r)
        for (std::size_t c = 0; c <= r; ++c) {
            padded[r][c] = static_cast<long long>(r + c);
            acc2 += padded[r][c];
        }
    auto t2 = clock::now();

    auto us = [](auto a, auto b) {
        return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count();
    };
    std::cout << "order " << order << ": packed " << us(t0, t1) << " us, padded " << us(t1, t2)
              << " us (checksums " << acc1 << "/" << acc2 << "), packed memory "
              << packed.size() * sizeof(long long) << " B vs padded "
              << order * order * sizeof(long long) << " B\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pairing-polynomial toolkit"};
    app.require_subcommand(1);

    std::string map_id, point, z_str, points_file, reference, out_file, xrange, yrange;
    std::string eq = "cantor";
    unsigned k = 0;
    bool as_json = false, brackets = false, brute = false;
    std::size_t count = 0, bench_order = 512;
    std::optional<long long> window_margin, scan_bound, probe_a;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a mapping at a point");
    eval_cmd->add_option("--map", map_id)->required();
    eval_cmd->add_option("--point", point)->required();
    eval_cmd->add_option("--k", k);
    eval_cmd->add_flag("--json", as_json);

    auto* invert_cmd = app.add_subcommand("invert", "preimage of a value");
    invert_cmd->add_option("--map", map_id)->required();
    invert_cmd->add_option("--z", z_str)->required();
    invert_cmd->add_option("--k", k);
    invert_cmd->add_flag("--json", as_json);

    auto* fit_cmd = app.add_subcommand("fit", "six-point (or twenty-point) exact fit");
    fit_cmd->add_option("--points", points_file)->required();
    fit_cmd->add_option("--reference", reference);
    fit_cmd->add_option("--window", window_margin);
    fit_cmd->add_option("--out", out_file);

    auto* verify_cmd = app.add_subcommand("verify", "polynomial vs geometric walk");
    verify_cmd->add_option("--map", map_id)->required();
    verify_cmd->add_option("--count", count)->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "walk trace as CSV");
    enum_cmd->add_option("--map", map_id)->required();
    enum_cmd->add_option("--count", count)->required();
    enum_cmd->add_option("--out", out_file);

    auto* render_cmd = app.add_subcommand("render", "ASCII value grid");
    render_cmd->add_option("--map", map_id)->required();
    render_cmd->add_option("--xrange", xrange)->required();
    render_cmd->add_option("--yrange", yrange)->required();
    render_cmd->add_flag("--brackets", brackets);

    auto* dioph_cmd = app.add_subcommand("dioph", "Diophantine solvers and scans");
    dioph_cmd->add_option("--eq", eq);
    dioph_cmd->add_option("--z", z_str);
    dioph_cmd->add_option("--scan", scan_bound);
    dioph_cmd->add_option("--probe-a", probe_a);
    dioph_cmd->add_flag("--brute", brute);

    auto* bench_cmd = app.add_subcommand("bench", "packed vs padded storage micro-benchmark");
    bench_cmd->add_option("--order", bench_order);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed()) return cmd_eval(map_id, point, k, as_json);
        if (invert_cmd->parsed()) return cmd_invert(map_id, z_str, k, as_json);
        if (fit_cmd->parsed()) return cmd_fit(points_file, reference, window_margin, out_file);
        if (verify_cmd->parsed()) return cmd_verify(map_id, count);
        if (enum_cmd->parsed()) return cmd_enumerate(map_id, count, out_file);
        if (render_cmd->parsed()) return cmd_render(map_id, xrange, yrange, brackets);
        if (dioph_cmd->parsed()) return cmd_dioph(eq, z_str, scan_bound, probe_a, brute);
        if (bench_cmd->parsed()) return cmd_bench(bench_order);
    } catch (const NotInImage& e) {
        print_error("NotInImage", e.what());
        return kExitDomain;
    } catch (const DomainError& e) {
        print_error("DomainError", e.what());
        return kExitDomain;
    } catch (const SingularSystem& e) {
        print_error("SingularSystem", e.what());
        return kExitSingular;
    } catch (const std::invalid_argument& e) {
        print_error("ParseError", e.what());
        return kExitParse;
    } catch (const std::exception& e) {
        print_error("Error", e.what());
        return kExitParse;
    }
    return kExitParse;
}
