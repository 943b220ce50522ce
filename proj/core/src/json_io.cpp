#include "pairkit/json_io.hpp"

namespace pairkit {

namespace {

const char* rel_name(LinearConstraint::Rel r) {
    switch (r) {
        case LinearConstraint::Rel::Ge: return "ge";
        case LinearConstraint::Rel::Gt: return "gt";
        case LinearConstraint::Rel::Le: return "le";
        case LinearConstraint::Rel::Lt: return "lt";
        case LinearConstraint::Rel::Eq: return "eq";
    }
    return "?";
}

LinearConstraint::Rel rel_from(const std::string& s) {
    if (s == "ge") return LinearConstraint::Rel::Ge;
    if (s == "gt") return LinearConstraint::Rel::Gt;
    if (s == "le") return LinearConstraint::Rel::Le;
    if (s == "lt") return LinearConstraint::Rel::Lt;
    if (s == "eq") return LinearConstraint::Rel::Eq;
    throw DomainError("unknown relation '" + s + "'");
}

Json int_json(const Int& v) { return v.str(); }
Int int_from(const Json& j) { return Int(j.get<std::string>()); }

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) { return Rational::parse(j.get<std::string>()); }

Json to_json(const Point2& p) { return Json::array({int_json(p.x), int_json(p.y)}); }

Point2 point2_from_json(const Json& j) { return {int_from(j.at(0)), int_from(j.at(1))}; }

Json to_json(const QuadForm& f) {
    return Json::array(
        {to_json(f.a6), to_json(f.a5), to_json(f.a4), to_json(f.a3), to_json(f.a2),
         to_json(f.a1)});
}

QuadForm quadform_from_json(const Json& j) {
    return {rational_from_json(j.at(0)), rational_from_json(j.at(1)), rational_from_json(j.at(2)),
            rational_from_json(j.at(3)), rational_from_json(j.at(4)), rational_from_json(j.at(5))};
}

Json to_json(const RegionPredicate& pr) {
    Json j;
    j["constraints"] = Json::array();
    for (const auto& c : pr.constraints)
        j["constraints"].push_back(
            {{"a", int_json(c.a)}, {"b", int_json(c.b)}, {"c", int_json(c.c)},
             {"rel", rel_name(c.rel)}});
    if (pr.parity)
        j["parity"] = {{"a", int_json(pr.parity->a)}, {"b", int_json(pr.parity->b)},
                       {"residue", pr.parity->residue}};
    j["include_points"] = Json::array();
    for (const auto& p : pr.include_points) j["include_points"].push_back(to_json(p));
    j["exclude_points"] = Json::array();
    for (const auto& p : pr.exclude_points) j["exclude_points"].push_back(to_json(p));
    return j;
}

RegionPredicate predicate_from_json(const Json& j) {
    RegionPredicate pr;
    for (const auto& c : j.at("constraints"))
        pr.constraints.push_back({int_from(c.at("a")), int_from(c.at("b")), int_from(c.at("c")),
                                  rel_from(c.at("rel").get<std::string>())});
    if (j.contains("parity"))
        pr.parity = ParityConstraint{int_from(j["parity"].at("a")), int_from(j["parity"].at("b")),
                                     j["parity"].at("residue").get<int>()};
    for (const auto& p : j.at("include_points")) pr.include_points.push_back(point2_from_json(p));
    for (const auto& p : j.at("exclude_points")) pr.exclude_points.push_back(point2_from_json(p));
    return pr;
}

Json to_json(const PiecewiseMapping& m) {
    Json j;
    j["name"] = m.name();
    j["image"] = m.image_kind() == ImageKind::N0 ? "N0" : "Z";
    j["domain"] = to_json(m.domain());
    j["regions"] = Json::array();
    for (const auto& r : m.regions())
        j["regions"].push_back({{"where", to_json(r.where)}, {"form", to_json(r.form)}});
    j["exceptional_values"] = Json::array();
    for (const auto& [p, v] : m.exceptional_values())
        j["exceptional_values"].push_back({{"point", to_json(p)}, {"value", int_json(v)}});
    j["excluded_points"] = Json::array();
    for (const auto& p : m.excluded_points()) j["excluded_points"].push_back(to_json(p));
    return j;
}

PiecewiseMapping mapping_from_json(const Json& j) {
    std::vector<Region> regions;
    for (const auto& r : j.at("regions"))
        regions.push_back({predicate_from_json(r.at("where")), quadform_from_json(r.at("form"))});
    std::map<Point2, Int> exceptional;
    for (const auto& e : j.at("exceptional_values"))
        exceptional[point2_from_json(e.at("point"))] = int_from(e.at("value"));
    std::set<Point2> excluded;
    for (const auto& p : j.at("excluded_points")) excluded.insert(point2_from_json(p));
    ImageKind image = j.at("image").get<std::string>() == "Z" ? ImageKind::Z : ImageKind::N0;
    return PiecewiseMapping(j.at("name").get<std::string>(), std::move(regions),
                            std::move(exceptional), std::move(excluded),
                            predicate_from_json(j.at("domain")), image);
}

Json to_json(const FitReport& r) {
    Json j;
    j["determinant"] = to_json(r.determinant);
    j["validation"] = validation_name(r.validation);
    if (r.form)
        j["form"] = to_json(*r.form);
    else
        j["form"] = nullptr;
    j["mismatches"] = Json::array();
    for (const auto& m : r.mismatches)
        j["mismatches"].push_back({{"point", to_json(m.p)}, {"expected", int_json(m.expected)},
                                   {"fitted", to_json(m.fitted)}});
    j["samples"] = Json::array();
    for (const auto& s : r.samples)
        j["samples"].push_back({{"point", to_json(s.p)}, {"value", int_json(s.value)}});
    return j;
}

}  // namespace pairkit
