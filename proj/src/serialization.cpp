#include "sol/serialization.hpp"

namespace sol {

namespace {

long checked_ll(const Integer& z, const char* what) {
    if (!z.fits_slong_p())
        throw SerializationError(std::string(what) + " exceeds the JSON integer range");
    return z.get_si();
}

Json rational_to_json(const Rational& r) {
    return Json::array({checked_ll(r.get_num(), "numerator"), checked_ll(r.get_den(), "denominator")});
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw SerializationError("rational must be a [numerator, denominator] integer pair");
    long num = j[0].get<long>();
    long den = j[1].get<long>();
    if (den == 0) throw SerializationError("rational denominator is zero");
    Rational r{Integer(num), Integer(den)};
    r.canonicalize();
    return r;
}

}  // namespace

Json to_json(const QuadNum& q) {
    return Json{{"a", rational_to_json(q.a())}, {"b", rational_to_json(q.b())}};
}

QuadNum quadnum_from_json(const Json& j, FieldContext ctx) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw SerializationError("field element must carry \"a\" and \"b\" rationals");
    return {rational_from_json(j.at("a")), rational_from_json(j.at("b")), ctx};
}

Json to_json(const SolTranslation& t) {
    return Json{{"x", to_json(t.x)}, {"y", to_json(t.y)}, {"k", t.k}};
}

SolTranslation translation_from_json(const Json& j, FieldContext ctx) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("k"))
        throw SerializationError("translation must carry \"x\", \"y\", \"k\"");
    if (!j.at("k").is_number_integer()) throw SerializationError("\"k\" must be an integer");
    return {quadnum_from_json(j.at("x"), ctx), quadnum_from_json(j.at("y"), ctx),
            j.at("k").get<long>()};
}

Json to_json(const SolLattice& L) {
    return Json{{"N", L.context().trace()},
                {"phi", {L.phi().p, L.phi().q, L.phi().r, L.phi().s}},
                {"tau1", to_json(L.tau1())},
                {"tau2", to_json(L.tau2())},
                {"tau3", to_json(L.tau3())}};
}

SolLattice lattice_from_json(const Json& j) {
    if (!j.is_object()) throw SerializationError("lattice document must be an object");
    for (const char* key : {"N", "tau1", "tau2", "tau3"})
        if (!j.contains(key))
            throw SerializationError(std::string("lattice document lacks \"") + key + "\"");
    if (!j.at("N").is_number_integer()) throw SerializationError("\"N\" must be an integer");
    long N = j.at("N").get<long>();
    FieldContext ctx(N);
    SolTranslation t1 = translation_from_json(j.at("tau1"), ctx);
    SolTranslation t2 = translation_from_json(j.at("tau2"), ctx);
    SolTranslation t3 = translation_from_json(j.at("tau3"), ctx);
    SolLattice L = SolLattice::create(std::move(t1), std::move(t2), std::move(t3));
    if (j.contains("phi")) {
        const Json& p = j.at("phi");
        if (!p.is_array() || p.size() != 4)
            throw SerializationError("\"phi\" must be a [p, q, r, s] array");
        LatticeMatrix declared{p[0].get<long>(), p[1].get<long>(), p[2].get<long>(),
                               p[3].get<long>()};
        if (!(declared == L.phi()))
            throw SerializationError("declared holonomy disagrees with the basis");
    }
    PresentationReport rep = verify_presentation(L);
    if (!rep.ok()) throw SerializationError("presentation relations fail on ingest");
    return L;
}

Json to_json(const PresentationReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"ok", rep.ok()}, {"checks", checks}};
}

Json to_json(const IsotropyResult& res) {
    Json j{{"ok", res.ok}};
    if (!res.ok) {
        j["axis"] = res.axis;
        j["witness"] = {checked_ll(res.witness->first, "witness"),
                        checked_ll(res.witness->second, "witness")};
    }
    return j;
}

Json to_json(const Certificate& cert) {
    Json values = Json::object();
    for (const auto& [name, v] : cert.values) values[name] = to_json(v);
    Json ints = Json::object();
    for (const auto& [name, v] : cert.integers) ints[name] = checked_ll(v, name.c_str());
    Json rels = Json::array();
    for (const auto& r : cert.relations) rels.push_back(Json{{"name", r.name}, {"pass", r.pass}});
    return Json{{"kind", to_string(cert.kind)},
                {"values", values},
                {"integers", ints},
                {"relations", rels}};
}

Json to_json(const ClassifyReport& rep) {
    Json j{{"type", to_string(rep.type)},
           {"case", rep.main_case == 1 ? "I" : "II"},
           {"point_group", to_string(rep.group)},
           {"z_sublattice", rep.z_sublattice},
           {"centering", to_string(rep.base)}};
    j["certificates"] = rep.cert ? to_json(*rep.cert) : Json(nullptr);
    return j;
}

void annotate_decimals(Json& j, FieldContext ctx, int digits) {
    if (digits <= 0) return;
    if (j.is_object()) {
        if (j.contains("a") && j.contains("b") && j.at("a").is_array()) {
            QuadNum q = quadnum_from_json(j, ctx);
            j["~dec"] = q.decimal(digits);
            return;
        }
        for (auto& [key, value] : j.items()) {
            (void)key;
            annotate_decimals(value, ctx, digits);
        }
    } else if (j.is_array()) {
        for (auto& item : j) annotate_decimals(item, ctx, digits);
    }
}

}  // namespace sol
