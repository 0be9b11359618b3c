#include "chebadj/serialization.hpp"

namespace chebadj {

namespace {

json coeffs_to_json(const detail::CoeffMap& p) {
    json arr = json::array();
    for (const auto& [k, v] : p.terms()) arr.push_back({{"k", k}, {"v", v.to_string()}});
    return arr;
}

template <typename Poly>
Poly coeffs_from_json(const json& doc) {
    if (!doc.contains("coeffs") || !doc["coeffs"].is_array())
        throw DomainError("polynomial JSON: missing 'coeffs' array");
    Poly p;
    long prev = -1;
    for (const auto& item : doc["coeffs"]) {
        if (!item.is_object() || !item.contains("k") || !item.contains("v") ||
            !item["k"].is_number_integer() || !item["v"].is_string())
            throw DomainError("polynomial JSON: coefficient entries need integer 'k' and string 'v'");
        const long k = item["k"].get<long>();
        if (k < 0) throw DomainError("polynomial JSON: negative index");
        if (k <= prev) throw DomainError("polynomial JSON: indices must be strictly ascending");
        prev = k;
        const Rational v = Rational::parse(item["v"].get<std::string>());
        if (v.is_zero()) throw DomainError("polynomial JSON: zero coefficients must be omitted");
        p.set(k, v);
    }
    return p;
}

} // namespace

json to_json(const TrigPoly& p) { return json{{"basis", "trig"}, {"coeffs", coeffs_to_json(p)}}; }

json to_json(const PowerPoly& p) { return json{{"basis", "power"}, {"coeffs", coeffs_to_json(p)}}; }

Polynomial polynomial_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("basis") || !doc["basis"].is_string())
        throw DomainError("polynomial JSON: missing 'basis'");
    const std::string basis = doc["basis"].get<std::string>();
    if (basis == "trig") return coeffs_from_json<TrigPoly>(doc);
    if (basis == "power") return coeffs_from_json<PowerPoly>(doc);
    throw DomainError("polynomial JSON: basis must be 'trig' or 'power'");
}

json to_json(const RatMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(m(i, j).to_string());
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json to_json(const AdjustmentCertificate& cert) {
    json a = json::array(), b = json::array();
    for (const auto& x : cert.a) a.push_back(x.to_string());
    for (const auto& x : cert.b) b.push_back(x.to_string());
    return json{{"p", cert.p},
                {"s", cert.s},
                {"r", cert.r},
                {"a", a},
                {"b", b},
                {"g", to_json(cert.g)},
                {"has_quotient", cert.has_quotient},
                {"deg_g", cert.deg_g},
                {"l1_a", cert.l1_a.to_string()},
                {"l1_b", cert.l1_b.to_string()},
                {"bound", cert.bound.to_string()},
                {"identity_ok", cert.identity_ok},
                {"norm_ok", cert.norm_ok},
                {"c1", cert.c1}};
}

} // namespace chebadj
