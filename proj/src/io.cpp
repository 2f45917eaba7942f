#include "motivic/io.hpp"

namespace motivic::io {

namespace {

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

} // namespace

const Json& require(const Json& object, const std::string& key, const std::string& path) {
    if (!object.is_object())
        throw SchemaError(path.empty() ? "<root>" : path, "expected an object");
    auto it = object.find(key);
    if (it == object.end())
        throw SchemaError(join(path, key), "missing field");
    return *it;
}

std::int64_t read_int(const Json& value, const std::string& path) {
    if (!value.is_number_integer())
        throw SchemaError(path, "expected an integer");
    return value.get<std::int64_t>();
}

std::string read_string(const Json& value, const std::string& path) {
    if (!value.is_string())
        throw SchemaError(path, "expected a string");
    return value.get<std::string>();
}

Rational read_rational(const Json& value, const std::string& path) {
    if (value.is_number_integer())
        return Rational(std::to_string(value.get<std::int64_t>()));
    if (!value.is_string())
        throw SchemaError(path, "expected an integer or a rational string like \"3/2\"");
    Rational q;
    if (q.set_str(value.get<std::string>(), 10) != 0)
        throw SchemaError(path, "malformed rational '" + value.get<std::string>() + "'");
    if (q.get_den() == 0)
        throw SchemaError(path, "zero denominator");
    q.canonicalize();
    return q;
}

LaurentPoly read_laurent(const Json& value, const std::string& path) {
    const std::string text = read_string(value, path);
    try {
        return LaurentPoly::parse(text);
    } catch (const ParseError& e) {
        throw SchemaError(path, e.what());
    }
}

MotiveSeries read_series(const Json& value, const std::string& path) {
    const std::string text = read_string(value, path);
    try {
        return MotiveSeries::parse(text);
    } catch (const ParseError& e) {
        throw SchemaError(path, e.what());
    }
}

std::vector<std::int64_t> read_int_list(const Json& value, const std::string& path) {
    if (!value.is_array())
        throw SchemaError(path, "expected an array of integers");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < value.size(); ++i)
        out.push_back(read_int(value[i], at(path, i)));
    return out;
}

StableSetDescriptor read_stable(const Json& value, const std::string& path) {
    StableSetDescriptor s;
    s.level = read_int(require(value, "level", path), join(path, "level"));
    s.class_at_level = read_laurent(require(value, "class", path), join(path, "class"));
    s.ambient_dim = read_int(require(value, "dim", path), join(path, "dim"));
    if (s.level < 0)
        throw SchemaError(join(path, "level"), "must be >= 0");
    if (s.ambient_dim < 0)
        throw SchemaError(join(path, "dim"), "must be >= 0");
    return s;
}

Json write_stable(const StableSetDescriptor& s) {
    Json j;
    j["level"] = s.level;
    j["class"] = s.class_at_level.to_string();
    j["dim"] = s.ambient_dim;
    return j;
}

CylinderDescriptor read_cylinder(const Json& value, const std::string& path) {
    const StableSetDescriptor s = read_stable(value, path);
    CylinderDescriptor c{s.level, s.class_at_level, s.ambient_dim, true};
    if (value.contains("nonsingular")) {
        if (!value["nonsingular"].is_boolean())
            throw SchemaError(join(path, "nonsingular"), "expected a boolean");
        c.nonsingular_ambient = value["nonsingular"].get<bool>();
    }
    return c;
}

ResolutionDiagram read_diagram(const Json& value, const std::string& path, bool require_q) {
    const std::int64_t d = read_int(require(value, "ambient_dim", path), join(path, "ambient_dim"));
    if (d < 0)
        throw SchemaError(join(path, "ambient_dim"), "must be >= 0");
    const Json& strata = require(value, "strata", path);
    const std::string strata_path = join(path, "strata");
    if (!strata.is_array())
        throw SchemaError(strata_path, "expected an array");

    ResolutionDiagram D;
    for (std::size_t s = 0; s < strata.size(); ++s) {
        const std::string sp = at(strata_path, s);
        const Json& js = strata[s];
        SNCStratum stratum;
        stratum.name = js.contains("name") ? read_string(js["name"], join(sp, "name")) : "";
        stratum.index_set = read_int_list(require(js, "index_set", sp), join(sp, "index_set"));
        stratum.cls = read_laurent(require(js, "class", sp), join(sp, "class"));
        stratum.ambient_dim = d;

        auto p = read_int_list(require(js, "p_mults", sp), join(sp, "p_mults"));
        std::vector<std::int64_t> q;
        if (js.contains("q_mults"))
            q = read_int_list(js["q_mults"], join(sp, "q_mults"));
        else if (require_q)
            throw SchemaError(join(sp, "q_mults"), "missing field");
        else
            q = p;

        if (p.size() != stratum.index_set.size())
            throw SchemaError(join(sp, "p_mults"), "length differs from index_set");
        if (q.size() != stratum.index_set.size())
            throw SchemaError(join(sp, "q_mults"), "length differs from index_set");
        for (auto m : p)
            if (m < 0)
                throw SchemaError(join(sp, "p_mults"), "multiplicities must be >= 0");
        for (auto m : q)
            if (m < 0)
                throw SchemaError(join(sp, "q_mults"), "multiplicities must be >= 0");
        try {
            stratum.validate();
        } catch (const InvalidArgument& e) {
            throw SchemaError(sp, e.what());
        }
        D.strata.push_back(std::move(stratum));
        D.p_mults.push_back(std::move(p));
        D.q_mults.push_back(std::move(q));
    }
    return D;
}

ArcJet read_arc(const Json& value, const std::string& path, std::size_t cap) {
    if (!value.is_array() || value.empty())
        throw SchemaError(path, "expected a nonempty array of coefficient arrays");
    std::vector<std::vector<Rational>> coeffs;
    for (std::size_t j = 0; j < value.size(); ++j) {
        const std::string cp = at(path, j);
        if (!value[j].is_array())
            throw SchemaError(cp, "expected an array of coefficients");
        std::vector<Rational> c;
        for (std::size_t i = 0; i < value[j].size(); ++i)
            c.push_back(read_rational(value[j][i], at(cp, i)));
        coeffs.push_back(std::move(c));
    }
    return ArcJet::from_coefficients(coeffs, cap);
}

namespace {

Json write_witness(const std::optional<BoundWitness>& w) {
    if (!w)
        return nullptr;
    Json j;
    j["stratum"] = w->stratum_name.empty() ? Json(w->stratum) : Json(w->stratum_name);
    j["contacts"] = w->contacts;
    j["ord_jac_f"] = w->order;
    return j;
}

} // namespace

Json write_verdict(const BoundednessVerdict& v) {
    Json j;
    j["bounded_above"] = v.bounded_above;
    j["bounded_below"] = v.bounded_below;
    j["above_witness"] = write_witness(v.above_witness);
    j["below_witness"] = write_witness(v.below_witness);
    return j;
}

Json write_report(const TheoremReport& report) {
    Json j;
    j["theorem"] = report.theorem;
    j["conclusion"] = std::string(to_string(report.conclusion));
    j["relation"] = report.relation ? Json(std::string(to_string(*report.relation))) : Json(nullptr);
    j["contradiction"] = report.contradiction;
    Json hyps = Json::array();
    for (const auto& h : report.hypotheses_checked) {
        Json hj;
        hj["name"] = h.name;
        hj["passed"] = h.passed;
        hj["detail"] = h.detail;
        hyps.push_back(std::move(hj));
    }
    j["hypotheses"] = std::move(hyps);
    Json certs = Json::object();
    for (const auto& [k, v] : report.certificates)
        certs[k] = v;
    j["certificates"] = std::move(certs);
    j["boundedness"] = write_verdict(report.boundedness);
    return j;
}

} // namespace motivic::io
