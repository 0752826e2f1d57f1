#include "hq/io.hpp"

namespace hq {

namespace {

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError("not a rational: " + s);
    if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

}  // namespace

json to_json(const FieldElement& x) {
    return json{{"rat", x.rat().get_str()}, {"irr", x.irr().get_str()}, {"disc", x.disc()}};
}

FieldElement field_from_json(const json& j) {
    try {
        if (j.is_number_integer()) return FieldElement(j.get<long>());
        if (j.is_string()) return FieldElement(parse_rational(j.get<std::string>()));
        if (j.is_object()) {
            Rational r = parse_rational(j.at("rat").get<std::string>());
            Rational i = j.contains("irr") ? parse_rational(j.at("irr").get<std::string>()) : Rational(0);
            long d = j.value("disc", 1L);
            if (d == 1) {
                if (sgn(i) != 0) throw ParseError("irrational part with disc 1");
                return FieldElement(r);
            }
            return FieldElement(r, i, FieldContext(d));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("field element: ") + e.what());
    } catch (const FieldError& e) {
        throw ParseError(std::string("field element: ") + e.what());
    }
    throw ParseError("field element must be an integer, a string or an object");
}

json to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

ExactMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("matrix must be a list of rows");
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw ParseError("matrix row must be a list");
        std::vector<FieldElement> row;
        for (const auto& x : r) row.push_back(field_from_json(x));
        if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged matrix");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix");
    try {
        return ExactMatrix::from_rows(rows);
    } catch (const std::exception& e) {
        throw ParseError(std::string("matrix: ") + e.what());
    }
}

json to_json(const Seq& s) {
    json a = json::array();
    for (const auto& x : s) a.push_back(to_json(x));
    return a;
}

json to_json(const HuangData& h) {
    return json{{"a", to_json(h.a)}, {"b", to_json(h.b)}, {"c", to_json(h.c)}, {"d", h.d}};
}

HuangData huang_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("Huang data must be an object");
    try {
        HuangData h{field_from_json(j.at("a")), field_from_json(j.at("b")), field_from_json(j.at("c")), j.at("d").get<int>()};
        return h;
    } catch (const json::exception& e) {
        throw ParseError(std::string("Huang data: ") + e.what());
    }
}

ModuleDescriptor descriptor_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("descriptor must be an object");
    try {
        ModuleDescriptor d;
        auto t = parse_xtype(j.at("xtype").get<std::string>());
        if (!t) throw ParseError("unknown xtype " + j.at("xtype").get<std::string>());
        d.xtype = *t;
        d.n = j.at("n").get<int>();
        d.q = field_from_json(j.at("q"));
        const json& k = j.at("k");
        if (!k.is_array() || k.size() != 4) throw ParseError("k must list four field elements");
        for (int i = 0; i < 4; ++i) d.k[i] = field_from_json(k[i]);
        return d;
    } catch (const json::exception& e) {
        throw ParseError(std::string("descriptor: ") + e.what());
    }
}

json to_json(const ModuleDescriptor& d) {
    json k = json::array();
    for (const auto& x : d.k) k.push_back(to_json(x));
    return json{{"xtype", to_string(d.xtype)}, {"n", d.n}, {"q", to_json(d.q)}, {"k", k}};
}

json module_to_json(const HqModule& m) {
    json j;
    if (m.xtype) j["xtype"] = to_string(*m.xtype);
    j["n"] = m.params.n;
    j["q"] = to_json(m.params.q);
    json k = json::array();
    for (const auto& x : m.params.k) k.push_back(to_json(x));
    j["k"] = k;
    if (!m.mu.empty()) j["mu"] = to_json(m.mu);
    json t = json::array();
    for (const auto& g : m.t) t.push_back(to_json(g));
    j["t"] = t;
    return j;
}

json to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
        if (c.residual) e["residual"] = to_json(*c.residual);
        checks.push_back(e);
    }
    return json{{"checks", checks}, {"total", r.checks.size()}, {"failures", r.failures()}};
}

}  // namespace hq
