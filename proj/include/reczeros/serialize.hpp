#ifndef RECZEROS_SERIALIZE_HPP
#define RECZEROS_SERIALIZE_HPP

// JSON, CSV and aligned-table output. Rationals are written as "num/den",
// integers as decimal strings and enclosures as ["lo", "hi"] with 40
// significant digits rounded outward.

#include "reczeros/analysis.hpp"
#include "reczeros/certify.hpp"
#include "reczeros/family.hpp"
#include "reczeros/paperchecks.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace reczeros {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1";
inline constexpr int enclosure_digits = 40;

inline Json rational_json(const Rational& x) { return to_string(x); }

inline Json enclosure_json(const IntervalReal& x)
{
    return Json::array({to_decimal(x.lo(), enclosure_digits, false), to_decimal(x.hi(), enclosure_digits, true)});
}

inline Json poly_json(const RatPoly& p)
{
    Json a = Json::array();
    for (const auto& c : p.coeffs())
        a.push_back(rational_json(c));
    return a;
}

inline std::string int_str(long v) { return std::to_string(v); }

inline const char* tri_string(Tri t)
{
    switch (t) {
    case Tri::yes:
        return "true";
    case Tri::no:
        return "false";
    case Tri::unknown:
        return "inconclusive";
    }
    return "?";
}

inline Json document(const char* kind)
{
    Json doc;
    doc["schema_version"] = schema_version;
    doc["kind"] = kind;
    return doc;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructRecord {
    FamilyInstance inst;
    std::optional<ApproximantPair> approx;
};

inline ConstructRecord construct_instance(unsigned k, unsigned ell)
{
    ConstructRecord r{build_M(k, ell), std::nullopt};
    if (k >= 3)
        r.approx = build_approximant(k, ell);
    return r;
}

inline Json to_json(const ConstructRecord& r)
{
    Json j;
    j["k"] = int_str(r.inst.k);
    j["ell"] = int_str(r.inst.ell);
    j["sigma"] = int_str(r.inst.sigma);
    j["parity"] = to_string(r.inst.parity);
    j["R"] = poly_json(r.inst.R);
    j["M"] = poly_json(r.inst.M);
    if (r.approx) {
        j["A"] = poly_json(r.approx->A);
        j["Delta"] = poly_json(r.approx->Delta);
        j["Delta_majorant"] = rational_json(r.approx->majorant);
    }
    return j;
}

// ---------------------------------------------------------------------------
// certificates

inline Json to_json(const ZeroCertificate& c)
{
    Json j;
    j["k"] = int_str(c.k);
    j["ell"] = int_str(c.ell);
    j["sigma"] = int_str(c.sigma);
    j["parity"] = to_string(c.parity);
    j["simple"] = c.simple;
    j["on_circle_count"] = int_str(c.on_circle_count);
    Json boxes = Json::array();
    for (const auto& rb : c.off_circle_real) {
        Json b;
        b["lo"] = rational_json(rb.box.lo);
        b["hi"] = rational_json(rb.box.hi);
        b["multiplicity"] = int_str(rb.multiplicity);
        boxes.push_back(std::move(b));
    }
    j["off_circle_real"] = std::move(boxes);
    j["off_circle_complex_count"] = int_str(c.off_circle_complex_count);
    j["alpha"] = enclosure_json(c.alpha);
    j["alpha_inverse"] = enclosure_json(c.alpha_inverse);
    Json unity = Json::array();
    for (auto n : c.unity_roots)
        unity.push_back(std::to_string(n));
    j["unity_roots"] = std::move(unity);
    Json t;
    t["degree"] = int_str(c.transform_degree);
    t["inside"] = int_str(c.transform_inside);
    t["at_pm2"] = int_str(c.transform_at_pm2);
    t["outside"] = int_str(c.transform_outside);
    t["nonreal"] = int_str(c.transform_nonreal);
    j["transform_counts"] = std::move(t);
    j["m_real_zero_count"] = int_str(c.m_real_zero_count);
    j["conforms"] = c.conforms;
    return j;
}

// ---------------------------------------------------------------------------
// verification

inline Json to_json(const ClaimResult& c)
{
    Json j;
    j["id"] = c.id;
    j["params"] = c.params;
    j["status"] = to_string(c.status);
    Json w = Json::object();
    for (const auto& [key, value] : c.witness)
        w[key] = value;
    j["witness"] = std::move(w);
    j["note"] = c.note;
    return j;
}

inline Json to_json(const VerificationReport& r, const std::string& suite)
{
    Json doc = document("verification");
    doc["suite"] = suite;
    Json claims = Json::array();
    for (const auto& c : r.claims)
        claims.push_back(to_json(c));
    doc["claims"] = std::move(claims);
    return doc;
}

// ---------------------------------------------------------------------------
// analysis

inline Json to_json(const AnalysisRecord& r)
{
    Json j;
    j["k"] = int_str(r.k);
    j["ell"] = int_str(r.ell);
    j["discriminant"] = rational_json(r.discriminant);
    j["simple"] = r.simple;
    j["conforms"] = r.conforms;
    j["alpha"] = enclosure_json(r.alpha);
    if (r.conforms) {
        j["mahler"] = enclosure_json(r.mahler);
        j["mahler_lhs"] = rational_json(r.mahler_lhs);
        j["mahler_rhs"] = enclosure_json(r.mahler_rhs);
        j["mahler_inequality_ok"] = tri_string(r.mahler_inequality);
        j["section5_lower"] = enclosure_json(r.section5_lower);
        j["section5_upper"] = enclosure_json(r.section5_upper);
        j["alpha_in_interval"] = tri_string(r.alpha_in_interval);
    }
    return j;
}

// ---------------------------------------------------------------------------
// tables

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

inline void write_csv(std::ostream& os, const Table& t)
{
    for (std::size_t i = 0; i < t.headers.size(); ++i)
        os << (i ? "," : "") << csv_field(t.headers[i]);
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_field(row[i]);
        os << "\n";
    }
}

inline void write_table(std::ostream& os, const Table& t)
{
    std::vector<std::size_t> w(t.headers.size(), 0);
    for (std::size_t i = 0; i < t.headers.size(); ++i)
        w[i] = t.headers[i].size();
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size() && i < w.size(); ++i)
            w[i] = std::max(w[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out += "  ";
            out += cells[i];
            if (i + 1 < cells.size())
                out += std::string(w[i] - cells[i].size(), ' ');
        }
        os << out << "\n";
    };
    line(t.headers);
    std::vector<std::string> rule;
    for (auto n : w)
        rule.push_back(std::string(n, '-'));
    line(rule);
    for (const auto& row : t.rows)
        line(row);
}

inline std::string join(const std::vector<std::string>& v, const char* sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + v[i];
    return out;
}

inline Table construct_table(const std::vector<ConstructRecord>& recs)
{
    Table t{{"k", "ell", "poly", "power", "coefficient"}, {}};
    auto add = [&](const ConstructRecord& r, const char* name, const RatPoly& p) {
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            t.rows.push_back({int_str(r.inst.k), int_str(r.inst.ell), name, std::to_string(i), to_string(p.coeffs()[i])});
    };
    for (const auto& r : recs) {
        add(r, "R", r.inst.R);
        add(r, "M", r.inst.M);
        if (r.approx) {
            add(r, "A", r.approx->A);
            add(r, "Delta", r.approx->Delta);
        }
    }
    return t;
}

inline Table certificate_table(const std::vector<ZeroCertificate>& certs)
{
    Table t{{"k", "ell", "simple", "on_circle", "off_real", "off_complex", "alpha_lo", "alpha_hi", "unity_roots",
             "conforms"},
            {}};
    for (const auto& c : certs) {
        std::vector<std::string> unity;
        for (auto n : c.unity_roots)
            unity.push_back(std::to_string(n));
        t.rows.push_back({int_str(c.k), int_str(c.ell), c.simple ? "true" : "false", int_str(c.on_circle_count),
                          std::to_string(c.off_circle_real.size()), int_str(c.off_circle_complex_count),
                          to_decimal(c.alpha.lo(), enclosure_digits, false),
                          to_decimal(c.alpha.hi(), enclosure_digits, true), join(unity),
                          c.conforms ? "true" : "false"});
    }
    return t;
}

inline Table report_table(const VerificationReport& r)
{
    Table t{{"claim", "params", "status", "witness", "note"}, {}};
    for (const auto& c : r.claims) {
        std::vector<std::string> w;
        for (const auto& [key, value] : c.witness)
            w.push_back(key + "=" + value);
        t.rows.push_back({c.id, c.params, to_string(c.status), join(w, "; "), c.note});
    }
    return t;
}

inline Table analysis_table(const std::vector<AnalysisRecord>& recs)
{
    Table t{{"k", "ell", "discriminant", "mahler_lo", "mahler_hi", "mahler_inequality_ok", "section5_lower",
             "section5_upper", "alpha_lo", "alpha_hi", "alpha_in_interval"},
            {}};
    for (const auto& r : recs) {
        if (!r.conforms) {
            t.rows.push_back({int_str(r.k), int_str(r.ell), to_string(r.discriminant), "", "", "non-conforming", "",
                              "", to_decimal(r.alpha.lo(), 20, false), to_decimal(r.alpha.hi(), 20, true), ""});
            continue;
        }
        t.rows.push_back({int_str(r.k), int_str(r.ell), to_string(r.discriminant),
                          to_decimal(r.mahler.lo(), 20, false), to_decimal(r.mahler.hi(), 20, true),
                          tri_string(r.mahler_inequality), to_decimal(r.section5_lower.lo(), 20, false),
                          to_decimal(r.section5_upper.hi(), 20, true), to_decimal(r.alpha.lo(), 20, false),
                          to_decimal(r.alpha.hi(), 20, true), tri_string(r.alpha_in_interval)});
    }
    return t;
}

struct UnityScanRecord {
    unsigned k = 0;
    unsigned ell = 0;
    std::vector<unsigned long> orders;
};

inline Json to_json(const UnityScanRecord& r)
{
    Json j;
    j["k"] = int_str(r.k);
    j["ell"] = int_str(r.ell);
    Json a = Json::array();
    for (auto n : r.orders)
        a.push_back(std::to_string(n));
    j["unity_roots"] = std::move(a);
    return j;
}

inline Table unity_table(const std::vector<UnityScanRecord>& recs)
{
    Table t{{"k", "ell", "unity_roots"}, {}};
    for (const auto& r : recs) {
        std::vector<std::string> v;
        for (auto n : r.orders)
            v.push_back(std::to_string(n));
        t.rows.push_back({int_str(r.k), int_str(r.ell), join(v)});
    }
    return t;
}

} // namespace reczeros

#endif // RECZEROS_SERIALIZE_HPP
