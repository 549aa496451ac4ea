/*
   Copyright 2026 The anumber Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ANUMBER_TOOLS_REPORT_HPP
#define ANUMBER_TOOLS_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <anumber/anumber.hpp>
#include <json.hpp>

// Report payloads produced by the command line front end, with their JSON,
// CSV and table renderings. JSON keys are emitted in a fixed order.
namespace anumber::cli {

using json = nlohmann::ordered_json;

struct LevelSummary {
    ANumberReport report;
    std::optional<std::uint64_t> predicted;
    std::optional<bool> match;

    bool operator==(const LevelSummary&) const = default;
};

struct AnalyzeInput {
    std::uint32_t degree = 0;
    std::uint32_t ambient = 0;
    std::uint32_t prime = 0;
    std::optional<std::uint64_t> level;

    bool operator==(const AnalyzeInput&) const = default;
};

struct AnalyzeResult {
    std::uint32_t dimension = 0;
    std::vector<std::uint64_t> hodge_numbers;
    std::optional<ANumberReport> top;  // absent when H^n(O_X) = 0
    std::optional<std::uint64_t> hasse_witt_rank;
    std::optional<bool> hasse_witt_zero;
    std::optional<std::uint64_t> predicted_a;
    std::optional<bool> oracle_match;
    std::optional<HeightClass> height;
    std::optional<LevelSummary> level;
    std::vector<std::string> anomalies;

    bool operator==(const AnalyzeResult&) const = default;
};

struct HodgeTable {
    std::uint32_t degree = 0;
    std::uint32_t ambient = 0;
    std::vector<std::uint64_t> hodge_numbers;
    std::uint64_t total = 0;
    bool symmetric = false;

    bool operator==(const HodgeTable&) const = default;
};

struct SweepRow {
    std::uint32_t p = 0;
    std::uint32_t p_mod_d = 0;
    std::optional<std::uint64_t> a;
    std::vector<std::uint64_t> a_vector;
    std::optional<std::uint64_t> hw_rank;
    std::optional<std::uint64_t> predicted;
    std::optional<bool> match;
    std::optional<std::string> error;
    bool anomaly = false;  // not serialized; drives the exit code

    bool operator==(const SweepRow& o) const {
        return p == o.p && p_mod_d == o.p_mod_d && a == o.a && a_vector == o.a_vector && hw_rank == o.hw_rank &&
               predicted == o.predicted && match == o.match && error == o.error;
    }
};

using TermMap = std::map<std::uint64_t, std::uint32_t>;

struct OracleSummary {
    TermMap polynomial;
    std::optional<bool> sparse_agrees;
    bool same_support = false;
    bool same_ord0 = false;
    std::vector<std::uint32_t> fitted_units;
    std::uint32_t expected_unit = 0;
    bool expected_unit_fits = false;
    std::optional<std::string> finding;

    bool operator==(const OracleSummary&) const = default;
};

struct DworkResult {
    std::uint32_t prime = 0;
    TermMap hasse_polynomial;
    std::uint64_t degree = 0;
    std::optional<std::uint64_t> ord0;
    std::vector<std::uint32_t> fp_roots;
    std::uint64_t a_number_alpha0 = 0;
    std::optional<std::uint64_t> fermat_a_number;
    std::optional<bool> cross_check_match;
    std::optional<OracleSummary> oracle;
    std::vector<std::string> anomalies;

    bool operator==(const DworkResult&) const = default;
};

// ---------------------------------------------------------------------------
// computation

inline SweepRow sweep_row(std::uint32_t d, std::uint32_t r, std::uint32_t p, std::uint64_t q) {
    SweepRow row;
    row.p = p;
    row.p_mod_d = p % d;
    try {
        const FermatDescriptor v(d, r, PrimeField(p));
        const ANumberReport rep = level_report(v, q);
        row.a = rep.a_number;
        row.a_vector = rep.a_vector;
        if (v.has_top_level()) row.hw_rank = hasse_witt(v).rank();
        row.predicted = predict_level_a(v, q);
        if (row.predicted) row.match = *row.predicted == rep.a_number;
        row.anomaly = !rep.anomalies.empty() || row.match == false;
        if (!rep.anomalies.empty()) row.error = rep.anomalies.front();
    } catch (const internal_assertion& e) {
        row.error = e.what();
        row.anomaly = true;
    } catch (const input_error& e) {
        row.error = e.what();
    }
    return row;
}

inline AnalyzeResult analyze(const AnalyzeInput& in) {
    const FermatDescriptor v(in.degree, in.ambient, PrimeField(in.prime));
    AnalyzeResult res;
    res.dimension = v.dimension();
    res.hodge_numbers = hodge_numbers(v);
    if (v.has_top_level()) {
        ANumberReport top = a_number(v);
        const auto hw = hasse_witt(v);
        res.hasse_witt_rank = hw.rank();
        res.hasse_witt_zero = hw.is_zero();
        res.predicted_a = predict_a(v);
        if (res.predicted_a) res.oracle_match = *res.predicted_a == top.a_number;
        if (v.is_calabi_yau()) res.height = classify_height(v, top.a_number);
        res.anomalies.insert(res.anomalies.end(), top.anomalies.begin(), top.anomalies.end());
        top.anomalies.clear();
        if (res.oracle_match == false) res.anomalies.push_back("computed a-number disagrees with the closed form");
        if (*res.hasse_witt_zero != (top.a_number > 0))
            res.anomalies.push_back("Hasse-Witt vanishing disagrees with a > 0");
        res.top = std::move(top);
    } else if (!in.level) {
        throw not_applicable("H^n(O_X) vanishes for degree " + std::to_string(in.degree) + " in P^" +
                             std::to_string(in.ambient) + "; pass --level to analyze an inner level");
    }
    if (in.level && (!v.has_top_level() || *in.level != v.top_level())) {
        LevelSummary lv{level_report(v, *in.level), predict_level_a(v, *in.level), std::nullopt};
        if (lv.predicted) lv.match = *lv.predicted == lv.report.a_number;
        res.anomalies.insert(res.anomalies.end(), lv.report.anomalies.begin(), lv.report.anomalies.end());
        lv.report.anomalies.clear();
        if (lv.match == false) res.anomalies.push_back("level a-number disagrees with the closed form");
        res.level = std::move(lv);
    }
    return res;
}

inline HodgeTable hodge_table(std::uint32_t d, std::uint32_t r) {
    HodgeTable t{d, r, hodge_numbers(d, r), 0, true};
    for (auto h : t.hodge_numbers) t.total += h;
    const auto& h = t.hodge_numbers;
    for (std::size_t i = 0; i < h.size(); ++i) t.symmetric = t.symmetric && h[i] == h[h.size() - 1 - i];
    return t;
}

inline TermMap term_map(const FpPolynomial& f) {
    TermMap m;
    for (auto [e, c] : f.terms()) m.emplace(e, c);
    return m;
}

inline DworkResult dwork_report(std::uint32_t prime, bool with_oracle) {
    const DworkFamily fam{PrimeField(prime)};
    const auto h = hasse_polynomial(fam);
    DworkResult res;
    res.prime = prime;
    res.hasse_polynomial = term_map(h.polynomial);
    res.degree = h.degree;
    if (h.ord0) res.ord0 = *h.ord0;
    for (auto x : h.fp_roots) res.fp_roots.push_back(x.value());
    res.a_number_alpha0 = h.a_number_at_alpha0;
    // X_0 is the Fermat quintic threefold
    const auto fermat = a_number(FermatDescriptor(5, 4, fam.field()));
    res.fermat_a_number = fermat.a_number;
    res.cross_check_match = fermat.a_number == h.a_number_at_alpha0;
    res.anomalies = fermat.anomalies;
    if (!*res.cross_check_match) res.anomalies.push_back("ord0 H differs from the Fermat quintic threefold a-number");
    if (with_oracle) {
        const auto cmp = compare_with_oracle(fam, h.polynomial);
        OracleSummary o;
        o.polynomial = term_map(cmp.oracle);
        o.sparse_agrees = cmp.sparse_agrees;
        o.same_support = cmp.same_support;
        o.same_ord0 = cmp.same_ord0;
        for (auto c : cmp.fitted_units) o.fitted_units.push_back(c.value());
        o.expected_unit = 5 % prime;
        o.expected_unit_fits = cmp.expected_unit_fits;
        if (!o.expected_unit_fits) o.finding = "oracle matches H(c*alpha) only for units other than 5";
        if (o.sparse_agrees == false) res.anomalies.push_back("sparse expansion disagrees with the multinomial sum");
        if (!o.same_ord0) res.anomalies.push_back("oracle and H have different ord0");
        res.oracle = std::move(o);
    }
    return res;
}

// ---------------------------------------------------------------------------
// JSON

template <class T>
json opt(const std::optional<T>& x) {
    return x ? json(*x) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
    const auto& x = j.at(key);
    if (x.is_null()) return std::nullopt;
    return x.get<T>();
}

inline json exponents_json(const ExponentVector& w) { return w.entries(); }

inline ExponentVector exponents_from(const json& j, std::uint32_t degree) {
    return ExponentVector(j.get<std::vector<std::uint64_t>>(), degree);
}

inline json images_json(const ANumberReport& rep) {
    json arr = json::array();
    for (const auto& pos : rep.positions) {
        json j;
        j["source"] = exponents_json(pos.source);
        j["image"] = pos.hodge_step ? exponents_json(pos.image) : json(nullptr);
        j["scalar"] = pos.scalar;
        j["pole_order"] = pos.pole_order;
        j["hodge_step"] = opt(pos.hodge_step);
        arr.push_back(std::move(j));
    }
    return arr;
}

inline std::vector<ImagePosition> images_from(const json& arr, std::uint32_t degree) {
    std::vector<ImagePosition> out;
    for (const auto& j : arr) {
        ImagePosition pos;
        pos.source = exponents_from(j.at("source"), degree);
        if (!j.at("image").is_null()) pos.image = exponents_from(j.at("image"), degree);
        pos.scalar = j.at("scalar").get<std::uint32_t>();
        pos.pole_order = j.at("pole_order").get<std::uint64_t>();
        pos.hodge_step = get_opt<std::uint64_t>(j, "hodge_step");
        out.push_back(std::move(pos));
    }
    return out;
}

inline json envelope(json input, json result, const std::vector<std::string>& anomalies) {
    json env;
    env["version"] = ANUMBER_VERSION;
    env["input"] = std::move(input);
    env["result"] = std::move(result);
    env["anomalies"] = anomalies;
    return env;
}

inline json to_json(const AnalyzeInput& in) {
    json j;
    j["command"] = "fermat analyze";
    j["degree"] = in.degree;
    j["ambient"] = in.ambient;
    j["prime"] = in.prime;
    j["level"] = opt(in.level);
    return j;
}

inline json to_json(const AnalyzeResult& res) {
    json j;
    j["dimension"] = res.dimension;
    j["hodge_numbers"] = res.hodge_numbers;
    j["a_number"] = res.top ? json(res.top->a_number) : json(nullptr);
    j["a_vector"] = res.top ? json(res.top->a_vector) : json(nullptr);
    j["images"] = res.top ? images_json(*res.top) : json(nullptr);
    j["hasse_witt_rank"] = opt(res.hasse_witt_rank);
    j["hasse_witt_zero"] = opt(res.hasse_witt_zero);
    j["predicted_a"] = opt(res.predicted_a);
    j["oracle_match"] = opt(res.oracle_match);
    if (res.height) {
        j["height"] = {{"tag", to_string(res.height->tag)}, {"note", res.height->note}};
    } else {
        j["height"] = nullptr;
    }
    if (res.level) {
        const auto& lv = *res.level;
        json l;
        l["q"] = lv.report.level;
        l["a_number"] = lv.report.a_number;
        l["a_vector"] = lv.report.a_vector;
        l["images"] = images_json(lv.report);
        l["predicted"] = opt(lv.predicted);
        l["match"] = opt(lv.match);
        j["level"] = std::move(l);
    } else {
        j["level"] = nullptr;
    }
    return j;
}

inline HeightTag height_tag_from(const std::string& s) {
    for (auto t : {HeightTag::one, HeightTag::infinite, HeightTag::unresolved})
        if (s == to_string(t)) return t;
    throw input_error("unknown height tag '" + s + "'");
}

/// Inverse of envelope(to_json(in), to_json(res), res.anomalies).
inline std::pair<AnalyzeInput, AnalyzeResult> analyze_from_json(const json& env) {
    const json& ji = env.at("input");
    AnalyzeInput in{ji.at("degree").get<std::uint32_t>(), ji.at("ambient").get<std::uint32_t>(),
                    ji.at("prime").get<std::uint32_t>(), get_opt<std::uint64_t>(ji, "level")};
    const json& j = env.at("result");
    AnalyzeResult res;
    res.dimension = j.at("dimension").get<std::uint32_t>();
    res.hodge_numbers = j.at("hodge_numbers").get<std::vector<std::uint64_t>>();
    if (!j.at("a_number").is_null()) {
        ANumberReport top;
        top.level = in.ambient;
        top.a_number = j.at("a_number").get<std::uint64_t>();
        top.a_vector = j.at("a_vector").get<std::vector<std::uint64_t>>();
        top.positions = images_from(j.at("images"), in.degree);
        res.top = std::move(top);
    }
    res.hasse_witt_rank = get_opt<std::uint64_t>(j, "hasse_witt_rank");
    res.hasse_witt_zero = get_opt<bool>(j, "hasse_witt_zero");
    res.predicted_a = get_opt<std::uint64_t>(j, "predicted_a");
    res.oracle_match = get_opt<bool>(j, "oracle_match");
    if (!j.at("height").is_null())
        res.height = HeightClass{height_tag_from(j["height"].at("tag").get<std::string>()),
                                 j["height"].at("note").get<std::string>()};
    if (!j.at("level").is_null()) {
        const json& l = j["level"];
        LevelSummary lv;
        lv.report.level = l.at("q").get<std::uint64_t>();
        lv.report.a_number = l.at("a_number").get<std::uint64_t>();
        lv.report.a_vector = l.at("a_vector").get<std::vector<std::uint64_t>>();
        lv.report.positions = images_from(l.at("images"), in.degree);
        lv.predicted = get_opt<std::uint64_t>(l, "predicted");
        lv.match = get_opt<bool>(l, "match");
        res.level = std::move(lv);
    }
    res.anomalies = env.at("anomalies").get<std::vector<std::string>>();
    return {in, res};
}

inline json to_json(const HodgeTable& t) {
    json j;
    j["dimension"] = t.ambient - 1;
    j["hodge_numbers"] = t.hodge_numbers;
    j["total"] = t.total;
    j["symmetric"] = t.symmetric;
    return j;
}

inline json hodge_input_json(std::uint32_t d, std::uint32_t r) {
    json j;
    j["command"] = "fermat hodge";
    j["degree"] = d;
    j["ambient"] = r;
    return j;
}

inline HodgeTable hodge_from_json(const json& env) {
    const json& ji = env.at("input");
    const json& j = env.at("result");
    return {ji.at("degree").get<std::uint32_t>(), ji.at("ambient").get<std::uint32_t>(),
            j.at("hodge_numbers").get<std::vector<std::uint64_t>>(), j.at("total").get<std::uint64_t>(),
            j.at("symmetric").get<bool>()};
}

inline json terms_json(const TermMap& m) {
    json j = json::object();
    // descending exponent, matching how polynomials are usually written
    for (auto it = m.rbegin(); it != m.rend(); ++it) j[std::to_string(it->first)] = it->second;
    return j;
}

inline TermMap terms_from(const json& j) {
    TermMap m;
    for (const auto& [k, v] : j.items()) m.emplace(std::stoull(k), v.get<std::uint32_t>());
    return m;
}

inline json dwork_input_json(std::uint32_t p, bool oracle) {
    json j;
    j["command"] = "dwork";
    j["prime"] = p;
    j["oracle"] = oracle;
    return j;
}

inline json to_json(const DworkResult& r) {
    json j;
    j["prime"] = r.prime;
    j["hasse_polynomial"] = terms_json(r.hasse_polynomial);
    j["degree"] = r.degree;
    j["ord0"] = opt(r.ord0);
    j["fp_roots"] = r.fp_roots;
    j["a_number_alpha0"] = r.a_number_alpha0;
    j["fermat_a_number"] = opt(r.fermat_a_number);
    j["cross_check_match"] = opt(r.cross_check_match);
    if (r.oracle) {
        const auto& o = *r.oracle;
        json oj;
        oj["polynomial"] = terms_json(o.polynomial);
        oj["sparse_agrees"] = opt(o.sparse_agrees);
        oj["same_support"] = o.same_support;
        oj["same_ord0"] = o.same_ord0;
        oj["fitted_units"] = o.fitted_units;
        oj["expected_unit"] = o.expected_unit;
        oj["expected_unit_fits"] = o.expected_unit_fits;
        oj["finding"] = opt(o.finding);
        j["oracle"] = std::move(oj);
    } else {
        j["oracle"] = nullptr;
    }
    return j;
}

inline DworkResult dwork_from_json(const json& env) {
    const json& j = env.at("result");
    DworkResult r;
    r.prime = j.at("prime").get<std::uint32_t>();
    r.hasse_polynomial = terms_from(j.at("hasse_polynomial"));
    r.degree = j.at("degree").get<std::uint64_t>();
    r.ord0 = get_opt<std::uint64_t>(j, "ord0");
    r.fp_roots = j.at("fp_roots").get<std::vector<std::uint32_t>>();
    r.a_number_alpha0 = j.at("a_number_alpha0").get<std::uint64_t>();
    r.fermat_a_number = get_opt<std::uint64_t>(j, "fermat_a_number");
    r.cross_check_match = get_opt<bool>(j, "cross_check_match");
    if (!j.at("oracle").is_null()) {
        const json& oj = j["oracle"];
        OracleSummary o;
        o.polynomial = terms_from(oj.at("polynomial"));
        o.sparse_agrees = get_opt<bool>(oj, "sparse_agrees");
        o.same_support = oj.at("same_support").get<bool>();
        o.same_ord0 = oj.at("same_ord0").get<bool>();
        o.fitted_units = oj.at("fitted_units").get<std::vector<std::uint32_t>>();
        o.expected_unit = oj.at("expected_unit").get<std::uint32_t>();
        o.expected_unit_fits = oj.at("expected_unit_fits").get<bool>();
        o.finding = get_opt<std::string>(oj, "finding");
        r.oracle = std::move(o);
    }
    r.anomalies = env.at("anomalies").get<std::vector<std::string>>();
    return r;
}

inline json to_json(const SweepRow& row) {
    json j;
    j["p"] = row.p;
    j["p_mod_d"] = row.p_mod_d;
    j["a"] = opt(row.a);
    j["a_vector"] = row.a_vector;
    j["hw_rank"] = opt(row.hw_rank);
    j["predicted"] = opt(row.predicted);
    j["match"] = opt(row.match);
    j["error"] = opt(row.error);
    return j;
}

inline SweepRow sweep_row_from_json(const json& j) {
    SweepRow row;
    row.p = j.at("p").get<std::uint32_t>();
    row.p_mod_d = j.at("p_mod_d").get<std::uint32_t>();
    row.a = get_opt<std::uint64_t>(j, "a");
    row.a_vector = j.at("a_vector").get<std::vector<std::uint64_t>>();
    row.hw_rank = get_opt<std::uint64_t>(j, "hw_rank");
    row.predicted = get_opt<std::uint64_t>(j, "predicted");
    row.match = get_opt<bool>(j, "match");
    row.error = get_opt<std::string>(j, "error");
    return row;
}

// ---------------------------------------------------------------------------
// CSV (RFC 4180)

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + csv_field(fields[i]);
    return line + "\r\n";
}

template <class T>
std::string cell(const std::optional<T>& x) {
    if (!x) return "";
    if constexpr (std::is_same_v<T, bool>) return *x ? "true" : "false";
    else if constexpr (std::is_same_v<T, std::string>) return *x;
    else return std::to_string(*x);
}

template <class T>
std::string list_cell(const std::vector<T>& xs) {
    return json(xs).dump();
}

inline std::string terms_cell(const TermMap& m) { return terms_json(m).dump(); }

inline const std::vector<std::string>& sweep_header() {
    static const std::vector<std::string> h{"p", "p_mod_d", "a", "a_vector", "hw_rank", "predicted", "match", "error"};
    return h;
}

inline std::vector<std::string> sweep_fields(const SweepRow& row) {
    return {std::to_string(row.p), std::to_string(row.p_mod_d), cell(row.a), list_cell(row.a_vector),
            cell(row.hw_rank), cell(row.predicted), cell(row.match), cell(row.error)};
}

}  // namespace anumber::cli

#endif
