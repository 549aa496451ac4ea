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

#ifndef ANUMBER_TOOLS_CLI_HPP
#define ANUMBER_TOOLS_CLI_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"

namespace anumber::cli {

enum class Format { table, json_doc, csv };

struct CommonOptions {
    std::string format = "table";
    std::string output;
    bool timing = false;
    unsigned max_ambient = 12;
};

struct PrimeRange {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;
};

inline PrimeRange parse_prime_range(const std::string& s) {
    static const std::regex range(R"(^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, range)) throw input_error("--primes expects A..B, got '" + s + "'");
    const auto lo = std::stoull(m[1]);
    const auto hi = m[2].matched ? std::stoull(m[2]) : lo;
    if (lo > hi) throw input_error("empty prime range " + s);
    if (hi > PrimeField::max_modulus) throw input_error("prime range exceeds 2^31 - 1");
    return {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)};
}

/// Exit status for an exception escaping a command: 2 for bad input, 1 otherwise.
inline int exit_code_for(std::exception_ptr e, std::ostream& err) {
    try {
        std::rethrow_exception(e);
    } catch (const input_error& x) {
        err << "error: " << x.what() << "\n";
        return 2;
    } catch (const internal_assertion& x) {
        err << "internal assertion: " << x.what() << "\n";
        return 1;
    } catch (const std::exception& x) {
        err << "internal error: " << x.what() << "\n";
        return 1;
    }
}

/// Exit status for a completed report.
inline int exit_code_for(const std::vector<std::string>& anomalies) { return anomalies.empty() ? 0 : 1; }

class Runner {
   public:
    Runner(std::ostream& out, std::ostream& err, bool tty) : out_(&out), err_(&err), tty_(tty) {}

    int run(int argc, const char* const* argv);

   private:
    std::ostream& out() { return file_ ? *file_ : *out_; }

    Format format() const {
        if (common_.format == "json") return Format::json_doc;
        if (common_.format == "csv") return Format::csv;
        return Format::table;
    }

    bool color() const { return tty_ && file_ == nullptr && std::getenv("NO_COLOR") == nullptr; }

    std::string mark(std::optional<bool> match) const {
        if (!match) return "n/a";
        const char* word = *match ? "match" : "MISMATCH";
        if (!color()) return word;
        return std::string(*match ? "\033[32m" : "\033[31m") + word + "\033[0m";
    }

    void open_output() {
        if (common_.output.empty()) return;
        file_ = std::make_unique<std::ofstream>(common_.output, std::ios::binary);
        if (!*file_) throw input_error("cannot open output file " + common_.output);
    }

    void check_ambient(std::uint32_t r) const {
        if (r > common_.max_ambient)
            throw input_error("ambient dimension " + std::to_string(r) + " above the cap " +
                              std::to_string(common_.max_ambient) + " (raise --max-ambient)");
    }

    json volatile_section(std::chrono::steady_clock::time_point t0) const {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return {{"elapsed_ms", ms}};
    }

    int emit_json(json env, std::chrono::steady_clock::time_point t0) {
        if (common_.timing) env["volatile"] = volatile_section(t0);
        out() << env.dump(2) << "\n";
        return exit_code_for(env["anomalies"].get<std::vector<std::string>>());
    }

    int cmd_analyze(const AnalyzeInput& in);
    int cmd_sweep(std::uint32_t d, std::uint32_t r, const std::string& primes, std::optional<std::uint64_t> level,
                  unsigned jobs);
    int cmd_hodge(std::uint32_t d, std::uint32_t r);
    int cmd_dwork(std::uint32_t p, bool oracle);

    void table_anomalies(const std::vector<std::string>& anomalies) {
        for (const auto& a : anomalies) out() << "anomaly: " << a << "\n";
    }

    std::ostream* out_;
    std::ostream* err_;
    bool tty_;
    std::unique_ptr<std::ofstream> file_;
    CommonOptions common_;
};

inline std::string vec_str(const std::vector<std::uint64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

inline void table_images(std::ostream& os, const ANumberReport& rep) {
    for (const auto& pos : rep.positions) {
        os << "  " << pos.source << " -> ";
        if (pos.hodge_step)
            os << pos.image << "  scalar " << pos.scalar << "  pole order " << pos.pole_order << "  step "
               << *pos.hodge_step;
        else
            os << "0 (vanished)";
        os << "\n";
    }
}

inline int Runner::cmd_analyze(const AnalyzeInput& in) {
    const auto t0 = std::chrono::steady_clock::now();
    check_ambient(in.ambient);
    const AnalyzeResult res = analyze(in);
    open_output();
    switch (format()) {
        case Format::json_doc:
            return emit_json(envelope(to_json(in), to_json(res), res.anomalies), t0);
        case Format::csv: {
            out() << csv_row({"degree", "ambient", "prime", "a_number", "a_vector", "hasse_witt_rank", "predicted_a",
                              "oracle_match", "height", "level", "level_a_number", "level_predicted", "level_match"});
            const auto top_a = res.top ? std::optional<std::uint64_t>(res.top->a_number) : std::nullopt;
            std::optional<std::uint64_t> lq, la, lp;
            std::optional<bool> lm;
            if (res.level) {
                lq = res.level->report.level;
                la = res.level->report.a_number;
                lp = res.level->predicted;
                lm = res.level->match;
            }
            out() << csv_row({std::to_string(in.degree), std::to_string(in.ambient), std::to_string(in.prime),
                              cell(top_a), res.top ? list_cell(res.top->a_vector) : "", cell(res.hasse_witt_rank),
                              cell(res.predicted_a), cell(res.oracle_match),
                              res.height ? to_string(res.height->tag) : "", cell(lq), cell(la), cell(lp), cell(lm)});
            return exit_code_for(res.anomalies);
        }
        case Format::table:
            break;
    }
    auto& os = out();
    os << "Fermat hypersurface of degree " << in.degree << " in P^" << in.ambient << " over F_" << in.prime
       << " (dimension " << res.dimension << ")\n";
    os << "hodge numbers (q = 1.." << res.dimension + 1 << "): " << vec_str(res.hodge_numbers) << "\n";
    if (res.top) {
        os << "a-number        : " << res.top->a_number << "\n";
        os << "a-vector        : " << vec_str(res.top->a_vector) << "\n";
        os << "Hasse-Witt rank : " << *res.hasse_witt_rank << (*res.hasse_witt_zero ? " (zero map)" : "") << "\n";
        os << "predicted a     : " << cell(res.predicted_a) << "  [" << mark(res.oracle_match) << "]\n";
        if (res.height) os << "height          : " << to_string(res.height->tag) << "  (" << res.height->note << ")\n";
        os << "Frobenius images of H^n(O):\n";
        table_images(os, *res.top);
    } else {
        os << "H^n(O) vanishes; no a-number\n";
    }
    if (res.level) {
        const auto& lv = *res.level;
        os << "level " << lv.report.level << " a-number : " << lv.report.a_number << "  predicted "
           << cell(lv.predicted) << "  [" << mark(lv.match) << "]\n";
        os << "level " << lv.report.level << " a-vector : " << vec_str(lv.report.a_vector) << "\n";
        table_images(os, lv.report);
    }
    table_anomalies(res.anomalies);
    if (common_.timing) os << "elapsed: " << volatile_section(t0)["elapsed_ms"].get<double>() << " ms\n";
    return exit_code_for(res.anomalies);
}

inline int Runner::cmd_sweep(std::uint32_t d, std::uint32_t r, const std::string& primes,
                             std::optional<std::uint64_t> level, unsigned jobs) {
    const auto t0 = std::chrono::steady_clock::now();
    check_ambient(r);
    const PrimeRange range = parse_prime_range(primes);
    if (d < 2) throw domain_error("degree must be at least 2");
    if (r < 1) throw domain_error("ambient dimension must be at least 1");
    const std::uint64_t q = level.value_or(r);
    if (q < 1 || q > r) throw domain_error("level " + std::to_string(q) + " outside [1, " + std::to_string(r) + "]");
    if (basis(d, r, q).empty()) throw not_applicable("level " + std::to_string(q) + " has an empty basis");

    std::vector<std::uint32_t> todo, skipped;
    for (auto p : primes_in_range(range.lo, range.hi)) (d % p == 0 ? skipped : todo).push_back(p);
    if (todo.empty()) throw input_error("no usable primes in " + primes);
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

    open_output();
    auto& os = out();
    const Format fmt = format();
    json input;
    input["command"] = "fermat sweep";
    input["degree"] = d;
    input["ambient"] = r;
    input["primes"] = {range.lo, range.hi};
    input["level"] = q;
    input["skipped_primes"] = skipped;

    if (fmt == Format::json_doc)
        os << "{\"version\":" << json(ANUMBER_VERSION).dump() << ",\"input\":" << input.dump() << ",\"result\":[\n";
    else if (fmt == Format::csv)
        os << csv_row(sweep_header());
    else
        os << "   p  p%d    a  a-vector              hw  pred  match\n";

    std::vector<std::string> anomalies;
    bool first = true;
    // Rows are computed block by block on a worker pool and written in prime
    // order by this thread, so memory stays bounded by one block.
    const std::size_t block = std::size_t{jobs} * 8;
    for (std::size_t start = 0; start < todo.size(); start += block) {
        const std::size_t end = std::min(todo.size(), start + block);
        std::vector<SweepRow> rows(end - start);
        std::atomic<std::size_t> next{start};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, end - start); ++t)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < end;) rows[i - start] = sweep_row(d, r, todo[i], q);
            });
        for (auto& th : pool) th.join();

        for (const auto& row : rows) {
            if (row.anomaly) anomalies.push_back("p=" + std::to_string(row.p) + ": " + row.error.value_or("a-number disagrees with the closed form"));
            if (fmt == Format::json_doc) {
                os << (first ? "" : ",\n") << to_json(row).dump();
            } else if (fmt == Format::csv) {
                os << csv_row(sweep_fields(row));
            } else {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%4u %4u %4s  ", row.p, row.p_mod_d, cell(row.a).c_str());
                os << buf;
                std::string av = vec_str(row.a_vector);
                av.resize(std::max<std::size_t>(av.size(), 20), ' ');
                std::snprintf(buf, sizeof buf, " %4s %5s  ", cell(row.hw_rank).c_str(), cell(row.predicted).c_str());
                os << av << buf << mark(row.match);
                if (row.error) os << "  " << *row.error;
                os << "\n";
            }
            first = false;
        }
        os.flush();
    }

    if (fmt == Format::json_doc) {
        os << "\n],\"anomalies\":" << json(anomalies).dump();
        if (common_.timing) os << ",\"volatile\":" << volatile_section(t0).dump();
        os << "}\n";
    } else if (fmt == Format::table) {
        if (!skipped.empty()) {
            os << "skipped (p divides d):";
            for (auto p : skipped) os << " " << p;
            os << "\n";
        }
        table_anomalies(anomalies);
    }
    return exit_code_for(anomalies);
}

inline int Runner::cmd_hodge(std::uint32_t d, std::uint32_t r) {
    const auto t0 = std::chrono::steady_clock::now();
    check_ambient(r);
    const HodgeTable t = hodge_table(d, r);
    open_output();
    auto& os = out();
    const std::uint64_t n = r - 1;
    switch (format()) {
        case Format::json_doc:
            return emit_json(envelope(hodge_input_json(d, r), to_json(t), {}), t0);
        case Format::csv:
            os << csv_row({"q", "hodge_p", "hodge_q", "count"});
            for (std::uint64_t q = 1; q <= n + 1; ++q)
                os << csv_row({std::to_string(q), std::to_string(n + 1 - q), std::to_string(q - 1),
                               std::to_string(t.hodge_numbers[q - 1])});
            return 0;
        case Format::table:
            break;
    }
    os << "primitive Hodge numbers, degree " << d << " Fermat in P^" << r << " (dimension " << n << ")\n";
    for (std::uint64_t q = 1; q <= n + 1; ++q)
        os << "  pole order " << q << "  h^{" << n + 1 - q << "," << q - 1 << "} = " << t.hodge_numbers[q - 1] << "\n";
    os << "total " << t.total << (t.symmetric ? "" : "  (NOT symmetric)") << "\n";
    return 0;
}

inline int Runner::cmd_dwork(std::uint32_t p, bool oracle) {
    const auto t0 = std::chrono::steady_clock::now();
    const DworkResult res = dwork_report(p, oracle);
    open_output();
    auto& os = out();
    switch (format()) {
        case Format::json_doc:
            return emit_json(envelope(dwork_input_json(p, oracle), to_json(res), res.anomalies), t0);
        case Format::csv: {
            std::vector<std::string> head{"prime", "degree", "ord0", "a_number_alpha0", "fermat_a_number",
                                          "cross_check_match", "hasse_polynomial", "fp_roots"};
            std::vector<std::string> row{std::to_string(p), std::to_string(res.degree), cell(res.ord0),
                                         std::to_string(res.a_number_alpha0), cell(res.fermat_a_number),
                                         cell(res.cross_check_match), terms_cell(res.hasse_polynomial),
                                         list_cell(res.fp_roots)};
            if (res.oracle) {
                const auto& o = *res.oracle;
                head.insert(head.end(), {"oracle_polynomial", "sparse_agrees", "same_support", "same_ord0",
                                         "fitted_units", "expected_unit_fits"});
                row.insert(row.end(), {terms_cell(o.polynomial), cell(o.sparse_agrees),
                                       o.same_support ? "true" : "false", o.same_ord0 ? "true" : "false",
                                       list_cell(o.fitted_units), o.expected_unit_fits ? "true" : "false"});
            }
            os << csv_row(head) << csv_row(row);
            return exit_code_for(res.anomalies);
        }
        case Format::table:
            break;
    }
    const DworkFamily fam{PrimeField(p)};
    os << "Dwork quintic family over F_" << p << "\n";
    os << "H(a)            : " << hasse_polynomial_of(fam) << "\n";
    os << "degree          : " << res.degree << "\n";
    os << "ord_0 H         : " << cell(res.ord0) << "\n";
    os << "roots in F_p    : " << list_cell(res.fp_roots) << "\n";
    os << "a(X_0)          : " << res.a_number_alpha0 << "\n";
    os << "Fermat a-number : " << cell(res.fermat_a_number) << "  [" << mark(res.cross_check_match) << "]\n";
    if (res.oracle) {
        const auto& o = *res.oracle;
        os << "oracle          : " << hw_oracle(fam) << "\n";
        os << "sparse expansion: " << (o.sparse_agrees ? (*o.sparse_agrees ? "agrees" : "DISAGREES") : "skipped (p > 13)")
           << "\n";
        os << "same support    : " << (o.same_support ? "yes" : "no") << "\n";
        os << "same ord_0      : " << (o.same_ord0 ? "yes" : "no") << "\n";
        os << "fitted units c  : " << list_cell(o.fitted_units) << "  (oracle(a) = H(c a); expected c = "
           << o.expected_unit << ": " << (o.expected_unit_fits ? "fits" : "does not fit") << ")\n";
        if (o.finding) os << "finding: " << *o.finding << "\n";
    }
    table_anomalies(res.anomalies);
    if (common_.timing) os << "elapsed: " << volatile_section(t0)["elapsed_ms"].get<double>() << " ms\n";
    return exit_code_for(res.anomalies);
}

inline int Runner::run(int argc, const char* const* argv) {
    CLI::App app{"a-numbers and Hasse-Witt data of Fermat hypersurfaces and the Dwork quintic family", "anumber"};
    app.set_version_flag("--version", ANUMBER_VERSION);
    app.set_config("--config", "", "Read options from a TOML/INI file; command-line flags take precedence");
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common_.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--output", common_.output, "Write to PATH instead of standard output");
        sub->add_flag("--timing", common_.timing, "Append wall-clock timing (volatile section)");
    };

    std::uint32_t degree = 0, ambient = 0, prime = 0;
    std::optional<std::uint64_t> level;
    std::string primes;
    unsigned jobs = 0;
    bool oracle = false;

    auto* fermat = app.add_subcommand("fermat", "Fermat hypersurface x_0^d + ... + x_r^d = 0 in P^r");
    fermat->require_subcommand(1);

    auto add_variety = [&](CLI::App* sub) {
        sub->add_option("-d,--degree", degree, "Degree d")->required();
        sub->add_option("-r,--ambient", ambient, "Ambient projective dimension r")->required();
        sub->add_option("--max-ambient", common_.max_ambient, "Refuse r above this bound");
        add_common(sub);
    };

    auto* analyze_cmd = fermat->add_subcommand("analyze", "a-number, a-vector, Hasse-Witt rank, height of one variety");
    add_variety(analyze_cmd);
    analyze_cmd->add_option("-p,--prime", prime, "Characteristic p")->required();
    analyze_cmd->add_option("--level", level, "Also analyze pole-order level Q");

    auto* sweep_cmd = fermat->add_subcommand("sweep", "One row per prime in a range");
    add_variety(sweep_cmd);
    sweep_cmd->add_option("--primes", primes, "Prime range A..B")->required();
    sweep_cmd->add_option("--level", level, "Pole-order level Q (default: top level)");
    sweep_cmd->add_option("--jobs", jobs, "Worker threads (default: all cores)");

    auto* hodge_cmd = fermat->add_subcommand("hodge", "Primitive Hodge numbers");
    add_variety(hodge_cmd);

    auto* dwork_cmd = app.add_subcommand("dwork", "Hasse polynomial of the Dwork quintic family");
    dwork_cmd->add_option("-p,--prime", prime, "Characteristic p")->required();
    dwork_cmd->add_flag("--oracle", oracle, "Compare against coefficient extraction from f^(p-1)");
    add_common(dwork_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, *out_, *err_);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze_cmd) return cmd_analyze({degree, ambient, prime, level});
        if (*sweep_cmd) return cmd_sweep(degree, ambient, primes, level, jobs);
        if (*hodge_cmd) return cmd_hodge(degree, ambient);
        if (*dwork_cmd) return cmd_dwork(prime, oracle);
    } catch (...) {
        return exit_code_for(std::current_exception(), *err_);
    }
    return 2;
}

/// Runs the command line with argv[0] = "anumber" prepended.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool tty = false) {
    std::vector<const char*> argv{"anumber"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return Runner(out, err, tty).run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace anumber::cli

#endif
