#include "t8n/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "t8n/characters.hpp"
#include "t8n/errors.hpp"
#include "t8n/families.hpp"
#include "t8n/oracle.hpp"
#include "t8n/setlang.hpp"
#include "t8n/spectrum.hpp"

namespace t8n {

namespace {

using nlohmann::json;
using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

json spectrum_to_json(const spectrum& s) {
    json out;
    out["exact"] = s.exact;
    out["total_multiplicity"] = s.total_multiplicity();
    json entries = json::array();
    for (const spectrum_entry& e : s.entries) {
        json item;
        if (e.integral)
            item["value"] = e.int_value;
        else
            item["value"] = e.value;
        item["multiplicity"] = e.multiplicity;
        entries.push_back(std::move(item));
    }
    out["entries"] = std::move(entries);
    return out;
}

json verdict_to_json(const integrality_verdict& v) {
    json out;
    out["method"] = to_string(v.method);
    out["applicable"] = v.applicable;
    out["integral"] = v.integral;
    if (!v.reason.empty()) out["reason"] = v.reason;
    json failures = json::array();
    for (const verdict_failure& f : v.failures)
        failures.push_back({{"condition", f.condition}, {"witness", f.witness}});
    out["failures"] = std::move(failures);
    return out;
}

json run_report(const std::string& command, int n, const connection_set* s, json result,
                double ms) {
    json out;
    out["command"] = command;
    out["n"] = n;
    if (s) out["set"] = json::parse(to_json(*s));
    out["result"] = std::move(result);
    out["elapsed_ms"] = ms;
    return out;
}

std::string join_args(const std::vector<std::string>& args) {
    std::string out;
    for (const std::string& a : args) {
        if (!out.empty()) out += " ";
        out += a;
    }
    return out;
}

void print_spectrum_csv(std::ostream& out, const spectrum& s) {
    out << "eigenvalue,multiplicity\n";
    for (const spectrum_entry& e : s.entries) {
        if (e.integral)
            out << e.int_value;
        else
            out << e.value;
        out << "," << e.multiplicity << "\n";
    }
}

std::string complex_text(const std::complex<double>& z) {
    std::ostringstream out;
    out.precision(6);
    out << std::fixed << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return out.str();
}

struct range {
    int lo = 1;
    int hi = 8;
};

range parse_range(const std::string& text) {
    const std::size_t sep = text.find("..");
    if (sep == std::string::npos)
        throw std::invalid_argument("range must look like a..b, e.g. 1..8");
    range out;
    out.lo = std::stoi(text.substr(0, sep));
    out.hi = std::stoi(text.substr(sep + 2));
    if (out.lo < 1 || out.hi < out.lo) throw std::invalid_argument("invalid range " + text);
    return out;
}

int cmd_spectrum(const std::string& echo, int n, const std::string& expr,
                 const std::string& format, const std::string& method, bool symmetrize,
                 std::ostream& out, std::ostream& err) {
    const auto start = clock_type::now();
    const group g(n);
    connection_set s = evaluate(parse_set_expr(expr), g);
    if (symmetrize) {
        std::vector<element> members = s.members();
        for (const element& x : s.members()) members.push_back(g.inv(x));
        s = connection_set(g, std::move(members));
    }

    std::optional<spectrum> by_characters, by_oracle;
    if (method == "character" || method == "both") {
        const character_table tbl(n);
        by_characters = compute_spectrum(tbl, s);
    }
    if (method == "oracle" || method == "both") by_oracle = oracle_spectrum(s);
    if (by_characters && by_oracle) {
        const bool agree = (by_characters->exact && by_oracle->exact)
                               ? spectra_equal_exact(*by_characters, *by_oracle)
                               : spectra_match(*by_characters, *by_oracle, 1e-6);
        if (!agree) {
            err << "error: character and oracle spectra disagree\n"
                << "  character: " << to_string(*by_characters) << "\n"
                << "  oracle:    " << to_string(*by_oracle) << "\n";
            return 1;
        }
    }
    const spectrum& result = by_characters ? *by_characters : *by_oracle;

    if (format == "text") {
        out << "Cay(T_" << 8 * n << ", S), |S| = " << s.size() << ", spectrum "
            << (result.exact ? "(exact)" : "(numeric)") << ":\n"
            << to_string(result) << "\n";
    } else if (format == "csv") {
        print_spectrum_csv(out, result);
    } else {
        json payload = spectrum_to_json(result);
        payload["method"] = method;
        out << run_report(echo, n, &s, std::move(payload), elapsed_ms(start)).dump(2) << "\n";
    }
    return 0;
}

int cmd_check(const std::string& echo, int n, const std::string& expr, const std::string& method,
              std::ostream& out, std::ostream& err) {
    const auto start = clock_type::now();
    const group g(n);
    const connection_set s = evaluate(parse_set_expr(expr), g);
    const character_table tbl(n);

    std::vector<integrality_verdict> verdicts;
    if (method == "theorem3" || method == "all") verdicts.push_back(check_integral_theorem3(tbl, s));
    if (method == "theorem4" || method == "all") verdicts.push_back(check_integral_theorem4(tbl, s));
    if (method == "theorem5" || method == "all") verdicts.push_back(check_integral_theorem5(tbl, s));
    if (method == "oracle" || method == "all") verdicts.push_back(check_integral_oracle(s));

    json payload = json::array();
    for (const integrality_verdict& v : verdicts) payload.push_back(verdict_to_json(v));
    out << run_report(echo, n, &s, std::move(payload), elapsed_ms(start)).dump(2) << "\n";

    if (method != "all") {
        return verdicts.front().applicable ? 0 : 2;
    }
    std::optional<bool> agreed;
    for (const integrality_verdict& v : verdicts) {
        if (!v.applicable) continue;
        if (agreed && *agreed != v.integral) {
            err << "error: applicable methods disagree on integrality\n";
            return 1;
        }
        agreed = v.integral;
    }
    return 0;
}

int cmd_enumerate(int n, std::size_t limit, bool verify, std::ostream& out, std::ostream& err) {
    const enumeration_result result = enumerate_integral_normal(n, limit);
    for (const connection_set& s : result.sets) {
        if (verify && !check_integral_oracle(s).integral) {
            err << "error: enumerated set failed the oracle check: " << to_json(s) << "\n";
            return 1;
        }
        out << to_json(s) << "\n";
    }
    if (result.truncated)
        err << "note: enumeration truncated at limit " << limit << "\n";
    return 0;
}

int cmd_chartable(int n, const std::string& format, std::ostream& out) {
    const character_table tbl(n);
    const std::vector<conjugacy_class>& classes = tbl.classes();

    if (format == "json") {
        json out_json;
        out_json["n"] = n;
        out_json["conductor"] = 8 * n;
        json class_list = json::array();
        for (const conjugacy_class& c : classes)
            class_list.push_back({{"representative", {c.representative.r, c.representative.j}},
                                  {"size", c.members.size()},
                                  {"label", to_string(c.representative)}});
        out_json["classes"] = std::move(class_list);
        json rows = json::array();
        for (const character_id& id : tbl.characters()) {
            json row;
            row["name"] = id.name();
            row["degree"] = tbl.degree(id);
            json values = json::array();
            for (const conjugacy_class& c : classes) {
                const cyclotomic& v = tbl.value(id, c.representative);
                json cell;
                json coeffs = json::array();
                for (const bigint& co : v.coeffs()) coeffs.push_back(co.convert_to<long long>());
                cell["coeffs"] = std::move(coeffs);
                const std::complex<double> z = v.to_complex();
                cell["re"] = z.real();
                cell["im"] = z.imag();
                values.push_back(std::move(cell));
            }
            row["values"] = std::move(values);
            rows.push_back(std::move(row));
        }
        out_json["characters"] = std::move(rows);
        out << out_json.dump(2) << "\n";
        return 0;
    }

    out << "character,degree";
    for (const conjugacy_class& c : classes) out << ",\"" << to_string(c.representative) << "\"";
    out << "\n";
    for (const character_id& id : tbl.characters()) {
        out << id.name() << "," << tbl.degree(id);
        for (const conjugacy_class& c : classes) {
            const cyclotomic& v = tbl.value(id, c.representative);
            out << ",\"";
            for (std::size_t i = 0; i < v.coeffs().size(); ++i) {
                if (i > 0) out << " ";
                out << v.coeffs()[i];
            }
            out << " (" << complex_text(v.to_complex()) << ")\"";
        }
        out << "\n";
    }
    return 0;
}

int cmd_verify_families(const range& r, std::ostream& out) {
    bool all_ok = true;
    out << "n,family,degree,character_ok,oracle_ok,ms\n";
    for (int n = r.lo; n <= r.hi; ++n) {
        const group g(n);
        const character_table tbl(n);
        for (const integral_family& fam : builtin_integral_families()) {
            const auto start = clock_type::now();
            const connection_set s = evaluate(parse_set_expr(fam.expression), g);
            const spectrum expected = family_spectrum(fam, n);
            const spectrum by_characters = compute_spectrum(tbl, s);
            const spectrum by_oracle = oracle_spectrum(s);
            const bool char_ok = spectra_equal_exact(by_characters, expected);
            const bool oracle_ok = spectra_equal_exact(by_oracle, expected);
            all_ok = all_ok && char_ok && oracle_ok;
            out << n << "," << fam.name << "," << s.size() << "," << (char_ok ? "PASS" : "FAIL")
                << "," << (oracle_ok ? "PASS" : "FAIL") << "," << elapsed_ms(start) << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    const std::string echo = join_args(args);

    CLI::App app{"Exact spectra and integrality of Cayley graphs over T_{8n}"};
    app.require_subcommand(1);

    int n = 2;
    std::string expr, format = "text", method = "character";
    bool symmetrize = false;

    CLI::App* sp = app.add_subcommand("spectrum", "Spectrum of Cay(T_{8n}, S)");
    sp->add_option("--n", n, "group parameter n")->required()->check(CLI::PositiveNumber);
    sp->add_option("--set", expr, "connection set expression")->required();
    sp->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sp->add_option("--method", method, "spectrum method")
        ->check(CLI::IsMember({"character", "oracle", "both"}));
    sp->add_flag("--symmetrize", symmetrize, "add inverses of all members");

    int check_n = 2;
    std::string check_expr, check_method_name = "all";
    CLI::App* ck = app.add_subcommand("check", "Integrality decision with failure witnesses");
    ck->add_option("--n", check_n, "group parameter n")->required()->check(CLI::PositiveNumber);
    ck->add_option("--set", check_expr, "connection set expression")->required();
    ck->add_option("--method", check_method_name, "decision procedure")
        ->check(CLI::IsMember({"theorem3", "theorem4", "theorem5", "oracle", "all"}));

    int enum_n = 2;
    std::size_t limit = 100000;
    bool verify = false;
    std::string family = "normal";
    CLI::App* en = app.add_subcommand("enumerate", "All integral normal connection sets");
    en->add_option("--n", enum_n, "group parameter n")->required()->check(CLI::PositiveNumber);
    en->add_option("--family", family, "set family (only \"normal\")")
        ->check(CLI::IsMember({"normal"}));
    en->add_option("--limit", limit, "maximum number of sets to emit");
    en->add_flag("--verify", verify, "oracle-check each set before emission");

    int table_n = 2;
    std::string table_format = "csv";
    CLI::App* ct = app.add_subcommand("chartable", "Export the character table");
    ct->add_option("--n", table_n, "group parameter n")->required()->check(CLI::PositiveNumber);
    ct->add_option("--format", table_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string range_text = "1..8";
    CLI::App* vf = app.add_subcommand(
        "verify-families", "Check the built-in integral families against both methods");
    vf->add_option("--n-range", range_text, "range of n, e.g. 1..8");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sp->parsed()) return cmd_spectrum(echo, n, expr, format, method, symmetrize, out, err);
        if (ck->parsed()) return cmd_check(echo, check_n, check_expr, check_method_name, out, err);
        if (en->parsed()) return cmd_enumerate(enum_n, limit, verify, out, err);
        if (ct->parsed()) return cmd_chartable(table_n, table_format, out);
        if (vf->parsed()) return cmd_verify_families(parse_range(range_text), out);
    } catch (const not_applicable& e) {
        err << "not applicable: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(std::move(args), std::cout, std::cerr);
}

}  // namespace t8n
