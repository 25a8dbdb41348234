// Command line front end: convolution sums, decompositions, verification,
// q-expansions and Sturm bounds, with text, JSON and CSV output.

#include "convsum/convolution.hpp"
#include "convsum/convsum.hpp"
#include "convsum/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstddef>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace {

using convsum::Decomposition;
using convsum::Int;
using convsum::Json;
using convsum::QSeries;
using convsum::Rational;
using convsum::SturmCertificate;
using convsum::WFormula;

std::string join_coeffs(const QSeries& series) {
    std::string out;
    for (std::size_t i = 0; i < series.truncation(); ++i) {
        if (i > 0)
            out += ", ";
        out += series.coeff(i).str();
    }
    return out;
}

void require_format(const std::string& format,
                    const std::vector<std::string>& allowed) {
    if (std::find(allowed.begin(), allowed.end(), format) == allowed.end())
        throw std::invalid_argument("format \"" + format +
                                    "\" is not supported by this command");
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

WFormula build_formula_or_suggest(long r, long s, std::size_t terms) {
    try {
        return convsum::build_w_formula(r, s, terms);
    } catch (const convsum::unsupported_pair_error& e) {
        throw convsum::unsupported_pair_error(std::string(e.what()) +
                                              " (use --method brute)");
    }
}

// Evaluates W(r, s; n) through the closed formulas; (1, 1) goes through the
// Besge identity.
Int formula_value(long r, long s, long n, const WFormula* formula) {
    if (r == 1 && s == 1) {
        const Rational v = convsum::besge_w11(n);
        if (!v.is_integer())
            throw convsum::consistency_error("besge value is not an integer");
        return v.num();
    }
    return convsum::w_eval(*formula, n);
}

struct WsumArgs {
    long r = 1;
    long s = 1;
    long n = 1;
    std::string method = "both";
    std::string format = "text";
};

int run_wsum(const WsumArgs& a) {
    require_format(a.format, {"text", "json", "csv"});
    const std::string label = "W(" + std::to_string(a.r) + "," +
                              std::to_string(a.s) + ";" + std::to_string(a.n) + ")";

    WFormula formula;
    const bool needs_formula =
        (a.method == "formula" || a.method == "both") && !(a.r == 1 && a.s == 1);
    if (needs_formula)
        formula = build_formula_or_suggest(a.r, a.s,
                                           static_cast<std::size_t>(a.n) + 1);

    if (a.method == "both") {
        const Int wf = formula_value(a.r, a.s, a.n, needs_formula ? &formula : nullptr);
        const Int wb = convsum::w_brute(a.r, a.s, a.n);
        const bool match = wf == wb;
        if (a.format == "text")
            std::cout << label << ": formula = " << wf << ", brute = " << wb
                      << ", match = " << (match ? "true" : "false") << "\n";
        else if (a.format == "json")
            print_json(Json{{"r", a.r},
                            {"s", a.s},
                            {"n", a.n},
                            {"method", "both"},
                            {"W_formula", wf.str()},
                            {"W_brute", wb.str()},
                            {"match", match}});
        else
            std::cout << "n,W_formula,W_brute,match\n"
                      << a.n << "," << wf << "," << wb << ","
                      << (match ? "true" : "false") << "\n";
        return match ? 0 : 1;
    }

    if (a.method != "formula" && a.method != "brute")
        throw std::invalid_argument("method \"" + a.method +
                                    "\" is not one of formula, brute, both");
    const Int w = (a.method == "formula")
                      ? formula_value(a.r, a.s, a.n, needs_formula ? &formula : nullptr)
                      : convsum::w_brute(a.r, a.s, a.n);
    if (a.format == "text")
        std::cout << label << " = " << w << "\n";
    else if (a.format == "json")
        print_json(Json{{"r", a.r},
                        {"s", a.s},
                        {"n", a.n},
                        {"method", a.method},
                        {"W", w.str()}});
    else
        std::cout << "n,W,method\n" << a.n << "," << w << "," << a.method << "\n";
    return 0;
}

struct WtableArgs {
    long r = 1;
    long s = 1;
    long from = 1;
    long to = 1;
    std::string method = "both";
    std::string format = "text";
};

int run_wtable(const WtableArgs& a) {
    require_format(a.format, {"text", "json", "csv"});
    if (a.from < 1 || a.to < a.from)
        throw std::invalid_argument("need 1 <= from <= to");
    if (a.method != "formula" && a.method != "brute" && a.method != "both")
        throw std::invalid_argument("method \"" + a.method +
                                    "\" is not one of formula, brute, both");

    const bool use_formula = a.method != "brute";
    const bool use_brute = a.method != "formula";

    WFormula formula;
    if (use_formula && !(a.r == 1 && a.s == 1))
        formula = build_formula_or_suggest(a.r, a.s,
                                           static_cast<std::size_t>(a.to) + 1);
    std::vector<Int> table;
    if (use_brute)
        table = convsum::sigma_table(
            1, static_cast<std::size_t>(a.to / std::min(a.r, a.s)) + 1);

    bool all_match = true;
    struct Row {
        long n;
        Int wf;
        Int wb;
        bool match;
    };
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(a.to - a.from) + 1);
    for (long n = a.from; n <= a.to; ++n) {
        Row row{n, Int(0), Int(0), true};
        if (use_formula)
            row.wf = formula_value(a.r, a.s, n,
                                   (a.r == 1 && a.s == 1) ? nullptr : &formula);
        if (use_brute)
            row.wb = convsum::w_brute(a.r, a.s, n, table);
        if (a.method == "both") {
            row.match = row.wf == row.wb;
            all_match = all_match && row.match;
        }
        rows.push_back(std::move(row));
    }

    const char sep = (a.format == "csv") ? ',' : '\t';
    if (a.format == "json") {
        Json jrows = Json::array();
        for (const Row& row : rows) {
            Json j{{"n", row.n}};
            if (a.method == "both") {
                j["W_formula"] = row.wf.str();
                j["W_brute"] = row.wb.str();
                j["match"] = row.match;
            } else {
                j["W"] = (a.method == "formula") ? row.wf.str() : row.wb.str();
            }
            jrows.push_back(std::move(j));
        }
        print_json(Json{{"r", a.r},
                        {"s", a.s},
                        {"method", a.method},
                        {"rows", jrows}});
    } else if (a.method == "both") {
        std::cout << "n" << sep << "W_formula" << sep << "W_brute" << sep
                  << "match" << "\n";
        for (const Row& row : rows)
            std::cout << row.n << sep << row.wf << sep << row.wb << sep
                      << (row.match ? "true" : "false") << "\n";
    } else {
        std::cout << "n" << sep << "W" << sep << "method" << "\n";
        for (const Row& row : rows)
            std::cout << row.n << sep
                      << ((a.method == "formula") ? row.wf : row.wb) << sep
                      << a.method << "\n";
    }
    return all_match ? 0 : 1;
}

struct DecomposeArgs {
    long r = 1;
    long s = 1;
    std::size_t terms = convsum::kDefaultTerms;
    std::string format = "text";
};

int run_decompose(const DecomposeArgs& a) {
    require_format(a.format, {"text", "json"});
    const Decomposition dec = convsum::solve_decomposition(a.r, a.s, a.terms);
    if (a.format == "json") {
        print_json(convsum::json_of(dec, a.terms));
        return 0;
    }
    std::cout << "r = " << dec.r << ", s = " << dec.s << ", level = " << dec.level
              << "\n";
    for (const auto& [d, c] : dec.coeffs)
        std::cout << "c[" << d << "] = " << c << "\n";
    std::cout << "residual: " << join_coeffs(dec.residual.truncated(a.terms))
              << "\n";
    return 0;
}

struct VerifyArgs {
    long r = 1;
    long s = 1;
    std::size_t terms = convsum::kDefaultTerms;
    std::string format = "text";
};

void print_certificate_text(const SturmCertificate& cert) {
    std::cout << "pair (" << cert.r << "," << cert.s << "): level " << cert.level
              << ", weight " << cert.weight << ", sturm bound " << cert.bound
              << ", window 0.." << cert.bound << ", verdict ";
    if (cert.equal) {
        std::cout << "equal\n";
        return;
    }
    std::cout << "mismatch at q^" << cert.mismatch->index << ": residual = "
              << cert.mismatch->residual << ", eta = "
              << cert.mismatch->combination << "\n";
}

int run_verify(const VerifyArgs& a) {
    require_format(a.format, {"text", "json"});
    const SturmCertificate cert = convsum::verify_eta_identity(a.r, a.s, a.terms);
    if (a.format == "json")
        print_json(convsum::json_of(cert));
    else
        print_certificate_text(cert);
    return cert.equal ? 0 : 1;
}

int run_verify_all(std::size_t terms, const std::string& format) {
    require_format(format, {"text", "json"});
    bool all_equal = true;
    std::vector<SturmCertificate> certs;
    for (const auto& [r, s] : convsum::builtin_pairs()) {
        certs.push_back(convsum::verify_eta_identity(r, s, terms));
        all_equal = all_equal && certs.back().equal;
    }
    if (format == "json") {
        Json jcerts = Json::array();
        for (const auto& cert : certs)
            jcerts.push_back(convsum::json_of(cert));
        print_json(Json{{"pairs", jcerts}, {"all_equal", all_equal}});
    } else {
        std::size_t equal_count = 0;
        for (const auto& cert : certs) {
            print_certificate_text(cert);
            if (cert.equal)
                ++equal_count;
        }
        std::cout << "summary: " << equal_count << "/" << certs.size()
                  << " identities equal\n";
    }
    return all_equal ? 0 : 1;
}

struct QexpArgs {
    std::string object = "e4";
    long scale = 1;
    bool scale_given = false;
    std::string spec;
    std::size_t terms = convsum::kDefaultTerms;
    std::string format = "text";
};

int run_qexp(const QexpArgs& a) {
    require_format(a.format, {"text", "json", "csv"});
    QSeries series(0);
    Json meta = Json::object();
    meta["object"] = a.object;
    if (a.object == "e2" || a.object == "e4") {
        if (!a.spec.empty())
            throw std::invalid_argument("--spec only applies to --object eta");
        const int weight = (a.object == "e2") ? 2 : 4;
        series = convsum::eisenstein_series(convsum::EisensteinSpec(weight, a.scale),
                                            a.terms);
        meta["scale"] = a.scale;
    } else if (a.object == "l") {
        if (!a.spec.empty())
            throw std::invalid_argument("--spec only applies to --object eta");
        if (!a.scale_given)
            throw std::invalid_argument("--object l needs --scale");
        series = convsum::l_series(a.scale, a.terms);
        meta["scale"] = a.scale;
    } else if (a.object == "eta") {
        if (a.spec.empty())
            throw std::invalid_argument("--object eta needs --spec");
        if (a.scale_given)
            throw std::invalid_argument("--scale does not apply to --object eta");
        const convsum::EtaQuotient quotient = convsum::parse_eta_spec(a.spec);
        series = convsum::eta_series(quotient, a.terms);
        meta["eta"] = convsum::json_of(quotient);
    } else {
        throw std::invalid_argument("object \"" + a.object +
                                    "\" is not one of e2, e4, l, eta");
    }

    if (a.format == "json") {
        meta["terms"] = a.terms;
        meta["coeffs"] = convsum::json_of(series);
        print_json(meta);
    } else if (a.format == "csv") {
        std::cout << "n,coeff\n";
        for (std::size_t n = 0; n < series.truncation(); ++n)
            std::cout << n << "," << series.coeff(n) << "\n";
    } else {
        std::cout << join_coeffs(series) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact convolution sums of divisor functions via "
                 "Eisenstein series and eta-quotient cusp forms"};
    app.require_subcommand(1);

    WsumArgs wsum;
    CLI::App* cmd_wsum = app.add_subcommand(
        "wsum", "Evaluate W(r,s;n) = sum of sigma(a) sigma(b) over ra + sb = n");
    cmd_wsum->add_option("--r", wsum.r, "First leg")->required();
    cmd_wsum->add_option("--s", wsum.s, "Second leg")->required();
    cmd_wsum->add_option("--n", wsum.n, "Argument")->required();
    cmd_wsum->add_option("--method", wsum.method, "formula, brute or both");
    cmd_wsum->add_option("--format", wsum.format, "text, json or csv");

    WtableArgs wtable;
    CLI::App* cmd_wtable =
        app.add_subcommand("wtable", "Tabulate W(r,s;n) over a range of n");
    cmd_wtable->add_option("--r", wtable.r, "First leg")->required();
    cmd_wtable->add_option("--s", wtable.s, "Second leg")->required();
    cmd_wtable->add_option("--from", wtable.from, "First n, default 1");
    cmd_wtable->add_option("--to", wtable.to, "Last n")->required();
    cmd_wtable->add_option("--method", wtable.method, "formula, brute or both");
    cmd_wtable->add_option("--format", wtable.format, "text, json or csv");

    DecomposeArgs decompose;
    CLI::App* cmd_decompose = app.add_subcommand(
        "decompose",
        "Decompose L_r L_s into weight 4 Eisenstein series plus a cusp form");
    cmd_decompose->add_option("--r", decompose.r, "First leg")->required();
    cmd_decompose->add_option("--s", decompose.s, "Second leg")->required();
    cmd_decompose->add_option("--terms", decompose.terms, "Series truncation");
    cmd_decompose->add_option("--format", decompose.format, "text or json");

    VerifyArgs verify;
    CLI::App* cmd_verify = app.add_subcommand(
        "verify",
        "Check the built-in eta combination against the solved residual "
        "through the Sturm bound");
    cmd_verify->add_option("--r", verify.r, "First leg")->required();
    cmd_verify->add_option("--s", verify.s, "Second leg")->required();
    cmd_verify->add_option("--terms", verify.terms, "Series truncation");
    cmd_verify->add_option("--format", verify.format, "text or json");

    std::size_t verify_all_terms = convsum::kDefaultTerms;
    std::string verify_all_format = "text";
    CLI::App* cmd_verify_all = app.add_subcommand(
        "verify-all", "Run verify for every pair with built-in cusp data");
    cmd_verify_all->add_option("--terms", verify_all_terms, "Series truncation");
    cmd_verify_all->add_option("--format", verify_all_format, "text or json");

    QexpArgs qexp;
    CLI::App* cmd_qexp = app.add_subcommand(
        "qexp", "Print the q-expansion of e2, e4, l or an eta quotient");
    cmd_qexp->add_option("--object", qexp.object, "e2, e4, l or eta")->required();
    CLI::Option* scale_opt =
        cmd_qexp->add_option("--scale", qexp.scale, "Scale d in f(dz)");
    cmd_qexp->add_option("--spec", qexp.spec,
                         "Eta quotient, e.g. \"1^4,5^4\" or \"1^6 2^-2\"");
    cmd_qexp->add_option("--terms", qexp.terms, "Series truncation");
    cmd_qexp->add_option("--format", qexp.format, "text, json or csv");

    long sturm_weight = 4;
    long sturm_level = 1;
    std::string sturm_format = "text";
    CLI::App* cmd_sturm =
        app.add_subcommand("sturm", "Sturm bound for a weight and level");
    cmd_sturm->add_option("--weight", sturm_weight, "Even weight, default 4");
    cmd_sturm->add_option("--level", sturm_level, "Level N")->required();
    cmd_sturm->add_option("--format", sturm_format, "text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    qexp.scale_given = scale_opt->count() > 0;

    try {
        if (app.got_subcommand(cmd_wsum))
            return run_wsum(wsum);
        if (app.got_subcommand(cmd_wtable))
            return run_wtable(wtable);
        if (app.got_subcommand(cmd_decompose))
            return run_decompose(decompose);
        if (app.got_subcommand(cmd_verify))
            return run_verify(verify);
        if (app.got_subcommand(cmd_verify_all))
            return run_verify_all(verify_all_terms, verify_all_format);
        if (app.got_subcommand(cmd_qexp))
            return run_qexp(qexp);
        if (app.got_subcommand(cmd_sturm)) {
            require_format(sturm_format, {"text", "json"});
            const long bound = convsum::sturm_bound(static_cast<int>(sturm_weight),
                                                    sturm_level);
            if (sturm_format == "json")
                print_json(Json{{"weight", sturm_weight},
                                {"level", sturm_level},
                                {"bound", bound}});
            else
                std::cout << bound << "\n";
            return 0;
        }
    } catch (const convsum::consistency_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
