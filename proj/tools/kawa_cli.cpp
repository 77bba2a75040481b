// Command-line front end for index algebra, harmonic sums, MZV evaluation,
// Kawashima function evaluation and identity verification.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kawa/relations.hpp"

namespace {

using namespace kawa;

enum class Format { json, csv, plain };

struct CliOptions {
    EvalConfig cfg;
    Format format = Format::plain;
    std::string config_path;
};

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "plain") return Format::plain;
    throw CLI::ValidationError("--format", "unknown format '" + s + "'");
}

void apply_extrapolate_spec(EvalConfig& cfg, const std::string& spec) {
    if (spec == "none") {
        cfg.extrapolation.enabled = false;
        return;
    }
    auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--extrapolate", "expected 'p,d' or 'none'");
    cfg.extrapolation.enabled = true;
    cfg.extrapolation.points = std::stoi(spec.substr(0, comma));
    cfg.extrapolation.log_degree = std::stoi(spec.substr(comma + 1));
}

// Optional key=value config file; flags override file values.
void load_config_file(CliOptions& opt, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("malformed config line: '" + line + "'");
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        if (key == "terms")
            opt.cfg.terms = std::stol(value);
        else if (key == "extrapolate")
            apply_extrapolate_spec(opt.cfg, value);
        else if (key == "precision-bits")
            opt.cfg.precision_bits = std::stoi(value);
        else if (key == "tol")
            opt.cfg.tolerance = Real(value);
        else if (key == "format")
            opt.format = parse_format(value);
        else
            throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

void print_index_vector(const IndexVector& v, Format format) {
    if (format == Format::json)
        std::cout << v.to_json().dump() << "\n";
    else
        std::cout << v.str() << "\n";
}

void print_eval(const EvalResult& r, Format format) {
    if (format == Format::json) {
        std::cout << to_json(r).dump() << "\n";
    } else {
        std::cout << real_str(r.value) << "  (error_estimate=" << real_str(r.error_estimate)
                  << ", method=" << r.method << ", terms=" << r.terms_used << ")\n";
    }
}

void print_eval(const ComplexEvalResult& r, Format format) {
    if (format == Format::json) {
        std::cout << to_json(r).dump() << "\n";
    } else {
        std::cout << complex_str(r.value) << "  (error_estimate=" << real_str(r.error_estimate)
                  << ", method=" << r.method << ", terms=" << r.terms_used << ")\n";
    }
}

int emit_reports(const std::vector<CheckReport>& reports, Format format) {
    size_t failures = 0;
    if (format == Format::json) {
        for (const auto& r : reports) std::cout << r.to_json().dump() << "\n";
    } else {
        for (const auto& r : reports) std::cout << r.line() << "\n";
    }
    for (const auto& r : reports)
        if (!r.pass) ++failures;
    if (format != Format::json)
        std::cout << reports.size() - failures << "/" << reports.size() << " checks passed\n";
    return failures == 0 ? 0 : 1;
}

// z parsed as "x" or "x,y" (real and imaginary parts).
Complex parse_z(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) return Complex(Real(text), Real(0));
    return Complex(Real(text.substr(0, comma)), Real(text.substr(comma + 1)));
}

std::vector<CheckReport> run_desk_profile(const EvalConfig& cfg) {
    std::vector<CheckReport> all;
    auto absorb = [&](std::vector<CheckReport> part) {
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    };
    absorb(check_hoffman_duality(6, 20));
    absorb(check_interpolation(6, 20));
    absorb(check_product_rules(50, 5, 30));
    absorb(check_involution_and_rho(10));

    MzvEngine engine(cfg);
    const std::vector<Index> eval_set = {Index{1}, Index{2}, Index{1, 1}, Index{1, 2}, Index{2, 1}};
    for (const Index& k : eval_set)
        for (const Real& z : {Real("1.5"), Real("2.5")}) all.push_back(check_difference_equation(k, z, cfg));
    for (const Index& k : eval_set)
        for (long N : {1L, 2L, 3L, 4L}) all.push_back(check_difference_equation_exact(k, N));
    for (const Index& k : {Index{1}, Index{2}, Index{1, 1}})
        for (int m = 1; m <= 3; ++m) all.push_back(check_taylor_identity(k, m, engine));
    const std::vector<std::pair<Index, Index>> hr = {{Index{1}, Index{1}}, {Index{1}, Index{2}}, {Index{1, 1}, Index{1}}};
    for (const auto& [k, l] : hr) {
        for (const Real& z : {Real("0.5"), Real("1.5")}) all.push_back(check_harmonic_relation(k, l, z, cfg));
        for (long N : {1L, 2L, 3L}) all.push_back(check_harmonic_relation_exact(k, l, N));
    }
    const std::vector<std::pair<Index, Index>> kr = {{Index{1}, Index{1}}, {Index{1}, Index{2}},
                                                     {Index{2}, Index{1}}, {Index{1}, Index{1, 1}},
                                                     {Index{1, 1}, Index{1}}};
    for (const auto& [k, l] : kr)
        for (int m = 1; m <= 3; ++m) all.push_back(check_kawashima_relation(k, l, m, engine));
    for (int m : {0, 1, 2})
        for (const Real& z : {Real("0.5"), Real(1)}) all.push_back(check_polygamma(m, z, cfg));
    return all;
}

int run(int argc, char** argv) {
    CLI::App app{"Kawashima function toolkit: index algebra, multiple harmonic sums, "
                 "MZV evaluation and identity verification"};
    app.require_subcommand(1);

    CliOptions opt;
    std::string format_name, extrapolate_spec, tol_text;
    app.add_option("--format", format_name, "output format: json|csv|plain");
    app.add_option("--terms", opt.cfg.terms, "series truncation bound N");
    app.add_option("--extrapolate", extrapolate_spec, "tail extrapolation 'p,d' or 'none'");
    app.add_option("--precision-bits", opt.cfg.precision_bits, "working precision in bits (>=64)");
    app.add_option("--tol", tol_text, "target absolute error");
    app.add_option("--config", opt.config_path, "key=value config file (or env KAWASHIMA_CONFIG)");
    app.add_flag("--force", opt.cfg.override_guardrails, "override desk-scale guardrails");

    std::string index_text, second_text, z_text = "0", method = "g", product_type = "star";
    long sum_N = 20;
    int order = 3, m_param = 1;
    std::string profile = "desk", family_k = "1", family_l = "1";
    long max_N = 20;
    int max_weight = 6;
    bool star_flag = false;

    auto* cmd_dual = app.add_subcommand("dual", "Hoffman dual of an index");
    cmd_dual->add_option("index", index_text, "comma-separated index")->required();

    auto* cmd_rev = app.add_subcommand("rev", "reverse an index");
    cmd_rev->add_option("index", index_text)->required();

    auto* cmd_star = app.add_subcommand("star", "star-operator expansion of an index");
    cmd_star->add_option("index", index_text)->required();

    auto* cmd_product = app.add_subcommand("product", "product of two indices");
    cmd_product->add_option("--type", product_type, "star|bar|circled");
    cmd_product->add_option("a", index_text)->required();
    cmd_product->add_option("b", second_text)->required();

    auto* cmd_sum = app.add_subcommand("sum", "exact multiple harmonic sum table (CSV)");
    cmd_sum->add_option("index", index_text)->required();
    cmd_sum->add_option("--N", sum_N, "table bound");

    auto* cmd_mzv = app.add_subcommand("mzv", "numerical multiple zeta value");
    cmd_mzv->add_option("index", index_text)->required();
    cmd_mzv->add_flag("--star", star_flag, "evaluate the zeta-star value");

    auto* cmd_eval = app.add_subcommand("eval", "evaluate the Kawashima function");
    std::string function_name = "F";
    cmd_eval->add_option("function", function_name, "function to evaluate (F)");
    cmd_eval->add_option("--index", index_text)->required();
    cmd_eval->add_option("--z", z_text, "argument, 'x' or 'x,y'");
    cmd_eval->add_option("--method", method, "newton|g|inductive");

    auto* cmd_taylor = app.add_subcommand("taylor", "Taylor coefficients of F at z=0");
    cmd_taylor->add_option("--index", index_text)->required();
    cmd_taylor->add_option("--order", order, "highest order m");
    cmd_taylor->add_option("--method", method, "1|3")->default_val("1");

    auto* cmd_verify = app.add_subcommand("verify", "verify identities; exit 1 on any failure");
    std::string family;
    cmd_verify->add_option("family", family,
                           "hoffman|interpolation|products|involution|harmonic|kawashima|taylor|"
                           "diff|polygamma|all")
        ->required();
    cmd_verify->add_option("--max-weight", max_weight);
    cmd_verify->add_option("--max-N", max_N);
    cmd_verify->add_option("--k", family_k, "first index");
    cmd_verify->add_option("--l", family_l, "second index");
    cmd_verify->add_option("--m", m_param, "order");
    cmd_verify->add_option("--z", z_text, "evaluation point");
    cmd_verify->add_option("--profile", profile, "parameter grid for 'all' (desk)");

    // Global flags may appear after the subcommand name.
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const char* env_config = std::getenv("KAWASHIMA_CONFIG");
    if (opt.config_path.empty() && env_config) opt.config_path = env_config;
    if (!opt.config_path.empty()) {
        const long cli_terms = opt.cfg.terms;
        const int cli_bits = opt.cfg.precision_bits;
        load_config_file(opt, opt.config_path);
        if (app.count("--terms") > 0) opt.cfg.terms = cli_terms;
        if (app.count("--precision-bits") > 0) opt.cfg.precision_bits = cli_bits;
    }
    // Flags override anything the config file set.
    if (!format_name.empty()) opt.format = parse_format(format_name);
    if (!extrapolate_spec.empty()) apply_extrapolate_spec(opt.cfg, extrapolate_spec);
    if (!tol_text.empty()) opt.cfg.tolerance = Real(tol_text);
    opt.cfg.validate();

    if (cmd_dual->parsed()) {
        std::cout << hoffman_dual(Index::parse(index_text)).str() << "\n";
        return 0;
    }
    if (cmd_rev->parsed()) {
        std::cout << reversed(Index::parse(index_text)).str() << "\n";
        return 0;
    }
    if (cmd_star->parsed()) {
        print_index_vector(star_expand(IndexVector(Index::parse(index_text))), opt.format);
        return 0;
    }
    if (cmd_product->parsed()) {
        IndexVector a(Index::parse(index_text)), b(Index::parse(second_text));
        IndexVector result;
        if (product_type == "star")
            result = harmonic_product(a, b);
        else if (product_type == "bar")
            result = harmonic_bar_product(a, b);
        else if (product_type == "circled")
            result = circled_star_product(a, b);
        else
            throw std::invalid_argument("unknown product type '" + product_type + "'");
        print_index_vector(result, opt.format == Format::plain ? Format::json : opt.format);
        return 0;
    }
    if (cmd_sum->parsed()) {
        SumTable table(Index::parse(index_text), sum_N);
        table.write_csv(std::cout);
        return 0;
    }
    if (cmd_mzv->parsed()) {
        MzvEngine engine(opt.cfg);
        IndexVector v{Index::parse(index_text)};
        print_eval(star_flag ? engine.mzsv(v) : engine.mzv(v), opt.format);
        return 0;
    }
    if (cmd_eval->parsed()) {
        if (function_name != "F") throw std::invalid_argument("unknown function '" + function_name + "'");
        KawashimaEvaluator ev(Index::parse(index_text));
        Complex z = parse_z(z_text);
        ComplexEvalResult r;
        if (method == "newton")
            r = ev.eval_newton(z, opt.cfg);
        else if (method == "g")
            r = ev.eval_g_series(z, opt.cfg);
        else if (method == "inductive")
            r = ev.eval_fraction_inductive(z, opt.cfg);
        else
            throw std::invalid_argument("unknown method '" + method + "'");
        print_eval(r, opt.format);
        return 0;
    }
    if (cmd_taylor->parsed()) {
        MzvEngine engine(opt.cfg);
        KawashimaEvaluator ev(Index::parse(index_text));
        if (method == "1" || method == "newton" || method.empty()) {
            auto rows = ev.taylor_method1(order, engine);
            for (int m = 1; m <= order; ++m) {
                const auto& [arg, val] = rows[static_cast<size_t>(m - 1)];
                if (opt.format == Format::json) {
                    nlohmann::json row = to_json(val);
                    row["m"] = m;
                    row["argument"] = arg.to_json();
                    std::cout << row.dump() << "\n";
                } else {
                    std::cout << "m=" << m << "  zeta(" << arg.str() << ") = " << real_str(val.value)
                              << "  (error_estimate=" << real_str(val.error_estimate) << ")\n";
                }
            }
        } else if (method == "3") {
            auto rows = ev.taylor_method3(order, engine);
            for (int m = 1; m <= order; ++m) {
                const auto& val = rows[static_cast<size_t>(m - 1)];
                if (opt.format == Format::json) {
                    nlohmann::json row = to_json(val);
                    row["m"] = m;
                    std::cout << row.dump() << "\n";
                } else {
                    std::cout << "m=" << m << "  C_m = " << real_str(val.value)
                              << "  (error_estimate=" << real_str(val.error_estimate) << ")\n";
                }
            }
        } else {
            throw std::invalid_argument("taylor method must be 1 or 3");
        }
        return 0;
    }
    if (cmd_verify->parsed()) {
        std::vector<CheckReport> reports;
        MzvEngine engine(opt.cfg);
        Real z(z_text);
        if (family == "hoffman")
            reports = check_hoffman_duality(max_weight, max_N);
        else if (family == "interpolation")
            reports = check_interpolation(max_weight, max_N);
        else if (family == "products")
            reports = check_product_rules(50, std::min(max_weight, 5), max_N);
        else if (family == "involution")
            reports = check_involution_and_rho(max_weight);
        else if (family == "harmonic")
            reports.push_back(check_harmonic_relation(Index::parse(family_k), Index::parse(family_l), z, opt.cfg));
        else if (family == "kawashima")
            reports.push_back(check_kawashima_relation(Index::parse(family_k), Index::parse(family_l), m_param, engine));
        else if (family == "taylor")
            reports.push_back(check_taylor_identity(Index::parse(family_k), m_param, engine));
        else if (family == "diff")
            reports.push_back(check_difference_equation(Index::parse(family_k), z, opt.cfg));
        else if (family == "polygamma")
            reports.push_back(check_polygamma(m_param, z, opt.cfg));
        else if (family == "all") {
            if (profile != "desk") throw std::invalid_argument("unknown profile '" + profile + "'");
            reports = run_desk_profile(opt.cfg);
        } else {
            throw std::invalid_argument("unknown verify family '" + family + "'");
        }
        return emit_reports(reports, opt.format);
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
