#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "codeg/verify.hpp"

#include "CLI11.hpp"

namespace codeg::cli {

namespace {

std::int64_t guard_default() {
    if (const char* env = std::getenv("CODEG_ORDER_GUARD")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw input_error("CODEG_ORDER_GUARD is not an integer");
        }
    }
    return kDefaultOrderGuard;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw input_error("cannot open output file: " + out_path);
    out << text;
    if (!out) throw input_error("failed to write: " + out_path);
}

std::vector<int> parse_primes(const std::string& csv) {
    std::vector<int> primes;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int p = 0;
        try {
            p = std::stoi(tok);
        } catch (const std::exception&) {
            throw input_error("cannot parse prime: " + tok);
        }
        if (!is_odd_prime(p)) throw input_error("not an odd prime: " + tok);
        primes.push_back(p);
    }
    if (primes.empty()) throw input_error("--primes needs at least one prime");
    return primes;
}

std::string cod_to_string(const std::vector<std::int64_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "}";
}

int cmd_list(const std::string& format, const std::string& out_path) {
    auto entries = list_catalog();
    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& e : entries)
            arr.push_back({{"name", e.name},
                           {"spec", e.spec},
                           {"constructible", e.constructible},
                           {"order", e.group_order},
                           {"expected_cod", e.expected_cod},
                           {"description", e.description}});
        j["catalog"] = std::move(arr);
        write_output(j.dump(2), out_path);
    } else {
        std::ostringstream md;
        md << "| name | spec | constructible | order | expected cod | description |\n";
        md << "|---|---|---|---|---|---|\n";
        for (const auto& e : entries)
            md << "| " << e.name << " | " << e.spec << " | " << (e.constructible ? "yes" : "no")
               << " | " << e.group_order << " | " << e.expected_cod << " | " << e.description
               << " |\n";
        write_output(md.str(), out_path);
    }
    return 0;
}

int cmd_compute(const std::string& group_spec, int p, const std::string& method,
                const std::string& format, const std::string& out_path, const RunConfig& config) {
    GroupId id = GroupId::parse(group_spec, p);
    BuildOptions opts;
    opts.order_guard = config.order_guard;
    opts.allow_small_prime_phi = config.allow_small_prime_phi;
    PcPresentation pres = build(id, opts);
    GroupAnalysis analysis(pres, config.seed, config.order_guard);

    std::vector<CodegreeReport> reports;
    if (method == "formula" || method == "both") {
        auto formula = cod_formula(analysis);
        if (formula) {
            reports.push_back(*formula);
        } else if (method == "formula") {
            throw input_error("no closed-form branch applies to this group; use --method bruteforce");
        }
    }
    if (method == "bruteforce" || method == "both")
        reports.push_back(codegrees_bruteforce(pres, config.seed, config.order_guard));

    bool match = true;
    for (std::size_t i = 1; i < reports.size(); ++i)
        if (reports[i].cod != reports[0].cod) match = false;

    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["group"] = id.name();
        j["p"] = p;
        j["order"] = pres.order();
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        j["reports"] = std::move(arr);
        if (method == "both") j["match"] = match;
        if (auto expected = expected_codegrees(id)) j["expected"] = expected->cod;
        write_output(j.dump(2), out_path);
    } else {
        std::ostringstream text;
        text << "group " << id.name() << "  p=" << p << "  order=" << pres.order() << "\n";
        for (const auto& r : reports)
            text << "  " << r.method << ": " << cod_to_string(r.cod) << "\n";
        if (auto expected = expected_codegrees(id))
            text << "  expected: " << cod_to_string(expected->cod) << "\n";
        if (method == "both") text << "  match: " << (match ? "true" : "false") << "\n";
        write_output(text.str(), out_path);
    }
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& format, const std::string& out_path,
               const RunConfig& config) {
    VerificationResult result = run_suite(suite, config);
    if (format == "json") {
        write_output(verification_to_json(result).dump(2), out_path);
    } else if (format == "csv") {
        write_output(verification_to_csv(result), out_path);
    } else {
        write_output(verification_to_markdown(result), out_path);
    }
    return result.exit_code();
}

int cmd_chartab(const std::string& group_spec, int p, const std::string& out_path,
                const RunConfig& config) {
    GroupId id = GroupId::parse(group_spec, p);
    BuildOptions opts;
    opts.order_guard = config.order_guard;
    opts.allow_small_prime_phi = config.allow_small_prime_phi;
    PcPresentation pres = build(id, opts);
    CharacterTable table = character_table(pres, config.seed, config.order_guard);
    write_output(table_to_json(pres, table).dump(2), out_path);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"codeg: character codegree sets of finite p-groups, by structure formulas "
                 "and by a Burnside-Dixon-Schneider character table engine"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "md";
    std::string out_path;
    std::string group_spec;
    std::string method = "both";
    std::string primes_csv;
    int p = 5;
    bool allow_p3 = false;

    std::int64_t guard = 0;
    try {
        guard = guard_default();
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    app.add_option("--seed", config.seed, "run seed (default 0)")->capture_default_str();
    app.add_option("--order-guard", guard, "brute-force order guard")->capture_default_str();
    app.add_option("--format", format, "output format: json | csv | md")
        ->check(CLI::IsMember({"json", "csv", "md"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_flag("--allow-p3", allow_p3,
                 "instantiate the phi presentations at p = 3 (outside their classification range)");

    auto* list = app.add_subcommand("list", "list the group catalog");
    list->fallthrough();

    auto* compute = app.add_subcommand("compute", "compute cod(G) for one group");
    compute->fallthrough();
    compute->add_option("--group", group_spec, "group spec, e.g. phi2_31 or abelian:2,1")->required();
    compute->add_option("--p", p, "odd prime")->capture_default_str();
    compute->add_option("--method", method, "formula | bruteforce | both")
        ->check(CLI::IsMember({"formula", "bruteforce", "both"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run a verification suite against the tables");
    verify->fallthrough();
    std::string suite;
    verify->add_option("suite", suite, "p3 | p4 | p5 | 3groups | all")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--primes", primes_csv, "comma-separated odd primes (default per suite)");

    auto* chartab = app.add_subcommand("chartab", "export a character table as JSON");
    chartab->fallthrough();
    chartab->add_option("--group", group_spec, "group spec")->required();
    chartab->add_option("--p", p, "odd prime")->capture_default_str();

    // CLI11 wants argv-style reversed input.
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    config.order_guard = guard;
    config.allow_small_prime_phi = allow_p3;
    if (!primes_csv.empty()) {
        try {
            config.primes = parse_primes(primes_csv);
        } catch (const input_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }

    try {
        if (*list) return cmd_list(format, out_path);
        if (*compute) return cmd_compute(group_spec, p, method, format, out_path, config);
        if (*verify) return cmd_verify(suite, format, out_path, config);
        if (*chartab) return cmd_chartab(group_spec, p, out_path, config);
    } catch (const guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const presentation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        std::abort();
    }
    return 2;
}

}  // namespace codeg::cli
