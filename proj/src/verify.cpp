#include "codeg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "codeg/tables.hpp"

namespace codeg {

namespace {

struct SuiteEntry {
    std::string row_name;
    std::vector<int> cod_exps;
    std::vector<std::string> builds;  // empty: documentation row, always skipped
    int order_exp = 0;
};

std::vector<SuiteEntry> suite_entries(const std::string& suite) {
    std::vector<SuiteEntry> entries;
    if (suite == "p3") {
        // Non-abelian groups of order p^3: the two extraspecial types.
        entries.push_back({"extraspecial p^3 (exponent p)", {0, 1, 2}, {"heisenberg"}, 3});
        entries.push_back({"extraspecial p^3 (exponent p^2)", {0, 1, 2}, {"extraspecial_exp_p2:1"}, 3});
        return entries;
    }
    for (const auto& row : classification_rows())
        if (row.suite == suite)
            entries.push_back({row.name, row.cod_exps, row.builds, row.order_exp});
    if (entries.empty()) throw input_error("unknown suite: " + suite);
    return entries;
}

std::string set_to_string(const std::vector<std::int64_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"p3", "p4", "p5", "3groups", "all"};
    return names;
}

std::vector<int> default_primes(const std::string& suite) {
    if (suite == "p3") return {3, 5, 7};
    if (suite == "p4") return {5, 7};
    if (suite == "p5") return {5};
    if (suite == "3groups") return {3};
    throw input_error("unknown suite: " + suite);
}

bool VerificationResult::all_pass() const {
    return std::all_of(records.begin(), records.end(), [](const VerificationRecord& r) {
        return r.status != RecordStatus::mismatch;
    });
}

namespace {

VerificationRecord run_one(const std::string& suite, const SuiteEntry& entry,
                           const std::string& build_spec, int p, const RunConfig& config) {
    VerificationRecord rec;
    rec.suite = suite;
    rec.row_name = entry.row_name;
    rec.p = p;
    for (int e : entry.cod_exps) rec.expected.push_back(ipow(p, e));
    std::sort(rec.expected.begin(), rec.expected.end());

    if (build_spec.empty()) {
        rec.status = RecordStatus::skipped;
        rec.skip_reason = "no published presentation; supply one via user_json to verify this row";
        return rec;
    }
    rec.group = build_spec;

    auto start = std::chrono::steady_clock::now();
    try {
        GroupId id = GroupId::parse(build_spec, p);
        BuildOptions opts;
        opts.order_guard = config.order_guard;
        opts.allow_small_prime_phi = config.allow_small_prime_phi;
        PcPresentation pres = build(id, opts);
        if (pres.order() > config.order_guard) {
            rec.status = RecordStatus::skipped;
            rec.skip_reason = "order " + std::to_string(pres.order()) + " exceeds the guard";
            return rec;
        }
        rec.order = pres.order();

        if (auto expected = expected_codegrees(id)) rec.expected = expected->cod;

        GroupAnalysis analysis(pres, config.seed, config.order_guard);
        if (auto formula = cod_formula(analysis)) {
            rec.formula = formula->cod;
            rec.formula_method = formula->method;
        } else {
            rec.formula_method = "not_applicable";
        }
        rec.bruteforce = codegrees_bruteforce(pres, config.seed, config.order_guard).cod;

        bool ok = rec.bruteforce == rec.expected &&
                  (rec.formula.empty() || rec.formula == rec.expected);
        rec.status = ok ? RecordStatus::pass : RecordStatus::mismatch;
    } catch (const guard_error& e) {
        rec.status = RecordStatus::skipped;
        rec.skip_reason = e.what();
    } catch (const input_error& e) {
        // e.g. phi presentations requested at p = 3 without the override
        rec.status = RecordStatus::skipped;
        rec.skip_reason = e.what();
    }
    rec.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rec;
}

void run_suite_into(const std::string& suite, const RunConfig& config, VerificationResult& out) {
    std::vector<int> primes = config.primes.empty() ? default_primes(suite) : config.primes;
    for (const auto& entry : suite_entries(suite))
        for (int p : primes) {
            if (entry.builds.empty()) {
                out.records.push_back(run_one(suite, entry, "", p, config));
                continue;
            }
            for (const auto& spec : entry.builds)
                out.records.push_back(run_one(suite, entry, spec, p, config));
        }
}

}  // namespace

VerificationResult run_suite(const std::string& suite, const RunConfig& config) {
    VerificationResult result;
    result.suite = suite;
    result.seed = config.seed;
    if (suite == "all") {
        for (const auto& s : suite_names())
            if (s != "all") {
                RunConfig sub = config;
                if (config.primes.empty()) sub.primes = default_primes(s);
                run_suite_into(s, sub, result);
            }
    } else {
        run_suite_into(suite, config, result);
    }
    return result;
}

nlohmann::ordered_json verification_to_json(const VerificationResult& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["overall"] = r.all_pass() ? "pass" : "mismatch";
    auto records = nlohmann::ordered_json::array();
    for (const auto& rec : r.records) {
        nlohmann::ordered_json rj;
        rj["suite"] = rec.suite;
        rj["row"] = rec.row_name;
        rj["group"] = rec.group;
        rj["p"] = rec.p;
        rj["order"] = rec.order;
        rj["status"] = rec.status == RecordStatus::pass
                           ? "pass"
                           : (rec.status == RecordStatus::mismatch ? "mismatch" : "skipped");
        if (!rec.skip_reason.empty()) rj["skip_reason"] = rec.skip_reason;
        rj["expected"] = rec.expected;
        rj["formula"] = rec.formula;
        rj["formula_method"] = rec.formula_method;
        rj["bruteforce"] = rec.bruteforce;
        records.push_back(std::move(rj));
    }
    j["records"] = std::move(records);
    return j;
}

std::string verification_to_csv(const VerificationResult& r) {
    std::ostringstream out;
    out << "suite,row,group,p,order,status,expected,formula,formula_method,bruteforce,runtime_ms\n";
    for (const auto& rec : r.records) {
        out << rec.suite << ',' << '"' << rec.row_name << '"' << ',' << rec.group << ',' << rec.p
            << ',' << rec.order << ','
            << (rec.status == RecordStatus::pass
                    ? "pass"
                    : (rec.status == RecordStatus::mismatch ? "mismatch" : "skipped"))
            << ',' << set_to_string(rec.expected) << ',' << set_to_string(rec.formula) << ','
            << rec.formula_method << ',' << set_to_string(rec.bruteforce) << ','
            << static_cast<std::int64_t>(rec.runtime_ms) << '\n';
    }
    return out.str();
}

std::string verification_to_markdown(const VerificationResult& r) {
    std::ostringstream out;
    out << "| suite | row | group | p | order | status | expected | formula | bruteforce | ms |\n";
    out << "|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& rec : r.records) {
        out << "| " << rec.suite << " | " << rec.row_name << " | " << rec.group << " | " << rec.p
            << " | " << rec.order << " | "
            << (rec.status == RecordStatus::pass
                    ? "pass"
                    : (rec.status == RecordStatus::mismatch ? "mismatch" : "skipped"))
            << " | " << set_to_string(rec.expected) << " | " << set_to_string(rec.formula) << " | "
            << set_to_string(rec.bruteforce) << " | " << static_cast<std::int64_t>(rec.runtime_ms)
            << " |\n";
    }
    out << "\noverall: " << (r.all_pass() ? "pass" : "mismatch") << "\n";
    return out.str();
}

}  // namespace codeg
