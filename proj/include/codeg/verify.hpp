#pragma once

#include <string>
#include <vector>

#include "codeg/formulas.hpp"

namespace codeg {

struct RunConfig {
    std::uint64_t seed = 0;
    std::int64_t order_guard = kDefaultOrderGuard;
    std::vector<int> primes;  // empty: suite defaults
    bool allow_small_prime_phi = false;
};

enum class RecordStatus { pass, mismatch, skipped };

// One (group, prime) check: expected table value vs formula vs brute force.
// Sets that were not computed stay empty with an explanatory note; a record
// passes iff all computed sets agree pairwise.
struct VerificationRecord {
    std::string suite;
    std::string row_name;   // classification row
    std::string group;      // catalog spec actually built ("" when skipped)
    int p = 0;
    std::int64_t order = 0;
    RecordStatus status = RecordStatus::skipped;
    std::string skip_reason;
    std::vector<std::int64_t> expected;
    std::vector<std::int64_t> formula;
    std::string formula_method;
    std::vector<std::int64_t> bruteforce;
    double runtime_ms = 0.0;
};

struct VerificationResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<VerificationRecord> records;

    bool all_pass() const;
    int exit_code() const { return all_pass() ? 0 : 1; }
};

const std::vector<std::string>& suite_names();  // p3, p4, p5, 3groups, all
std::vector<int> default_primes(const std::string& suite);

VerificationResult run_suite(const std::string& suite, const RunConfig& config);

// Renderings.  JSON is byte-stable for fixed seed and inputs (volatile
// runtimes are excluded there; csv/md include them).
nlohmann::ordered_json verification_to_json(const VerificationResult& r);
std::string verification_to_csv(const VerificationResult& r);
std::string verification_to_markdown(const VerificationResult& r);

}  // namespace codeg
