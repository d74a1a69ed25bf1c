#include "codeg/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

namespace codeg {

namespace {

constexpr std::int64_t kCollectionStepLimit = 200'000'000;

int pair_index(int j, int i) { return j * (j - 1) / 2 + i; }

std::vector<std::uint8_t> to_u8(const std::vector<int>& v, int p, const char* what) {
    std::vector<std::uint8_t> out(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t] < 0 || v[t] >= p)
            throw presentation_error(std::string(what) + ": exponent out of [0, p)");
        out[t] = static_cast<std::uint8_t>(v[t]);
    }
    return out;
}

bool all_zero(const std::vector<std::uint8_t>& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint8_t e) { return e == 0; });
}

// Collection from the left.  The element being built is
//   g_0^{e_0} ... g_{n-1}^{e_{n-1}} * (pending tokens, top of stack first).
// Invariants: token exponents are positive; comm_rhs(k,j) is supported on
// indices > k and power_rhs(j) on indices > j, which makes the rewriting
// terminate (weight argument).
class Collector {
  public:
    Collector(const PcPresentation& pres, int p, int n) : pres_(pres), p_(p), n_(n), e_(n, 0) {}

    void seed(const GroupElement& x) {
        for (int i = 0; i < n_; ++i) e_[i] = x.exps[i];
    }

    // Push one letter so that it multiplies on the right of everything
    // currently pending below it.  Exponent is reduced mod p^n (every
    // generator's order divides the group order).
    void push(int gen, std::int64_t exp, std::int64_t modulus) {
        std::int64_t r = exp % modulus;
        if (r < 0) r += modulus;
        if (r != 0) stack_.push_back({gen, r});
    }

    // Push a stored normal-form word (appears after the current stack top).
    void push_word(const std::vector<std::uint8_t>& w) {
        for (int i = n_ - 1; i >= 0; --i)
            if (i < static_cast<int>(w.size()) && w[i]) stack_.push_back({i, w[i]});
    }

    GroupElement run() {
        std::int64_t steps = 0;
        while (!stack_.empty()) {
            if (++steps > kCollectionStepLimit)
                throw presentation_error("collection did not terminate (relations violate the weight condition)");
            auto [j, t] = stack_.back();
            stack_.pop_back();
            int k = highest_above(j);
            if (k < 0) {
                // No generator of larger index present: merge directly.
                e_[j] += t;
                std::int64_t q = e_[j] / p_;
                e_[j] %= p_;
                const auto& pw = pres_.power_rhs(j);
                if (q > 0 && !pw.empty())
                    for (std::int64_t c = 0; c < q; ++c) push_word(pw);
            } else {
                // e ends in ... g_k^{e_k} with k > j:
                // g_k g_j = g_j g_k [g_k, g_j].
                --e_[k];
                if (t > 1) stack_.push_back({j, t - 1});
                push_word(pres_.comm_rhs(k, j));
                stack_.push_back({k, 1});
                stack_.push_back({j, 1});
            }
        }
        GroupElement out;
        out.exps.resize(n_);
        for (int i = 0; i < n_; ++i) out.exps[i] = static_cast<std::uint8_t>(e_[i]);
        return out;
    }

  private:
    int highest_above(int j) const {
        for (int k = n_ - 1; k > j; --k)
            if (e_[k]) return k;
        return -1;
    }

    const PcPresentation& pres_;
    int p_;
    int n_;
    std::vector<std::int64_t> e_;
    std::vector<Letter> stack_;
};

}  // namespace

PcPresentation::PcPresentation(int p, int n,
                               std::vector<std::pair<int, std::vector<int>>> powers,
                               std::vector<std::pair<std::pair<int, int>, std::vector<int>>> commutators,
                               std::int64_t order_guard)
    : p_(p), n_(n) {
    if (!is_odd_prime(p_)) throw presentation_error("p must be an odd prime");
    if (n_ < 0 || n_ > 40) throw presentation_error("generator count out of range");
    order_ = ipow(p_, n_);
    power_.assign(n_, {});
    comm_.assign(static_cast<std::size_t>(n_) * (n_ - 1) / 2, {});
    for (auto& [i, rhs] : powers) {
        if (i < 0 || i >= n_) throw presentation_error("power relation: generator index out of range");
        if (static_cast<int>(rhs.size()) != n_) throw presentation_error("power relation: exponent vector has wrong length");
        power_[i] = to_u8(rhs, p_, "power relation");
        if (all_zero(power_[i])) power_[i].clear();
    }
    for (auto& [ji, rhs] : commutators) {
        auto [j, i] = ji;
        if (i < 0 || j >= n_ || j <= i) throw presentation_error("commutator relation: need n > j > i >= 0");
        if (static_cast<int>(rhs.size()) != n_) throw presentation_error("commutator relation: exponent vector has wrong length");
        auto w = to_u8(rhs, p_, "commutator relation");
        if (!all_zero(w)) comm_[pair_index(j, i)] = std::move(w);
    }
    validate_shape();
    check_consistency_words();
    if (order_ <= order_guard) check_element_count();
}

const std::vector<std::uint8_t>& PcPresentation::comm_rhs(int j, int i) const {
    return comm_[pair_index(j, i)];
}

GroupElement PcPresentation::generator(int i) const {
    if (i < 0 || i >= n_) throw input_error("generator index out of range");
    GroupElement g = identity();
    g.exps[i] = 1;
    return g;
}

std::uint64_t PcPresentation::encode(const GroupElement& x) const {
    std::uint64_t id = 0;
    for (int i = n_ - 1; i >= 0; --i) id = id * p_ + x.exps[i];
    return id;
}

GroupElement PcPresentation::decode(std::uint64_t id) const {
    GroupElement x = identity();
    for (int i = 0; i < n_; ++i) {
        x.exps[i] = static_cast<std::uint8_t>(id % p_);
        id /= p_;
    }
    return x;
}

GroupElement PcPresentation::collect(std::span<const Letter> word) const {
    Collector c(*this, p_, n_);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (it->gen < 0 || it->gen >= n_) throw input_error("collect: generator index out of range");
        c.push(it->gen, it->exp, order_);
    }
    return c.run();
}

GroupElement PcPresentation::multiply(const GroupElement& x, const GroupElement& y) const {
    Collector c(*this, p_, n_);
    c.seed(x);
    for (int i = n_ - 1; i >= 0; --i)
        if (y.exps[i]) c.push(i, y.exps[i], order_);
    return c.run();
}

GroupElement PcPresentation::inverse(const GroupElement& x) const {
    // (g_0^{e_0} ... g_{n-1}^{e_{n-1}})^-1, using g^-e = g^{p^n - e}.
    Collector c(*this, p_, n_);
    for (int i = 0; i < n_; ++i)
        if (x.exps[i]) c.push(i, -static_cast<std::int64_t>(x.exps[i]), order_);
    return c.run();
}

GroupElement PcPresentation::power(const GroupElement& x, std::int64_t m) const {
    if (m < 0) return power(inverse(x), -m);
    GroupElement acc = identity();
    GroupElement base = x;
    while (m > 0) {
        if (m & 1) acc = multiply(acc, base);
        m >>= 1;
        if (m) base = multiply(base, base);
    }
    return acc;
}

GroupElement PcPresentation::commutator(const GroupElement& x, const GroupElement& y) const {
    return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

GroupElement PcPresentation::conjugate(const GroupElement& x, const GroupElement& y) const {
    return multiply(multiply(inverse(y), x), y);
}

std::int64_t PcPresentation::order_of(const GroupElement& x) const {
    std::int64_t ord = 1;
    GroupElement y = x;
    while (!y.is_identity()) {
        y = power(y, p_);
        ord *= p_;
    }
    return ord;
}

void PcPresentation::validate_shape() const {
    // Weight condition: power_rhs(i) lives above index i, comm_rhs(j,i) above
    // index j.  This is what guarantees termination of collection.
    for (int i = 0; i < n_; ++i) {
        const auto& w = power_[i];
        for (int t = 0; t < static_cast<int>(w.size()); ++t)
            if (w[t] && t <= i)
                throw presentation_error("power relation for generator " + std::to_string(i) +
                                         " names a generator of index <= " + std::to_string(i));
    }
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i) {
            const auto& w = comm_[pair_index(j, i)];
            for (int t = 0; t < static_cast<int>(w.size()); ++t)
                if (w[t] && t <= j)
                    throw presentation_error("commutator [g" + std::to_string(j) + ",g" + std::to_string(i) +
                                             "] names a generator of index <= " + std::to_string(j));
        }
}

void PcPresentation::check_consistency_words() const {
    auto nf_of_word = [&](const std::vector<std::uint8_t>& w) {
        GroupElement x = identity();
        for (int i = 0; i < n_ && i < static_cast<int>(w.size()); ++i) x.exps[i] = w[i];
        return x;
    };
    auto gen_pow = [&](int i, int e) {
        GroupElement x = identity();
        x.exps[i] = static_cast<std::uint8_t>(e);
        return x;
    };
    auto fail = [&](const std::string& what) {
        throw presentation_error("inconsistent presentation: " + what);
    };

    // Standard overlap tests; together they certify that collection defines an
    // associative product on all p^n normal forms.
    for (int k = 0; k < n_; ++k)
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < j; ++i) {
                auto lhs = multiply(multiply(generator(k), generator(j)), generator(i));
                auto rhs = multiply(generator(k), multiply(generator(j), generator(i)));
                if (lhs != rhs)
                    fail("(g" + std::to_string(k) + " g" + std::to_string(j) + ") g" + std::to_string(i) +
                         " != g" + std::to_string(k) + " (g" + std::to_string(j) + " g" + std::to_string(i) + ")");
            }
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < j; ++i) {
            auto lhs = multiply(nf_of_word(power_[j]), generator(i));
            auto rhs = multiply(gen_pow(j, p_ - 1), multiply(generator(j), generator(i)));
            if (lhs != rhs) fail("g" + std::to_string(j) + "^p overlap with g" + std::to_string(i));
            auto lhs2 = multiply(generator(j), nf_of_word(power_[i]));
            auto rhs2 = multiply(multiply(generator(j), generator(i)), gen_pow(i, p_ - 1));
            if (lhs2 != rhs2) fail("g" + std::to_string(j) + " overlap with g" + std::to_string(i) + "^p");
        }
    for (int i = 0; i < n_; ++i) {
        auto lhs = multiply(nf_of_word(power_[i]), generator(i));
        auto rhs = multiply(generator(i), nf_of_word(power_[i]));
        if (lhs != rhs) fail("g" + std::to_string(i) + "^p does not commute with g" + std::to_string(i));
    }
}

void PcPresentation::check_element_count() const {
    // Exhaustive closure from the generators must reach exactly p^n normal
    // forms; anything else means a typo in the relations.
    std::vector<bool> seen(static_cast<std::size_t>(order_), false);
    std::vector<std::uint64_t> frontier{encode(identity())};
    seen[frontier[0]] = true;
    std::int64_t count = 1;
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (auto id : frontier) {
            GroupElement x = decode(id);
            for (int i = 0; i < n_; ++i) {
                std::uint64_t y = encode(multiply(x, generator(i)));
                if (!seen[y]) {
                    seen[y] = true;
                    ++count;
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    if (count != order_)
        throw presentation_error("inconsistent presentation: generated " + std::to_string(count) +
                                 " normal forms, expected " + std::to_string(order_));
}

PcPresentation PcPresentation::from_json(const nlohmann::json& j, std::int64_t order_guard) {
    if (!j.is_object() || !j.contains("p") || !j.contains("n"))
        throw input_error("presentation JSON must be an object with \"p\" and \"n\"");
    int p = j.at("p").get<int>();
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, std::vector<int>>> powers;
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> comms;
    if (j.contains("powers"))
        for (auto& [key, val] : j.at("powers").items())
            powers.emplace_back(std::stoi(key), val.get<std::vector<int>>());
    if (j.contains("commutators"))
        for (auto& [key, val] : j.at("commutators").items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos) throw input_error("commutator key must be \"j,i\"");
            int jj = std::stoi(key.substr(0, comma));
            int ii = std::stoi(key.substr(comma + 1));
            comms.push_back({{jj, ii}, val.get<std::vector<int>>()});
        }
    return PcPresentation(p, n, std::move(powers), std::move(comms), order_guard);
}

PcPresentation PcPresentation::from_json_file(const std::filesystem::path& path, std::int64_t order_guard) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open presentation file: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("cannot parse presentation file " + path.string() + ": " + e.what());
    }
    return from_json(j, order_guard);
}

nlohmann::ordered_json PcPresentation::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p_;
    j["n"] = n_;
    nlohmann::ordered_json powers = nlohmann::ordered_json::object();
    for (int i = 0; i < n_; ++i)
        if (!power_[i].empty()) {
            std::vector<int> v(n_, 0);
            for (int t = 0; t < n_; ++t) v[t] = power_[i][t];
            powers[std::to_string(i)] = v;
        }
    nlohmann::ordered_json comms = nlohmann::ordered_json::object();
    for (int j2 = 1; j2 < n_; ++j2)
        for (int i = 0; i < j2; ++i) {
            const auto& w = comm_[pair_index(j2, i)];
            if (!w.empty()) {
                std::vector<int> v(n_, 0);
                for (int t = 0; t < n_; ++t) v[t] = w[t];
                comms[std::to_string(j2) + "," + std::to_string(i)] = v;
            }
        }
    j["powers"] = std::move(powers);
    j["commutators"] = std::move(comms);
    return j;
}

}  // namespace codeg
