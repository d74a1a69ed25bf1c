#include "codeg/gf.hpp"

#include <algorithm>
#include <cmath>

namespace codeg {

std::uint64_t GF::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % ell_;
    a %= ell_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::int64_t dixon_prime(std::int64_t exponent, std::int64_t order) {
    if (exponent < 1 || order < 1) throw input_error("dixon_prime: arguments must be positive");
    double bound = 2.0 * std::sqrt(static_cast<double>(order));
    for (std::int64_t ell = exponent + 1;; ell += exponent)
        if (static_cast<double>(ell) > bound && is_prime(ell)) return ell;
}

std::uint64_t smallest_primitive_root(std::uint64_t ell) {
    if (ell == 2) return 1;
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t m = ell - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    GF f(ell);
    for (std::uint64_t g = 2; g < ell; ++g) {
        bool ok = true;
        for (auto q : prime_factors)
            if (f.pow(g, (ell - 1) / q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw error("no primitive root found");  // unreachable for prime ell
}

std::vector<int> rref(const GF& f, GFMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        std::uint64_t inv = f.inv(m[r][c]);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = f.mul(m[r][j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            std::uint64_t factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);  // drop zero rows
    return pivots;
}

GFMatrix kernel_basis(const GF& f, GFMatrix m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    std::vector<int> pivots = rref(f, m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    GFMatrix basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[free_c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(m[r][free_c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::uint64_t> char_poly(const GF& f, GFMatrix m) {
    std::size_t n = m.size();
    if (n == 0) return {1};
    // Similarity reduction to upper Hessenberg form.
    for (std::size_t c = 0; c + 2 <= n; ++c) {
        std::size_t piv = c + 1;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            std::swap(m[piv], m[c + 1]);
            for (std::size_t r = 0; r < n; ++r) std::swap(m[r][piv], m[r][c + 1]);
        }
        std::uint64_t inv = f.inv(m[c + 1][c]);
        for (std::size_t r = c + 2; r < n; ++r) {
            if (m[r][c] == 0) continue;
            std::uint64_t factor = f.mul(m[r][c], inv);
            // row_r -= factor * row_{c+1};  col_{c+1} += factor * col_r keeps similarity
            for (std::size_t j = 0; j < n; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[c + 1][j]));
            for (std::size_t i = 0; i < n; ++i) m[i][c + 1] = f.add(m[i][c + 1], f.mul(factor, m[i][r]));
        }
    }
    // p_k(x) = (x - h_{kk}) p_{k-1}(x) - sum_i h_{k-i,k} (prod of subdiagonal) p_{k-i-1}(x)
    std::vector<std::vector<std::uint64_t>> p(n + 1);
    p[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        p[k].assign(k + 1, 0);
        // (x - h) * p[k-1]
        for (std::size_t t = 0; t < p[k - 1].size(); ++t) {
            p[k][t + 1] = f.add(p[k][t + 1], p[k - 1][t]);
            p[k][t] = f.sub(p[k][t], f.mul(m[k - 1][k - 1], p[k - 1][t]));
        }
        std::uint64_t subdiag = 1;
        for (std::size_t i = 1; i < k; ++i) {
            subdiag = f.mul(subdiag, m[k - i][k - i - 1]);
            if (subdiag == 0) break;
            std::uint64_t coef = f.mul(m[k - i - 1][k - 1], subdiag);
            if (coef == 0) continue;
            for (std::size_t t = 0; t < p[k - i - 1].size(); ++t)
                p[k][t] = f.sub(p[k][t], f.mul(coef, p[k - i - 1][t]));
        }
    }
    return p[n];
}

std::vector<std::pair<std::uint64_t, int>> poly_roots(const GF& f, const std::vector<std::uint64_t>& poly) {
    std::vector<std::pair<std::uint64_t, int>> roots;
    int degree = static_cast<int>(poly.size()) - 1;
    int found = 0;
    for (std::uint64_t x = 0; x < f.modulus() && found < degree; ++x) {
        // Horner
        std::uint64_t v = 0;
        for (int t = degree; t >= 0; --t) v = f.add(f.mul(v, x), poly[t]);
        if (v != 0) continue;
        // multiplicity by repeated synthetic division
        std::vector<std::uint64_t> q = poly;
        int mult = 0;
        while (true) {
            std::vector<std::uint64_t> next(q.size() - 1);
            std::uint64_t carry = 0;
            for (int t = static_cast<int>(q.size()) - 1; t >= 1; --t) {
                carry = f.add(f.mul(carry, x), q[t]);
                next[t - 1] = carry;
            }
            std::uint64_t rem = f.add(f.mul(carry, x), q[0]);
            if (rem != 0) break;
            q = std::move(next);
            ++mult;
            if (q.size() == 1) break;
        }
        roots.push_back({x, mult});
        found += mult;
    }
    return roots;
}

namespace {

void ntt_rec(const GF& f, const std::uint64_t* data, std::size_t n, std::size_t stride,
             std::uint64_t root, int p, std::vector<std::uint64_t>& out) {
    if (n == 1) {
        out[0] = data[0];
        return;
    }
    std::size_t m = n / p;
    std::uint64_t root_sub = f.pow(root, p);  // order m
    std::vector<std::vector<std::uint64_t>> sub(p);
    std::vector<std::uint64_t> tmp(m);
    for (int r = 0; r < p; ++r) {
        ntt_rec(f, data + r * stride, m, stride * p, root_sub, p, tmp);
        sub[r] = tmp;
    }
    // out[k] = sum_r root^{rk} sub[r][k mod m]
    std::uint64_t wk = 1;  // root^k
    for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t acc = 0;
        std::uint64_t w = 1;  // root^{rk}
        for (int r = 0; r < p; ++r) {
            acc = f.add(acc, f.mul(w, sub[r][k % m]));
            w = f.mul(w, wk);
        }
        out[k] = acc;
        wk = f.mul(wk, root);
    }
}

}  // namespace

std::vector<std::uint64_t> ntt(const GF& f, const std::vector<std::uint64_t>& data,
                               std::uint64_t root, int p) {
    std::vector<std::uint64_t> out(data.size());
    if (data.empty()) return out;
    ntt_rec(f, data.data(), data.size(), 1, root, p, out);
    return out;
}

}  // namespace codeg
