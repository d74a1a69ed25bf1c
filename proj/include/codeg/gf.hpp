#pragma once

#include <cstdint>
#include <vector>

#include "codeg/common.hpp"

namespace codeg {

// Arithmetic mod a prime ell < 2^31, with Barrett reduction for products.
class GF {
  public:
    explicit GF(std::uint64_t ell) : ell_(ell) {
        // floor(2^64 / ell); ell is odd so the -1 in the numerator is harmless.
        magic_ = ell_ > 1 ? ~std::uint64_t{0} / ell_ : 0;
    }

    std::uint64_t modulus() const { return ell_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= ell_ ? s - ell_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + ell_ - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t t = a * b;
        std::uint64_t q = static_cast<std::uint64_t>((static_cast<__uint128_t>(t) * magic_) >> 64);
        std::uint64_t r = t - q * ell_;
        while (r >= ell_) r -= ell_;
        return r;
    }
    std::uint64_t neg(std::uint64_t a) const { return a ? ell_ - a : 0; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const { return pow(a % ell_, ell_ - 2); }
    std::uint64_t from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(ell_);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(ell_) : r);
    }

  private:
    std::uint64_t ell_;
    std::uint64_t magic_;
};

// Smallest prime ell with ell = 1 (mod exponent) and ell > 2*sqrt(order).
std::int64_t dixon_prime(std::int64_t exponent, std::int64_t order);

// Smallest primitive root mod ell.
std::uint64_t smallest_primitive_root(std::uint64_t ell);

using GFMatrix = std::vector<std::vector<std::uint64_t>>;  // row major

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(const GF& f, GFMatrix& m);

// Basis of the right kernel {x : m x = 0} as rows.
GFMatrix kernel_basis(const GF& f, GFMatrix m);

// Characteristic polynomial det(xI - m), coefficients low to high
// (Hessenberg reduction; degree = dim).
std::vector<std::uint64_t> char_poly(const GF& f, GFMatrix m);

// Distinct roots of a monic polynomial that splits completely over GF(ell),
// with multiplicities; found by scanning all field elements.
std::vector<std::pair<std::uint64_t, int>> poly_roots(const GF& f, const std::vector<std::uint64_t>& poly);

// Discrete Fourier transform of length e = p^a over GF(ell), where root has
// multiplicative order exactly e.  out[k] = sum_j data[j] * root^{jk}.
std::vector<std::uint64_t> ntt(const GF& f, const std::vector<std::uint64_t>& data,
                               std::uint64_t root, int p);

}  // namespace codeg
