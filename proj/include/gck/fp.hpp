#pragma once

#include <cstdint>
#include <vector>

namespace gck {

// Dense linear algebra over F_p for p < 2^31. Backing for the Dixon
// character-table computation and for fast certified rank checks.
struct FpMat {
    uint64_t p = 2;
    int rows = 0, cols = 0;
    std::vector<uint64_t> a;

    FpMat() = default;
    FpMat(uint64_t p_, int r, int c) : p(p_), rows(r), cols(c), a(size_t(r) * c, 0) {}
    uint64_t& at(int i, int j) { return a[size_t(i) * cols + j]; }
    uint64_t at(int i, int j) const { return a[size_t(i) * cols + j]; }
    static FpMat identity(uint64_t p, int n);
};

uint64_t fp_pow(uint64_t base, uint64_t e, uint64_t p);
uint64_t fp_inv(uint64_t x, uint64_t p);

FpMat fp_mul(const FpMat& x, const FpMat& y);
int fp_rank(FpMat m);
// Basis of {v : M v = 0}, columns.
FpMat fp_nullspace(const FpMat& m);
// Solve B X = C where B has full column rank; used for restricting a linear
// map to an invariant subspace.
FpMat fp_solve(const FpMat& b, const FpMat& c);
// Characteristic polynomial, monic, index = degree (Hessenberg reduction).
std::vector<uint64_t> fp_charpoly(FpMat m);
// All roots in F_p of a polynomial, by direct scan (p is always small here).
std::vector<uint64_t> fp_roots(const std::vector<uint64_t>& poly, uint64_t p);

// Smallest prime p ≡ 1 (mod m) with p > lower_bound.
uint64_t smallest_prime_1_mod(uint64_t m, uint64_t lower_bound);
// A generator of F_p^*.
uint64_t fp_primitive_root(uint64_t p);

} // namespace gck
