#include "gck/fp.hpp"

#include <stdexcept>

namespace gck {

FpMat FpMat::identity(uint64_t p, int n) {
    FpMat m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

uint64_t fp_pow(uint64_t base, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

uint64_t fp_inv(uint64_t x, uint64_t p) { return fp_pow(x % p, p - 2, p); }

FpMat fp_mul(const FpMat& x, const FpMat& y) {
    FpMat z(x.p, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            uint64_t v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = (z.at(i, j) + v * y.at(k, j)) % x.p;
        }
    return z;
}

namespace {

// In-place row reduction; returns pivot columns.
std::vector<int> fp_rref(FpMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col)) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
        uint64_t inv = fp_inv(m.at(row, col), m.p);
        for (int j = col; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv % m.p;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || !m.at(r, col)) continue;
            uint64_t f = m.at(r, col);
            for (int j = col; j < m.cols; ++j)
                m.at(r, j) = (m.at(r, j) + (m.p - f) * m.at(row, j)) % m.p;
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int fp_rank(FpMat m) { return static_cast<int>(fp_rref(m).size()); }

FpMat fp_nullspace(const FpMat& m0) {
    FpMat m = m0;
    std::vector<int> pivots = fp_rref(m);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    FpMat basis(m.p, m.cols, m.cols - static_cast<int>(pivots.size()));
    int bi = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        basis.at(c, bi) = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr) {
            uint64_t v = m.at(static_cast<int>(pr), c);
            basis.at(pivots[pr], bi) = v ? m.p - v : 0;
        }
        ++bi;
    }
    return basis;
}

FpMat fp_solve(const FpMat& b, const FpMat& c) {
    FpMat aug(b.p, b.rows, b.cols + c.cols);
    for (int i = 0; i < b.rows; ++i) {
        for (int j = 0; j < b.cols; ++j) aug.at(i, j) = b.at(i, j);
        for (int j = 0; j < c.cols; ++j) aug.at(i, b.cols + j) = c.at(i, j);
    }
    std::vector<int> pivots = fp_rref(aug);
    if (static_cast<int>(pivots.size()) != b.cols || (!pivots.empty() && pivots.back() >= b.cols))
        throw std::logic_error("fp_solve: matrix does not have full column rank");
    FpMat x(b.p, b.cols, c.cols);
    for (int i = 0; i < b.cols; ++i)
        for (int j = 0; j < c.cols; ++j) x.at(i, j) = aug.at(i, b.cols + j);
    return x;
}

std::vector<uint64_t> fp_charpoly(FpMat m) {
    const uint64_t p = m.p;
    const int n = m.rows;
    if (n == 0) return {1};
    // Reduce to upper Hessenberg by similarity, with pivoting.
    for (int col = 0; col + 2 < n; ++col) {
        int pr = -1;
        for (int r = col + 1; r < n; ++r)
            if (m.at(r, col)) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != col + 1) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(col + 1, j));
            for (int i = 0; i < n; ++i) std::swap(m.at(i, pr), m.at(i, col + 1));
        }
        uint64_t inv = fp_inv(m.at(col + 1, col), p);
        for (int r = col + 2; r < n; ++r) {
            uint64_t f = m.at(r, col) * inv % p;
            if (!f) continue;
            for (int j = 0; j < n; ++j)
                m.at(r, j) = (m.at(r, j) + (p - f) * m.at(col + 1, j)) % p;
            for (int i = 0; i < n; ++i)
                m.at(i, col + 1) = (m.at(i, col + 1) + f * m.at(i, r)) % p;
        }
    }
    // Char polys of leading principal Hessenberg blocks, by recurrence.
    std::vector<std::vector<uint64_t>> q(n + 1);
    q[0] = {1};
    for (int k = 1; k <= n; ++k) {
        // q_k(x) = (x - m[k-1][k-1]) q_{k-1}(x) - sum over trailing products.
        std::vector<uint64_t> qk(k + 1, 0);
        for (int i = 0; i < k; ++i) {
            qk[i + 1] = (qk[i + 1] + q[k - 1][i]) % p;
            qk[i] = (qk[i] + (p - m.at(k - 1, k - 1) % p) * q[k - 1][i]) % p;
        }
        uint64_t prod = 1;
        for (int s = 1; s < k; ++s) {
            prod = prod * m.at(k - s, k - s - 1) % p;
            uint64_t coef = prod * m.at(k - s - 1, k - 1) % p;
            if (!coef) continue;
            for (size_t i = 0; i < q[k - s - 1].size(); ++i)
                qk[i] = (qk[i] + (p - coef) * q[k - s - 1][i]) % p;
        }
        q[k] = std::move(qk);
    }
    return q[n];
}

std::vector<uint64_t> fp_roots(const std::vector<uint64_t>& poly, uint64_t p) {
    std::vector<uint64_t> roots;
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t v = 0;
        for (size_t i = poly.size(); i-- > 0;) v = (v * x + poly[i]) % p;
        if (!v) roots.push_back(x);
    }
    return roots;
}

namespace {
bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}
} // namespace

uint64_t smallest_prime_1_mod(uint64_t m, uint64_t lower_bound) {
    uint64_t p = m + 1;
    while (p <= lower_bound) p += m;
    while (!is_prime(p)) p += m;
    return p;
}

uint64_t fp_primitive_root(uint64_t p) {
    std::vector<uint64_t> prime_factors;
    uint64_t n = p - 1;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        prime_factors.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) prime_factors.push_back(n);
    for (uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint64_t q : prime_factors)
            if (fp_pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    return 1;
}

} // namespace gck
