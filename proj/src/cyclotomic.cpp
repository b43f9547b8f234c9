#include "gck/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "gck/errors.hpp"

namespace gck {

long euler_phi(long m) {
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Quotient-free polynomial helpers over Int / Rat (dense, index = degree).

std::vector<Int> int_poly_divide_exact(const std::vector<Int>& num,
                                       const std::vector<Int>& den) {
    // Exact division of integer polynomials, denominator monic-leading +-1
    // up to sign handled by exact integer division (used for Phi_m only).
    std::vector<Int> rem = num;
    std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
    for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
        Int c = rem[i + den.size() - 1] / den.back();
        quot[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
    }
    return quot;
}

} // namespace

const std::vector<Int>& cyclotomic_polynomial(long m) {
    static std::map<long, std::vector<Int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed recursively.
    std::vector<Int> poly(m + 1, Int(0));
    poly[0] = -1;
    poly[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d) continue;
        std::vector<Int> phi_d;
        {
            auto jt = cache.find(d);
            if (jt != cache.end()) {
                phi_d = jt->second;
            } else {
                // Recurse without the lock-reentrancy problem: compute inline.
                std::vector<Int> p(d + 1, Int(0));
                p[0] = -1;
                p[d] = 1;
                for (long e = 1; e < d; ++e) {
                    if (d % e) continue;
                    p = int_poly_divide_exact(p, cache.at(e));
                }
                cache[d] = p;
                phi_d = std::move(p);
            }
        }
        poly = int_poly_divide_exact(poly, phi_d);
    }
    return cache.emplace(m, std::move(poly)).first->second;
}

// Reduce modulo Phi_m (monic with integer coefficients) to degree < phi(m).
void Cyclotomic::reduce_mod_phi() {
    const long phi = euler_phi(conductor_);
    if (static_cast<long>(coeff_.size()) > phi) {
        const std::vector<Int>& mod = cyclotomic_polynomial(conductor_);
        for (long i = static_cast<long>(coeff_.size()) - 1; i >= phi; --i) {
            Rat c = coeff_[i];
            if (c == 0) continue;
            coeff_[i] = 0;
            for (long j = 0; j < phi; ++j) coeff_[i - phi + j] -= c * Rat(mod[j]);
        }
    }
    coeff_.resize(phi, Rat(0));
    for (Rat& c : coeff_) c.canonicalize();
}

void Cyclotomic::normalize() {
    reduce_mod_phi();
    // Rational values descend to conductor 1.
    if (conductor_ > 1) {
        bool rational = true;
        for (size_t i = 1; i < coeff_.size(); ++i)
            if (coeff_[i] != 0) {
                rational = false;
                break;
            }
        if (rational) {
            conductor_ = 1;
            coeff_.resize(1);
        }
    }
}

Cyclotomic Cyclotomic::zeta(long m, long power) {
    Cyclotomic z;
    z.conductor_ = m;
    power %= m;
    if (power < 0) power += m;
    z.coeff_.assign(power + 1, Rat(0));
    z.coeff_[power] = 1;
    z.normalize();
    return z;
}

Cyclotomic Cyclotomic::promoted(long M) const {
    if (M == conductor_) return *this;
    if (M % conductor_ != 0)
        throw NotRational("promotion target is not a multiple of the conductor");
    Cyclotomic out;
    out.conductor_ = M;
    out.coeff_.assign(M, Rat(0));
    const long stride = M / conductor_;
    for (size_t i = 0; i < coeff_.size(); ++i)
        out.coeff_[(i * stride) % M] += coeff_[i];
    out.reduce_mod_phi(); // keep the requested conductor
    return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    long M = (lcm(Int(conductor_), Int(rhs.conductor_))).get_si();
    Cyclotomic a = promoted(M), b = rhs.promoted(M);
    for (size_t i = 0; i < a.coeff_.size(); ++i) a.coeff_[i] += b.coeff_[i];
    a.normalize();
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
    long M = (lcm(Int(conductor_), Int(rhs.conductor_))).get_si();
    Cyclotomic a = promoted(M), b = rhs.promoted(M);
    for (size_t i = 0; i < a.coeff_.size(); ++i) a.coeff_[i] -= b.coeff_[i];
    a.normalize();
    return a;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic a = *this;
    for (Rat& c : a.coeff_) c = -c;
    return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    long M = (lcm(Int(conductor_), Int(rhs.conductor_))).get_si();
    Cyclotomic a = promoted(M), b = rhs.promoted(M);
    std::vector<Rat> prod(a.coeff_.size() + b.coeff_.size(), Rat(0));
    for (size_t i = 0; i < a.coeff_.size(); ++i) {
        if (a.coeff_[i] == 0) continue;
        for (size_t j = 0; j < b.coeff_.size(); ++j) {
            if (b.coeff_[j] == 0) continue;
            prod[i + j] += a.coeff_[i] * b.coeff_[j];
        }
    }
    Cyclotomic out;
    out.conductor_ = M;
    out.coeff_ = std::move(prod);
    out.normalize();
    return out;
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& rhs) const {
    if (rhs.is_zero()) throw NotRational("division by zero cyclotomic");
    if (rhs.is_rational()) {
        Cyclotomic out = *this;
        Rat inv = Rat(1) / rhs.coeff_[0];
        for (Rat& c : out.coeff_) c *= inv;
        out.normalize();
        return out;
    }
    // Invert via extended Euclid against Phi_m in Q[x].
    const long m = rhs.conductor_;
    const std::vector<Int>& phi_int = cyclotomic_polynomial(m);
    std::vector<Rat> r0(phi_int.begin(), phi_int.end());
    std::vector<Rat> r1 = rhs.coeff_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)}; // s tracks the coefficient of rhs

    auto deg = [](const std::vector<Rat>& p) { return static_cast<long>(p.size()) - 1; };
    auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    while (deg(r1) > 0) {
        // r0 = q*r1 + r2
        std::vector<Rat> q(deg(r0) - deg(r1) + 1, Rat(0));
        std::vector<Rat> rem = r0;
        for (long i = deg(r0) - deg(r1); i >= 0; --i) {
            Rat c = rem[i + deg(r1)] / r1.back();
            q[i] = c;
            if (c == 0) continue;
            for (long j = 0; j <= deg(r1); ++j) rem[i + j] -= c * r1[j];
        }
        trim(rem);
        // s2 = s0 - q*s1
        std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant c with s1 * rhs == c (mod Phi_m).
    Cyclotomic inv;
    inv.conductor_ = m;
    inv.coeff_ = s1;
    Rat scale = Rat(1) / r1[0];
    for (Rat& c : inv.coeff_) c *= scale;
    inv.normalize();
    return *this * inv;
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
    if (conductor_ == rhs.conductor_) return coeff_ == rhs.coeff_;
    long M = (lcm(Int(conductor_), Int(rhs.conductor_))).get_si();
    return promoted(M).coeff_ == rhs.promoted(M).coeff_;
}

Cyclotomic Cyclotomic::galois(long k) const {
    if (conductor_ == 1) return *this;
    Cyclotomic out;
    out.conductor_ = conductor_;
    out.coeff_.assign(conductor_, Rat(0));
    for (size_t i = 0; i < coeff_.size(); ++i)
        out.coeff_[(i * k) % conductor_] += coeff_[i];
    out.normalize();
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const Rat& c : coeff_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const { return conductor_ == 1; }

Rat Cyclotomic::rational_value() const {
    if (!is_rational()) throw NotRational("cyclotomic value " + str() + " is not rational");
    return coeff_[0];
}

bool Cyclotomic::is_integer() const {
    return is_rational() && coeff_[0].get_den() == 1;
}

Int Cyclotomic::integer_value() const {
    Rat q = rational_value();
    if (q.get_den() != 1) throw NotRational("cyclotomic value " + str() + " is not an integer");
    return q.get_num();
}

std::string Cyclotomic::str() const {
    if (is_rational()) return to_string(coeff_[0]);
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        Rat c = coeff_[i];
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool unit = (c == 1) && i > 0;
        if (!unit) out << to_string(c);
        if (i > 0) {
            if (!unit) out << "*";
            out << "z" << conductor_;
            if (i > 1) out << "^" << i;
        }
    }
    if (first) return "0";
    return out.str();
}

} // namespace gck
