#pragma once

#include <string>
#include <vector>

#include "gck/numeric.hpp"

namespace gck {

/*
 * An element of the cyclotomic field Q(zeta_m), held as a polynomial in
 * zeta_m of degree < phi(m), reduced modulo the m-th cyclotomic polynomial.
 * Within a fixed conductor the representation is canonical (the power basis
 * coordinates are unique), so equality is coefficient equality; values at
 * different conductors are compared after promotion to the lcm. Purely
 * rational values normalise to conductor 1. Arithmetic is exact throughout.
 */
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeff_{Rat(0)} {}
    Cyclotomic(long v) : conductor_(1), coeff_{Rat(v)} {}       // NOLINT(implicit)
    Cyclotomic(const Int& v) : conductor_(1), coeff_{Rat(v)} {} // NOLINT(implicit)
    Cyclotomic(const Rat& v) : conductor_(1), coeff_{v} {}      // NOLINT(implicit)

    static Cyclotomic zeta(long m, long power = 1);

    long conductor() const { return conductor_; }
    const std::vector<Rat>& coefficients() const { return coeff_; }

    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic operator/(const Cyclotomic& rhs) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
    Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
    Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }
    bool operator==(const Cyclotomic& rhs) const;
    bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

    // Galois substitution zeta_m -> zeta_m^k, gcd(k, m) = 1.
    Cyclotomic galois(long k) const;
    Cyclotomic conjugate() const { return galois(conductor_ - 1 + (conductor_ == 1)); }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const; // throws NotRational
    bool is_integer() const;
    Int integer_value() const; // throws NotRational

    // Same value viewed in Q(zeta_M); M must be a multiple of conductor().
    Cyclotomic promoted(long M) const;

    std::string str() const; // e.g. "1 - 2*z6 + 1/2*z6^2"

private:
    long conductor_;
    std::vector<Rat> coeff_; // size = phi(conductor), power basis
    void reduce_mod_phi();
    void normalize();
};

// Coefficients of the m-th cyclotomic polynomial (monic, degree phi(m)),
// index i = coefficient of x^i. Cached per conductor.
const std::vector<Int>& cyclotomic_polynomial(long m);

long euler_phi(long m);

} // namespace gck
