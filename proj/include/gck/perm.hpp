#pragma once

#include <string>
#include <vector>

#include "gck/errors.hpp"

namespace gck {

/*
 * A permutation of {0, ..., n-1}, stored as its image sequence.
 *
 * Composition convention (fixed for the whole library): (p * q)(x) = p(q(x)),
 * i.e. q acts first. Permutations are ordered lexicographically by image
 * sequence; the identity is the global minimum of that order, so every
 * "canonical representative" below is well defined.
 */
class Perm {
public:
    Perm() = default;
    static Perm identity(int degree);

    // Throws InvalidPermutation when images is not a bijection.
    explicit Perm(std::vector<int> images);

    // Cycle-notation parser, e.g. "(0 1 2)(3 4)"; "()" is the identity.
    // Commas are accepted as separators too. Points must lie in [0, degree).
    static Perm parse(const std::string& text, int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    Perm operator*(const Perm& rhs) const; // (p*q)(x) = p(q(x))
    Perm inverse() const;
    bool is_identity() const;
    int order() const;

    // +1 for even permutations, -1 for odd.
    int sign() const;

    // Canonical cycle notation: cycles sorted by least moved point, each
    // cycle starting at its least point; identity prints "()".
    std::string cycle_string() const;

    bool operator==(const Perm& rhs) const { return img_ == rhs.img_; }
    bool operator<(const Perm& rhs) const { return img_ < rhs.img_; }

private:
    std::vector<int> img_;
};

} // namespace gck
