#include "gck/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gck {

Perm Perm::identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw InvalidPermutation("image sequence is not a bijection of {0..n-1}");
        seen[v] = 1;
    }
}

Perm Perm::parse(const std::string& text, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);

    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw ParseError("expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected point index in cycle notation: " + text);
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            if (v >= degree)
                throw ParseError("point " + std::to_string(v) + " out of range for degree " +
                                 std::to_string(degree));
            cycle.push_back(v);
            skip_ws();
        }
        if (i == text.size())
            throw ParseError("unterminated cycle in: " + text);
        ++i; // ')'
        for (size_t k = 0; k + 1 < cycle.size(); ++k) {
            if (img[cycle[k]] != cycle[k])
                throw ParseError("point repeated across cycles in: " + text);
            img[cycle[k]] = cycle[k + 1];
        }
        if (cycle.size() >= 2) {
            if (img[cycle.back()] != cycle.back())
                throw ParseError("point repeated across cycles in: " + text);
            img[cycle.back()] = cycle.front();
        }
        skip_ws();
    }
    return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& rhs) const {
    std::vector<int> img(img_.size());
    for (size_t x = 0; x < img.size(); ++x) img[x] = img_[rhs.img_[x]];
    Perm p;
    p.img_ = std::move(img); // products of valid perms are valid
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> img(img_.size());
    for (size_t x = 0; x < img_.size(); ++x) img[img_[x]] = static_cast<int>(x);
    Perm p;
    p.img_ = std::move(img);
    return p;
}

bool Perm::is_identity() const {
    for (size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != static_cast<int>(x)) return false;
    return true;
}

int Perm::order() const {
    int n = 1;
    Perm p = *this;
    while (!p.is_identity()) {
        p = p * *this;
        ++n;
    }
    return n;
}

int Perm::sign() const {
    std::vector<char> seen(img_.size(), 0);
    int transpositions = 0;
    for (size_t x = 0; x < img_.size(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (int y = static_cast<int>(x); !seen[y]; y = img_[y]) {
            seen[y] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

std::string Perm::cycle_string() const {
    std::vector<char> seen(img_.size(), 0);
    std::ostringstream out;
    bool any = false;
    for (size_t x = 0; x < img_.size(); ++x) {
        if (seen[x] || img_[x] == static_cast<int>(x)) {
            seen[x] = 1;
            continue;
        }
        out << '(';
        bool first = true;
        for (int y = static_cast<int>(x); !seen[y]; y = img_[y]) {
            seen[y] = 1;
            if (!first) out << ' ';
            out << y;
            first = false;
        }
        out << ')';
        any = true;
    }
    return any ? out.str() : "()";
}

} // namespace gck
