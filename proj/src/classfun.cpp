#include "gck/classfun.hpp"

#include <algorithm>
#include <cmath>

#include "gck/errors.hpp"
#include "gck/fp.hpp"

namespace gck {

static void check_same_group(const ClassFunction& a, const ClassFunction& b) {
    if (a.group != b.group)
        throw GroupMismatch("class functions belong to different groups");
}

ClassFunction ClassFunction::operator+(const ClassFunction& rhs) const {
    check_same_group(*this, rhs);
    ClassFunction out{group, values};
    for (size_t i = 0; i < values.size(); ++i) out.values[i] += rhs.values[i];
    return out;
}

ClassFunction ClassFunction::operator-(const ClassFunction& rhs) const {
    check_same_group(*this, rhs);
    ClassFunction out{group, values};
    for (size_t i = 0; i < values.size(); ++i) out.values[i] -= rhs.values[i];
    return out;
}

ClassFunction ClassFunction::operator*(const ClassFunction& rhs) const {
    check_same_group(*this, rhs);
    ClassFunction out{group, values};
    for (size_t i = 0; i < values.size(); ++i) out.values[i] *= rhs.values[i];
    return out;
}

ClassFunction ClassFunction::scaled(const Int& n) const {
    ClassFunction out{group, values};
    for (auto& v : out.values) v *= Cyclotomic(n);
    return out;
}

ClassFunction ClassFunction::conjugate() const {
    ClassFunction out{group, values};
    for (auto& v : out.values) v = v.conjugate();
    return out;
}

bool ClassFunction::operator==(const ClassFunction& rhs) const {
    return group == rhs.group && values == rhs.values;
}

bool ClassFunction::is_integer_valued() const {
    for (const auto& v : values)
        if (!v.is_integer()) return false;
    return true;
}

ClassFunction trivial_character(const GroupPtr& G) {
    return ClassFunction{G, std::vector<Cyclotomic>(G->num_classes(), Cyclotomic(1))};
}

Cyclotomic inner_product_cyclotomic(const ClassFunction& chi, const ClassFunction& psi) {
    check_same_group(chi, psi);
    const GroupPtr& G = chi.group;
    Cyclotomic sum;
    for (int c = 0; c < G->num_classes(); ++c) {
        Cyclotomic term = chi.values[c] * psi.values[c].conjugate();
        sum += term * Cyclotomic(Int(G->conjugacy_classes()[c].size()));
    }
    return sum / Cyclotomic(Int(G->order()));
}

Rat inner_product(const ClassFunction& chi, const ClassFunction& psi) {
    return inner_product_cyclotomic(chi, psi).rational_value();
}

ClassFunction induce_trivial(const Subgroup& H, const GroupPtr& G) {
    if (H.parent() != G) throw NotASubgroup("subgroup belongs to a different group");
    // Fixed cosets of a class representative g: cosets xH with x^-1 g x in H.
    std::vector<int> reps = left_transversal(G, H);
    ClassFunction chi{G, std::vector<Cyclotomic>(G->num_classes())};
    for (int c = 0; c < G->num_classes(); ++c) {
        int g = G->class_representative(c);
        long fixed = 0;
        for (int x : reps)
            if (H.contains(G->mul(G->mul(G->inv(x), g), x))) ++fixed;
        chi.values[c] = Cyclotomic(fixed);
    }
    return chi;
}

namespace {

// Deterministic ordering key for irreducibles: degree, trivial first, then
// lexicographic on (conductor, coefficients) per class value.
bool value_less(const Cyclotomic& a, const Cyclotomic& b) {
    long M = lcm(Int(a.conductor()), Int(b.conductor())).get_si();
    Cyclotomic pa = a.promoted(M), pb = b.promoted(M);
    const auto& ca = pa.coefficients();
    const auto& cb = pb.coefficients();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

bool char_less(const ClassFunction& a, const ClassFunction& b) {
    Int da = a.degree().integer_value(), db = b.degree().integer_value();
    if (da != db) return da < db;
    bool ta = true, tb = true;
    for (const auto& v : a.values) ta = ta && v == Cyclotomic(1);
    for (const auto& v : b.values) tb = tb && v == Cyclotomic(1);
    if (ta != tb) return ta;
    for (size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i] == b.values[i]) continue;
        return value_less(a.values[i], b.values[i]);
    }
    return false;
}

} // namespace

CharacterTablePtr character_table(const GroupPtr& G, long order_cap) {
    if (G->order() > order_cap)
        throw OrderCapExceeded("character table capped at order " + std::to_string(order_cap));

    const int k = G->num_classes();
    const auto& classes = G->conjugacy_classes();
    const long n = G->order();
    const long exponent = G->exponent();

    // Class multiplication coefficients a[i][j][l]: K_i K_j = sum_l a K_l.
    // a[i][j][l] = #{x in C_i : x^-1 z_l in C_j} for the fixed rep z_l.
    std::vector<std::vector<std::vector<long>>> a(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (int l = 0; l < k; ++l) {
        int zl = G->class_representative(l);
        for (int i = 0; i < k; ++i)
            for (int x : classes[i]) {
                int j = G->class_of(G->mul(G->inv(x), zl));
                ++a[i][j][l];
            }
    }

    const uint64_t p = smallest_prime_1_mod(
        static_cast<uint64_t>(exponent),
        static_cast<uint64_t>(2 * std::sqrt(static_cast<double>(n))) + 1);
    const uint64_t zgen = fp_primitive_root(p);
    // omega = z^((p-1)/exponent) is the working image of zeta_exponent.

    // M_i with (M_i)[j][l] = a[i][j][l]; the vector of central-character
    // values is a simultaneous eigenvector of all M_i.
    std::vector<FpMat> class_mats(k);
    for (int i = 0; i < k; ++i) {
        FpMat m(p, k, k);
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) m.at(j, l) = static_cast<uint64_t>(a[i][j][l]) % p;
        class_mats[i] = std::move(m);
    }

    // Split F_p^k into common eigenspaces, one matrix at a time.
    std::vector<FpMat> spaces{FpMat::identity(p, k)};
    for (int i = 1; i < k; ++i) {
        std::vector<FpMat> next;
        for (FpMat& b : spaces) {
            if (b.cols <= 1) {
                next.push_back(std::move(b));
                continue;
            }
            FpMat mb = fp_mul(class_mats[i], b);
            FpMat restricted = fp_solve(b, mb);
            std::vector<uint64_t> cp = fp_charpoly(restricted);
            for (uint64_t lambda : fp_roots(cp, p)) {
                FpMat shifted = restricted;
                for (int d = 0; d < shifted.rows; ++d)
                    shifted.at(d, d) = (shifted.at(d, d) + p - lambda) % p;
                FpMat kernel = fp_nullspace(shifted);
                if (kernel.cols > 0) next.push_back(fp_mul(b, kernel));
            }
        }
        spaces = std::move(next);
        bool all_lines = true;
        for (const FpMat& b : spaces) all_lines = all_lines && b.cols == 1;
        if (all_lines) break;
    }

    std::vector<ClassFunction> irreducibles;
    for (const FpMat& line : spaces) {
        // Normalise so the identity-class coordinate is 1.
        std::vector<uint64_t> omega(k);
        uint64_t scale = fp_inv(line.at(0, 0), p);
        for (int l = 0; l < k; ++l) omega[l] = line.at(l, 0) * scale % p;

        // chi(1)^2 = |G| / sum_l omega_l omega_{l*} / |C_l|  (mod p), with the
        // honest degree recovered as the small positive square root.
        uint64_t denom = 0;
        for (int l = 0; l < k; ++l) {
            uint64_t term = omega[l] * omega[G->inverse_class(l)] % p;
            denom = (denom + term * fp_inv(classes[l].size() % p, p)) % p;
        }
        uint64_t d2 = static_cast<uint64_t>(n % p) * fp_inv(denom, p) % p;
        long degree = 0;
        for (long d = 1; d * d <= n; ++d)
            if (static_cast<uint64_t>(d) * d % p == d2) {
                degree = d;
                break;
            }

        std::vector<uint64_t> chi_mod(k);
        for (int l = 0; l < k; ++l)
            chi_mod[l] =
                static_cast<uint64_t>(degree) * omega[l] % p * fp_inv(classes[l].size() % p, p) % p;

        // Lift each value: chi(g) = sum_t mu_t zeta_o^t where mu_t counts
        // eigenvalues zeta_o^t of g's action; mu_t < p/2 lifts uniquely.
        ClassFunction chi{G, std::vector<Cyclotomic>(k)};
        for (int l = 0; l < k; ++l) {
            int g = G->class_representative(l);
            long o = G->element_order(g);
            uint64_t theta = fp_pow(zgen, (p - 1) / static_cast<uint64_t>(o), p);
            uint64_t theta_inv = fp_inv(theta, p);
            uint64_t o_inv = fp_inv(static_cast<uint64_t>(o) % p, p);
            Cyclotomic value;
            int gs = 0; // g^s
            std::vector<uint64_t> chi_pow(o);
            for (long s = 0; s < o; ++s) {
                chi_pow[s] = chi_mod[G->class_of(gs)];
                gs = G->mul(g, gs);
            }
            for (long t = 0; t < o; ++t) {
                uint64_t mu = 0;
                uint64_t tw = 1;
                for (long s = 0; s < o; ++s) {
                    mu = (mu + chi_pow[s] * tw) % p;
                    tw = tw * fp_pow(theta_inv, static_cast<uint64_t>(t), p) % p;
                }
                mu = mu * o_inv % p;
                if (mu) value += Cyclotomic::zeta(o, t) * Cyclotomic(Int(static_cast<long>(mu)));
            }
            chi.values[l] = value;
        }
        irreducibles.push_back(std::move(chi));
    }

    std::sort(irreducibles.begin(), irreducibles.end(), char_less);

    auto table = std::shared_ptr<CharacterTable>(new CharacterTable());
    table->group_ = G;
    table->irreducibles_ = std::move(irreducibles);
    return table;
}

CharacterTablePtr CharacterTable::from_irreducibles(const GroupPtr& G,
                                                    std::vector<ClassFunction> irreducibles) {
    if (static_cast<int>(irreducibles.size()) != G->num_classes())
        throw NotVirtualCharacter("table must have one irreducible per conjugacy class");
    for (auto& f : irreducibles) {
        if (f.group != G) throw GroupMismatch("irreducible over a different group");
        if (!(inner_product_cyclotomic(f, f) == Cyclotomic(1)))
            throw NotIrreducible("supplied character is not orthonormal");
    }
    if (!std::is_sorted(irreducibles.begin(), irreducibles.end(), char_less))
        throw NotIrreducible("supplied irreducibles are not in canonical order");
    auto table = std::shared_ptr<CharacterTable>(new CharacterTable());
    table->group_ = G;
    table->irreducibles_ = std::move(irreducibles);
    return table;
}

int CharacterTable::conjugate_index(int i) const {
    ClassFunction conj = irreducibles_[i].conjugate();
    for (int j = 0; j < size(); ++j)
        if (irreducibles_[j] == conj) return j;
    throw NotIrreducible("conjugate character missing from table");
}

Int VirtualCharacter::degree() const {
    Int d = 0;
    for (int i = 0; i < table->size(); ++i) d += multiplicities[i] * table->degree(i);
    return d;
}

bool VirtualCharacter::is_effective() const {
    for (const Int& m : multiplicities)
        if (m < 0) return false;
    return true;
}

ClassFunction VirtualCharacter::class_function() const {
    ClassFunction out = trivial_character(table->group());
    for (auto& v : out.values) v = Cyclotomic(0);
    for (int i = 0; i < table->size(); ++i) {
        if (multiplicities[i] == 0) continue;
        out = out + table->irreducible(i).scaled(multiplicities[i]);
    }
    return out;
}

VirtualCharacter VirtualCharacter::operator+(const VirtualCharacter& rhs) const {
    if (table != rhs.table) throw GroupMismatch("virtual characters over different tables");
    VirtualCharacter out{table, multiplicities};
    for (size_t i = 0; i < multiplicities.size(); ++i) out.multiplicities[i] += rhs.multiplicities[i];
    return out;
}

VirtualCharacter VirtualCharacter::operator-(const VirtualCharacter& rhs) const {
    if (table != rhs.table) throw GroupMismatch("virtual characters over different tables");
    VirtualCharacter out{table, multiplicities};
    for (size_t i = 0; i < multiplicities.size(); ++i) out.multiplicities[i] -= rhs.multiplicities[i];
    return out;
}

VirtualCharacter VirtualCharacter::scaled(const Int& n) const {
    VirtualCharacter out{table, multiplicities};
    for (auto& m : out.multiplicities) m *= n;
    return out;
}

bool VirtualCharacter::operator==(const VirtualCharacter& rhs) const {
    return table == rhs.table && multiplicities == rhs.multiplicities;
}

VirtualCharacter decompose(const ClassFunction& chi, const CharacterTablePtr& table) {
    if (chi.group != table->group())
        throw GroupMismatch("class function and table over different groups");
    VirtualCharacter out{table, std::vector<Int>(table->size())};
    for (int i = 0; i < table->size(); ++i) {
        Cyclotomic ip = inner_product_cyclotomic(chi, table->irreducible(i));
        if (!ip.is_integer())
            throw NotVirtualCharacter("inner product with irreducible " + std::to_string(i) +
                                      " is " + ip.str() + ", not an integer");
        out.multiplicities[i] = ip.integer_value();
    }
    // The multiplicities must reproduce chi exactly.
    if (!(out.class_function() == chi))
        throw NotVirtualCharacter("class function is not an integer combination of irreducibles");
    return out;
}

} // namespace gck
