#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "coverhom/characters.hpp"
#include "coverhom/cyclotomic.hpp"
#include "coverhom/group.hpp"
#include "coverhom/group_algebra.hpp"
#include "coverhom/matrix.hpp"

namespace coverhom {

/// Frobenius-Schur indicator (1/|G|) sum over h of chi(h^2); exactly -1, 0
/// or +1 for an irreducible character.
inline int fs_indicator(const FiniteGroup& G, const std::vector<Cyclotomic>& chi) {
    Cyclotomic s(0L);
    for (int h = 0; h < static_cast<int>(G.order()); ++h)
        s = s + chi[static_cast<std::size_t>(G.class_of(G.mult(h, h)))];
    s = s * Cyclotomic(Rational(1, static_cast<long>(G.order())));
    for (long v : {-1L, 0L, 1L})
        if (s == Cyclotomic(v)) return static_cast<int>(v);
    throw consistency_error("fs_indicator: value outside {-1,0,1}; character not irreducible");
}

enum class Kind { first, second };
enum class TypeLabel { orthogonal, symplectic, unitary };
enum class TargetLabel { Sp, O, GL };

inline std::string to_string(Kind k) { return k == Kind::first ? "first" : "second"; }
inline std::string to_string(TypeLabel t) {
    switch (t) {
    case TypeLabel::orthogonal: return "orthogonal";
    case TypeLabel::symplectic: return "symplectic";
    default: return "unitary";
    }
}
inline std::string to_string(TargetLabel t) {
    switch (t) {
    case TargetLabel::Sp: return "Sp";
    case TargetLabel::O: return "O";
    default: return "GL";
    }
}

/// One simple factor A_i of Q[G] under the canonical involution: a Galois
/// orbit of complex irreducible characters, its central idempotent, and the
/// classification data that determines the target arithmetic-group type.
struct RationalComponent {
    std::vector<int> orbit;              ///< character-table row indices
    GroupAlgebraElement idempotent;
    long n;                              ///< common degree chi(1) of the orbit
    int fs;                              ///< Frobenius-Schur indicator
    long center_conductor;               ///< n0 with L contained in Q(zeta_n0)
    std::vector<long> center_stabilizer; ///< subgroup of (Z/n0)^* fixing the values
    Kind kind;
    TypeLabel type_label;
    TargetLabel target_label;
    long q_dimension;                    ///< dim_Q(A_i)

    explicit RationalComponent(const FiniteGroup& G) : idempotent(G) {}
};

struct ComponentDecomposition {
    CharacterTable characters;
    RationalComponent trivial;
    std::vector<RationalComponent> components; ///< nontrivial, in report order
};

namespace detail {

inline long rank_of_right_multiplication(const FiniteGroup& G, const GroupAlgebraElement& e) {
    const std::size_t n = G.order();
    Matrix<Rational> M(n, n);
    for (int g = 0; g < static_cast<int>(n); ++g)
        for (const auto& [h, v] : e.coeffs())
            M(static_cast<std::size_t>(G.mult(g, h)), static_cast<std::size_t>(g)) = v;
    return static_cast<long>(M.rank());
}

inline GroupAlgebraElement orbit_idempotent(const FiniteGroup& G, const CharacterTable& ct,
                                            const std::vector<int>& orbit) {
    GroupAlgebraElement e(G);
    const Rational scale(ct.degrees[static_cast<std::size_t>(orbit.front())],
                         static_cast<long>(G.order()));
    for (int h = 0; h < static_cast<int>(G.order()); ++h) {
        Cyclotomic s(0L);
        const int c = G.class_of(G.inverse(h));
        for (int chi : orbit) s = s + ct.table[static_cast<std::size_t>(chi)][static_cast<std::size_t>(c)];
        if (s.conductor() != 1)
            throw consistency_error("rational_components: idempotent coefficient not rational");
        e.set_coeff(h, (s.coeffs().empty() ? Rational(0) : s.coeffs()[0]) * scale);
    }
    return e;
}

} // namespace detail

/// Decompose Q[G] into its trivial factor and the simple factors attached to
/// Galois orbits of nontrivial irreducible characters, with the kind/type
/// classification induced by the canonical involution.
inline ComponentDecomposition rational_components(const FiniteGroup& G, CharacterTable ct) {
    const std::size_t r = ct.table.size();
    const long e = G.exponent();

    // Galois orbits on character rows: apply each automorphism of Q(zeta_e)
    // valuewise and locate the resulting row.
    auto find_row = [&](const std::vector<Cyclotomic>& row) {
        for (std::size_t i = 0; i < r; ++i)
            if (ct.table[i] == row) return static_cast<int>(i);
        throw consistency_error("rational_components: Galois image is not a character row");
    };
    std::vector<std::vector<int>> orbits;
    std::vector<bool> used(r, false);
    for (std::size_t i = 0; i < r; ++i) {
        if (used[i]) continue;
        std::vector<int> orbit;
        for (long k = 1; k <= e; ++k) {
            if (std::gcd(k, e) != 1) continue;
            std::vector<Cyclotomic> image;
            for (const Cyclotomic& v : ct.table[i]) image.push_back(v.galois(k));
            int j = find_row(image);
            if (!used[static_cast<std::size_t>(j)]) {
                used[static_cast<std::size_t>(j)] = true;
                orbit.push_back(j);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }

    auto is_trivial = [&](int chi) {
        for (const Cyclotomic& v : ct.table[static_cast<std::size_t>(chi)])
            if (v != Cyclotomic(1L)) return false;
        return true;
    };

    auto build = [&](const std::vector<int>& orbit) {
        RationalComponent comp(G);
        comp.orbit = orbit;
        comp.n = ct.degrees[static_cast<std::size_t>(orbit.front())];
        const std::vector<Cyclotomic>& chi = ct.table[static_cast<std::size_t>(orbit.front())];
        comp.fs = fs_indicator(G, chi);
        long n0 = 1;
        for (const Cyclotomic& v : chi) n0 = std::lcm(n0, v.conductor());
        comp.center_conductor = n0;
        for (long k = 1; k <= n0; ++k) {
            if (std::gcd(k, n0) != 1) continue;
            bool fixes = true;
            for (const Cyclotomic& v : chi)
                if (v.galois(k) != v) {
                    fixes = false;
                    break;
                }
            if (fixes) comp.center_stabilizer.push_back(k);
        }
        const bool has_minus_one =
            n0 <= 2 || std::find(comp.center_stabilizer.begin(), comp.center_stabilizer.end(),
                                 n0 - 1) != comp.center_stabilizer.end();
        comp.kind = has_minus_one ? Kind::first : Kind::second;
        if ((comp.kind == Kind::first) != (comp.fs != 0))
            throw consistency_error("rational_components: kind/indicator invariant violated");
        comp.type_label = comp.fs == 1   ? TypeLabel::orthogonal
                          : comp.fs == -1 ? TypeLabel::symplectic
                                          : TypeLabel::unitary;
        comp.target_label = comp.type_label == TypeLabel::orthogonal  ? TargetLabel::Sp
                            : comp.type_label == TypeLabel::symplectic ? TargetLabel::O
                                                                       : TargetLabel::GL;
        comp.idempotent = detail::orbit_idempotent(G, ct, orbit);
        if (comp.idempotent * comp.idempotent != comp.idempotent ||
            !comp.idempotent.is_central() || comp.idempotent.tau() != comp.idempotent)
            throw consistency_error("rational_components: idempotent invariants violated");
        comp.q_dimension = detail::rank_of_right_multiplication(G, comp.idempotent);
        return comp;
    };

    ComponentDecomposition dec{{}, RationalComponent(G), {}};
    bool saw_trivial = false;
    for (const auto& orbit : orbits) {
        if (orbit.size() == 1 && is_trivial(orbit.front())) {
            dec.trivial = build(orbit);
            saw_trivial = true;
        } else {
            dec.components.push_back(build(orbit));
        }
    }
    if (!saw_trivial) throw consistency_error("rational_components: trivial character missing");

    // Report order: (n, center_conductor, sorted orbit value rows lexicographically).
    auto key_values = [&](const RationalComponent& c) {
        std::vector<std::vector<Cyclotomic>> rows;
        for (int chi : c.orbit) rows.push_back(ct.table[static_cast<std::size_t>(chi)]);
        std::sort(rows.begin(), rows.end());
        return rows;
    };
    std::sort(dec.components.begin(), dec.components.end(),
              [&](const RationalComponent& a, const RationalComponent& b) {
                  if (a.n != b.n) return a.n < b.n;
                  if (a.center_conductor != b.center_conductor)
                      return a.center_conductor < b.center_conductor;
                  return key_values(a) < key_values(b);
              });

    // Global sanity: idempotents sum to 1 and dimensions fill Q[G].
    GroupAlgebraElement total = dec.trivial.idempotent;
    long qdim = dec.trivial.q_dimension;
    for (const auto& c : dec.components) {
        total = total + c.idempotent;
        qdim += c.q_dimension;
    }
    if (total != GroupAlgebraElement::basis(G, 0) || qdim != static_cast<long>(G.order()))
        throw consistency_error("rational_components: decomposition does not fill Q[G]");
    dec.characters = std::move(ct);
    return dec;
}

inline ComponentDecomposition rational_components(const FiniteGroup& G) {
    return rational_components(G, character_table(G));
}

} // namespace coverhom
