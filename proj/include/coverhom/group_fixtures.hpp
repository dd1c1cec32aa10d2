#pragma once

#include <vector>

#include "coverhom/group.hpp"

namespace coverhom {

/// Standard permutation models for the group families used in the examples
/// and tests. Each returns generators plus the degree they act on.

struct GeneratorSet {
    std::vector<Permutation> generators;
    int degree;

    FiniteGroup build(std::size_t size_bound = FiniteGroup::kDefaultSizeBound) const {
        return FiniteGroup(generators, degree, size_bound);
    }
};

inline GeneratorSet cyclic_group(int n) {
    Permutation c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    return {{c}, n};
}

inline GeneratorSet symmetric_group(int n) {
    Permutation cycle(n), swap = perm_identity(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    if (n >= 2) std::swap(swap[0], swap[1]);
    return {{cycle, swap}, n};
}

inline GeneratorSet alternating_group(int n) {
    Permutation three = perm_identity(n);
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    if (n <= 3) return {{three}, n};
    Permutation rest = perm_identity(n);
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) rest[i] = (i + 1) % n; // n-cycle, even for odd n
    } else {
        for (int i = 1; i < n; ++i) rest[i] = 1 + (i % (n - 1)); // (n-1)-cycle fixing 0
    }
    return {{three, rest}, n};
}

/// Dihedral group of order 2n acting on the vertices of an n-gon.
inline GeneratorSet dihedral_group(int two_n) {
    const int n = two_n / 2;
    Permutation rot(n), flip(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    for (int i = 0; i < n; ++i) flip[i] = (n - i) % n;
    return {{rot, flip}, n};
}

/// Dicyclic group of order 4n: <x, y | x^{2n} = 1, y^2 = x^n, yxy^{-1} = x^{-1}>,
/// realized by its right regular representation on 4n points labelled
/// x^a y^b with a in [0, 2n), b in {0, 1}: point index a + 2n*b.
inline GeneratorSet dicyclic_group(int four_n) {
    const int n = four_n / 4;
    const int m = 2 * n;
    auto idx = [m](int a, int b) { return ((a % m + m) % m) + m * (b & 1); };
    Permutation x(4 * n), y(4 * n);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < 2; ++b) {
            // right multiplication by x: (x^a y^b) x = x^{a + (-1)^b} y^b
            x[idx(a, b)] = idx(b == 0 ? a + 1 : a - 1, b);
            // right multiplication by y: (x^a y^b) y = x^{a + b*n} y^{b+1}
            y[idx(a, b)] = b == 0 ? idx(a, 1) : idx(a + n, 0);
        }
    }
    return {{x, y}, 4 * n};
}

inline GeneratorSet direct_product(const GeneratorSet& a, const GeneratorSet& b) {
    const int d = a.degree + b.degree;
    std::vector<Permutation> gens;
    for (const auto& g : a.generators) {
        Permutation p = perm_identity(d);
        for (int i = 0; i < a.degree; ++i) p[i] = g[i];
        gens.push_back(p);
    }
    for (const auto& g : b.generators) {
        Permutation p = perm_identity(d);
        for (int i = 0; i < b.degree; ++i) p[a.degree + i] = a.degree + g[i];
        gens.push_back(p);
    }
    return {gens, d};
}

} // namespace coverhom
