#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "coverhom/characters.hpp"
#include "coverhom/components.hpp"
#include "coverhom/group_algebra.hpp"
#include "coverhom/group_fixtures.hpp"

using namespace coverhom;

TEST_CASE("group enumeration basics") {
    FiniteGroup z2 = cyclic_group(2).build();
    CHECK(z2.order() == 2);
    CHECK(z2.class_count() == 2);

    FiniteGroup s3 = symmetric_group(3).build();
    CHECK(s3.order() == 6);
    CHECK(s3.class_count() == 3);
    CHECK(s3.exponent() == 6);

    FiniteGroup trivial(std::vector<Permutation>{}, 1);
    CHECK(trivial.order() == 1);

    CHECK_THROWS_AS(symmetric_group(8).build(100), size_error);
    CHECK_THROWS_AS(FiniteGroup({{0, 0}}, 2), parse_error);
}

TEST_CASE("fixture family orders") {
    CHECK(alternating_group(4).build().order() == 12);
    CHECK(alternating_group(5).build().order() == 60);
    CHECK(dihedral_group(8).build().order() == 8);
    CHECK(dihedral_group(10).build().order() == 10);
    CHECK(dicyclic_group(8).build().order() == 8);
    CHECK(dicyclic_group(12).build().order() == 12);
    FiniteGroup prod = direct_product(alternating_group(4), dihedral_group(6)).build();
    CHECK(prod.order() == 72);
}

TEST_CASE("class representatives are minimal and identity is index 0") {
    FiniteGroup g = dihedral_group(8).build();
    CHECK(g.elements()[0] == perm_identity(g.degree()));
    for (std::size_t c = 0; c < g.class_count(); ++c)
        CHECK(g.class_representatives()[c] == g.class_members()[c].front());
}

TEST_CASE("generates") {
    FiniteGroup s3 = symmetric_group(3).build();
    CHECK(s3.generates(s3.generator_indices()));
    CHECK_FALSE(s3.generates({}));
    // a 3-cycle alone generates only Alt(3)
    int three_cycle = s3.generator_indices()[0];
    CHECK_FALSE(s3.generates({three_cycle}));

    // In Alt(4) x Dih(6), a pair mixing a 3-cycle with the rotation and a
    // double transposition with the reflection generates the product.
    GeneratorSet a4 = alternating_group(4);
    GeneratorSet d6 = dihedral_group(6);
    FiniteGroup prod = direct_product(a4, d6).build();
    Permutation gamma = perm_identity(prod.degree()); // (0 1 2) x rotation
    gamma[0] = 1; gamma[1] = 2; gamma[2] = 0;
    gamma[4] = 5; gamma[5] = 6; gamma[6] = 4;
    Permutation delta = perm_identity(prod.degree()); // (0 1)(2 3) x reflection
    delta[0] = 1; delta[1] = 0; delta[2] = 3; delta[3] = 2;
    delta[5] = 6; delta[6] = 5;
    CHECK(prod.generates({prod.index_of(gamma), prod.index_of(delta)}));
}

static std::size_t class_of_inverse(const FiniteGroup& G, std::size_t c) {
    return static_cast<std::size_t>(G.inverse_class(static_cast<int>(c)));
}

static void check_orthogonality(const FiniteGroup& G, const CharacterTable& ct) {
    const std::size_t r = G.class_count();
    for (std::size_t a = 0; a < ct.table.size(); ++a)
        for (std::size_t b = 0; b < ct.table.size(); ++b) {
            Cyclotomic s(0L);
            for (std::size_t c = 0; c < r; ++c)
                s = s + Cyclotomic(Rational(static_cast<long>(G.class_size(static_cast<int>(c))))) *
                            ct.table[a][c] * ct.table[b][class_of_inverse(G, c)];
            CHECK(s == Cyclotomic(a == b ? static_cast<long>(G.order()) : 0L));
        }
    long sq = 0;
    for (long d : ct.degrees) sq += d * d;
    CHECK(sq == static_cast<long>(G.order()));
}

TEST_CASE("character table: cyclic groups") {
    FiniteGroup z2 = cyclic_group(2).build();
    CharacterTable ct2 = character_table(z2);
    REQUIRE(ct2.table.size() == 2);
    CHECK(ct2.table[0] == std::vector<Cyclotomic>{Cyclotomic(1L), Cyclotomic(-1L)});
    CHECK(ct2.table[1] == std::vector<Cyclotomic>{Cyclotomic(1L), Cyclotomic(1L)});

    FiniteGroup z3 = cyclic_group(3).build();
    CharacterTable ct3 = character_table(z3);
    REQUIRE(ct3.table.size() == 3);
    Cyclotomic z = Cyclotomic::zeta(3);
    std::vector<std::vector<Cyclotomic>> expect = {
        {Cyclotomic(1L), Cyclotomic(1L), Cyclotomic(1L)},
        {Cyclotomic(1L), z, z * z},
        {Cyclotomic(1L), z * z, z}};
    for (const auto& row : expect)
        CHECK(std::find(ct3.table.begin(), ct3.table.end(), row) != ct3.table.end());
    check_orthogonality(z3, ct3);
}

TEST_CASE("character table: Sym(3)") {
    FiniteGroup s3 = symmetric_group(3).build();
    CharacterTable ct = character_table(s3);
    REQUIRE(ct.degrees == std::vector<long>{1, 1, 2});
    // identify classes by element order: 1 -> identity, 2 -> transpositions, 3 -> 3-cycles
    std::size_t c2 = 0, c3 = 0;
    for (std::size_t c = 0; c < 3; ++c) {
        int o = s3.element_order(s3.class_representatives()[c]);
        if (o == 2) c2 = c;
        if (o == 3) c3 = c;
    }
    CHECK(ct.table[2][c3] == Cyclotomic(-1L));
    CHECK(ct.table[2][c2] == Cyclotomic(0L));
    check_orthogonality(s3, ct);
}

TEST_CASE("character table: orthogonality across the fixture families") {
    for (const GeneratorSet& fix :
         {cyclic_group(5), cyclic_group(7), dihedral_group(8), dihedral_group(10),
          dicyclic_group(8), dicyclic_group(12), symmetric_group(4), alternating_group(4)}) {
        FiniteGroup g = fix.build();
        CharacterTable ct = character_table(g);
        check_orthogonality(g, ct);
    }
}

TEST_CASE("character table determinism") {
    FiniteGroup g = dihedral_group(10).build();
    CharacterTable a = character_table(g);
    CharacterTable b = character_table(g);
    CHECK(a.table == b.table);
    for (std::size_t i = 1; i < a.table.size(); ++i) {
        bool ordered = a.degrees[i - 1] < a.degrees[i] ||
                       (a.degrees[i - 1] == a.degrees[i] && a.table[i - 1] < a.table[i]);
        CHECK(ordered);
    }
}

TEST_CASE("fs indicator") {
    FiniteGroup z3 = cyclic_group(3).build();
    CharacterTable ct3 = character_table(z3);
    for (std::size_t i = 0; i < 3; ++i) {
        bool trivial = ct3.degrees[i] == 1 && ct3.table[i][1] == Cyclotomic(1L) &&
                       ct3.table[i][2] == Cyclotomic(1L);
        CHECK(fs_indicator(z3, ct3.table[i]) == (trivial ? 1 : 0));
    }

    FiniteGroup q8 = dicyclic_group(8).build();
    CharacterTable ctq = character_table(q8);
    REQUIRE(ctq.degrees == std::vector<long>{1, 1, 1, 1, 2});
    CHECK(fs_indicator(q8, ctq.table[4]) == -1);

    // trivial character of any group has indicator 1
    FiniteGroup s4 = symmetric_group(4).build();
    CharacterTable cts = character_table(s4);
    for (std::size_t i = 0; i < cts.table.size(); ++i)
        if (cts.degrees[i] == 1 &&
            std::all_of(cts.table[i].begin(), cts.table[i].end(),
                        [](const Cyclotomic& v) { return v == Cyclotomic(1L); }))
            CHECK(fs_indicator(s4, cts.table[i]) == 1);
}

TEST_CASE("group algebra involution") {
    FiniteGroup s3 = symmetric_group(3).build();
    using E = GroupAlgebraElement;
    E id = E::basis(s3, 0);
    CHECK(id.tau() == id);

    int h = s3.generator_indices()[0]; // a 3-cycle, h != h^{-1}
    E x(s3);
    x.set_coeff(h, Rational(2));
    x.set_coeff(s3.inverse(h), Rational(3));
    E t = x.tau();
    CHECK(t.coeff(h) == Rational(3));
    CHECK(t.coeff(s3.inverse(h)) == Rational(2));

    // tau is an involution and an anti-homomorphism on random elements
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        E a(s3), b(s3);
        for (int g = 0; g < 6; ++g) {
            a.set_coeff(g, Rational(static_cast<long>(rng() % 7) - 3));
            b.set_coeff(g, Rational(static_cast<long>(rng() % 7) - 3));
        }
        CHECK(a.tau().tau() == a);
        CHECK((a * b).tau() == b.tau() * a.tau());
    }
}

TEST_CASE("rational components: Z/2") {
    FiniteGroup z2 = cyclic_group(2).build();
    ComponentDecomposition dec = rational_components(z2);
    REQUIRE(dec.components.size() == 1);
    const RationalComponent& c = dec.components[0];
    CHECK(c.n == 1);
    CHECK(c.fs == 1);
    CHECK(c.center_conductor == 1);
    CHECK(c.kind == Kind::first);
    CHECK(c.type_label == TypeLabel::orthogonal);
    CHECK(c.target_label == TargetLabel::Sp);
    CHECK(c.q_dimension == 1);
    CHECK(c.idempotent.coeff(0) == Rational(1, 2));
    CHECK(c.idempotent.coeff(1) == Rational(-1, 2));
    CHECK(dec.trivial.q_dimension == 1);
    CHECK(dec.trivial.idempotent.coeff(0) == Rational(1, 2));
    CHECK(dec.trivial.idempotent.coeff(1) == Rational(1, 2));
}

TEST_CASE("rational components: faithful cyclic orbits are unitary") {
    for (int n : {3, 4, 5, 7}) {
        FiniteGroup zn = cyclic_group(n).build();
        ComponentDecomposition dec = rational_components(zn);
        bool found = false;
        for (const auto& c : dec.components)
            if (c.center_conductor == n) {
                found = true;
                CHECK(c.fs == 0);
                CHECK(c.kind == Kind::second);
                CHECK(c.type_label == TypeLabel::unitary);
                CHECK(c.target_label == TargetLabel::GL);
                CHECK(c.n == 1);
                CHECK(c.q_dimension == static_cast<long>(c.orbit.size()));
            }
        CHECK(found);
    }
}

TEST_CASE("rational components: symmetric groups standard component") {
    for (int m : {2, 3, 4}) {
        FiniteGroup sym = symmetric_group(m + 1).build();
        ComponentDecomposition dec = rational_components(sym);
        bool found = false;
        for (const auto& c : dec.components)
            if (c.n == m && c.q_dimension == static_cast<long>(m) * m) {
                found = true;
                CHECK(c.fs == 1);
                CHECK(c.center_conductor == 1);
                CHECK(c.kind == Kind::first);
                CHECK(c.type_label == TypeLabel::orthogonal);
                CHECK(c.target_label == TargetLabel::Sp);
                CHECK(c.orbit.size() == 1);
            }
        CHECK(found);
    }
}

TEST_CASE("rational components: dihedral and dicyclic classification") {
    for (int n : {3, 4, 5}) {
        FiniteGroup dih = dihedral_group(2 * n).build();
        ComponentDecomposition dec = rational_components(dih);
        bool found = false;
        for (const auto& c : dec.components)
            if (c.n == 2) {
                found = true;
                CHECK(c.fs == 1);
                CHECK(c.target_label == TargetLabel::Sp);
            }
        CHECK(found);
    }
    for (int n : {2, 3}) {
        FiniteGroup dic = dicyclic_group(4 * n).build();
        ComponentDecomposition dec = rational_components(dic);
        bool found = false;
        for (const auto& c : dec.components)
            if (c.fs == -1) {
                found = true;
                CHECK(c.kind == Kind::first);
                CHECK(c.type_label == TypeLabel::symplectic);
                CHECK(c.target_label == TargetLabel::O);
                CHECK(c.n == 2);
            }
        CHECK(found);
    }
}

TEST_CASE("rational components: structural invariants across fixtures") {
    for (const GeneratorSet& fix :
         {cyclic_group(2), cyclic_group(3), cyclic_group(5), symmetric_group(3),
          symmetric_group(4), dihedral_group(8), dihedral_group(10), dicyclic_group(8),
          dicyclic_group(12), alternating_group(4)}) {
        FiniteGroup g = fix.build();
        ComponentDecomposition dec = rational_components(g);
        GroupAlgebraElement total = dec.trivial.idempotent;
        long qdim = dec.trivial.q_dimension;
        std::vector<const RationalComponent*> all{&dec.trivial};
        for (const auto& c : dec.components) all.push_back(&c);
        for (const RationalComponent* c : all) {
            CHECK(c->idempotent * c->idempotent == c->idempotent);
            CHECK(c->idempotent.is_central());
            CHECK(c->idempotent.tau() == c->idempotent);
            bool has_minus_one = c->center_conductor <= 2 ||
                                 std::find(c->center_stabilizer.begin(), c->center_stabilizer.end(),
                                           c->center_conductor - 1) != c->center_stabilizer.end();
            CHECK((c->kind == Kind::first) == has_minus_one);
            CHECK((c->fs != 0) == (c->kind == Kind::first));
        }
        for (const auto& c : dec.components) {
            total = total + c.idempotent;
            qdim += c.q_dimension;
            // orthogonal idempotents
            CHECK(c.idempotent * dec.trivial.idempotent == GroupAlgebraElement(g));
        }
        CHECK(total == GroupAlgebraElement::basis(g, 0));
        CHECK(qdim == static_cast<long>(g.order()));
    }
}
