#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coverhom/group_fixtures.hpp"
#include "coverhom/surface.hpp"

using namespace coverhom;

static Word random_word(std::mt19937& rng, int letters, int len) {
    Word w;
    for (int i = 0; i < len; ++i) {
        int x = static_cast<int>(rng() % static_cast<unsigned>(letters)) + 1;
        w.push_back(rng() % 2 ? x : -x);
    }
    return word_reduce(w);
}

TEST_CASE("free reduction") {
    CHECK(word_reduce({1, -1}) == Word{});
    CHECK(word_reduce({1, 2, -2, -1, 3}) == Word{3});
    CHECK(word_reduce({1, 2, 3}) == Word{1, 2, 3});

    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        Word u = random_word(rng, 4, 12), v = random_word(rng, 4, 12), w = random_word(rng, 4, 12);
        CHECK(word_concat(word_concat(u, v), w) == word_concat(u, word_concat(v, w)));
        CHECK(word_concat(u, word_inverse(u)) == Word{});
    }
}

TEST_CASE("word text format") {
    CHECK(parse_word("a1 b1 A1 B1") == Word{1, 2, -1, -2});
    CHECK(parse_word("a2 B2") == Word{3, -4});
    CHECK(word_str(Word{1, 2, -1, -2}) == "a1 b1 A1 B1");
    CHECK(parse_word("x1 X2") == Word{1, -2});
    CHECK(word_str(Word{1, -2}, true) == "x1 X2");
    CHECK_THROWS_AS(parse_word("q3"), parse_error);
    CHECK_THROWS_AS(parse_word("a0"), parse_error);
}

TEST_CASE("fox derivative base cases") {
    CHECK(fox_derivative({1}, 1) == FreeFormalSum{{Word{}, Rational(1)}});
    CHECK(fox_derivative({1}, 2) == FreeFormalSum{});
    CHECK(fox_derivative({-1}, 1) == FreeFormalSum{{Word{-1}, Rational(-1)}});
    // d([x1,x2])/dx1 = 1 - x1 x2 x1^{-1}
    Word comm{1, 2, -1, -2};
    FreeFormalSum expect{{Word{}, Rational(1)}, {Word{1, 2, -1}, Rational(-1)}};
    CHECK(fox_derivative(comm, 1) == expect);
}

static FreeFormalSum formal_mul_right(const FreeFormalSum& s, int letter) {
    // multiply by (x_letter - 1) on the right
    FreeFormalSum r;
    for (const auto& [w, c] : s) {
        formal_add(r, word_concat(w, Word{letter}), c);
        formal_add(r, w, Rational(0) - c);
    }
    return r;
}

TEST_CASE("fundamental fox identity") {
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        Word w = random_word(rng, 3, 20);
        FreeFormalSum total;
        for (int i = 1; i <= 3; ++i) {
            FreeFormalSum d = fox_derivative(w, i);
            for (const auto& [u, c] : formal_mul_right(d, i)) formal_add(total, u, c);
        }
        FreeFormalSum expect;
        formal_add(expect, w, Rational(1));
        formal_add(expect, Word{}, Rational(-1));
        CHECK(total == expect);
    }
}

TEST_CASE("fox product rule") {
    std::mt19937 rng(17);
    for (int t = 0; t < 30; ++t) {
        Word u = random_word(rng, 3, 8), v = random_word(rng, 3, 8);
        for (int i = 1; i <= 3; ++i) {
            FreeFormalSum lhs = fox_derivative(word_concat(u, v), i);
            FreeFormalSum rhs = fox_derivative(u, i);
            for (const auto& [w, c] : fox_derivative(v, i)) formal_add(rhs, word_concat(u, w), c);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("validate automorphism") {
    SurfacePresentation pres(2);
    SurfaceAutomorphism id = identity_automorphism(pres);
    CHECK(id.conjugator == Word{});
    CHECK(id.orientation_sign == 1);

    SurfaceAutomorphism ta1 = builtin_twist(pres, "a1");
    CHECK(ta1.orientation_sign == 1);

    // flipping a1 alone is not an automorphism candidate
    std::vector<Word> bad{{-1}, {2}, {3}, {4}};
    CHECK_THROWS_AS(validate_automorphism(pres, bad), hom_error);
}

static Matrix<Rational> transvection(int genus, const std::vector<Rational>& delta) {
    const std::size_t n = 2 * static_cast<std::size_t>(genus);
    Matrix<Rational> J = standard_symplectic_form(genus);
    Matrix<Rational> M = Matrix<Rational>::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
        // <e_j, delta> = row_j(J) . delta
        Rational pairing(0);
        for (std::size_t k = 0; k < n; ++k) pairing = pairing + J(j, k) * delta[k];
        for (std::size_t i = 0; i < n; ++i) M(i, j) = M(i, j) + pairing * delta[i];
    }
    return M;
}

TEST_CASE("builtin twists are transvections on homology") {
    for (int g : {2, 3, 4}) {
        SurfacePresentation pres(g);
        std::vector<std::string> names;
        for (int i = 1; i <= g; ++i) {
            names.push_back("a" + std::to_string(i));
            names.push_back("b" + std::to_string(i));
        }
        for (int i = 1; i < g; ++i) names.push_back("c" + std::to_string(i));
        Matrix<Rational> J = standard_symplectic_form(g);
        for (const std::string& name : names) {
            for (int power : {1, -1}) {
                SurfaceAutomorphism t = builtin_twist(pres, name, power);
                CHECK(t.orientation_sign == 1);
                Matrix<Rational> M = abelianized(t);
                if (power == 1)
                    CHECK(M == transvection(g, builtin_twist_curve_class(pres, name)));
                CHECK(M.transposed() * J * M == J); // preserves the intersection form
            }
        }
    }
}

TEST_CASE("compose") {
    SurfacePresentation pres(2);
    SurfaceAutomorphism id = identity_automorphism(pres);
    SurfaceAutomorphism ta1 = builtin_twist(pres, "a1");
    CHECK(compose(pres, ta1, id).images == ta1.images);
    CHECK(compose(pres, ta1, builtin_twist(pres, "a1", -1)).images == id.images);

    std::vector<SurfaceAutomorphism> pool{builtin_twist(pres, "a1"), builtin_twist(pres, "b1"),
                                          builtin_twist(pres, "c1"), builtin_twist(pres, "b2", -1)};
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
        const auto& f = pool[rng() % pool.size()];
        const auto& g = pool[rng() % pool.size()];
        const auto& h = pool[rng() % pool.size()];
        CHECK(compose(pres, compose(pres, f, g), h).images ==
              compose(pres, f, compose(pres, g, h)).images);
    }
}

TEST_CASE("handlebody map") {
    SurfacePresentation pres(2);
    CHECK(handlebody_image(Word{SurfacePresentation::a(2)}) == Word{2});
    CHECK(handlebody_image(Word{SurfacePresentation::b(1)}) == Word{});
    CHECK(handlebody_image(pres.relator()) == Word{});
}

TEST_CASE("redundant setup") {
    FiniteGroup z2 = cyclic_group(2).build();
    RedundantSetup s = redundant_setup(2, z2, {0, 1});
    CHECK(s.p.images == std::vector<int>{0, 0, 1, 0});
    CHECK(s.p.image_of(s.a) == 0);
    CHECK(s.p.image_of(s.b) == 0);
    CHECK(s.a == Word{1});
    CHECK(s.b == Word{2});

    CHECK_THROWS_AS(redundant_setup(2, z2, {0, 0}), hom_error);

    FiniteGroup s3 = symmetric_group(3).build();
    Permutation swap01 = perm_identity(3);
    std::swap(swap01[0], swap01[1]);
    Permutation cyc{1, 2, 0};
    RedundantSetup t = redundant_setup(3, s3, {0, s3.index_of(swap01), s3.index_of(cyc)});
    CHECK(t.p.image_of(SurfacePresentation(3).relator()) == 0);
    for (const Word& w : {t.a, t.b}) CHECK(t.p.image_of(w) == 0);

    // hom property on random words
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Word u = random_word(rng, 6, 10), v = random_word(rng, 6, 10);
        CHECK(t.p.image_of(word_concat(u, v)) == s3.mult(t.p.image_of(u), t.p.image_of(v)));
    }
}
