#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coverhom/errors.hpp"
#include "coverhom/group.hpp"
#include "coverhom/matrix.hpp"
#include "coverhom/rational.hpp"

namespace coverhom {

/// Free-group word: nonzero signed letters, +i for generator x_i (1-based),
/// -i for its inverse.
using Word = std::vector<int>;

inline Word word_reduce(const Word& w) {
    Word r;
    for (int x : w) {
        if (x == 0) throw parse_error("Word: zero letter");
        if (!r.empty() && r.back() == -x)
            r.pop_back();
        else
            r.push_back(x);
    }
    return r;
}

inline Word word_concat(const Word& u, const Word& v) {
    Word r = u;
    r.insert(r.end(), v.begin(), v.end());
    return word_reduce(r);
}

inline Word word_inverse(const Word& w) {
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
    return r;
}

/// Text form: whitespace-separated tokens like `a1 b1 A1 B1`; uppercase means
/// inverse. Token letters map to indices via a_i -> 2i-1, b_i -> 2i for
/// surface groups, or x_i -> i (written `x1`/`X1`) for free groups.
inline Word parse_word(const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2) throw parse_error("Word: bad token '" + tok + "'");
        char c = tok[0];
        long n = 0;
        try {
            n = std::stol(tok.substr(1));
        } catch (...) {
            throw parse_error("Word: bad token '" + tok + "'");
        }
        if (n <= 0) throw parse_error("Word: bad token '" + tok + "'");
        int idx;
        switch (c) {
        case 'a': idx = static_cast<int>(2 * n - 1); break;
        case 'A': idx = -static_cast<int>(2 * n - 1); break;
        case 'b': idx = static_cast<int>(2 * n); break;
        case 'B': idx = -static_cast<int>(2 * n); break;
        case 'x': idx = static_cast<int>(n); break;
        case 'X': idx = -static_cast<int>(n); break;
        default: throw parse_error("Word: bad token '" + tok + "'");
        }
        w.push_back(idx);
    }
    return word_reduce(w);
}

inline std::string word_str(const Word& w, bool free_letters = false) {
    std::string s;
    for (int x : w) {
        if (!s.empty()) s += ' ';
        int i = x > 0 ? x : -x;
        if (free_letters) {
            s += (x > 0 ? 'x' : 'X');
            s += std::to_string(i);
        } else {
            bool is_a = i % 2 == 1;
            char c = is_a ? (x > 0 ? 'a' : 'A') : (x > 0 ? 'b' : 'B');
            s += c;
            s += std::to_string(is_a ? (i + 1) / 2 : i / 2);
        }
    }
    return s;
}

/// Genus-g surface group presentation with generators a_1,b_1,...,a_g,b_g
/// (indices a_i -> 2i-1, b_i -> 2i) and relator prod [a_i, b_i].
struct SurfacePresentation {
    int genus;

    explicit SurfacePresentation(int g) : genus(g) {
        if (g < 2) throw parse_error("SurfacePresentation: genus must be >= 2");
    }

    static int a(int i) { return 2 * i - 1; }
    static int b(int i) { return 2 * i; }

    Word relator() const {
        Word r;
        for (int i = 1; i <= genus; ++i) {
            r.push_back(a(i));
            r.push_back(b(i));
            r.push_back(-a(i));
            r.push_back(-b(i));
        }
        return r;
    }
};

/// Formal Q-linear combination of free-group words; the value of a Fox
/// derivative before mapping into a group algebra.
using FreeFormalSum = std::map<Word, Rational>;

inline void formal_add(FreeFormalSum& s, const Word& w, const Rational& c) {
    Rational v = s.count(w) ? s[w] + c : c;
    if (v.is_zero())
        s.erase(w);
    else
        s[w] = v;
}

/// Fox derivative d(w)/d(x_i): d(x_i)/d(x_i) = 1, d(x_i^{-1})/d(x_i) = -x_i^{-1},
/// d(uv) = d(u) + u d(v).
inline FreeFormalSum fox_derivative(const Word& w, int i) {
    FreeFormalSum s;
    Word prefix;
    for (int x : w) {
        if (x == i) {
            formal_add(s, prefix, Rational(1));
        } else if (x == -i) {
            Word p = prefix;
            p.push_back(-i);
            formal_add(s, word_reduce(p), Rational(-1));
        }
        prefix.push_back(x);
    }
    return s;
}

struct SurfaceAutomorphism {
    int genus;
    std::vector<Word> images; ///< image of generator k+1 is images[k]
    Word conjugator;          ///< w with image-of-relator = w r^{sign} w^{-1}
    int orientation_sign;

    Word apply(const Word& w) const {
        Word r;
        for (int x : w) {
            const Word& im = images[static_cast<std::size_t>((x > 0 ? x : -x) - 1)];
            Word piece = x > 0 ? im : word_inverse(im);
            r.insert(r.end(), piece.begin(), piece.end());
        }
        return word_reduce(r);
    }
};

/// Check the relator-conjugacy criterion: the images must carry the relator
/// to a free-group conjugate of r^{+1} or r^{-1}. Returns the automorphism
/// with conjugator and sign filled in; throws hom_error otherwise.
inline SurfaceAutomorphism validate_automorphism(const SurfacePresentation& pres,
                                                 std::vector<Word> images) {
    if (images.size() != static_cast<std::size_t>(2 * pres.genus))
        throw hom_error("validate_automorphism: expected 2g generator images");
    for (auto& w : images) w = word_reduce(w);
    SurfaceAutomorphism aut{pres.genus, std::move(images), {}, 0};

    Word r = pres.relator();
    Word image = aut.apply(r);

    // Cyclically reduce, collecting the stripped prefix.
    Word prefix;
    while (image.size() >= 2 && image.front() == -image.back()) {
        prefix.push_back(image.front());
        image.erase(image.begin());
        image.pop_back();
    }
    for (int sign : {1, -1}) {
        Word target = sign == 1 ? r : word_inverse(r);
        if (image.size() != target.size()) continue;
        for (std::size_t k = 0; k < target.size(); ++k) {
            // rotation of target starting at position k equals p^{-1} target p,
            // p = first k letters of target
            bool match = true;
            for (std::size_t j = 0; j < target.size(); ++j)
                if (image[j] != target[(k + j) % target.size()]) {
                    match = false;
                    break;
                }
            if (!match) continue;
            Word p(target.begin(), target.begin() + static_cast<long>(k));
            aut.conjugator = word_concat(prefix, word_inverse(p));
            aut.orientation_sign = sign;
            return aut;
        }
    }
    throw hom_error("validate_automorphism: relator image is not conjugate to the relator");
}

/// (f o g)(x) = f(g(x)).
inline SurfaceAutomorphism compose(const SurfacePresentation& pres, const SurfaceAutomorphism& f,
                                   const SurfaceAutomorphism& g) {
    std::vector<Word> images;
    for (const Word& w : g.images) images.push_back(f.apply(w));
    return validate_automorphism(pres, std::move(images));
}

inline SurfaceAutomorphism identity_automorphism(const SurfacePresentation& pres) {
    std::vector<Word> images;
    for (int k = 1; k <= 2 * pres.genus; ++k) images.push_back(Word{k});
    return validate_automorphism(pres, std::move(images));
}

/// Built-in Dehn twists about the curves a_i, b_i (i <= g) and the bridge
/// curves c_i joining handles i and i+1 (i < g). Formulas, in our fixed
/// convention (validated by the relator-conjugacy check and, in tests, by the
/// abelianized transvection identity):
///   T_{a_i}: b_i -> b_i a_i^{-1}
///   T_{b_i}: a_i -> a_i b_i
///   T_{c_i}: b_i -> (a_{i+1} W a_i)^{-1} b_i,  b_{i+1} -> (W a_i a_{i+1})^{-1} b_{i+1}
/// where W = prod of [a_j, b_j] over j in (i+1, g] then j in [1, i) -- the
/// handle blocks the bridge curve passes on its way back -- giving the curve's
/// two based representatives at its crossings with b_i and b_{i+1}. All
/// unmentioned generators are fixed. `power` -1 gives the inverse twist.
inline SurfaceAutomorphism builtin_twist(const SurfacePresentation& pres, const std::string& name,
                                         int power = 1) {
    if (name.size() < 2) throw parse_error("builtin_twist: unknown name '" + name + "'");
    char kind = name[0];
    int i = 0;
    try {
        i = std::stoi(name.substr(1));
    } catch (...) {
        throw parse_error("builtin_twist: unknown name '" + name + "'");
    }
    if (power != 1 && power != -1) throw parse_error("builtin_twist: power must be +1 or -1");
    const int g = pres.genus;
    std::vector<Word> images;
    for (int k = 1; k <= 2 * g; ++k) images.push_back(Word{k});
    auto A = [](int j) { return SurfacePresentation::a(j); };
    auto B = [](int j) { return SurfacePresentation::b(j); };
    auto img = [&](int gen) -> Word& { return images[static_cast<std::size_t>(gen - 1)]; };
    if (kind == 'a' && i >= 1 && i <= g) {
        img(B(i)) = power == 1 ? Word{B(i), -A(i)} : Word{B(i), A(i)};
    } else if (kind == 'b' && i >= 1 && i <= g) {
        img(A(i)) = power == 1 ? Word{A(i), B(i)} : Word{A(i), -B(i)};
    } else if (kind == 'c' && i >= 1 && i < g) {
        Word W;
        auto push_block = [&](int j) {
            W.push_back(A(j));
            W.push_back(B(j));
            W.push_back(-A(j));
            W.push_back(-B(j));
        };
        for (int j = i + 2; j <= g; ++j) push_block(j);
        for (int j = 1; j < i; ++j) push_block(j);
        Word gamma = word_concat(word_concat(Word{A(i + 1)}, W), Word{A(i)});
        Word gamma2 = word_concat(W, Word{A(i), A(i + 1)});
        if (power == 1) {
            img(B(i)) = word_concat(word_inverse(gamma), Word{B(i)});
            img(B(i + 1)) = word_concat(word_inverse(gamma2), Word{B(i + 1)});
        } else {
            img(B(i)) = word_concat(gamma, Word{B(i)});
            img(B(i + 1)) = word_concat(gamma2, Word{B(i + 1)});
        }
    } else {
        throw parse_error("builtin_twist: unknown name '" + name + "'");
    }
    SurfaceAutomorphism aut = validate_automorphism(pres, std::move(images));
    if (aut.orientation_sign != 1)
        throw consistency_error("builtin_twist: twist is not orientation preserving");
    return aut;
}

/// Homology class of a built-in twist curve in the basis a_1,b_1,...,a_g,b_g.
inline std::vector<Rational> builtin_twist_curve_class(const SurfacePresentation& pres,
                                                       const std::string& name) {
    std::vector<Rational> v(static_cast<std::size_t>(2 * pres.genus));
    char kind = name[0];
    int i = std::stoi(name.substr(1));
    if (kind == 'a') {
        v[static_cast<std::size_t>(SurfacePresentation::a(i) - 1)] = Rational(1);
    } else if (kind == 'b') {
        v[static_cast<std::size_t>(SurfacePresentation::b(i) - 1)] = Rational(1);
    } else {
        v[static_cast<std::size_t>(SurfacePresentation::a(i) - 1)] = Rational(1);
        v[static_cast<std::size_t>(SurfacePresentation::a(i + 1) - 1)] = Rational(1);
    }
    return v;
}

/// Abelianization of an automorphism: the 2g x 2g integer matrix whose column
/// j is the exponent vector of the image of generator j+1.
inline Matrix<Rational> abelianized(const SurfaceAutomorphism& aut) {
    const std::size_t n = 2 * static_cast<std::size_t>(aut.genus);
    Matrix<Rational> M(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (int x : aut.images[j]) {
            std::size_t i = static_cast<std::size_t>((x > 0 ? x : -x) - 1);
            M(i, j) = M(i, j) + Rational(x > 0 ? 1 : -1);
        }
    return M;
}

/// The standard symplectic form on H_1(Sigma) in the a_1,b_1,... basis:
/// <a_i, b_i> = +1, all other pairings of basis vectors zero.
inline Matrix<Rational> standard_symplectic_form(int genus) {
    const std::size_t n = 2 * static_cast<std::size_t>(genus);
    Matrix<Rational> J(n, n);
    for (int i = 1; i <= genus; ++i) {
        std::size_t ai = static_cast<std::size_t>(2 * i - 2), bi = ai + 1;
        J(ai, bi) = Rational(1);
        J(bi, ai) = Rational(-1);
    }
    return J;
}

/// Homomorphism from the surface group (2g images) or a free group (any
/// number of images) to a finite group, by generator images.
struct GroupHom {
    const FiniteGroup* target;
    std::vector<int> images;

    int image_of(const Word& w) const {
        int r = 0;
        for (int x : w) {
            std::size_t i = static_cast<std::size_t>((x > 0 ? x : -x) - 1);
            if (i >= images.size()) throw hom_error("GroupHom: letter out of range");
            int gi = x > 0 ? images[i] : target->inverse(images[i]);
            r = target->mult(r, gi);
        }
        return r;
    }
};

/// The handlebody map phi: a_i -> x_i, b_i -> 1 (b_i bounds a disc).
inline Word handlebody_image(const Word& w) {
    Word r;
    for (int x : w) {
        int i = x > 0 ? x : -x;
        if (i % 2 == 0) continue; // b_i dies
        r.push_back(x > 0 ? (i + 1) / 2 : -(i + 1) / 2);
    }
    return word_reduce(r);
}

struct RedundantSetup {
    GroupHom p;      ///< surface group -> H (2g images)
    GroupHom pprime; ///< free group -> H (g images), p = pprime o phi
    Word a;          ///< a_1, in ker p
    Word b;          ///< b_1, in ker phi (so in ker p)
};

/// The phi-redundant configuration: p factors
/// through the handlebody map and kills the free generator x_1; the curves
/// a = a_1 and b = b_1 intersect once and both die under p.
inline RedundantSetup redundant_setup(int g, const FiniteGroup& H,
                                      const std::vector<int>& pprime_images) {
    if (static_cast<int>(pprime_images.size()) != g)
        throw hom_error("redundant_setup: expected g free-generator images");
    if (pprime_images[0] != 0)
        throw hom_error("redundant_setup: x_1 must map to the identity");
    if (!H.generates(pprime_images))
        throw hom_error("redundant_setup: images do not generate the group");
    RedundantSetup s{{&H, {}}, {&H, pprime_images}, {SurfacePresentation::a(1)},
                     {SurfacePresentation::b(1)}};
    for (int i = 1; i <= g; ++i) {
        s.p.images.push_back(pprime_images[static_cast<std::size_t>(i - 1)]);
        s.p.images.push_back(0); // b_i -> 1
    }
    if (s.p.image_of(SurfacePresentation(g).relator()) != 0)
        throw consistency_error("redundant_setup: relator does not die");
    return s;
}

} // namespace coverhom
