#pragma once

#include <vector>

#include "coverhom/characters.hpp"
#include "coverhom/cover.hpp"
#include "coverhom/cyclotomic.hpp"
#include "coverhom/polynomial.hpp"

namespace coverhom {

/// True iff p . f = p on the surface-group generators, i.e. f lies in the
/// stabilizer Gamma of the covering homomorphism.
inline bool in_gamma(const GroupHom& p, const SurfaceAutomorphism& f) {
    for (std::size_t j = 0; j < f.images.size(); ++j)
        if (p.image_of(f.images[j]) != p.images[j]) return false;
    return true;
}

/// The induced action of a stabilizer element on cover homology, with
/// machine-checked certifications.
struct RhoMatrix {
    Matrix<Rational> on_homology;
    bool equivariant = false;
    bool form_preserving = false;
    bool integral_on_lattice = false;
};

namespace detail {

/// True iff each vector lies in the span (rows in canonical form not required).
inline bool in_span(const std::vector<std::vector<Rational>>& span,
                    const std::vector<std::vector<Rational>>& vectors, std::size_t dim) {
    std::vector<std::vector<Rational>> all = span;
    for (const auto& v : vectors) all.push_back(v);
    return canonical_span(all, dim).size() == canonical_span(span, dim).size();
}

} // namespace detail

inline RhoMatrix induced_action(const SurfaceAutomorphism& f, const CoverHomology& hom) {
    const CoverChainComplex& cx = hom.complex;
    if (!cx.is_surface) throw hom_error("induced_action: needs a surface cover");
    if (f.orientation_sign != 1)
        throw hom_error("induced_action: orientation-reversing maps are not supported");
    if (!in_gamma(cx.hom, f)) throw hom_error("induced_action: automorphism is not in Gamma");
    const FiniteGroup& H = *cx.group;
    const int E = cx.edge_types;

    // chain map on C1: edge (h, x_j) -> sum_i p(d f(x_j) / d x_i) placed on
    // the x_i-cells, translated by h
    Matrix<Rational> C(cx.edges(), cx.edges());
    bool integral = true;
    for (int j = 0; j < E; ++j) {
        for (int i = 0; i < E; ++i) {
            FreeFormalSum d = fox_derivative(f.images[static_cast<std::size_t>(j)], i + 1);
            for (const auto& [u, c] : d) {
                if (c.denominator() != 1) integral = false;
                int pu = cx.hom.image_of(u);
                for (int h = 0; h < static_cast<int>(H.order()); ++h) {
                    std::size_t row = cx.edge_index(H.mult(h, pu), i);
                    std::size_t col = cx.edge_index(h, j);
                    C(row, col) = C(row, col) + c;
                }
            }
        }
    }
    if (!(cx.boundary1 * C == cx.boundary1))
        throw consistency_error("induced_action: chain map does not fix the vertex boundary");
    {
        std::vector<std::vector<Rational>> images;
        for (std::size_t c = 0; c < cx.boundary2.cols(); ++c)
            images.push_back(C.apply(cx.boundary2.column(c)));
        if (!detail::in_span(hom.boundary_space, images, cx.edges()))
            throw consistency_error("induced_action: chain map does not preserve boundaries");
    }

    std::vector<std::vector<Rational>> images;
    for (const auto& z : hom.cycle_basis) images.push_back(C.apply(z));
    std::vector<std::vector<Rational>> coords = hom.express_many(images);
    RhoMatrix rm;
    rm.on_homology = Matrix<Rational>(hom.dimension, hom.dimension);
    for (std::size_t j = 0; j < hom.dimension; ++j)
        for (std::size_t i = 0; i < hom.dimension; ++i) rm.on_homology(i, j) = coords[j][i];

    rm.equivariant = true;
    for (const Matrix<Rational>& Rh : hom.h_action)
        if (!(rm.on_homology * Rh == Rh * rm.on_homology)) rm.equivariant = false;
    rm.form_preserving =
        rm.on_homology.transposed() * hom.sp_pairing * rm.on_homology == hom.sp_pairing;
    rm.integral_on_lattice = integral;
    return rm;
}

/// Coordinates of vectors (given in homology coordinates) in a module basis;
/// throws if a vector leaves the module.
inline std::vector<std::vector<Rational>>
module_coords(const IsotypicModule& mod, const std::vector<std::vector<Rational>>& vectors,
              std::size_t homology_dim) {
    const std::size_t k = mod.basis.size();
    Matrix<Rational> M(homology_dim, k + vectors.size());
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < homology_dim; ++i) M(i, j) = mod.basis[j][i];
    for (std::size_t j = 0; j < vectors.size(); ++j)
        for (std::size_t i = 0; i < homology_dim; ++i) M(i, k + j) = vectors[j][i];
    typename Matrix<Rational>::RrefResult r = M.rref();
    std::vector<std::vector<Rational>> out(vectors.size(), std::vector<Rational>(k, Rational(0)));
    for (std::size_t pi = 0; pi < r.pivot_columns.size(); ++pi) {
        std::size_t pc = r.pivot_columns[pi];
        if (pc >= k) throw consistency_error("module_coords: vector is not in the module");
        for (std::size_t j = 0; j < vectors.size(); ++j) out[j][pc] = r.reduced(pi, k + j);
    }
    return out;
}

/// Restriction of a certified homology matrix to an isotypic module.
inline Matrix<Rational> project_action(const RhoMatrix& rm, const IsotypicModule& mod,
                                       const CoverHomology& hom) {
    if (!rm.equivariant || !rm.form_preserving)
        throw hom_error("project_action: matrix is not certified");
    std::vector<std::vector<Rational>> images;
    for (const auto& b : mod.basis) images.push_back(rm.on_homology.apply(b));
    std::vector<std::vector<Rational>> coords = module_coords(mod, images, hom.dimension);
    const std::size_t k = mod.basis.size();
    Matrix<Rational> R(k, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i) R(i, j) = coords[j][i];
    if (!(R.transposed() * mod.sp_restricted * R == mod.sp_restricted))
        throw consistency_error("project_action: restricted form not preserved");
    return R;
}

/// Restriction of the deck action to an isotypic module, one matrix per group
/// element.
inline std::vector<Matrix<Rational>> module_h_action(const CoverHomology& hom,
                                                     const IsotypicModule& mod) {
    std::vector<Matrix<Rational>> out;
    const std::size_t k = mod.basis.size();
    for (const Matrix<Rational>& Rh : hom.h_action) {
        std::vector<std::vector<Rational>> images;
        for (const auto& b : mod.basis) images.push_back(Rh.apply(b));
        std::vector<std::vector<Rational>> coords = module_coords(mod, images, hom.dimension);
        Matrix<Rational> R(k, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < k; ++i) R(i, j) = coords[j][i];
        out.push_back(std::move(R));
    }
    return out;
}

/// True iff the homology matrix maps the kernel submodule into itself.
inline bool parabolic_check(const RhoMatrix& rm,
                            const std::vector<std::vector<Rational>>& phat) {
    if (phat.empty()) return true;
    std::vector<std::vector<Rational>> images;
    for (const auto& v : phat) images.push_back(rm.on_homology.apply(v));
    return detail::in_span(phat, images, phat[0].size());
}

/// Coefficients of a module vector in a free A-basis: v = sum_j c_j . basis_j
/// with each c_j in A = e Q[H]; entries are canonicalized by convolving with
/// the idempotent.
inline std::vector<GroupAlgebraElement>
a_coordinates(const CoverHomology& hom, const GroupAlgebraElement& idempotent,
              const std::vector<std::vector<Rational>>& abasis, const std::vector<Rational>& v) {
    const FiniteGroup& H = *hom.complex.group;
    const std::size_t o = H.order(), k = abasis.size();
    Matrix<Rational> M(hom.dimension, k * o);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t h = 0; h < o; ++h) {
            std::vector<Rational> hb =
                hom.h_action[h].apply(abasis[j]);
            for (std::size_t i = 0; i < hom.dimension; ++i) M(i, j * o + h) = hb[i];
        }
    std::vector<Rational> sol = M.solve(v);
    std::vector<GroupAlgebraElement> out;
    for (std::size_t j = 0; j < k; ++j) {
        GroupAlgebraElement c(H);
        for (std::size_t h = 0; h < o; ++h) c.set_coeff(static_cast<int>(h), sol[j * o + h]);
        out.push_back(c * idempotent);
    }
    return out;
}

/// Unipotent pair verification: in the ordered A-basis (m' legs, m'' legs) of an
/// isotypic module, the twist along b acts as I + E_{first m' leg, first m''
/// leg} and the inverse twist along a as the transposed pattern.
struct UnipotentPairReport {
    std::vector<std::vector<GroupAlgebraElement>> tb;
    std::vector<std::vector<GroupAlgebraElement>> ta_inv;
    bool pass = false;
};

inline std::vector<std::vector<GroupAlgebraElement>>
rho_in_a_basis(const CoverHomology& hom, const GroupAlgebraElement& idempotent,
               const std::vector<std::vector<Rational>>& abasis, const Matrix<Rational>& rho) {
    std::vector<std::vector<GroupAlgebraElement>> out;
    std::vector<std::vector<GroupAlgebraElement>> cols;
    for (const auto& b : abasis)
        cols.push_back(a_coordinates(hom, idempotent, abasis, rho.apply(b)));
    const std::size_t k = abasis.size();
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<GroupAlgebraElement> row;
        for (std::size_t j = 0; j < k; ++j) row.push_back(cols[j][i]);
        out.push_back(std::move(row));
    }
    return out;
}

inline UnipotentPairReport verify_unipotent_pair(const CoverHomology& surf,
                                                 const CoverHomology& rose,
                                                 const IsotypicModule& mod,
                                                 const RedundantSetup& setup) {
    const FiniteGroup& H = *surf.complex.group;
    const int g = surf.complex.base_rank;
    SurfacePresentation pres(g);
    std::vector<std::vector<Rational>> P = kernel_submodule(surf, rose);
    const GroupAlgebraElement& e = mod.component->idempotent;
    std::vector<Rational> alpha =
        algebra_action(surf, e, surf.express(lift_cycle(surf.complex, setup.a)));
    std::vector<Rational> beta =
        algebra_action(surf, e, surf.express(lift_cycle(surf.complex, setup.b)));
    std::vector<std::vector<Rational>> mprime_span =
        intersect_spans(canonical_span(P, surf.dimension),
                        canonical_span(mod.basis, surf.dimension), surf.dimension);
    IsotropicSplit split = isotropic_split(surf, mod, mprime_span, alpha, beta);
    std::vector<std::vector<Rational>> abasis = split.mprime;
    for (const auto& v : split.mdoubleprime) abasis.push_back(v);
    const std::size_t k = split.mprime.size();

    RhoMatrix tb = induced_action(builtin_twist(pres, "b1"), surf);
    RhoMatrix ta = induced_action(builtin_twist(pres, "a1", -1), surf);
    UnipotentPairReport rep;
    rep.tb = rho_in_a_basis(surf, e, abasis, tb.on_homology);
    rep.ta_inv = rho_in_a_basis(surf, e, abasis, ta.on_homology);

    GroupAlgebraElement zero(H);
    auto matches = [&](const std::vector<std::vector<GroupAlgebraElement>>& m, std::size_t ci,
                       std::size_t cj) {
        for (std::size_t i = 0; i < 2 * k; ++i)
            for (std::size_t j = 0; j < 2 * k; ++j) {
                const GroupAlgebraElement& want =
                    i == j ? e : (i == ci && j == cj ? e : zero);
                if (m[i][j] != want) return false;
            }
        return true;
    };
    // column convention: T_b sends the first m'' leg to itself plus the first
    // m' leg; T_a^{-1} the transpose pattern
    rep.pass = matches(rep.tb, 0, k) && matches(rep.ta_inv, k, 0);
    return rep;
}

/// Characteristic polynomial (monic, p(t) = det(tI - X)) over any field,
/// by the Faddeev-LeVerrier recurrence.
template <typename K>
Polynomial<K> charpoly(const Matrix<K>& X) {
    const std::size_t n = X.rows();
    if (X.cols() != n) throw error("charpoly: matrix must be square");
    std::vector<K> c(n + 1, K(0));
    c[n] = K(1);
    Matrix<K> M = Matrix<K>::identity(n);
    for (std::size_t kk = 1; kk <= n; ++kk) {
        M = X * M;
        K tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += M(i, i);
        K ck = K(0) - tr / K(static_cast<long>(kk));
        c[n - kk] = ck;
        for (std::size_t i = 0; i < n; ++i) M(i, i) += ck;
    }
    return Polynomial<K>(std::move(c));
}

/// An A-linear endomorphism of an isotypic module (its matrix in module
/// coordinates), for reduced norm / trace computation.
struct EndoElement {
    const IsotypicModule* module;
    Matrix<Rational> matrix;
};

struct ReducedValues {
    Cyclotomic nrd;
    Cyclotomic trd;
    long degree; ///< N with dim_L(B) = N^2
};

/// Reduced norm and trace of an A-linear endomorphism, via the characteristic
/// polynomial over the center L (embedded in Q(zeta_n0) through the
/// class-sum eigenvalues of the orbit's distinguished character) and an exact
/// polynomial root: f with f^s = charpoly_L, s = sqrt(dim_L A).
inline ReducedValues reduced_norm_trace(const CoverHomology& hom, const IsotypicModule& mod,
                                        const CharacterTable& ct, const EndoElement& x) {
    const FiniteGroup& H = *hom.complex.group;
    const RationalComponent& comp = *mod.component;
    std::vector<Matrix<Rational>> Rh = module_h_action(hom, mod);
    for (const Matrix<Rational>& R : Rh)
        if (!(x.matrix * R == R * x.matrix))
            throw hom_error("reduced_norm_trace: endomorphism is not A-linear");

    const std::size_t m = mod.basis.size();
    const long ell = detail::euler_phi(comp.center_conductor) /
                     static_cast<long>(comp.center_stabilizer.size());
    const long dim_l_a = comp.q_dimension / ell;
    long s = 0;
    while (s * s < dim_l_a) ++s;
    if (s * s != dim_l_a)
        throw consistency_error("reduced_norm_trace: dim_L(A) is not a square");
    if (m % static_cast<std::size_t>(comp.q_dimension) != 0)
        throw consistency_error("reduced_norm_trace: module is not free over A");
    const long rank_a = static_cast<long>(m) / comp.q_dimension;
    const long N = rank_a * s;

    // the chi-eigenspace of the class sums, over Q(zeta_n0)
    const std::vector<Cyclotomic>& chi = ct.table[static_cast<std::size_t>(comp.orbit[0])];
    const long chi1 = ct.degrees[static_cast<std::size_t>(comp.orbit[0])];
    const std::size_t nclasses = H.class_representatives().size();
    Matrix<Cyclotomic> stack(nclasses * m, m);
    for (std::size_t cls = 0; cls < nclasses; ++cls) {
        Matrix<Rational> csum(m, m);
        for (int g : H.class_members()[cls])
            csum = csum + Rh[static_cast<std::size_t>(g)];
        Cyclotomic omega = Cyclotomic(Rational(
                               static_cast<long>(H.class_members()[cls].size()),
                               chi1)) *
                           chi[cls];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                Cyclotomic v = Cyclotomic(csum(i, j));
                if (i == j) v -= omega;
                stack(cls * m + i, j) = v;
            }
    }
    std::vector<std::vector<Cyclotomic>> eig = stack.kernel_basis();
    if (static_cast<long>(eig.size()) * ell != static_cast<long>(m))
        throw consistency_error("reduced_norm_trace: eigenspace dimension mismatch");

    // restrict x to the eigenspace
    const std::size_t d = eig.size();
    Matrix<Cyclotomic> M(m, d + d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < m; ++i) {
            M(i, j) = eig[j][i];
            Cyclotomic img(0);
            for (std::size_t l = 0; l < m; ++l) img += Cyclotomic(x.matrix(i, l)) * eig[j][l];
            M(i, d + j) = img;
        }
    typename Matrix<Cyclotomic>::RrefResult r = M.rref();
    Matrix<Cyclotomic> Xs(d, d);
    for (std::size_t pi = 0; pi < r.pivot_columns.size(); ++pi) {
        std::size_t pc = r.pivot_columns[pi];
        if (pc >= d)
            throw consistency_error("reduced_norm_trace: eigenspace not preserved");
        for (std::size_t j = 0; j < d; ++j) Xs(pc, j) = r.reduced(pi, d + j);
    }

    Polynomial<Cyclotomic> cp = charpoly(Xs);
    Polynomial<Cyclotomic> f = poly_nth_root(cp, static_cast<std::size_t>(s));
    if (f.degree() != N) throw consistency_error("reduced_norm_trace: degree mismatch");
    ReducedValues rv{(N % 2 == 0 ? Cyclotomic(1) : Cyclotomic(-1)) * f.coeff(0),
                     Cyclotomic(0) - f.coeff(static_cast<std::size_t>(N - 1)), N};
    for (long kf : comp.center_stabilizer) {
        if (rv.nrd.galois(kf) != rv.nrd || rv.trd.galois(kf) != rv.trd)
            throw consistency_error("reduced_norm_trace: value not in the center");
    }
    return rv;
}

/// Reduced norms of a family of certified module automorphisms, checked to be
/// tau-norm-one roots of unity.
struct NormOneReport {
    std::vector<Cyclotomic> values;
    bool pass = true;
};

inline NormOneReport norm_one_check(const CoverHomology& hom, const IsotypicModule& mod,
                                    const CharacterTable& ct,
                                    const std::vector<Matrix<Rational>>& elements) {
    NormOneReport rep;
    for (const Matrix<Rational>& m : elements) {
        ReducedValues rv = reduced_norm_trace(hom, mod, ct, EndoElement{&mod, m});
        Cyclotomic lambda = rv.nrd;
        if (lambda.galois(-1) * lambda != Cyclotomic(1)) rep.pass = false;
        long bound = std::lcm(2L, mod.component->center_conductor);
        Cyclotomic pw(1);
        for (long i = 0; i < bound; ++i) pw *= lambda;
        if (pw != Cyclotomic(1)) rep.pass = false;
        rep.values.push_back(std::move(lambda));
    }
    return rep;
}

/// Classification of the invariant bilinear forms of an explicit irreducible
/// representation given by generator matrices over a cyclotomic field.
enum class FormClass { symmetric, alternating, none };

inline FormClass invariant_bilinear_forms(const std::vector<Matrix<Cyclotomic>>& generators) {
    if (generators.empty()) throw error("invariant_bilinear_forms: no generators");
    const std::size_t d = generators[0].rows();
    Matrix<Cyclotomic> sys(generators.size() * d * d, d * d);
    for (std::size_t gidx = 0; gidx < generators.size(); ++gidx) {
        const Matrix<Cyclotomic>& g = generators[gidx];
        if (g.rows() != d || g.cols() != d)
            throw error("invariant_bilinear_forms: generator size mismatch");
        // g^T B g - B = 0; unknown B flattened row-major
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = 0; b < d; ++b) {
                        Cyclotomic coeff = g(a, i) * g(b, j);
                        if (a == i && b == j) coeff -= Cyclotomic(1);
                        sys(gidx * d * d + i * d + j, a * d + b) += coeff;
                    }
    }
    std::vector<std::vector<Cyclotomic>> sols = sys.kernel_basis();
    if (sols.empty()) return FormClass::none;
    if (sols.size() > 1)
        throw consistency_error("invariant_bilinear_forms: representation is reducible");
    Matrix<Cyclotomic> B(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) B(i, j) = sols[0][i * d + j];
    if (B.rank() != d)
        throw consistency_error("invariant_bilinear_forms: invariant form is degenerate");
    if (B == B.transposed()) return FormClass::symmetric;
    bool alt = true;
    for (std::size_t i = 0; i < d && alt; ++i)
        for (std::size_t j = 0; j < d && alt; ++j)
            if (B(i, j) != Cyclotomic(0) - B(j, i)) alt = false;
    if (alt) return FormClass::alternating;
    throw consistency_error("invariant_bilinear_forms: form is neither symmetric nor alternating");
}

/// Built-in explicit irreducible representations used for the classification
/// cross-checks; each builder verifies its group's defining relations.

inline std::vector<Matrix<Cyclotomic>> rep_cyclic(long n) {
    Matrix<Cyclotomic> x(1, 1);
    x(0, 0) = Cyclotomic::zeta(n);
    Cyclotomic pw(1);
    for (long i = 0; i < n; ++i) pw *= x(0, 0);
    if (pw != Cyclotomic(1)) throw consistency_error("rep_cyclic: order relation fails");
    return {x};
}

inline std::vector<Matrix<Cyclotomic>> rep_dihedral(long two_n) {
    if (two_n % 2 != 0 || two_n < 6) throw error("rep_dihedral: order must be even and >= 6");
    long n = two_n / 2;
    Matrix<Cyclotomic> x(2, 2), y(2, 2);
    x(0, 0) = Cyclotomic::zeta(n);
    x(1, 1) = Cyclotomic::zeta(n, n - 1);
    y(0, 1) = Cyclotomic(1);
    y(1, 0) = Cyclotomic(1);
    Matrix<Cyclotomic> xn = Matrix<Cyclotomic>::identity(2);
    for (long i = 0; i < n; ++i) xn = xn * x;
    Matrix<Cyclotomic> xinv(2, 2);
    xinv(0, 0) = x(1, 1);
    xinv(1, 1) = x(0, 0);
    if (!(xn == Matrix<Cyclotomic>::identity(2)) || !(y * y == Matrix<Cyclotomic>::identity(2)) ||
        !(y * x * y == xinv))
        throw consistency_error("rep_dihedral: relations fail");
    return {x, y};
}

inline std::vector<Matrix<Cyclotomic>> rep_dicyclic(long four_n) {
    if (four_n % 4 != 0) throw error("rep_dicyclic: order must be divisible by 4");
    long n = four_n / 4;
    Matrix<Cyclotomic> x(2, 2), y(2, 2);
    x(0, 0) = Cyclotomic::zeta(2 * n);
    x(1, 1) = Cyclotomic::zeta(2 * n, 2 * n - 1);
    y(0, 1) = Cyclotomic(1);
    y(1, 0) = Cyclotomic(-1);
    // x^n = y^2, y x y^{-1} = x^{-1}
    Matrix<Cyclotomic> xn = Matrix<Cyclotomic>::identity(2);
    for (long i = 0; i < n; ++i) xn = xn * x;
    Matrix<Cyclotomic> yinv(2, 2);
    yinv(0, 1) = Cyclotomic(-1);
    yinv(1, 0) = Cyclotomic(1);
    Matrix<Cyclotomic> xinv(2, 2);
    xinv(0, 0) = x(1, 1);
    xinv(1, 1) = x(0, 0);
    if (!(xn == y * y) || !(y * x * yinv == xinv))
        throw consistency_error("rep_dicyclic: relations fail");
    return {x, y};
}

/// Standard (m-1)-dimensional representation of Sym(m), on the generators
/// matching the symmetric-group fixture (an m-cycle and the transposition
/// (0 1)); basis v_i = e_i - e_{m-1}.
inline std::vector<Matrix<Cyclotomic>> rep_sym_standard(int m) {
    if (m < 2) throw error("rep_sym_standard: m must be >= 2");
    auto matrix_of = [&](const Permutation& s) {
        const std::size_t d = static_cast<std::size_t>(m) - 1;
        Matrix<Cyclotomic> M(d, d);
        for (std::size_t j = 0; j < d; ++j) {
            // e_j - e_{m-1} -> e_{s(j)} - e_{s(m-1)} = v_{s(j)} - v_{s(m-1)}
            int a = s[j], b = s[static_cast<std::size_t>(m) - 1];
            if (a != m - 1) M(static_cast<std::size_t>(a), j) += Cyclotomic(1);
            if (b != m - 1) M(static_cast<std::size_t>(b), j) -= Cyclotomic(1);
        }
        return M;
    };
    Permutation cycle(static_cast<std::size_t>(m)), swap01(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        cycle[static_cast<std::size_t>(i)] = (i + 1) % m;
        swap01[static_cast<std::size_t>(i)] = i;
    }
    swap01[0] = 1;
    swap01[1] = 0;
    std::vector<Matrix<Cyclotomic>> gens{matrix_of(cycle), matrix_of(swap01)};
    // relations: c^m = 1, t^2 = 1
    Matrix<Cyclotomic> cm = Matrix<Cyclotomic>::identity(static_cast<std::size_t>(m) - 1);
    for (int i = 0; i < m; ++i) cm = cm * gens[0];
    if (!(cm == Matrix<Cyclotomic>::identity(static_cast<std::size_t>(m) - 1)) ||
        !(gens[1] * gens[1] == Matrix<Cyclotomic>::identity(static_cast<std::size_t>(m) - 1)))
        throw consistency_error("rep_sym_standard: relations fail");
    return gens;
}

} // namespace coverhom
