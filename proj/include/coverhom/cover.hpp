#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "coverhom/components.hpp"
#include "coverhom/group.hpp"
#include "coverhom/group_algebra.hpp"
#include "coverhom/matrix.hpp"
#include "coverhom/surface.hpp"

namespace coverhom {

/// Cellular chain complex of a finite regular cover of the genus-g surface
/// (one vertex, 2g edges, one 2-cell downstairs) or of the n-petalled rose.
/// Cells are flattened as (deck element h, cell type j) -> h * types + j;
/// the deck group acts by left multiplication, and the lift of generator x
/// starting at vertex h ends at vertex h * p(x).
struct CoverChainComplex {
    const FiniteGroup* group;
    GroupHom hom;      ///< generator images downstairs (2g for surface, n for rose)
    bool is_surface;
    int base_rank;     ///< genus g (surface) or petal count n (rose)
    int edge_types;    ///< 2g or n
    Matrix<Rational> boundary1; ///< c0 x c1
    Matrix<Rational> boundary2; ///< c1 x c2 (empty for roses)

    std::size_t vertices() const { return group->order(); }
    std::size_t edges() const { return group->order() * static_cast<std::size_t>(edge_types); }
    std::size_t edge_index(int h, int j) const {
        return static_cast<std::size_t>(h) * static_cast<std::size_t>(edge_types) +
               static_cast<std::size_t>(j);
    }
    /// Vertex indices of edge (h, j): tail h, head h * p(x_{j+1}).
    int edge_tail(std::size_t e) const { return static_cast<int>(e) / edge_types; }
    int edge_type(std::size_t e) const { return static_cast<int>(e) % edge_types; }
    int edge_head(std::size_t e) const {
        return group->mult(edge_tail(e), hom.images[static_cast<std::size_t>(edge_type(e))]);
    }

    /// Deck translation of a 1-chain by a group element.
    std::vector<Rational> translate(int h, const std::vector<Rational>& chain) const {
        std::vector<Rational> r(chain.size());
        for (std::size_t e = 0; e < chain.size(); ++e) {
            if (chain[e].is_zero()) continue;
            r[edge_index(group->mult(h, edge_tail(e)), edge_type(e))] = chain[e];
        }
        return r;
    }
};

inline CoverChainComplex surface_cover_complex(int g, const GroupHom& p) {
    if (static_cast<int>(p.images.size()) != 2 * g)
        throw hom_error("surface_cover_complex: expected 2g generator images");
    SurfacePresentation pres(g);
    if (p.image_of(pres.relator()) != 0)
        throw hom_error("surface_cover_complex: relator does not map to the identity");
    const FiniteGroup& H = *p.target;
    const std::size_t n = H.order();
    CoverChainComplex cx{&H, p, true, g, 2 * g, Matrix<Rational>(n, n * 2 * static_cast<std::size_t>(g)),
                         Matrix<Rational>(n * 2 * static_cast<std::size_t>(g), n)};
    for (std::size_t e = 0; e < cx.edges(); ++e) {
        cx.boundary1(static_cast<std::size_t>(cx.edge_head(e)), e) =
            cx.boundary1(static_cast<std::size_t>(cx.edge_head(e)), e) + Rational(1);
        cx.boundary1(static_cast<std::size_t>(cx.edge_tail(e)), e) =
            cx.boundary1(static_cast<std::size_t>(cx.edge_tail(e)), e) - Rational(1);
    }
    Word r = pres.relator();
    for (int j = 1; j <= 2 * g; ++j) {
        FreeFormalSum d = fox_derivative(r, j);
        for (int h = 0; h < static_cast<int>(n); ++h)
            for (const auto& [u, c] : d) {
                std::size_t e = cx.edge_index(H.mult(h, p.image_of(u)), j - 1);
                cx.boundary2(e, static_cast<std::size_t>(h)) =
                    cx.boundary2(e, static_cast<std::size_t>(h)) + c;
            }
    }
    if (!(cx.boundary1 * cx.boundary2 == Matrix<Rational>(n, n)))
        throw consistency_error("surface_cover_complex: boundary composition nonzero");
    return cx;
}

inline CoverChainComplex rose_cover_complex(int n_petals, const GroupHom& pprime) {
    if (static_cast<int>(pprime.images.size()) != n_petals)
        throw hom_error("rose_cover_complex: expected n generator images");
    if (!pprime.target->generates(pprime.images))
        throw hom_error("rose_cover_complex: images do not generate the deck group");
    const FiniteGroup& H = *pprime.target;
    const std::size_t n = H.order();
    CoverChainComplex cx{&H, pprime, false, n_petals, n_petals,
                         Matrix<Rational>(n, n * static_cast<std::size_t>(n_petals)),
                         Matrix<Rational>(n * static_cast<std::size_t>(n_petals), 0)};
    for (std::size_t e = 0; e < cx.edges(); ++e) {
        cx.boundary1(static_cast<std::size_t>(cx.edge_head(e)), e) =
            cx.boundary1(static_cast<std::size_t>(cx.edge_head(e)), e) + Rational(1);
        cx.boundary1(static_cast<std::size_t>(cx.edge_tail(e)), e) =
            cx.boundary1(static_cast<std::size_t>(cx.edge_tail(e)), e) - Rational(1);
    }
    return cx;
}

/// Cycle of the lift, starting at the identity vertex, of a base loop w with
/// p(w) = 1.
inline std::vector<Rational> lift_cycle(const CoverChainComplex& cx, const Word& w) {
    if (cx.hom.image_of(w) != 0) throw hom_error("lift_cycle: word is not in the kernel");
    std::vector<Rational> v(cx.edges());
    int h = 0;
    for (int x : w) {
        int j = (x > 0 ? x : -x) - 1;
        if (x > 0) {
            std::size_t e = cx.edge_index(h, j);
            v[e] = v[e] + Rational(1);
            h = cx.group->mult(h, cx.hom.images[static_cast<std::size_t>(j)]);
        } else {
            h = cx.group->mult(h, cx.group->inverse(cx.hom.images[static_cast<std::size_t>(j)]));
            std::size_t e = cx.edge_index(h, j);
            v[e] = v[e] - Rational(1);
        }
    }
    return v;
}

namespace ribbon {

/// A dart is one end of a base edge type: (type j, end) with end 0 = tail,
/// 1 = head.
struct Dart {
    int type;
    int end;
    bool operator<(const Dart& o) const { return type != o.type ? type < o.type : end < o.end; }
    bool operator==(const Dart& o) const { return type == o.type && end == o.end; }
};

/// Cyclic order of the 4g darts around the base vertex, read off the corner
/// structure of the 4g-gon: corner t of the polygon is bounded by the arrival
/// dart of boundary edge t-1 and the departure dart of boundary edge t, and
/// consecutive corners of the vertex link share one dart.
inline std::vector<Dart> base_rotation(int genus) {
    Word r = SurfacePresentation(genus).relator();
    const std::size_t L = r.size();
    std::vector<Dart> dep(L), arr(L);
    for (std::size_t t = 0; t < L; ++t) {
        int x = r[t];
        int j = (x > 0 ? x : -x) - 1;
        dep[t] = x > 0 ? Dart{j, 0} : Dart{j, 1};
        arr[t] = x > 0 ? Dart{j, 1} : Dart{j, 0};
    }
    // corner t has darts {arr[t-1], dep[t]}
    auto corner_darts = [&](std::size_t t) {
        return std::pair<Dart, Dart>{arr[(t + L - 1) % L], dep[t]};
    };
    std::map<Dart, std::vector<std::size_t>> corners_of;
    for (std::size_t t = 0; t < L; ++t) {
        auto [d1, d2] = corner_darts(t);
        corners_of[d1].push_back(t);
        corners_of[d2].push_back(t);
    }
    std::vector<Dart> rotation;
    std::size_t corner = 0;
    Dart exit = corner_darts(0).second;
    for (std::size_t step = 0; step < L; ++step) {
        rotation.push_back(exit);
        const auto& cs = corners_of.at(exit);
        std::size_t next = cs[0] == corner ? cs[1] : cs[0];
        auto [d1, d2] = corner_darts(next);
        exit = d1 == exit ? d2 : d1;
        corner = next;
    }
    if (rotation.size() != L || corner != 0)
        throw consistency_error("base_rotation: vertex link is not a single cycle");
    return rotation;
}

struct Passage {
    int vertex;
    long slot_in;
    long slot_out;
};

/// Realize an integer cycle vector as closed edge-walks and return its vertex
/// passages, with lane slots shared against the other cycle's realization.
/// `lane_base` gives this cycle's first lane on each edge; `lanes_total` the
/// total lane count per edge (both cycles).
struct Realization {
    std::vector<Passage> passages;
};

} // namespace ribbon

namespace detail {

/// Intersection number of two integer cycle vectors on a surface cover,
/// via the ribbon structure, with a fixed (uncalibrated) orientation.
inline Rational raw_intersection(const CoverChainComplex& cx, const std::vector<long>& u,
                                 const std::vector<long>& v) {
    const std::vector<ribbon::Dart> rotation = ribbon::base_rotation(cx.base_rank);
    const std::size_t E = cx.edges();

    // Lanes per edge: |u_e| lanes for u then |v_e| lanes for v.
    std::vector<long> lanes_u(E), lanes_total(E);
    for (std::size_t e = 0; e < E; ++e) {
        lanes_u[e] = std::abs(u[e]);
        lanes_total[e] = lanes_u[e] + std::abs(v[e]);
    }

    // Slot positions around each vertex: expand each dart of the base
    // rotation into one slot per lane of the corresponding cover edge,
    // ascending lane order at tails and descending at heads so that parallel
    // strands do not cross inside an edge.
    // slot(vertex, edge, lane, end) -> position
    std::map<std::tuple<std::size_t, long, int>, long> slot; // (edge, lane, end) -> position
    std::vector<long> circle_size(cx.vertices(), 0);
    for (int h = 0; h < static_cast<int>(cx.vertices()); ++h) {
        long pos = 0;
        for (const ribbon::Dart& d : rotation) {
            std::size_t e;
            if (d.end == 0) {
                e = cx.edge_index(h, d.type);
            } else {
                int tail = cx.group->mult(
                    h, cx.group->inverse(cx.hom.images[static_cast<std::size_t>(d.type)]));
                e = cx.edge_index(tail, d.type);
            }
            if (d.end == 0)
                for (long l = 0; l < lanes_total[e]; ++l) slot[{e, l, 0}] = pos++;
            else
                for (long l = lanes_total[e]; l-- > 0;) slot[{e, l, 1}] = pos++;
        }
        circle_size[static_cast<std::size_t>(h)] = pos;
    }

    // Decompose a cycle into closed walks (greedy, lowest edge index first)
    // and record vertex passages.
    auto realize = [&](const std::vector<long>& c, bool second) {
        std::vector<ribbon::Passage> passages;
        std::vector<long> used(E, 0);
        auto lane_of = [&](std::size_t e, long unit) { return second ? lanes_u[e] + unit : unit; };
        // outgoing unit search at a vertex
        auto next_out = [&](int vertex) -> long {
            for (std::size_t e = 0; e < E; ++e) {
                if (used[e] >= std::abs(c[e])) continue;
                int start = c[e] > 0 ? cx.edge_tail(e) : cx.edge_head(e);
                if (start == vertex) return static_cast<long>(e);
            }
            return -1;
        };
        for (std::size_t e0 = 0; e0 < E; ++e0) {
            while (used[e0] < std::abs(c[e0])) {
                // walk: (edge, unit, direction) steps
                struct Step {
                    std::size_t e;
                    long unit;
                    bool forward;
                };
                std::vector<Step> walk;
                int start = c[e0] > 0 ? cx.edge_tail(e0) : cx.edge_head(e0);
                int at = start;
                for (;;) {
                    long e = next_out(at);
                    if (e == -1) break;
                    bool fwd = c[static_cast<std::size_t>(e)] > 0;
                    walk.push_back({static_cast<std::size_t>(e), used[static_cast<std::size_t>(e)], fwd});
                    ++used[static_cast<std::size_t>(e)];
                    at = fwd ? cx.edge_head(static_cast<std::size_t>(e))
                             : cx.edge_tail(static_cast<std::size_t>(e));
                }
                if (at != start)
                    throw consistency_error("raw_intersection: walk did not close (not a cycle)");
                for (std::size_t t = 0; t < walk.size(); ++t) {
                    const Step& in = walk[t];
                    const Step& out = walk[(t + 1) % walk.size()];
                    int vertex = in.forward ? cx.edge_head(in.e) : cx.edge_tail(in.e);
                    long si = slot.at({in.e, lane_of(in.e, in.unit), in.forward ? 1 : 0});
                    long so = slot.at({out.e, lane_of(out.e, out.unit), out.forward ? 0 : 1});
                    passages.push_back({vertex, si, so});
                }
            }
        }
        return passages;
    };
    std::vector<ribbon::Passage> pu = realize(u, false), pv = realize(v, true);

    long total = 0;
    for (const auto& p : pu)
        for (const auto& q : pv) {
            if (p.vertex != q.vertex) continue;
            const long N = circle_size[static_cast<std::size_t>(p.vertex)];
            auto ahead = [&](long from, long x) { return ((x - from) % N + N) % N; };
            long qi = ahead(p.slot_in, q.slot_in), qo = ahead(p.slot_in, q.slot_out),
                 po = ahead(p.slot_in, p.slot_out);
            // interleaved iff exactly one of q's slots lies strictly between
            // p_in and p_out going around the circle
            bool qi_in = qi > 0 && qi < po;
            bool qo_in = qo > 0 && qo < po;
            if (qi_in != qo_in) total += qi_in ? 1 : -1;
        }
    return Rational(total);
}

inline int calibration_sign(int genus);

/// Intersection pairing of two rational cycles, calibrated so that
/// <a_1, b_1> = +1 on the base surface.
inline Rational pair_cycles(const CoverChainComplex& cx, const std::vector<Rational>& u,
                            const std::vector<Rational>& v) {
    // check both are cycles
    for (const auto* c : {&u, &v}) {
        std::vector<Rational> bd = cx.boundary1.apply(*c);
        for (const Rational& x : bd)
            if (!x.is_zero()) throw hom_error("intersection_pairing: vector is not a cycle");
    }
    // scale to integers
    auto scaled = [](const std::vector<Rational>& c, Rational& scale) {
        mpz_class l = 1;
        for (const Rational& x : c) l = lcm(l, x.denominator());
        scale = Rational(mpz_class(l));
        std::vector<long> r(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            Rational t = c[i] * scale;
            r[i] = t.to_long();
        }
        return r;
    };
    Rational su, sv;
    std::vector<long> iu = scaled(u, su), iv = scaled(v, sv);
    Rational raw = raw_intersection(cx, iu, iv);
    return raw * Rational(calibration_sign(cx.base_rank)) * su.inverse() * sv.inverse();
}

inline int calibration_sign(int genus) {
    static std::map<int, int> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(genus);
    if (it != cache.end()) return it->second;
    FiniteGroup trivial(std::vector<Permutation>{}, 1);
    GroupHom p{&trivial, std::vector<int>(static_cast<std::size_t>(2 * genus), 0)};
    CoverChainComplex base = surface_cover_complex(genus, p);
    std::vector<long> a(base.edges(), 0), b(base.edges(), 0);
    a[base.edge_index(0, 0)] = 1;
    b[base.edge_index(0, 1)] = 1;
    Rational raw = raw_intersection(base, a, b);
    int sign;
    if (raw == Rational(1))
        sign = 1;
    else if (raw == Rational(-1))
        sign = -1;
    else
        throw consistency_error("intersection_pairing: calibration failed");
    cache[genus] = sign;
    return sign;
}

} // namespace detail

/// Pairing matrix of a list of cycle vectors under the calibrated
/// intersection form (surface covers only).
inline Matrix<Rational> intersection_pairing(const CoverChainComplex& cx,
                                             const std::vector<std::vector<Rational>>& cycles) {
    if (!cx.is_surface) throw hom_error("intersection_pairing: rose covers have no pairing");
    const std::size_t n = cycles.size();
    Matrix<Rational> J(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            J(i, j) = detail::pair_cycles(cx, cycles[i], cycles[j]);
            J(j, i) = Rational(0) - J(i, j);
        }
    return J;
}

/// First homology of a cover complex: canonical cycle representatives modulo
/// boundaries, the deck action in that basis, and (for surfaces) the
/// intersection form.
struct CoverHomology {
    CoverChainComplex complex;
    std::vector<std::vector<Rational>> boundary_space; ///< canonical basis of im d2
    std::vector<std::vector<Rational>> cycle_basis;    ///< coset representatives
    std::size_t dimension = 0;
    std::vector<Matrix<Rational>> h_action; ///< one matrix per group element
    Matrix<Rational> sp_pairing;            ///< dimension x dimension (surfaces)

    /// Coordinates of cycles in the homology basis (one reduction for the
    /// whole batch).
    std::vector<std::vector<Rational>>
    express_many(const std::vector<std::vector<Rational>>& cycles) const {
        const std::size_t nb = boundary_space.size(), nz = cycle_basis.size();
        const std::size_t cols = nb + nz + cycles.size();
        Matrix<Rational> M(complex.edges(), cols);
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t i = 0; i < complex.edges(); ++i) M(i, j) = boundary_space[j][i];
        for (std::size_t j = 0; j < nz; ++j)
            for (std::size_t i = 0; i < complex.edges(); ++i) M(i, nb + j) = cycle_basis[j][i];
        for (std::size_t j = 0; j < cycles.size(); ++j)
            for (std::size_t i = 0; i < complex.edges(); ++i) M(i, nb + nz + j) = cycles[j][i];
        typename Matrix<Rational>::RrefResult r = M.rref();
        std::vector<std::vector<Rational>> out(cycles.size(),
                                               std::vector<Rational>(nz, Rational(0)));
        for (std::size_t pi = 0; pi < r.pivot_columns.size(); ++pi) {
            std::size_t pc = r.pivot_columns[pi];
            if (pc >= nb + nz)
                throw hom_error("express: vector is not a cycle of this complex");
            if (pc < nb) continue;
            for (std::size_t j = 0; j < cycles.size(); ++j)
                out[j][pc - nb] = r.reduced(pi, nb + nz + j);
        }
        return out;
    }

    /// Coordinates of a cycle in the homology basis.
    std::vector<Rational> express(const std::vector<Rational>& cycle) const {
        return express_many({cycle})[0];
    }

    /// The cycle vector with the given homology coordinates.
    std::vector<Rational> chain_of(const std::vector<Rational>& coords) const {
        std::vector<Rational> v(complex.edges());
        for (std::size_t j = 0; j < coords.size(); ++j)
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] = v[i] + coords[j] * cycle_basis[j][i];
        return v;
    }
};

inline CoverHomology homology(const CoverChainComplex& cx) {
    CoverHomology hom{cx, {}, {}, 0, {}, Matrix<Rational>(0, 0)};

    std::vector<std::vector<Rational>> b2cols;
    for (std::size_t c = 0; c < cx.boundary2.cols(); ++c) b2cols.push_back(cx.boundary2.column(c));
    hom.boundary_space = canonical_span(b2cols, cx.edges());

    std::vector<std::vector<Rational>> cycles = cx.boundary1.kernel_basis();
    // coset representatives: cycle vectors extending the boundary space, in
    // order, by incremental elimination
    std::map<std::size_t, std::vector<Rational>> rows; // pivot column -> reduced row
    auto insert = [&](std::vector<Rational> v) -> bool {
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (v[c].is_zero()) continue;
            auto it = rows.find(c);
            if (it == rows.end()) {
                Rational inv = v[c].inverse();
                for (auto& x : v) x = x * inv;
                rows.emplace(c, std::move(v));
                return true;
            }
            Rational f = v[c];
            for (std::size_t k = c; k < v.size(); ++k) v[k] = v[k] - f * it->second[k];
        }
        return false;
    };
    for (const auto& b : hom.boundary_space) insert(b);
    for (const auto& z : cycles)
        if (insert(z)) hom.cycle_basis.push_back(z);
    hom.dimension = hom.cycle_basis.size();

    hom.h_action.reserve(cx.group->order());
    for (int h = 0; h < static_cast<int>(cx.group->order()); ++h) {
        std::vector<std::vector<Rational>> translated;
        for (std::size_t j = 0; j < hom.dimension; ++j)
            translated.push_back(cx.translate(h, hom.cycle_basis[j]));
        std::vector<std::vector<Rational>> coords = hom.express_many(translated);
        Matrix<Rational> M(hom.dimension, hom.dimension);
        for (std::size_t j = 0; j < hom.dimension; ++j)
            for (std::size_t i = 0; i < hom.dimension; ++i) M(i, j) = coords[j][i];
        hom.h_action.push_back(std::move(M));
    }

    if (cx.is_surface) hom.sp_pairing = intersection_pairing(cx, hom.cycle_basis);
    return hom;
}

/// The Q[H]-valued skew-Hermitian form <x, y> = sum_h <x, h y>_Sp h on
/// homology coordinates.
inline GroupAlgebraElement equivariant_pairing(const CoverHomology& hom,
                                               const std::vector<Rational>& x,
                                               const std::vector<Rational>& y) {
    const FiniteGroup& H = *hom.complex.group;
    GroupAlgebraElement r(H);
    for (int h = 0; h < static_cast<int>(H.order()); ++h) {
        std::vector<Rational> hy = hom.h_action[static_cast<std::size_t>(h)].apply(y);
        Rational s(0);
        for (std::size_t i = 0; i < hom.dimension; ++i)
            for (std::size_t j = 0; j < hom.dimension; ++j)
                s = s + x[i] * hom.sp_pairing(i, j) * hy[j];
        r.set_coeff(h, s);
    }
    return r;
}

/// Gram matrix of the equivariant form on the homology basis (or any list of
/// coordinate vectors).
inline std::vector<std::vector<GroupAlgebraElement>>
equivariant_form(const CoverHomology& hom, const std::vector<std::vector<Rational>>& vectors) {
    std::vector<std::vector<GroupAlgebraElement>> gram;
    for (const auto& x : vectors) {
        std::vector<GroupAlgebraElement> row;
        for (const auto& y : vectors) row.push_back(equivariant_pairing(hom, x, y));
        gram.push_back(std::move(row));
    }
    return gram;
}

/// Gram matrix of the equivariant form on the homology basis itself.
inline std::vector<std::vector<GroupAlgebraElement>>
equivariant_form(const CoverHomology& hom) {
    std::vector<std::vector<Rational>> units;
    for (std::size_t j = 0; j < hom.dimension; ++j) {
        std::vector<Rational> u(hom.dimension);
        u[j] = Rational(1);
        units.push_back(std::move(u));
    }
    return equivariant_form(hom, units);
}

/// Action of a group-algebra element on homology coordinates.
inline std::vector<Rational> algebra_action(const CoverHomology& hom, const GroupAlgebraElement& a,
                                            const std::vector<Rational>& v) {
    std::vector<Rational> r(hom.dimension);
    for (const auto& [h, c] : a.coeffs()) {
        std::vector<Rational> hv = hom.h_action[static_cast<std::size_t>(h)].apply(v);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + c * hv[i];
    }
    return r;
}

/// Submodule e_i * H_1 of the cover homology attached to one rational
/// component, with the restricted forms.
struct IsotypicModule {
    const RationalComponent* component;
    std::vector<std::vector<Rational>> basis; ///< homology coordinates
    long q_dimension;
    Matrix<Rational> sp_restricted;
    std::vector<std::vector<GroupAlgebraElement>> gram;
};

inline IsotypicModule isotypic_projection(const CoverHomology& hom,
                                          const RationalComponent& comp) {
    std::vector<std::vector<Rational>> images;
    for (std::size_t j = 0; j < hom.dimension; ++j) {
        std::vector<Rational> unit(hom.dimension);
        unit[j] = Rational(1);
        images.push_back(algebra_action(hom, comp.idempotent, unit));
    }
    IsotypicModule mod{&comp, canonical_span(images, hom.dimension), 0, Matrix<Rational>(0, 0), {}};
    mod.q_dimension = static_cast<long>(mod.basis.size());
    const long expected = hom.complex.is_surface
                              ? (2 * hom.complex.base_rank - 2) * comp.q_dimension
                              : 0;
    if (hom.complex.is_surface && mod.q_dimension != expected)
        throw consistency_error("isotypic_projection: multiplicity mismatch");
    const std::size_t k = mod.basis.size();
    mod.sp_restricted = Matrix<Rational>(k, k);
    if (hom.complex.is_surface) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                Rational s(0);
                for (std::size_t x = 0; x < hom.dimension; ++x)
                    for (std::size_t y = 0; y < hom.dimension; ++y)
                        s = s + mod.basis[i][x] * hom.sp_pairing(x, y) * mod.basis[j][y];
                mod.sp_restricted(i, j) = s;
            }
        mod.gram = equivariant_form(hom, mod.basis);
    }
    return mod;
}

/// Isotypic projection for the trivial component (dimension 2g on surface
/// covers: the pullback of the base homology). The trivial component carries
/// no multiplicity check.
inline IsotypicModule trivial_projection(const CoverHomology& hom, const RationalComponent& triv) {
    std::vector<std::vector<Rational>> images;
    for (std::size_t j = 0; j < hom.dimension; ++j) {
        std::vector<Rational> unit(hom.dimension);
        unit[j] = Rational(1);
        images.push_back(algebra_action(hom, triv.idempotent, unit));
    }
    IsotypicModule mod{&triv, canonical_span(images, hom.dimension), 0, Matrix<Rational>(0, 0), {}};
    mod.q_dimension = static_cast<long>(mod.basis.size());
    if (hom.complex.is_surface && mod.q_dimension != 2 * hom.complex.base_rank)
        throw consistency_error("trivial_projection: expected dimension 2g");
    if (hom.complex.is_surface) {
        const std::size_t k = mod.basis.size();
        mod.sp_restricted = Matrix<Rational>(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                Rational s(0);
                for (std::size_t x = 0; x < hom.dimension; ++x)
                    for (std::size_t y = 0; y < hom.dimension; ++y)
                        s = s + mod.basis[i][x] * hom.sp_pairing(x, y) * mod.basis[j][y];
                mod.sp_restricted(i, j) = s;
            }
        mod.gram = equivariant_form(hom, mod.basis);
    }
    return mod;
}

/// The chain map C_1(surface cover) -> C_1(rose cover) induced by the
/// handlebody map (a_i-edges to x_i-edges, b_i-edges to zero), restricted to
/// homology; returns its matrix in the two homology bases.
inline Matrix<Rational> handlebody_homology_map(const CoverHomology& surf,
                                                const CoverHomology& rose) {
    const CoverChainComplex& scx = surf.complex;
    const CoverChainComplex& rcx = rose.complex;
    if (scx.group != rcx.group)
        throw hom_error("handlebody_homology_map: covers have different deck groups");
    const int g = scx.base_rank;
    for (int i = 0; i < g; ++i)
        if (scx.hom.images[static_cast<std::size_t>(2 * i)] !=
            rcx.hom.images[static_cast<std::size_t>(i)])
            throw hom_error("handlebody_homology_map: p is not pprime composed with phi");
    std::vector<std::vector<Rational>> images;
    for (std::size_t j = 0; j < surf.dimension; ++j) {
        std::vector<Rational> image(rcx.edges());
        const std::vector<Rational>& z = surf.cycle_basis[j];
        for (std::size_t e = 0; e < z.size(); ++e) {
            if (z[e].is_zero()) continue;
            int type = scx.edge_type(e);
            if (type % 2 != 0) continue; // b_i edge dies
            std::size_t re = rcx.edge_index(scx.edge_tail(e), type / 2);
            image[re] = image[re] + z[e];
        }
        images.push_back(std::move(image));
    }
    std::vector<std::vector<Rational>> coords = rose.express_many(images);
    Matrix<Rational> M(rose.dimension, surf.dimension);
    for (std::size_t j = 0; j < surf.dimension; ++j)
        for (std::size_t i = 0; i < rose.dimension; ++i) M(i, j) = coords[j][i];
    return M;
}

/// The kernel submodule P-hat: kernel of the induced map on homology from the
/// surface cover to the rose cover, as homology-coordinate vectors.
inline std::vector<std::vector<Rational>> kernel_submodule(const CoverHomology& surf,
                                                           const CoverHomology& rose) {
    Matrix<Rational> M = handlebody_homology_map(surf, rose);
    std::vector<std::vector<Rational>> K = M.kernel_basis();
    const std::size_t expected =
        (static_cast<std::size_t>(surf.complex.base_rank) - 1) * surf.complex.group->order() + 1;
    if (K.size() != expected)
        throw consistency_error("kernel_submodule: unexpected dimension");
    return K;
}

/// Isotropic completion of one isotypic module:
/// given a spanning set of M' = P-hat intersect M_i, a distinguished beta in
/// M' and alpha with <alpha, beta> = e_i, produce A-bases (beta first) of M'
/// and a complementary isotropic M'' (alpha first) with <m''_j, m'_k> =
/// delta_jk e_i.
struct IsotropicSplit {
    std::vector<std::vector<Rational>> mprime;       ///< A-basis, beta first
    std::vector<std::vector<Rational>> mdoubleprime; ///< A-basis, alpha first
};

inline IsotropicSplit isotropic_split(const CoverHomology& hom, const IsotypicModule& mod,
                                      const std::vector<std::vector<Rational>>& mprime_span,
                                      const std::vector<Rational>& alpha,
                                      const std::vector<Rational>& beta) {
    const FiniteGroup& H = *hom.complex.group;
    const GroupAlgebraElement unit = mod.component->idempotent;
    const GroupAlgebraElement zero(H);
    if (equivariant_pairing(hom, alpha, beta) != unit)
        throw hom_error("isotropic_split: <alpha, beta> is not the component unit");
    for (const auto& x : mprime_span)
        for (const auto& y : mprime_span)
            if (equivariant_pairing(hom, x, y) != zero)
                throw hom_error("isotropic_split: M' is not isotropic");

    {
        std::vector<std::vector<Rational>> with_alpha = mod.basis;
        with_alpha.push_back(alpha);
        if (canonical_span(with_alpha, hom.dimension).size() != mod.basis.size())
            throw hom_error("isotropic_split: alpha is not in the module");
    }
    const std::size_t qd = static_cast<std::size_t>(mod.component->q_dimension);
    std::vector<std::vector<Rational>> mp_span_full =
        canonical_span(mprime_span, hom.dimension);
    const std::size_t rank_a = mp_span_full.size() / qd;
    if (mp_span_full.size() % qd != 0)
        throw consistency_error("isotropic_split: M' is not free over A");

    // Extract an A-basis of M', beta first: grow by vectors whose A-orbit
    // extends the span by a full free summand.
    auto a_orbit = [&](const std::vector<Rational>& v) {
        std::vector<std::vector<Rational>> orbit;
        for (int h = 0; h < static_cast<int>(H.order()); ++h)
            orbit.push_back(hom.h_action[static_cast<std::size_t>(h)].apply(v));
        return orbit;
    };
    std::vector<std::vector<Rational>> mprime{beta};
    std::vector<std::vector<Rational>> span = a_orbit(beta);
    std::vector<std::vector<Rational>> reduced = canonical_span(span, hom.dimension);
    if (reduced.size() != qd)
        throw consistency_error("isotropic_split: beta does not generate a free summand");
    for (const auto& cand : mprime_span) {
        if (mprime.size() == rank_a) break;
        std::vector<std::vector<Rational>> trial = span;
        for (const auto& w : a_orbit(cand)) trial.push_back(w);
        std::vector<std::vector<Rational>> tr = canonical_span(trial, hom.dimension);
        if (tr.size() == reduced.size() + qd) {
            mprime.push_back(cand);
            span = trial;
            reduced = std::move(tr);
        }
    }
    if (mprime.size() != rank_a || reduced.size() != mp_span_full.size())
        throw consistency_error("isotropic_split: could not extract a free A-basis of M'");

    // Normalize so alpha pairs only with the beta leg: m'_j -= tau(<alpha, m'_j>) beta
    for (std::size_t j = 1; j < mprime.size(); ++j) {
        GroupAlgebraElement c = equivariant_pairing(hom, alpha, mprime[j]).tau();
        std::vector<Rational> corr = algebra_action(hom, c, beta);
        for (std::size_t i = 0; i < hom.dimension; ++i) mprime[j][i] = mprime[j][i] - corr[i];
    }

    // Dual-basis solve inside M_i: n_j with <n_j, m'_k> = delta_jk e_i.
    const std::size_t md = mod.basis.size();
    const std::size_t order = H.order();
    Matrix<Rational> sys(rank_a * order, md);
    for (std::size_t col = 0; col < md; ++col)
        for (std::size_t k = 0; k < rank_a; ++k) {
            GroupAlgebraElement pairing = equivariant_pairing(hom, mod.basis[col], mprime[k]);
            for (std::size_t h = 0; h < order; ++h)
                sys(k * order + h, col) = pairing.coeff(static_cast<int>(h));
        }
    std::vector<std::vector<Rational>> duals{alpha};
    for (std::size_t j = 1; j < rank_a; ++j) {
        std::vector<Rational> rhs(rank_a * order);
        for (std::size_t h = 0; h < order; ++h)
            rhs[j * order + h] = unit.coeff(static_cast<int>(h));
        std::vector<Rational> sol = sys.solve(rhs);
        std::vector<Rational> n(hom.dimension);
        for (std::size_t col = 0; col < md; ++col)
            for (std::size_t i = 0; i < hom.dimension; ++i)
                n[i] = n[i] + sol[col] * mod.basis[col][i];
        duals.push_back(std::move(n));
    }

    // Corrections: m''_j = n_j + sum_{l <= j} c_{j,l} m'_l with
    // c_{j,l} = <n_j, n_l> for l < j and c_{j,j} = (1/2) <n_j, n_j>.
    std::vector<std::vector<Rational>> mdp;
    for (std::size_t j = 0; j < rank_a; ++j) {
        std::vector<Rational> m = duals[j];
        for (std::size_t l = 0; l <= j; ++l) {
            GroupAlgebraElement c = equivariant_pairing(hom, duals[j], duals[l]);
            if (l == j) c = c * Rational(1, 2);
            std::vector<Rational> corr = algebra_action(hom, c, mprime[l]);
            for (std::size_t i = 0; i < hom.dimension; ++i) m[i] = m[i] + corr[i];
        }
        mdp.push_back(std::move(m));
    }

    // Verify the postconditions exactly.
    for (std::size_t j = 0; j < rank_a; ++j)
        for (std::size_t k = 0; k < rank_a; ++k) {
            if (equivariant_pairing(hom, mdp[j], mdp[k]) != zero)
                throw consistency_error("isotropic_split: M'' is not isotropic");
            GroupAlgebraElement pr = equivariant_pairing(hom, mdp[j], mprime[k]);
            if (pr != (j == k ? unit : zero))
                throw consistency_error("isotropic_split: duality pairing failed");
        }
    return IsotropicSplit{std::move(mprime), std::move(mdp)};
}

} // namespace coverhom
