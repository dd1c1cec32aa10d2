#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "coverhom/cyclotomic.hpp"
#include "coverhom/group.hpp"

namespace coverhom {

namespace modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

inline u64 pow(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u64 inv(u64 a, u64 p) { return pow(a % p, p - 2, p); }

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Smallest prime p with p ≡ 1 (mod m) and p > floor, found by direct scan.
inline u64 find_prime(u64 m, u64 floor) {
    u64 p = m + 1;
    while (p <= floor || !is_prime(p)) p += m;
    return p;
}

/// Smallest generator of the multiplicative group of F_p.
inline u64 primitive_root(u64 p) {
    std::vector<u64> prime_factors;
    u64 n = p - 1;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            prime_factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) prime_factors.push_back(n);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (u64 q : prime_factors)
            if (pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

/// Row-major dense matrix over F_p, just enough for the character-table
/// eigenvector computation.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<u64> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
    u64& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    u64 at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Reduce in place to row echelon form; returns rank. Deterministic: pivots
/// are the first nonzero entry scanning down each column in order.
inline std::size_t row_reduce(Mat& m, u64 p) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        u64 d = inv(m.at(rank, col), p);
        for (std::size_t j = col; j < m.cols; ++j) m.at(rank, j) = mul(m.at(rank, j), d, p);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            u64 f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j) {
                u64 v = m.at(i, j) + p - mul(f, m.at(rank, j), p);
                m.at(i, j) = v >= p ? v - p : v;
            }
        }
        ++rank;
    }
    return rank;
}

/// Canonical kernel basis of m (as rows of the result).
inline Mat kernel(const Mat& m, u64 p) {
    Mat r = m;
    std::size_t rank = row_reduce(r, p);
    std::vector<long> pivot_of_col(m.cols, -1);
    for (std::size_t i = 0, col = 0; i < rank; ++i) {
        while (r.at(i, col) == 0) ++col;
        pivot_of_col[col] = static_cast<long>(i);
    }
    Mat k(m.cols - rank, m.cols);
    std::size_t row = 0;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (pivot_of_col[free] != -1) continue;
        k.at(row, free) = 1;
        for (std::size_t col = 0; col < m.cols; ++col)
            if (pivot_of_col[col] != -1)
                k.at(row, col) = (p - r.at(static_cast<std::size_t>(pivot_of_col[col]), free)) % p;
        ++row;
    }
    return k;
}

/// Characteristic polynomial via reduction to Hessenberg form, coefficients
/// low degree first, length n+1.
inline std::vector<u64> charpoly(Mat m, u64 p) {
    const std::size_t n = m.rows;
    for (std::size_t col = 0; col + 2 < n; ++col) {
        std::size_t piv = col + 1;
        while (piv < n && m.at(piv, col) == 0) ++piv;
        if (piv == n) continue;
        if (piv != col + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(col + 1, j), m.at(piv, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, col + 1), m.at(i, piv));
        }
        u64 d = inv(m.at(col + 1, col), p);
        for (std::size_t i = col + 2; i < n; ++i) {
            u64 f = mul(m.at(i, col), d, p);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                u64 v = m.at(i, j) + p - mul(f, m.at(col + 1, j), p);
                m.at(i, j) = v >= p ? v - p : v;
            }
            for (std::size_t j = 0; j < n; ++j) {
                u64 v = m.at(j, col + 1) + mul(f, m.at(j, i), p);
                m.at(j, col + 1) = v >= p ? v - p : v;
            }
        }
    }
    // Expand det(xI - H) for Hessenberg H by the standard recurrence.
    std::vector<std::vector<u64>> q(n + 1);
    q[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        // q_k = (x - H[k-1][k-1]) q_{k-1} - sum over trailing subdiagonal products
        std::vector<u64> cur(k + 1, 0);
        u64 d = m.at(k - 1, k - 1);
        for (std::size_t j = 0; j < q[k - 1].size(); ++j) {
            cur[j + 1] = (cur[j + 1] + q[k - 1][j]) % p;
            cur[j] = (cur[j] + p - mul(d, q[k - 1][j], p)) % p;
        }
        u64 prod = 1;
        for (std::size_t i = k - 1; i-- > 0;) {
            prod = mul(prod, m.at(i + 1, i), p);
            u64 c = mul(prod, m.at(i, k - 1), p);
            if (c == 0) continue;
            for (std::size_t j = 0; j < q[i].size(); ++j)
                cur[j] = (cur[j] + p - mul(c, q[i][j], p)) % p;
        }
        q[k] = std::move(cur);
    }
    return q[n];
}

inline u64 poly_eval(const std::vector<u64>& c, u64 x, u64 p) {
    u64 r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = (mul(r, x, p) + c[i]) % p;
    return r;
}

} // namespace modp

/// Character table of a finite group, computed exactly by the Dixon-Schneider
/// method: find the simultaneous eigenvectors of the class-sum multiplication
/// matrices over a suitable prime field, recover the mod-p characters, then
/// lift each value to a sum of roots of unity via discrete Fourier inversion
/// of the power-map multiplicities.
struct CharacterTable {
    /// table[chi][c] = chi(class c); rows sorted by (degree, lex values).
    std::vector<std::vector<Cyclotomic>> table;
    std::vector<long> degrees;
};

inline CharacterTable character_table(const FiniteGroup& G) {
    using namespace modp;
    const std::size_t r = G.class_count();
    const std::size_t n = G.order();
    const u64 e = static_cast<u64>(G.exponent());

    u64 floor = 1;
    while (floor * floor <= 4 * n) ++floor; // smallest with floor^2 > 4n, i.e. floor > 2 sqrt(n)
    const u64 p = find_prime(e, floor - 1);

    // Structure constants a_{ijk} = #{(x, y) in C_i x C_j : xy = z_k} for a fixed
    // representative z_k, computed as #{x in C_i : x^{-1} z_k in C_j}. The matrix
    // A_i with (A_i)_{jk} = a_{ijk} satisfies A_i v = omega_i(chi) v for the vector
    // v_c = omega_c(chi) = |C_c| chi(g_c) / chi(1), since omega is an algebra
    // homomorphism on the center.
    std::vector<Mat> A(r, Mat(r, r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            int zk = G.class_representatives()[k];
            for (int x : G.class_members()[static_cast<int>(i)]) {
                int j = G.class_of(G.mult(G.inverse(x), zk));
                A[i].at(static_cast<std::size_t>(j), k) += 1;
            }
        }

    // Split the common eigenspaces. Subspaces are kept as row bases in
    // reduced form for determinism.
    std::vector<Mat> spaces;
    {
        Mat full(r, r);
        for (std::size_t i = 0; i < r; ++i) full.at(i, i) = 1;
        spaces.push_back(full);
    }
    for (std::size_t i = 1; i < r; ++i) {
        std::vector<Mat> next;
        for (Mat& S : spaces) {
            if (S.rows <= 1) {
                next.push_back(S);
                continue;
            }
            // Restriction R of A_i to the row space of S: solve B R^T = (A_i B^T)^T rows.
            const std::size_t d = S.rows;
            Mat img(d, r);
            for (std::size_t v = 0; v < d; ++v)
                for (std::size_t j = 0; j < r; ++j) {
                    u64 s = 0;
                    for (std::size_t k = 0; k < r; ++k)
                        s = (s + mul(A[i].at(j, k), S.at(v, k), p)) % p;
                    img.at(v, j) = s;
                }
            // Express each image row in the basis rows of S (S is in echelon form).
            Mat R(d, d);
            for (std::size_t v = 0; v < d; ++v) {
                std::vector<u64> w(img.a.begin() + static_cast<long>(v * r),
                                   img.a.begin() + static_cast<long>((v + 1) * r));
                for (std::size_t b = 0; b < d; ++b) {
                    std::size_t lead = 0;
                    while (S.at(b, lead) == 0) ++lead;
                    u64 c = mul(w[lead], inv(S.at(b, lead), p), p);
                    R.at(v, b) = c;
                    for (std::size_t k = 0; k < r; ++k)
                        w[k] = (w[k] + p - mul(c, S.at(b, k), p)) % p;
                }
                for (u64 residue : w)
                    if (residue != 0)
                        throw consistency_error("character_table: subspace not invariant");
            }
            // R^T acts on coordinate columns; eigen-split via charpoly roots.
            Mat Rt(d, d);
            for (std::size_t a2 = 0; a2 < d; ++a2)
                for (std::size_t b = 0; b < d; ++b) Rt.at(a2, b) = R.at(b, a2);
            std::vector<u64> cp = charpoly(Rt, p);
            bool split = false;
            for (u64 lam = 0; lam < p; ++lam) {
                if (poly_eval(cp, lam, p) != 0) continue;
                Mat shifted = Rt;
                for (std::size_t a2 = 0; a2 < d; ++a2)
                    shifted.at(a2, a2) = (shifted.at(a2, a2) + p - lam) % p;
                Mat ker = kernel(shifted, p);
                if (ker.rows == d) break; // scalar action, no split
                split = true;
                // Map kernel coordinates back to ambient vectors.
                Mat sub(ker.rows, r);
                for (std::size_t v = 0; v < ker.rows; ++v)
                    for (std::size_t k = 0; k < r; ++k) {
                        u64 s = 0;
                        for (std::size_t b = 0; b < d; ++b)
                            s = (s + mul(ker.at(v, b), S.at(b, k), p)) % p;
                        sub.at(v, k) = s;
                    }
                row_reduce(sub, p);
                next.push_back(sub);
            }
            if (!split) next.push_back(S);
        }
        spaces = std::move(next);
        bool done = true;
        for (const Mat& S : spaces) done = done && S.rows == 1;
        if (done) break;
    }
    if (spaces.size() != r)
        throw consistency_error("character_table: eigenspace splitting incomplete");

    // Identity class index (always class of element 0).
    const std::size_t id_class = static_cast<std::size_t>(G.class_of(0));

    // Recover mod-p character values per eigenvector.
    const u64 g0 = primitive_root(p);
    const u64 z = pow(g0, (p - 1) / e, p); // primitive e-th root of unity mod p
    std::vector<std::vector<Cyclotomic>> rows;
    std::vector<long> degs;
    for (const Mat& S : spaces) {
        std::vector<u64> u(S.a.begin(), S.a.end());
        u64 scale = inv(u[id_class], p);
        for (auto& x : u) x = mul(x, scale, p);
        // sum_c u_c u_{c*} / |C_c| = |G| / chi(1)^2
        u64 s = 0;
        for (std::size_t c = 0; c < r; ++c) {
            u64 term = mul(u[c], u[static_cast<std::size_t>(G.inverse_class(static_cast<int>(c)))], p);
            s = (s + mul(term, inv(static_cast<u64>(G.class_size(static_cast<int>(c))), p), p)) % p;
        }
        u64 deg_sq = mul(static_cast<u64>(n), inv(s, p), p);
        long deg = -1;
        for (u64 d = 1; d * d <= n; ++d)
            if (mul(d, d, p) == deg_sq) {
                deg = static_cast<long>(d);
                break;
            }
        if (deg < 0) throw consistency_error("character_table: degree not recovered");
        std::vector<u64> chi_p(r);
        for (std::size_t c = 0; c < r; ++c)
            chi_p[c] = mul(mul(static_cast<u64>(deg), u[c], p),
                           inv(static_cast<u64>(G.class_size(static_cast<int>(c))), p), p);

        // Lift each value: chi(g) = sum_t m_t zeta_o^t with
        // m_t = (1/o) sum_l chi_p(g^l) xi^{-tl}, xi = z^{e/o} an o-th root.
        std::vector<Cyclotomic> row(r);
        for (std::size_t c = 0; c < r; ++c) {
            int g = G.class_representatives()[static_cast<int>(c)];
            const long o = G.element_order(g);
            const u64 xi = pow(z, e / static_cast<u64>(o), p);
            const u64 o_inv = inv(static_cast<u64>(o), p);
            Cyclotomic val(0L);
            for (long t = 0; t < o; ++t) {
                u64 m = 0;
                int gl = 0;
                for (long l = 0; l < o; ++l) {
                    u64 w = pow(xi, static_cast<u64>(((-t % o) + o) % o * l % o), p);
                    m = (m + mul(chi_p[static_cast<std::size_t>(G.class_of(gl))], w, p)) % p;
                    gl = G.mult(gl, g);
                }
                m = mul(m, o_inv, p);
                if (m >= static_cast<u64>(deg) + 1)
                    throw consistency_error("character_table: multiplicity lift out of range");
                if (m != 0)
                    val = val + Cyclotomic(Rational(static_cast<long>(m))) *
                                    Cyclotomic::zeta(static_cast<long>(o), t);
            }
            row[c] = val;
        }
        if (row[id_class] != Cyclotomic(deg))
            throw consistency_error("character_table: lifted degree mismatch");
        rows.push_back(std::move(row));
        degs.push_back(deg);
    }

    std::vector<std::size_t> idx(rows.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (degs[a] != degs[b]) return degs[a] < degs[b];
        return rows[a] < rows[b];
    });
    CharacterTable ct;
    for (std::size_t i : idx) {
        ct.table.push_back(rows[i]);
        ct.degrees.push_back(degs[i]);
    }
    return ct;
}

} // namespace coverhom
