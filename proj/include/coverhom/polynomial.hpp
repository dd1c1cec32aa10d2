#pragma once

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "coverhom/errors.hpp"

namespace coverhom {

/// Dense univariate polynomial over an exact field scalar K, lowest degree
/// first. The zero polynomial has an empty coefficient vector.
template <class K>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const K& k) { return Polynomial(std::vector<K>{k}); }
    static Polynomial monomial(std::size_t deg, const K& k = K(1)) {
        std::vector<K> c(deg + 1, K(0));
        c[deg] = k;
        return Polynomial(std::move(c));
    }

    const std::vector<K>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    K leading() const {
        if (is_zero()) throw error("Polynomial: leading coefficient of zero");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back() == K(1); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const K& k, const Polynomial& p) {
        Polynomial r = p;
        for (auto& x : r.c_) x = k * x;
        r.trim();
        return r;
    }

    /// Euclidean division: returns (quotient, remainder).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw error("Polynomial: division by zero polynomial");
        Polynomial r = *this;
        std::vector<K> q(r.c_.size() > d.c_.size() ? r.c_.size() - d.c_.size() + 1 : 1, K(0));
        const K lead_inv = K(1) / d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            K f = r.leading() * lead_inv;
            q[shift] += f;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                r.c_[shift + i] -= f * d.c_[i];
            r.trim();
        }
        return {Polynomial(std::move(q)), r};
    }

    Polynomial pow(std::size_t n) const {
        Polynomial r = constant(K(1));
        Polynomial base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    K evaluate(const K& x) const {
        K r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return (K(1) / leading()) * (*this);
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        if (p.is_zero()) return os << "0";
        for (std::size_t i = p.c_.size(); i-- > 0;) {
            if (p.c_[i].is_zero()) continue;
            os << "(" << p.c_[i] << ")*t^" << i;
            if (i) os << " + ";
        }
        return os;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <class K>
std::tuple<Polynomial<K>, Polynomial<K>, Polynomial<K>> extended_gcd(Polynomial<K> a,
                                                                     Polynomial<K> b) {
    Polynomial<K> u0 = Polynomial<K>::constant(K(1)), v0;
    Polynomial<K> u1, v1 = Polynomial<K>::constant(K(1));
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        a = b;
        b = r;
        auto u2 = u0 - q * u1;
        auto v2 = v0 - q * v1;
        u0 = u1; v0 = v1;
        u1 = u2; v1 = v2;
    }
    if (a.is_zero()) return {a, u0, v0};
    K inv = K(1) / a.leading();
    return {inv * a, inv * u0, inv * v0};
}

/// Exact monic n-th root: returns monic f with f^n = g, computed coefficient by
/// coefficient from the leading terms. Throws consistency_error if no exact
/// root exists.
template <class K>
Polynomial<K> poly_nth_root(const Polynomial<K>& g, std::size_t n) {
    if (n == 0) throw error("poly_nth_root: n must be >= 1");
    if (!g.is_monic()) throw error("poly_nth_root: input must be monic");
    if (n == 1) return g;
    if (g.degree() % static_cast<long>(n) != 0)
        throw consistency_error("poly_nth_root: degree not divisible by n");
    const std::size_t m = static_cast<std::size_t>(g.degree()) / n;
    Polynomial<K> f = Polynomial<K>::monomial(m);
    const K n_inv = K(1) / K(static_cast<long>(n));
    for (std::size_t k = 1; k <= m; ++k) {
        // Coefficient of t^(n*m - k) in g - f^n is n * (next coefficient of f).
        Polynomial<K> diff = g - f.pow(n);
        K a = n_inv * diff.coeff(n * m - k);
        if (!a.is_zero()) f = f + Polynomial<K>::monomial(m - k, a);
    }
    if (f.pow(n) != g)
        throw consistency_error("poly_nth_root: no exact n-th root exists");
    return f;
}

} // namespace coverhom
