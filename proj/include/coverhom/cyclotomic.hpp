#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

#include "coverhom/errors.hpp"
#include "coverhom/matrix.hpp"
#include "coverhom/polynomial.hpp"
#include "coverhom/rational.hpp"

namespace coverhom {

namespace detail {

inline long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        d.push_back(i);
        if (i != n / i) d.push_back(n / i);
    }
    std::sort(d.begin(), d.end());
    return d;
}

/// n-th cyclotomic polynomial, computed as (x^n - 1) / prod of smaller ones.
inline const Polynomial<Rational>& cyclotomic_polynomial(long n) {
    static std::map<long, Polynomial<Rational>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    // Fill every divisor bottom-up so each division has its factors available.
    for (long d : divisors(n)) {
        if (cache.count(d)) continue;
        std::vector<Rational> xd(static_cast<std::size_t>(d) + 1, Rational(0));
        xd[0] = Rational(-1);
        xd.back() = Rational(1);
        Polynomial<Rational> rem{std::move(xd)};
        for (long e : divisors(d)) {
            if (e == d) break;
            auto [q, r] = rem.divmod(cache.at(e));
            if (!r.is_zero()) throw consistency_error("cyclotomic polynomial division");
            rem = q;
        }
        cache.emplace(d, std::move(rem));
    }
    return cache.at(n);
}

} // namespace detail

/// Exact element of the cyclotomic field Q(zeta_n): a coefficient vector of
/// length phi(n) modulo the n-th cyclotomic polynomial. The stored conductor is
/// always minimal for the value, so equality is plain structural equality.
class Cyclotomic {
  public:
    Cyclotomic() : n_(1), c_{Rational(0)} {}
    Cyclotomic(long k) : n_(1), c_{Rational(k)} {}
    Cyclotomic(const Rational& r) : n_(1), c_{r} {}

    /// zeta_n^k
    static Cyclotomic zeta(long n, long k = 1) {
        if (n <= 0) throw error("Cyclotomic: conductor must be positive");
        k %= n;
        if (k < 0) k += n;
        Cyclotomic z;
        z.n_ = n;
        z.c_ = reduce_power_sum({{k, Rational(1)}}, n);
        z.minimize();
        return z;
    }

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_rational() const { return n_ == 1; }
    Rational rational_value() const {
        if (!is_rational()) throw error("Cyclotomic: value is irrational: " + str());
        return c_[0];
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Total order for deterministic sorting only (no arithmetic meaning).
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        long n = std::lcm(a.n_, b.n_);
        auto ca = a.promoted_coeffs(n);
        auto cb = b.promoted_coeffs(n);
        for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
        return make(n, std::move(ca));
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        long n = std::lcm(a.n_, b.n_);
        Polynomial<Rational> pa{a.promoted_coeffs(n)};
        Polynomial<Rational> pb{b.promoted_coeffs(n)};
        auto prod = pa * pb;
        auto [q, r] = prod.divmod(detail::cyclotomic_polynomial(n));
        auto c = r.coeffs();
        c.resize(static_cast<std::size_t>(detail::euler_phi(n)), Rational(0));
        return make(n, std::move(c));
    }

    Cyclotomic inverse() const {
        if (is_zero()) throw error("Cyclotomic: inverse of zero");
        if (n_ == 1) return Cyclotomic(c_[0].inverse());
        auto [g, u, v] = extended_gcd(Polynomial<Rational>{std::vector<Rational>(c_)},
                                      detail::cyclotomic_polynomial(n_));
        if (g.degree() != 0) throw consistency_error("Cyclotomic: non-invertible element");
        auto inv = (Rational(1) / g.coeff(0)) * u;
        auto [q, r] = inv.divmod(detail::cyclotomic_polynomial(n_));
        auto c = r.coeffs();
        c.resize(c_.size(), Rational(0));
        return make(n_, std::move(c));
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    /// Galois automorphism zeta_n -> zeta_n^k; requires gcd(k, n) = 1.
    /// k = -1 is complex conjugation.
    Cyclotomic galois(long k) const {
        long km = k % n_;
        if (km < 0) km += n_;
        if (n_ == 1) return *this;
        if (std::gcd(km, n_) != 1) throw error("Cyclotomic: invalid Galois index");
        std::vector<std::pair<long, Rational>> terms;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) terms.push_back({(static_cast<long>(i) * km) % n_, c_[i]});
        return make(n_, reduce_power_sum(terms, n_));
    }

    Cyclotomic conjugate() const { return galois(-1); }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << c_[i];
            if (i > 0) os << "*z" << n_ << "^" << i;
        }
        if (first) os << "0";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) {
        return os << x.str();
    }

    /// Coefficient vector of this value viewed in Q(zeta_n); n must be a
    /// multiple of the stored conductor.
    std::vector<Rational> promoted_coeffs(long n) const {
        if (n == n_) return c_;
        if (n % n_ != 0) throw error("Cyclotomic: cannot promote to non-multiple conductor");
        std::vector<std::pair<long, Rational>> terms;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) terms.push_back({static_cast<long>(i) * (n / n_), c_[i]});
        return reduce_power_sum(terms, n);
    }

  private:
    static Cyclotomic make(long n, std::vector<Rational> c) {
        Cyclotomic z;
        z.n_ = n;
        z.c_ = std::move(c);
        z.minimize();
        return z;
    }

    /// Reduces a sparse sum of powers of zeta_n into the canonical basis.
    static std::vector<Rational> reduce_power_sum(
        const std::vector<std::pair<long, Rational>>& terms, long n) {
        const std::size_t phi = static_cast<std::size_t>(detail::euler_phi(n));
        long maxdeg = 0;
        for (const auto& [e, r] : terms) maxdeg = std::max(maxdeg, e % n);
        std::vector<Rational> poly(static_cast<std::size_t>(maxdeg) + 1, Rational(0));
        for (const auto& [e, r] : terms) poly[static_cast<std::size_t>(e % n)] += r;
        Polynomial<Rational> p{std::move(poly)};
        if (p.degree() >= static_cast<long>(phi)) {
            auto [q, rem] = p.divmod(detail::cyclotomic_polynomial(n));
            p = rem;
        }
        auto c = p.coeffs();
        c.resize(phi, Rational(0));
        return c;
    }

    /// Descends to the smallest conductor d | n whose field contains the value.
    void minimize() {
        if (n_ == 1) return;
        for (long d : detail::divisors(n_)) {
            if (d == n_) break;
            if (!fixed_by_subgroup(d)) continue;
            rewrite_in_conductor(d);
            return;
        }
    }

    bool fixed_by_subgroup(long d) const {
        // Gal(Q(zeta_n)/Q(zeta_d)) = { k mod n : gcd(k,n)=1, k = 1 mod d }.
        for (long k = 2; k < n_; ++k) {
            if (std::gcd(k, n_) != 1 || (k - 1) % d != 0) continue;
            std::vector<std::pair<long, Rational>> terms;
            for (std::size_t i = 0; i < c_.size(); ++i)
                if (!c_[i].is_zero()) terms.push_back({(static_cast<long>(i) * k) % n_, c_[i]});
            if (reduce_power_sum(terms, n_) != c_) return false;
        }
        return true;
    }

    void rewrite_in_conductor(long d) {
        const std::size_t phi_n = c_.size();
        const std::size_t phi_d = static_cast<std::size_t>(detail::euler_phi(d));
        Matrix<Rational> basis(phi_n, phi_d);
        for (std::size_t j = 0; j < phi_d; ++j) {
            auto col = reduce_power_sum({{static_cast<long>(j) * (n_ / d), Rational(1)}}, n_);
            for (std::size_t i = 0; i < phi_n; ++i) basis(i, j) = col[i];
        }
        c_ = basis.solve(c_);
        n_ = d;
    }

    long n_;
    std::vector<Rational> c_;
};

} // namespace coverhom
