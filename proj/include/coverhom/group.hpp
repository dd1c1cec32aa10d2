#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "coverhom/errors.hpp"

namespace coverhom {

/// A permutation of {0..degree-1}, stored as its image array.
using Permutation = std::vector<int>;

inline Permutation perm_identity(int degree) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

/// (a * b)(x) = a(b(x))
inline Permutation perm_compose(const Permutation& a, const Permutation& b) {
    Permutation r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
    return r;
}

inline Permutation perm_inverse(const Permutation& a) {
    Permutation r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<int>(x);
    return r;
}

inline bool perm_is_bijection(const Permutation& p, int degree) {
    if (static_cast<int>(p.size()) != degree) return false;
    std::vector<bool> seen(degree, false);
    for (int x : p) {
        if (x < 0 || x >= degree || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

/// Finite group enumerated from permutation generators. Elements are indexed
/// by their breadth-first discovery order with the identity at index 0;
/// everything downstream keys on these indices, so the order is part of the
/// deterministic contract.
class FiniteGroup {
  public:
    static constexpr std::size_t kDefaultSizeBound = 5000;

    FiniteGroup(std::vector<Permutation> generators, int degree,
                std::size_t size_bound = kDefaultSizeBound)
        : degree_(degree), generators_(std::move(generators)) {
        for (const auto& g : generators_)
            if (!perm_is_bijection(g, degree))
                throw parse_error("FiniteGroup: generator is not a bijection on the degree");
        enumerate(size_bound);
        build_tables();
    }

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<int>& generator_indices() const { return generator_indices_; }
    long exponent() const { return exponent_; }

    int mult(int a, int b) const { return mult_[a * static_cast<int>(order()) + b]; }
    int inverse(int a) const { return inverse_[a]; }
    int element_order(int a) const { return element_order_[a]; }

    int power(int a, long e) const {
        long o = element_order_[a];
        e %= o;
        if (e < 0) e += o;
        int r = 0;
        for (long i = 0; i < e; ++i) r = mult(r, a);
        return r;
    }

    int index_of(const Permutation& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw error("FiniteGroup: permutation not in group");
        return it->second;
    }

    std::size_t class_count() const { return class_of_.empty() ? 0 : class_reps_.size(); }
    int class_of(int element) const { return class_of_[element]; }
    const std::vector<int>& class_representatives() const { return class_reps_; }
    const std::vector<std::vector<int>>& class_members() const { return class_members_; }
    std::size_t class_size(int c) const { return class_members_[c].size(); }
    /// Class containing the inverses of class c.
    int inverse_class(int c) const { return class_of_[inverse_[class_reps_[c]]]; }

    /// True iff the given element indices generate the whole group.
    bool generates(const std::vector<int>& elems) const {
        std::vector<bool> seen(order(), false);
        std::vector<int> frontier{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!frontier.empty()) {
            int x = frontier.back();
            frontier.pop_back();
            for (int g : elems) {
                int y = mult(x, g);
                if (!seen[y]) {
                    seen[y] = true;
                    ++count;
                    frontier.push_back(y);
                }
            }
        }
        return count == order();
    }

    /// FNV-1a hash of the multiplication table; used as the cache key.
    std::uint64_t multiplication_hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (int x : mult_) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }

  private:
    void enumerate(std::size_t size_bound) {
        elements_.push_back(perm_identity(degree_));
        index_[elements_[0]] = 0;
        std::size_t head = 0;
        while (head < elements_.size()) {
            Permutation x = elements_[head++];
            for (const auto& g : generators_) {
                Permutation y = perm_compose(x, g);
                if (index_.count(y)) continue;
                if (elements_.size() >= size_bound)
                    throw size_error("FiniteGroup: closure exceeds size bound");
                index_[y] = static_cast<int>(elements_.size());
                elements_.push_back(std::move(y));
            }
        }
        for (const auto& g : generators_) generator_indices_.push_back(index_.at(g));
    }

    void build_tables() {
        const int n = static_cast<int>(order());
        mult_.resize(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                mult_[a * n + b] = index_.at(perm_compose(elements_[a], elements_[b]));
        inverse_.resize(n);
        for (int a = 0; a < n; ++a) inverse_[a] = index_.at(perm_inverse(elements_[a]));

        element_order_.assign(n, 1);
        exponent_ = 1;
        for (int a = 0; a < n; ++a) {
            int x = a, o = 1;
            while (x != 0) {
                x = mult(x, a);
                ++o;
            }
            element_order_[a] = o;
            exponent_ = std::lcm(exponent_, static_cast<long>(o));
        }

        class_of_.assign(n, -1);
        for (int a = 0; a < n; ++a) {
            if (class_of_[a] != -1) continue;
            const int c = static_cast<int>(class_reps_.size());
            class_reps_.push_back(a);
            class_members_.push_back({});
            std::vector<int> frontier{a};
            class_of_[a] = c;
            class_members_[c].push_back(a);
            while (!frontier.empty()) {
                int x = frontier.back();
                frontier.pop_back();
                for (int t = 0; t < n; ++t) {
                    int y = mult(mult(t, x), inverse_[t]);
                    if (class_of_[y] == -1) {
                        class_of_[y] = c;
                        class_members_[c].push_back(y);
                        frontier.push_back(y);
                    }
                }
            }
            std::sort(class_members_[c].begin(), class_members_[c].end());
        }
    }

    int degree_;
    std::vector<Permutation> generators_;
    std::vector<int> generator_indices_;
    std::vector<Permutation> elements_;
    std::map<Permutation, int> index_;
    std::vector<int> mult_;
    std::vector<int> inverse_;
    std::vector<int> element_order_;
    long exponent_ = 1;
    std::vector<int> class_of_;
    std::vector<int> class_reps_;
    std::vector<std::vector<int>> class_members_;
};

} // namespace coverhom
