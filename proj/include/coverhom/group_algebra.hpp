#pragma once

#include <map>

#include "coverhom/group.hpp"
#include "coverhom/rational.hpp"

namespace coverhom {

/// Element of the group algebra K[G], stored as a sparse map from element
/// index to coefficient; zero coefficients are never kept. The group object
/// must outlive the element.
template <class K> class GroupAlgebra {
  public:
    explicit GroupAlgebra(const FiniteGroup& G) : G_(&G) {}

    static GroupAlgebra basis(const FiniteGroup& G, int element) {
        GroupAlgebra r(G);
        r.c_[element] = K(1);
        return r;
    }

    const FiniteGroup& group() const { return *G_; }
    const std::map<int, K>& coeffs() const { return c_; }

    K coeff(int element) const {
        auto it = c_.find(element);
        return it == c_.end() ? K(0) : it->second;
    }

    void set_coeff(int element, const K& v) {
        if (v == K(0))
            c_.erase(element);
        else
            c_[element] = v;
    }

    GroupAlgebra operator+(const GroupAlgebra& o) const {
        GroupAlgebra r = *this;
        for (const auto& [g, v] : o.c_) r.set_coeff(g, r.coeff(g) + v);
        return r;
    }
    GroupAlgebra operator-(const GroupAlgebra& o) const {
        GroupAlgebra r = *this;
        for (const auto& [g, v] : o.c_) r.set_coeff(g, r.coeff(g) - v);
        return r;
    }
    GroupAlgebra operator*(const K& s) const {
        GroupAlgebra r(*G_);
        if (s == K(0)) return r;
        for (const auto& [g, v] : c_) r.c_[g] = v * s;
        return r;
    }
    GroupAlgebra operator*(const GroupAlgebra& o) const {
        GroupAlgebra r(*G_);
        for (const auto& [a, va] : c_)
            for (const auto& [b, vb] : o.c_) {
                int g = G_->mult(a, b);
                r.set_coeff(g, r.coeff(g) + va * vb);
            }
        return r;
    }
    bool operator==(const GroupAlgebra& o) const { return c_ == o.c_; }
    bool operator!=(const GroupAlgebra& o) const { return c_ != o.c_; }

    /// The canonical involution tau(sum a_h h) = sum a_h h^{-1}.
    GroupAlgebra tau() const {
        GroupAlgebra r(*G_);
        for (const auto& [g, v] : c_) r.c_[G_->inverse(g)] = v;
        return r;
    }

    bool is_central() const {
        for (int g : G_->generator_indices())
            if (*this * basis(*G_, g) != basis(*G_, g) * *this) return false;
        return true;
    }

  private:
    const FiniteGroup* G_;
    std::map<int, K> c_;
};

using GroupAlgebraElement = GroupAlgebra<Rational>;

} // namespace coverhom
