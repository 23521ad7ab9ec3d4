#pragma once

#include <map>
#include <string>

#include "gamas/linalg.hpp"
#include "gamas/permutation.hpp"

namespace gamas {

/// Finite formal Q-combination of permutations of one degree n. Zero
/// coefficients are never stored; terms iterate in lexicographic image order.
class GroupAlgebraElement {
public:
    using Terms = std::map<Permutation, Rational>;

    explicit GroupAlgebraElement(int n = 0) : n_(n) {}
    static GroupAlgebraElement identity(int n);
    static GroupAlgebraElement basis(const Permutation& sigma, Rational coeff = 1);

    int degree() const { return n_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of sigma (zero when absent).
    Rational coefficient(const Permutation& sigma) const;

    /// Adds coeff * sigma, pruning a resulting zero.
    void add_term(const Permutation& sigma, const Rational& coeff);

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator*=(const Rational& c);

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& c) { return a *= c; }
    friend GroupAlgebraElement operator*(const Rational& c, GroupAlgebraElement a) { return a *= c; }

    bool operator==(const GroupAlgebraElement&) const = default;

    /// "1/2*() + 1/2*(1 2)" style rendering, in cycle notation.
    std::string to_string() const;

private:
    int n_;
    Terms terms_;
};

/// Convolution product: coefficient of pi is sum over sigma o tau = pi of x(sigma) y(tau).
GroupAlgebraElement algebra_multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

inline GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    return algebra_multiply(x, y);
}

}  // namespace gamas
