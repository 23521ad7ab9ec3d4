#include "gamas/group_algebra.hpp"

#include "gamas/errors.hpp"

namespace gamas {

GroupAlgebraElement GroupAlgebraElement::identity(int n) {
    return basis(Permutation::identity(n));
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& sigma, Rational coeff) {
    GroupAlgebraElement x(sigma.degree());
    x.add_term(sigma, coeff);
    return x;
}

Rational GroupAlgebraElement::coefficient(const Permutation& sigma) const {
    const auto it = terms_.find(sigma);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& sigma, const Rational& coeff) {
    if (sigma.degree() != n_) throw SizeMismatch("group algebra term of the wrong degree");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(sigma, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    if (o.n_ != n_) throw SizeMismatch("group algebra elements of differing degree");
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
    if (o.n_ != n_) throw SizeMismatch("group algebra elements of differing degree");
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) v *= c;
    return *this;
}

std::string GroupAlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += gamas::to_string(c) + "*" + p.cycle_string();
    }
    return s;
}

GroupAlgebraElement algebra_multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    if (x.degree() != y.degree()) throw SizeMismatch("algebra_multiply: differing degree");
    const int n = x.degree();
    GroupAlgebraElement out(n);
    std::vector<int> im(static_cast<std::size_t>(n));
    for (const auto& [s, a] : x.terms()) {
        for (const auto& [t, b] : y.terms()) {
            for (int i = 1; i <= n; ++i) im[static_cast<std::size_t>(i - 1)] = s(t(i));
            out.add_term(Permutation(im), a * b);
        }
    }
    return out;
}

}  // namespace gamas
