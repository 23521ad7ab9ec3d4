#include "gamas/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <utility>

#include "gamas/errors.hpp"

namespace gamas {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational: \"" + std::string(text) + "\"");
    }
    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in rational: \"" + std::string(text) + "\"");
    if (negative) p = -p;
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_str();
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw SizeMismatch("matrix entry count does not match rows x cols");
    }
}

ExactMatrix ExactMatrix::from_rows(std::span<const ExactVector> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw SizeMismatch("rows of differing dimension");
        std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Integer clear_denominators(std::span<const Rational> v, std::vector<Integer>& out) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    out.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
    return l;
}

std::size_t integer_rank(std::vector<std::vector<Integer>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    Integer prev = 1;
    Integer t;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Integer& pivot = m[r][c];
        assert(prev != 0);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                // entries stay minors of the input, so the division is exact
                t = pivot * m[i][j];
                t -= m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

std::size_t rank(const ExactMatrix& m) {
    std::vector<std::vector<Integer>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) clear_denominators(m.row(r), rows[r]);
    return integer_rank(std::move(rows));
}

bool is_independent(std::span<const ExactVector> vectors) {
    if (vectors.empty()) return true;
    const std::size_t d = vectors.front().size();
    for (const auto& v : vectors) {
        if (v.size() != d) throw SizeMismatch("vectors of differing dimension");
    }
    if (vectors.size() > d) return false;
    return rank(ExactMatrix::from_rows(vectors)) == vectors.size();
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw SizeMismatch("dot product of vectors of differing dimension");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace gamas
