#pragma once

// Exact rational scalars, vectors and matrices. Every zero test in the
// library bottoms out here, so nothing in this header touches floating point.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gamas {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP's canonical form).
using Rational = mpq_class;
using Integer = mpz_class;
using ExactVector = std::vector<Rational>;

/// Parses "[+-]digits[/digits]". The denominator must be positive; the result
/// is canonicalized, so "4/6" reads as 2/3.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or just "p" when q = 1.
std::string to_string(const Rational& value);

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    /// Matrix whose rows are the given vectors; all must share one dimension.
    static ExactMatrix from_rows(std::span<const ExactVector> rows);
    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const ExactMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Rank over Q, by fraction-free (Bareiss) elimination on integer-scaled rows.
std::size_t rank(const ExactMatrix& m);

/// Same, for a matrix that is already integral. Rows are consumed.
std::size_t integer_rank(std::vector<std::vector<Integer>> rows);

/// True iff the vectors are linearly independent over Q. The empty list is
/// independent; any zero vector or more than d vectors makes it dependent.
/// Throws SizeMismatch when the vectors do not share a dimension.
bool is_independent(std::span<const ExactVector> vectors);

/// Scales a rational vector by the lcm of its denominators. Returns that lcm.
Integer clear_denominators(std::span<const Rational> v, std::vector<Integer>& out);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> v);

}  // namespace gamas
