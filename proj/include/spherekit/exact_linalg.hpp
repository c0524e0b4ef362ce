#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace spherekit {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// Dense matrix of exact rationals (GMP keeps every entry in lowest terms).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    RationalVector multiply(const RationalVector& v) const;
    RationalMatrix transpose() const;

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form of M together with its pivot columns.
struct Echelon {
    RationalMatrix reduced;  // rank × cols, pivot entries 1
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

Echelon row_reduce(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Basis of the right kernel, one vector per free column in increasing
/// order; each vector is scaled so its first nonzero entry is 1.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Some x with M·x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

/// Rows of `vectors` reduced to RREF, zero rows dropped; a canonical basis of
/// their span.
std::vector<RationalVector> canonical_basis(const std::vector<RationalVector>& vectors, std::size_t length);

bool is_zero(const RationalVector& v);

}  // namespace spherekit
