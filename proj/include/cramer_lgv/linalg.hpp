#ifndef CRAMER_LGV_LINALG_HPP
#define CRAMER_LGV_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "cramer_lgv/rational.hpp"

namespace cramer_lgv {

/// Square n x n matrix of exact rationals, n >= 1, row-major.
class Matrix {
public:
    /// Zero matrix. Throws SizeMismatch for n == 0.
    explicit Matrix(std::size_t n);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    Rational& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
    const Rational& operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }
    std::vector<Rational> column(std::size_t c) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_;
    std::vector<Rational> data_;
};

struct LinearSystem {
    Matrix matrix;
    std::vector<Rational> rhs;
};

/// Throws SizeMismatch unless rhs has matrix.size() entries.
LinearSystem make_system(Matrix matrix, std::vector<Rational> rhs);

inline constexpr std::size_t kLeibnizMaxSize = 8;

/// Signed sum over all n! permutations. Throws SizeTooLarge above kLeibnizMaxSize.
Rational det_leibniz(const Matrix& m);

/// Bareiss fraction-free elimination after clearing denominators row by row.
Rational det_bareiss(const Matrix& m);

/// Gauss-Jordan elimination over the rationals, pivoting on the first nonzero
/// entry of each column. Throws SingularMatrix.
std::vector<Rational> solve_gauss(const LinearSystem& sys);

/// Copy of m with column `column` (0-based) replaced by `values`.
/// Throws IndexOutOfRange / SizeMismatch.
Matrix replace_column(const Matrix& m, std::size_t column, std::span<const Rational> values);

std::vector<Rational> multiply(const Matrix& m, std::span<const Rational> v);

/// Parity of the inversion count of a permutation of 0..n-1: +1 or -1.
int permutation_sign(std::span<const std::size_t> images);

}  // namespace cramer_lgv

#endif  // CRAMER_LGV_LINALG_HPP
