#include "cramer_lgv/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cramer_lgv/errors.hpp"

namespace cramer_lgv {

Matrix::Matrix(std::size_t n) : n_(n), data_(n * n) {
    if (n == 0) {
        throw Error(ErrorCode::SizeMismatch, "matrix size must be at least 1");
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) : Matrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) {
            throw Error(ErrorCode::SizeMismatch, "matrix must be square");
        }
        std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * n_));
        ++r;
    }
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    Matrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size()) {
            throw Error(ErrorCode::SizeMismatch,
                        "row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                            " entries, expected " + std::to_string(rows.size()));
        }
        for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

std::vector<Rational> Matrix::column(std::size_t c) const {
    std::vector<Rational> col;
    col.reserve(n_);
    for (std::size_t r = 0; r < n_; ++r) col.push_back((*this)(r, c));
    return col;
}

LinearSystem make_system(Matrix matrix, std::vector<Rational> rhs) {
    if (rhs.size() != matrix.size()) {
        throw Error(ErrorCode::SizeMismatch,
                    "right-hand side has " + std::to_string(rhs.size()) + " entries, matrix is " +
                        std::to_string(matrix.size()) + "x" + std::to_string(matrix.size()));
    }
    return LinearSystem{std::move(matrix), std::move(rhs)};
}

int permutation_sign(std::span<const std::size_t> images) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            if (images[i] > images[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

Rational det_leibniz(const Matrix& m) {
    const std::size_t n = m.size();
    if (n > kLeibnizMaxSize) {
        throw Error(ErrorCode::SizeTooLarge,
                    "Leibniz determinant limited to n <= " + std::to_string(kLeibnizMaxSize));
    }
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    Rational det;
    do {
        Rational term(permutation_sign(sigma));
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, sigma[i]);
        det += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return det;
}

Rational det_bareiss(const Matrix& m) {
    const std::size_t n = m.size();
    // Scale row r by the lcm of its denominators so the working matrix is
    // integral; det(m) = det(work) / prod(scale).
    std::vector<std::vector<mpz_class>> work(n, std::vector<mpz_class>(n));
    mpz_class scale_product = 1;
    for (std::size_t r = 0; r < n; ++r) {
        mpz_class scale = 1;
        for (std::size_t c = 0; c < n; ++c) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).value().get_den_mpz_t());
        }
        for (std::size_t c = 0; c < n; ++c) {
            const mpq_class& q = m(r, c).value();
            work[r][c] = q.get_num() * (scale / q.get_den());
        }
        scale_product *= scale;
    }

    int sign = 1;
    mpz_class prev_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (work[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && work[p][k] == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(work[k], work[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = work[i][j] * work[k][k] - work[i][k] * work[k][j];
                mpz_divexact(work[i][j].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            work[i][k] = 0;
        }
        prev_pivot = work[k][k];
    }
    mpz_class det = work[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rational(mpq_class(det, scale_product));
}

std::vector<Rational> solve_gauss(const LinearSystem& sys) {
    const std::size_t n = sys.matrix.size();
    if (sys.rhs.size() != n) {
        throw Error(ErrorCode::SizeMismatch, "right-hand side length does not match matrix size");
    }
    // Augmented rows [A | b].
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) rows[r][c] = sys.matrix(r, c);
        rows[r][n] = sys.rhs[r];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && rows[p][k].is_zero()) ++p;
        if (p == n) {
            throw Error(ErrorCode::SingularMatrix, "singular matrix: det(A) = 0");
        }
        std::swap(rows[k], rows[p]);
        const Rational pivot = rows[k][k];
        for (std::size_t c = k; c <= n; ++c) rows[k][c] /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || rows[i][k].is_zero()) continue;
            const Rational factor = rows[i][k];
            for (std::size_t c = k; c <= n; ++c) rows[i][c] -= factor * rows[k][c];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = rows[r][n];
    return x;
}

Matrix replace_column(const Matrix& m, std::size_t column, std::span<const Rational> values) {
    if (column >= m.size()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "column " + std::to_string(column) + " out of range for size " + std::to_string(m.size()));
    }
    if (values.size() != m.size()) {
        throw Error(ErrorCode::SizeMismatch, "replacement column has wrong length");
    }
    Matrix out = m;
    for (std::size_t r = 0; r < m.size(); ++r) out(r, column) = values[r];
    return out;
}

std::vector<Rational> multiply(const Matrix& m, std::span<const Rational> v) {
    if (v.size() != m.size()) {
        throw Error(ErrorCode::SizeMismatch, "vector length does not match matrix size");
    }
    std::vector<Rational> out(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) out[r] += m(r, c) * v[c];
    }
    return out;
}

}  // namespace cramer_lgv
