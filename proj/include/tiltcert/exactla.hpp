#pragma once

// Exact linear algebra over the rationals.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace tiltcert::la {

using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

bool is_zero(const Vector& v);
Vector zeros(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
void axpy(Vector& y, const Rational& a, const Vector& x);  // y += a x

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    Matrix transpose() const;
    Vector apply(const Vector& x) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form with its pivot columns.
Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Row-reduced basis kept incrementally; each stored row is normalized at its
/// pivot and cleared in every other stored row's pivot column.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<Vector>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Residue of v after elimination against the stored rows.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const { return is_zero(reduce(v)); }
    /// Adds v if independent; returns whether the dimension grew.
    bool insert(const Vector& v);

private:
    std::size_t ambient_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;  // parallel to rows_
};

class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : basis_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);
    static Subspace whole(std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return basis_.ambient_dim(); }
    std::size_t dim() const noexcept { return basis_.dim(); }
    /// Basis in reduced echelon form; pivots strictly increasing.
    std::vector<Vector> basis() const;
    std::vector<std::size_t> pivots() const;

    bool contains(const Vector& v) const { return basis_.contains(v); }
    bool contains(const Subspace& other) const;
    Vector reduce(const Vector& v) const { return basis_.reduce(v); }
    void add(const Vector& v) { basis_.insert(v); }

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    EchelonBasis basis_;
};

Subspace kernel(const Matrix& m);
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Coordinates on ambient/sub with explicit lifted representatives.
class QuotientMap {
public:
    /// Representatives are drawn first from `preferred`, then from the ambient basis.
    static QuotientMap build(const Subspace& ambient, const Subspace& sub,
                             const std::vector<Vector>& preferred = {});

    std::size_t dim() const noexcept { return reps_.size(); }
    std::size_t ambient_dim() const noexcept { return width_; }
    const std::vector<Vector>& representatives() const noexcept { return reps_; }
    const Subspace& sub() const noexcept { return sub_; }

    /// Class of v in the quotient; throws SubspaceNotContained if v is outside the ambient space.
    Vector coordinates(const Vector& v) const;
    Vector lift(const Vector& coords) const;

private:
    std::size_t width_ = 0;
    std::vector<Vector> reps_;
    Subspace sub_;
    // echelon rows of span(reps ∪ sub basis) with their expansion in those generators
    std::vector<Vector> rows_;
    std::vector<Vector> expansions_;
    std::vector<std::size_t> pivots_;
};

QuotientMap quotient_coordinates(const Subspace& ambient, const Subspace& sub);

Rational determinant(Matrix m);

using IntMatrix = std::vector<std::vector<Integer>>;
/// Diagonal of the Smith normal form (nonnegative, each dividing the next).
std::vector<Integer> smith_normal_form(IntMatrix m);

}  // namespace tiltcert::la
