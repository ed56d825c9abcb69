#include "tiltcert/exactla.hpp"

#include "tiltcert/errors.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace tiltcert::la {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("not a rational: " + text);
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0) throw ParseError("zero denominator: " + text);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vector zeros(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

void axpy(Vector& y, const Rational& a, const Vector& x) {
    if (sgn(a) == 0) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (sgn(x[i]) != 0) y[i] += a * x[i];
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<long>(r * cols_),
                  data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(x[c]) != 0 && sgn((*this)(r, c)) != 0) y[r] += (*this)(r, c) * x[c];
    return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (sgn(b(k, j)) != 0) p(i, j) += aik * b(k, j);
        }
    return p;
}

// ------------------------------------------------------------ elimination

Echelon rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t r = lead_row;
        while (r < m.rows() && sgn(m(r, c)) == 0) ++r;
        if (r == m.rows()) continue;
        if (r != lead_row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(lead_row, j));
        Rational inv = 1 / m(lead_row, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead_row || sgn(m(i, c)) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(lead_row, j)) != 0) m(i, j) -= f * m(lead_row, j);
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Vector EchelonBasis::reduce(Vector v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector length differs from ambient dimension");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& c = v[pivots_[i]];
        if (sgn(c) == 0) continue;
        Rational f = c;
        axpy(v, -f, rows_[i]);
    }
    return v;
}

bool EchelonBasis::insert(const Vector& v) {
    Vector r = reduce(v);
    auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (it == r.end()) return false;
    std::size_t p = static_cast<std::size_t>(it - r.begin());
    Rational inv = 1 / r[p];
    for (auto& x : r)
        if (sgn(x) != 0) x *= inv;
    for (auto& row : rows_) {
        if (sgn(row[p]) == 0) continue;
        Rational f = row[p];
        axpy(row, -f, r);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
}

// --------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
    Subspace s(ambient_dim);
    for (const auto& g : generators) s.basis_.insert(g);
    return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) s.basis_.insert(unit_vector(ambient_dim, i));
    return s;
}

std::vector<Vector> Subspace::basis() const { return basis_.rows(); }
std::vector<std::size_t> Subspace::pivots() const { return basis_.pivots(); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) return false;
    return std::all_of(other.basis_.rows().begin(), other.basis_.rows().end(),
                       [this](const Vector& v) { return contains(v); });
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.basis_.pivots() == b.basis_.pivots() &&
           a.basis_.rows() == b.basis_.rows();
}

Subspace kernel(const Matrix& m) {
    Echelon e = rref(m);
    Subspace k(m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
        k.add(v);
    }
    return k;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    Echelon e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
    return x;
}

// ------------------------------------------------------------ QuotientMap

QuotientMap QuotientMap::build(const Subspace& ambient, const Subspace& sub,
                               const std::vector<Vector>& preferred) {
    if (!ambient.contains(sub)) throw SubspaceNotContained("sub is not contained in ambient");
    QuotientMap q;
    q.width_ = ambient.ambient_dim();
    q.sub_ = sub;
    Subspace acc = sub;
    auto consider = [&](const Vector& v) {
        if (q.reps_.size() + sub.dim() == ambient.dim()) return;
        if (!ambient.contains(v)) throw SubspaceNotContained("preferred representative outside ambient");
        if (acc.contains(v)) return;
        acc.add(v);
        q.reps_.push_back(v);
    };
    for (const auto& v : preferred) consider(v);
    for (const auto& v : ambient.basis()) consider(v);

    // Eliminate over [reps; sub basis] while tracking expansions in those generators.
    std::vector<Vector> gens = q.reps_;
    for (const auto& v : sub.basis()) gens.push_back(v);
    const std::size_t m = gens.size();
    for (std::size_t g = 0; g < m; ++g) {
        Vector v = gens[g];
        Vector ex = unit_vector(m, g);
        for (std::size_t i = 0; i < q.rows_.size(); ++i) {
            Rational c = v[q.pivots_[i]];
            if (sgn(c) == 0) continue;
            axpy(v, -c, q.rows_[i]);
            axpy(ex, -c, q.expansions_[i]);
        }
        auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
        if (it == v.end()) throw std::logic_error("quotient generators are dependent");
        std::size_t p = static_cast<std::size_t>(it - v.begin());
        Rational inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        for (auto& x : ex) x *= inv;
        for (std::size_t i = 0; i < q.rows_.size(); ++i) {
            Rational c = q.rows_[i][p];
            if (sgn(c) == 0) continue;
            axpy(q.rows_[i], -c, v);
            axpy(q.expansions_[i], -c, ex);
        }
        q.rows_.push_back(std::move(v));
        q.expansions_.push_back(std::move(ex));
        q.pivots_.push_back(p);
    }
    return q;
}

Vector QuotientMap::coordinates(const Vector& v) const {
    if (v.size() != width_) throw std::invalid_argument("vector length mismatch in quotient");
    Vector rest = v;
    Vector coeff(reps_.size() + sub_.dim());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rational c = rest[pivots_[i]];
        if (sgn(c) == 0) continue;
        axpy(rest, -c, rows_[i]);
        axpy(coeff, c, expansions_[i]);
    }
    if (!is_zero(rest)) throw SubspaceNotContained("vector is not in the ambient space of the quotient");
    coeff.resize(reps_.size());
    return coeff;
}

Vector QuotientMap::lift(const Vector& coords) const {
    if (coords.size() != reps_.size()) throw std::invalid_argument("coordinate length mismatch");
    Vector v(width_);
    for (std::size_t i = 0; i < reps_.size(); ++i) axpy(v, coords[i], reps_[i]);
    return v;
}

QuotientMap quotient_coordinates(const Subspace& ambient, const Subspace& sub) {
    return QuotientMap::build(ambient, sub);
}

// -------------------------------------------------------------- integers

Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && sgn(m(r, c)) == 0) ++r;
        if (r == n) return 0;
        if (r != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(r, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::vector<Integer> smith_normal_form(IntMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<Integer> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry in the trailing block becomes the pivot
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) pr = i, pc = j;
        if (pr == rows) break;
        std::swap(m[t], m[pr]);
        for (auto& row : m) std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (auto& row : m) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the whole trailing block
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
                        clean = false;
                        break;
                    }
        }
        diag.push_back(abs(m[t][t]));
        ++t;
    }
    while (diag.size() < std::min(rows, cols)) diag.emplace_back(0);
    return diag;
}

}  // namespace tiltcert::la
