#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cubicgit/rational.hpp"

namespace cubicgit {

/// Dense exact rational matrix.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r, std::vector<Rat>(c, Rat(0))) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i][j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }

    bool operator==(const Mat& o) const { return a_ == o.a_; }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (a_[i][k] == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a_[i][k] * o(k, j);
            }
        return r;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Mat: dimension mismatch in apply");
        std::vector<Rat> r(rows_, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += a_[i][j] * v[j];
        return r;
    }

    /// Rank by fraction-free (Bareiss) elimination on the integer-scaled matrix.
    std::size_t rank() const {
        if (rows_ == 0 || cols_ == 0) return 0;
        std::vector<std::vector<Int>> b(rows_, std::vector<Int>(cols_));
        for (std::size_t i = 0; i < rows_; ++i) {
            Int l(1);
            for (std::size_t j = 0; j < cols_; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a_[i][j].get_den().get_mpz_t());
            for (std::size_t j = 0; j < cols_; ++j) b[i][j] = a_[i][j].get_num() * (l / a_[i][j].get_den());
        }
        std::size_t rank = 0;
        Int prev(1);
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t piv = rank;
            while (piv < rows_ && b[piv][col] == 0) ++piv;
            if (piv == rows_) continue;
            std::swap(b[piv], b[rank]);
            for (std::size_t i = rank + 1; i < rows_; ++i) {
                for (std::size_t j = col + 1; j < cols_; ++j) {
                    Int t = b[rank][col] * b[i][j] - b[i][col] * b[rank][j];
                    mpz_divexact(b[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
                b[i][col] = 0;
            }
            prev = b[rank][col];
            ++rank;
        }
        return rank;
    }

    Rat det() const {
        if (rows_ != cols_) throw std::invalid_argument("Mat::det: not square");
        Mat m = *this;
        Rat d(1);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t piv = col;
            while (piv < rows_ && m(piv, col) == 0) ++piv;
            if (piv == rows_) return Rat(0);
            if (piv != col) {
                std::swap(m.a_[piv], m.a_[col]);
                d = -d;
            }
            d *= m(col, col);
            Rat inv = Rat(1) / m(col, col);
            for (std::size_t i = col + 1; i < rows_; ++i) {
                if (m(i, col) == 0) continue;
                Rat f = m(i, col) * inv;
                for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
            }
        }
        return d;
    }

    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t piv = r;
            while (piv < rows_ && a_[piv][col] == 0) ++piv;
            if (piv == rows_) continue;
            std::swap(a_[piv], a_[r]);
            Rat inv = Rat(1) / a_[r][col];
            for (std::size_t j = 0; j < cols_; ++j) a_[r][j] *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || a_[i][col] == 0) continue;
                Rat f = a_[i][col];
                for (std::size_t j = 0; j < cols_; ++j) a_[i][j] -= f * a_[r][j];
            }
            pivots.push_back(col);
            ++r;
        }
        return pivots;
    }

    std::optional<Mat> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("Mat::inverse: not square");
        Mat aug(rows_, 2 * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = a_[i][j];
            aug(i, cols_ + i) = 1;
        }
        auto piv = aug.rref();
        if (piv.size() != rows_ || piv.back() >= cols_) return std::nullopt;
        Mat inv(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

    /// One solution of A x = b, if consistent.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const {
        if (b.size() != rows_) throw std::invalid_argument("Mat::solve: dimension mismatch");
        Mat aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = a_[i][j];
            aug(i, cols_) = b[i];
        }
        auto piv = aug.rref();
        if (!piv.empty() && piv.back() == cols_) return std::nullopt;
        std::vector<Rat> x(cols_, Rat(0));
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, cols_);
        return x;
    }

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<Rat>> a_;
};

/// Smith normal form over Z for small matrices: D = U * A * V with U, V unimodular.
struct Smith {
    std::vector<std::vector<Int>> d, u, v;
};

inline Smith smith_normal_form(std::vector<std::vector<Int>> a) {
    std::size_t m = a.size(), n = m ? a[0].size() : 0;
    Smith s;
    s.u.assign(m, std::vector<Int>(m, 0));
    s.v.assign(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < m; ++i) s.u[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) s.v[j][j] = 1;

    auto row_op = [&](std::size_t i, std::size_t k, const Int& q) {  // row i -= q * row k
        for (std::size_t j = 0; j < n; ++j) a[i][j] -= q * a[k][j];
        for (std::size_t j = 0; j < m; ++j) s.u[i][j] -= q * s.u[k][j];
    };
    auto col_op = [&](std::size_t j, std::size_t k, const Int& q) {  // col j -= q * col k
        for (std::size_t i = 0; i < m; ++i) a[i][j] -= q * a[i][k];
        for (std::size_t i = 0; i < n; ++i) s.v[i][j] -= q * s.v[i][k];
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // find a nonzero pivot
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m && !found; ++i)
            for (std::size_t j = t; j < n && !found; ++j)
                if (a[i][j] != 0) { pi = i; pj = j; found = true; }
        if (!found) break;
        if (pi != t) { std::swap(a[pi], a[t]); std::swap(s.u[pi], s.u[t]); }
        if (pj != t) {
            for (std::size_t i = 0; i < m; ++i) std::swap(a[i][pj], a[i][t]);
            for (std::size_t i = 0; i < n; ++i) std::swap(s.v[i][pj], s.v[i][t]);
        }
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                row_op(i, t, q);
                if (a[i][t] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(a[i], a[t]);
                    std::swap(s.u[i], s.u[t]);
                }
                clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                col_op(j, t, q);
                if (a[t][j] != 0) {
                    for (std::size_t i = 0; i < m; ++i) std::swap(a[i][j], a[i][t]);
                    for (std::size_t i = 0; i < n; ++i) std::swap(s.v[i][j], s.v[i][t]);
                }
                clean = false;
            }
            if (clean) break;
        }
        ++t;
    }
    s.d = std::move(a);
    return s;
}

/// Solve prod_j x_j^{E[i][j]} = r[i] over the multiplicative group Q^* (all r[i] nonzero).
inline std::optional<std::vector<Rat>> solve_monomial_system(const std::vector<std::vector<Int>>& e,
                                                             const std::vector<Rat>& r) {
    std::size_t m = e.size(), n = m ? e[0].size() : 0;
    if (r.size() != m) throw std::invalid_argument("solve_monomial_system: size mismatch");
    for (const auto& q : r)
        if (q == 0) throw std::invalid_argument("solve_monomial_system: zero rhs");
    Smith s = smith_normal_form(e);
    auto mpow = [](const Rat& q, const Int& k) {
        if (!k.fits_slong_p()) throw std::runtime_error("solve_monomial_system: exponent too large");
        return pow_rat(q, k.get_si());
    };
    // rhs in the transformed basis: t_i = prod_k r_k^{U[i][k]}
    std::vector<Rat> t(m, Rat(1));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            if (s.u[i][k] != 0) t[i] *= mpow(r[k], s.u[i][k]);
    std::vector<Rat> y(n, Rat(1));
    for (std::size_t i = 0; i < m; ++i) {
        Int d = (i < n) ? s.d[i][i] : Int(0);
        if (d == 0) {
            if (t[i] != 1) return std::nullopt;
            continue;
        }
        Int ad = d < 0 ? Int(-d) : d;
        auto root = exact_root(d < 0 ? Rat(1) / t[i] : t[i], ad.get_ui());
        if (!root) return std::nullopt;
        y[i] = *root;
    }
    std::vector<Rat> x(n, Rat(1));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (s.v[j][k] != 0) x[j] *= mpow(y[k], s.v[j][k]);
    return x;
}

}  // namespace cubicgit
