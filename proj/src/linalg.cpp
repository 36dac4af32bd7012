#include "toric/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

Vec zero_vec(std::size_t n) { return Vec(n, Scalar()); }

Vec scaled(const Vec& v, const Scalar& c) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] * c;
    return out;
}

Vec add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

Scalar dot(const Vec& a, const Vec& b) {
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool proportional(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        return false;
    if (is_zero_vec(a) || is_zero_vec(b))
        return true;
    std::size_t i = 0;
    while (a[i].is_zero())
        ++i;
    if (b[i].is_zero())
        return false;
    const Scalar t = b[i] / a[i];
    for (std::size_t j = 0; j < a.size(); ++j)
        if (b[j] != a[j] * t)
            return false;
    return true;
}

long vec_disc(const Vec& v) {
    long d = 0;
    for (const Scalar& s : v)
        d = join_disc(d, s.disc());
    return d;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        v[j] = (*this)(i, j);
    return v;
}

Vec Matrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

std::vector<Vec> Matrix::rows_vec() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out.push_back(row(i));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = (*this)(i, j);
    return m;
}

Matrix Matrix::submatrix_cols(const std::vector<std::size_t>& cols) const {
    Matrix m(rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            m(i, j) = (*this)(i, cols[j]);
    return m;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(i, c), (*this)(j, c));
}

long Matrix::disc() const {
    long d = 0;
    for (const Scalar& s : e_)
        d = join_disc(d, s.disc());
    return d;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(i, j) += a(i, k) * b(k, j);
        }
    return m;
}

Vec operator*(const Matrix& a, const Vec& x) {
    if (a.cols() != x.size())
        throw std::invalid_argument("matrix-vector shape mismatch");
    Vec y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[i] += a(i, j) * x[j];
    return y;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

RrefResult rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(r, p);
        const Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
    const RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivot_cols)
        is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vec v = zero_vec(m.cols());
        v[f] = Scalar(1);
        for (std::size_t t = 0; t < rr.pivot_cols.size(); ++t)
            v[rr.pivot_cols[t]] = -rr.mat(t, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar det(Matrix m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    Scalar result(1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t p = c;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            return Scalar(0);
        if (p != c) {
            m.swap_rows(c, p);
            result = -result;
        }
        result *= m(c, c);
        const Scalar inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero())
                continue;
            const Scalar f = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return result;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const RrefResult rr = rref(std::move(aug));
    if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == a.cols())
        return std::nullopt;  // pivot in the augmented column: inconsistent
    Vec x = zero_vec(a.cols());
    for (std::size_t t = 0; t < rr.pivot_cols.size(); ++t)
        x[rr.pivot_cols[t]] = rr.mat(t, a.cols());
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    const RrefResult rr = rref(std::move(aug));
    if (rr.rank() < n || rr.pivot_cols[n - 1] != n - 1)
        throw std::invalid_argument("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = rr.mat(i, n + j);
    return inv;
}

namespace {

// One inequality sum(coef*x) >= rhs.
struct Ineq {
    Vec coef;
    Scalar rhs;
};

// Scale so the first nonzero coefficient has absolute value 1 (positive
// scaling only, preserving the inequality).
void normalize_ineq(Ineq& q) {
    for (const Scalar& c : q.coef) {
        if (!c.is_zero()) {
            const Scalar f = c.abs().inverse();
            q.coef = scaled(q.coef, f);
            q.rhs *= f;
            return;
        }
    }
}

bool ineq_less(const Ineq& a, const Ineq& b) {
    for (std::size_t i = 0; i < a.coef.size(); ++i) {
        if (a.coef[i] != b.coef[i])
            return a.coef[i] < b.coef[i];
    }
    return a.rhs < b.rhs;
}

bool ineq_eq(const Ineq& a, const Ineq& b) { return a.coef == b.coef && a.rhs == b.rhs; }

}  // namespace

bool fm_feasible(const Matrix& eq, const Vec& eq_rhs, const Matrix& ineq, const Vec& ineq_rhs) {
    const std::size_t nvars = eq.rows() ? eq.cols() : ineq.cols();

    // Eliminate the equalities first. Pivot variables are expressed in the
    // free ones and substituted into every inequality.
    Matrix aug(eq.rows(), nvars + 1);
    for (std::size_t i = 0; i < eq.rows(); ++i) {
        for (std::size_t j = 0; j < nvars; ++j)
            aug(i, j) = eq(i, j);
        aug(i, nvars) = eq_rhs[i];
    }
    const RrefResult rr = rref(std::move(aug));
    if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == nvars)
        return false;  // equalities inconsistent

    std::vector<bool> is_pivot(nvars, false);
    std::vector<std::size_t> pivot_row(nvars, 0);
    for (std::size_t t = 0; t < rr.pivot_cols.size(); ++t) {
        is_pivot[rr.pivot_cols[t]] = true;
        pivot_row[rr.pivot_cols[t]] = t;
    }
    std::vector<std::size_t> free_vars;
    for (std::size_t j = 0; j < nvars; ++j)
        if (!is_pivot[j])
            free_vars.push_back(j);

    std::vector<Ineq> sys;
    for (std::size_t i = 0; i < ineq.rows(); ++i) {
        Ineq q{zero_vec(free_vars.size()), ineq_rhs[i]};
        for (std::size_t j = 0; j < nvars; ++j) {
            const Scalar& c = ineq(i, j);
            if (c.is_zero())
                continue;
            if (!is_pivot[j]) {
                const std::size_t fidx =
                    std::lower_bound(free_vars.begin(), free_vars.end(), j) - free_vars.begin();
                q.coef[fidx] += c;
            } else {
                // x_j = rhs - sum over free f of R(t,f) x_f
                const std::size_t t = pivot_row[j];
                q.rhs -= c * rr.mat(t, nvars);
                for (std::size_t fidx = 0; fidx < free_vars.size(); ++fidx) {
                    const Scalar& rcoef = rr.mat(t, free_vars[fidx]);
                    if (!rcoef.is_zero())
                        q.coef[fidx] -= c * rcoef;
                }
            }
        }
        sys.push_back(std::move(q));
    }

    // Fourier-Motzkin elimination, one free variable at a time.
    for (std::size_t k = 0; k < free_vars.size(); ++k) {
        std::vector<Ineq> pos, neg, rest;
        for (Ineq& q : sys) {
            const int s = q.coef[k].sign();
            if (s > 0)
                pos.push_back(std::move(q));
            else if (s < 0)
                neg.push_back(std::move(q));
            else
                rest.push_back(std::move(q));
        }
        if (!pos.empty() && !neg.empty()) {
            for (const Ineq& p : pos) {
                for (const Ineq& n : neg) {
                    // p: a x_k + u >= r (a>0);  n: -b x_k + v >= s (b>0)
                    // combine: b*u + a*v >= b*r + a*s
                    const Scalar a = p.coef[k];
                    const Scalar b = -n.coef[k];
                    Ineq q{add(scaled(p.coef, b), scaled(n.coef, a)),
                           b * p.rhs + a * n.rhs};
                    q.coef[k] = Scalar(0);
                    normalize_ineq(q);
                    rest.push_back(std::move(q));
                }
            }
        }
        std::sort(rest.begin(), rest.end(), ineq_less);
        rest.erase(std::unique(rest.begin(), rest.end(), ineq_eq), rest.end());
        sys = std::move(rest);
    }

    for (const Ineq& q : sys) {
        if (is_zero_vec(q.coef) && q.rhs.sign() > 0)
            return false;  // 0 >= positive
    }
    return true;
}

}  // namespace toric
