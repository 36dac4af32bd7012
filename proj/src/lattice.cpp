#include "toric/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

void add_scaled_row(ZVec& dst, const ZVec& src, const mpz_class& f) {
    for (std::size_t j = 0; j < dst.size(); ++j)
        dst[j] += f * src[j];
}

void negate_row(ZVec& r) {
    for (mpz_class& x : r)
        x = -x;
}

bool row_is_zero(const ZVec& r) {
    return std::all_of(r.begin(), r.end(), [](const mpz_class& x) { return x == 0; });
}

}  // namespace

HnfResult hermite_normal_form(const ZMat& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    HnfResult res;
    res.h = a;
    res.u.assign(rows, ZVec(rows, 0));
    for (std::size_t i = 0; i < rows; ++i)
        res.u[i][i] = 1;

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && res.h[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(res.h[r], res.h[p]);
        std::swap(res.u[r], res.u[p]);

        // Clear below the pivot with extended-gcd row transforms; each 2x2
        // block [s t; -b0 a0] has determinant +1.
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (res.h[i][c] == 0)
                continue;
            mpz_class g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       res.h[r][c].get_mpz_t(), res.h[i][c].get_mpz_t());
            const mpz_class a0 = res.h[r][c] / g;
            const mpz_class b0 = res.h[i][c] / g;
            ZVec hr = res.h[r], hi = res.h[i];
            ZVec ur = res.u[r], ui = res.u[i];
            for (std::size_t j = 0; j < cols; ++j) {
                res.h[r][j] = s * hr[j] + t * hi[j];
                res.h[i][j] = -b0 * hr[j] + a0 * hi[j];
            }
            for (std::size_t j = 0; j < rows; ++j) {
                res.u[r][j] = s * ur[j] + t * ui[j];
                res.u[i][j] = -b0 * ur[j] + a0 * ui[j];
            }
        }
        if (res.h[r][c] < 0) {
            negate_row(res.h[r]);
            negate_row(res.u[r]);
        }
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            if (res.h[i][c] == 0)
                continue;
            mpz_class f;
            mpz_fdiv_q(f.get_mpz_t(), res.h[i][c].get_mpz_t(), res.h[r][c].get_mpz_t());
            if (f != 0) {
                add_scaled_row(res.h[i], res.h[r], -f);
                add_scaled_row(res.u[i], res.u[r], -f);
            }
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    return res;
}

mpz_class det_integer(ZMat m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n - 1; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

namespace {

// gcd of |det| over all k x k minors; 0 if all vanish.
mpz_class minor_gcd(const ZMat& a, std::size_t k) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    if (k > rows || k > cols)
        return 0;
    mpz_class g = 0;

    std::vector<std::size_t> rsel(k);
    for (std::size_t i = 0; i < k; ++i)
        rsel[i] = i;
    // Next k-combination of {0..n-1} in lexicographic order.
    const auto next_comb = [](std::vector<std::size_t>& sel, std::size_t n) -> bool {
        const std::size_t k2 = sel.size();
        std::size_t i = k2;
        while (i-- > 0) {
            if (sel[i] < n - k2 + i) {
                ++sel[i];
                for (std::size_t j = i + 1; j < k2; ++j)
                    sel[j] = sel[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    do {
        std::vector<std::size_t> csel(k);
        for (std::size_t i = 0; i < k; ++i)
            csel[i] = i;
        do {
            ZMat sub(k, ZVec(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub[i][j] = a[rsel[i]][csel[j]];
            mpz_class d = det_integer(std::move(sub));
            if (d != 0) {
                d = ::abs(d);
                g = g == 0 ? d : mpz_class(gcd(g, d));
                if (g == 1)
                    return g;  // gcd cannot drop below 1
            }
        } while (next_comb(csel, cols));
    } while (next_comb(rsel, rows));
    return g;
}

}  // namespace

std::vector<mpz_class> elementary_divisors(const ZMat& a) {
    std::vector<mpz_class> divisors;
    mpz_class prev = 1;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        const mpz_class g = minor_gcd(a, k);
        if (g == 0)
            break;
        divisors.push_back(g / prev);
        prev = g;
    }
    return divisors;
}

ZLattice::ZLattice(const std::vector<Vec>& generators, long disc, std::size_t len)
    : disc_(disc), len_(len), split_len_(disc ? 2 * len : len), scale_(1) {
    for (const Vec& g : generators) {
        if (g.size() != len_)
            throw std::invalid_argument("generator length mismatch");
        for (const Scalar& s : g) {
            join_disc(disc_, s.disc());  // throws on foreign field
            scale_ = lcm(scale_, s.rational_part().get_den());
            scale_ = lcm(scale_, s.radical_part().get_den());
        }
    }
    ZMat rows;
    rows.reserve(generators.size());
    for (const Vec& g : generators) {
        ZVec row(split_len_);
        for (std::size_t j = 0; j < len_; ++j) {
            mpq_class a = g[j].rational_part() * scale_;
            row[disc_ ? 2 * j : j] = a.get_num();
            if (disc_) {
                mpq_class b = g[j].radical_part() * scale_;
                row[2 * j + 1] = b.get_num();
            }
        }
        rows.push_back(std::move(row));
    }
    hnf_ = hermite_normal_form(rows);
}

std::optional<ZVec> ZLattice::integerize(const Vec& v) const {
    if (v.size() != len_)
        throw std::invalid_argument("vector length mismatch");
    ZVec out(split_len_);
    for (std::size_t j = 0; j < len_; ++j) {
        if (join_disc(disc_, v[j].disc()) != disc_ && disc_ == 0)
            return std::nullopt;  // radical coordinate vs rational lattice
        mpq_class a = v[j].rational_part() * scale_;
        if (a.get_den() != 1)
            return std::nullopt;  // denominator not cleared: not a member
        mpq_class b = v[j].radical_part() * scale_;
        if (disc_) {
            out[2 * j] = a.get_num();
            if (b.get_den() != 1)
                return std::nullopt;
            out[2 * j + 1] = b.get_num();
        } else {
            if (b != 0)
                return std::nullopt;
            out[j] = a.get_num();
        }
    }
    return out;
}

std::optional<ZVec> ZLattice::coordinates(const Vec& v) const {
    auto wopt = integerize(v);
    if (!wopt)
        return std::nullopt;
    ZVec w = std::move(*wopt);
    ZVec coords(hnf_.rank(), 0);
    for (std::size_t t = 0; t < hnf_.pivot_cols.size(); ++t) {
        const std::size_t p = hnf_.pivot_cols[t];
        if (w[p] == 0)
            continue;
        const mpz_class& pivot = hnf_.h[t][p];
        if (w[p] % pivot != 0)
            return std::nullopt;
        const mpz_class f = w[p] / pivot;
        add_scaled_row(w, hnf_.h[t], -f);
        coords[t] = f;
    }
    if (!row_is_zero(w))
        return std::nullopt;
    return coords;
}

bool ZLattice::contains(const Vec& v) const { return coordinates(v).has_value(); }

ZMat ZLattice::basis_rows() const {
    ZMat out;
    for (std::size_t t = 0; t < hnf_.rank(); ++t)
        out.push_back(hnf_.h[t]);
    return out;
}

bool zmodule_membership(const std::vector<Vec>& generators, const Vec& v) {
    long disc = vec_disc(v);
    for (const Vec& g : generators)
        disc = join_disc(disc, vec_disc(g));
    const std::size_t len = v.size();
    return ZLattice(generators, disc, len).contains(v);
}

bool zmodule_equal(const std::vector<Vec>& gens1, const std::vector<Vec>& gens2) {
    long disc = 0;
    std::size_t len = 0;
    for (const Vec& g : gens1) {
        disc = join_disc(disc, vec_disc(g));
        len = g.size();
    }
    for (const Vec& g : gens2) {
        disc = join_disc(disc, vec_disc(g));
        len = g.size();
    }
    const ZLattice l1(gens1, disc, len);
    const ZLattice l2(gens2, disc, len);
    for (const Vec& g : gens1)
        if (!l2.contains(g))
            return false;
    for (const Vec& g : gens2)
        if (!l1.contains(g))
            return false;
    return true;
}

}  // namespace toric
