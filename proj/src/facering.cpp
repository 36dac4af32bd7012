#include "toric/facering.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace toric {

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

VertexSet Monomial::support() const {
    VertexSet s;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0)
            s.add(static_cast<int>(i));
    return s;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i)
        r.e[i] += o.e[i];
    return r;
}

Monomial Monomial::times_var(int i) const {
    Monomial r(*this);
    ++r.e[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i])
            return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    Monomial r(o);
    for (std::size_t i = 0; i < e.size(); ++i)
        r.e[i] -= e[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e.size(); ++i)
        r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

std::string Monomial::str(const std::vector<std::string>& names) const {
    if (is_one())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += names[i];
        if (e[i] > 1)
            s += '^' + std::to_string(e[i]);
    }
    return s;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    // same degree: a < b iff the last nonzero entry of a - b is positive
    for (std::size_t i = a.e.size(); i-- > 0;) {
        const int d = a.e[i] - b.e[i];
        if (d != 0)
            return d > 0;
    }
    return false;
}

void Polynomial::insert(const Monomial& mono, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.emplace(mono, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial Polynomial::term(const Monomial& mono, const Scalar& c) {
    Polynomial p;
    p.insert(mono, c);
    return p;
}

Polynomial Polynomial::variable(int i, std::size_t m) {
    Monomial mono(m);
    mono.e[i] = 1;
    return term(mono, Scalar(1));
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty())
        throw std::logic_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

const Scalar& Polynomial::leading_coefficient() const {
    if (terms_.empty())
        throw std::logic_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

int Polynomial::degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

Polynomial Polynomial::operator-() const {
    Polynomial p;
    for (const auto& [mono, c] : terms_)
        p.terms_.emplace(mono, -c);
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial p(*this);
    for (const auto& [mono, c] : o.terms_)
        p.insert(mono, c);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial p;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            p.insert(ma.times(mb), ca * cb);
    return p;
}

Polynomial Polynomial::scale(const Scalar& c) const {
    Polynomial p;
    if (c.is_zero())
        return p;
    for (const auto& [mono, coef] : terms_)
        p.terms_.emplace(mono, coef * c);
    return p;
}

Polynomial Polynomial::times_term(const Monomial& mono, const Scalar& c) const {
    Polynomial p;
    if (c.is_zero())
        return p;
    for (const auto& [m0, c0] : terms_)
        p.terms_.emplace(m0.times(mono), c0 * c);
    return p;
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        return *this;
    return scale(leading_coefficient().inverse());
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (is_zero())
        return "0";
    std::string s;
    for (const auto& [mono, c] : terms_) {
        const int sg = c.sign();
        const Scalar a = c.abs();
        if (s.empty())
            s += sg < 0 ? "-" : "";
        else
            s += sg < 0 ? " - " : " + ";
        if (a.is_one() && !mono.is_one())
            s += mono.str(names);
        else if (mono.is_one())
            s += a.str();
        else
            s += a.str() + "*" + mono.str(names);
    }
    return s;
}

std::vector<std::string> variable_names(std::size_t m) {
    std::vector<std::string> names(m);
    for (std::size_t i = 0; i < m; ++i)
        names[i] = "v" + std::to_string(i + 1);
    return names;
}

std::vector<Monomial> stanley_reisner_ideal(const SimplicialComplex& k) {
    std::vector<Monomial> gens;
    for (const VertexSet& nf : k.minimal_nonfaces()) {
        Monomial mono(k.vertex_count());
        for (int v : nf.elements())
            mono.e[v] = 1;
        gens.push_back(std::move(mono));
    }
    return gens;
}

LinearSystemOfParameters linear_ideal(const MarkedFan& fan) {
    LinearSystemOfParameters lsop;
    lsop.a = fan.lsop_matrix();
    if (rank(lsop.a) != static_cast<std::size_t>(fan.dim))
        throw std::invalid_argument(
            "marking matrix is not of full rank; the markings do not span");
    const std::size_t m = lsop.a.cols();
    for (std::size_t r = 0; r < lsop.a.rows(); ++r) {
        Polynomial form;
        for (std::size_t i = 0; i < m; ++i) {
            Monomial mono(m);
            mono.e[i] = 1;
            form = form + Polynomial::term(mono, lsop.a(r, i));
        }
        lsop.forms.push_back(std::move(form));
    }
    return lsop;
}

bool lsop_check(const SimplicialComplex& k, const LinearSystemOfParameters& lsop) {
    for (const VertexSet& f : k.facets()) {
        std::vector<std::size_t> cols;
        for (int v : f.elements())
            cols.push_back(static_cast<std::size_t>(v));
        if (rank(lsop.a.submatrix_cols(cols)) != cols.size())
            return false;
    }
    return true;
}

Polynomial normal_form(Polynomial p, const std::vector<Polynomial>& gb) {
    Polynomial remainder;
    while (!p.is_zero()) {
        bool reduced = false;
        for (const Polynomial& g : gb) {
            if (g.leading_monomial().divides(p.leading_monomial())) {
                const Monomial q = g.leading_monomial().divide(p.leading_monomial());
                const Scalar c = p.leading_coefficient() / g.leading_coefficient();
                p = p - g.times_term(q, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder = remainder +
                        Polynomial::term(p.leading_monomial(), p.leading_coefficient());
            p = p - Polynomial::term(p.leading_monomial(), p.leading_coefficient());
        }
    }
    return remainder;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    const Polynomial a =
        f.times_term(f.leading_monomial().divide(l), f.leading_coefficient().inverse());
    const Polynomial b =
        g.times_term(g.leading_monomial().divide(l), g.leading_coefficient().inverse());
    return a - b;
}

bool coprime_leads(const Polynomial& f, const Polynomial& g) {
    const auto& a = f.leading_monomial().e;
    const auto& b = g.leading_monomial().e;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0)
            return false;
    return true;
}

}  // namespace

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens) {
    std::vector<Polynomial> basis;
    for (Polynomial& g : gens)
        if (!g.is_zero())
            basis.push_back(g.monic());

    // pair queue ordered by (lcm degree, lcm, i, j)
    struct Pair {
        Monomial lcm;
        std::size_t i, j;
    };
    const auto pair_less = [](const Pair& a, const Pair& b) {
        if (!(a.lcm == b.lcm))
            return grevlex_less(a.lcm, b.lcm);
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::vector<Pair> queue;
    const auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            queue.push_back(
                {Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial()), i, j});
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            queue.push_back(
                {Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial()), i, j});
    std::sort(queue.begin(), queue.end(), pair_less);

    while (!queue.empty()) {
        const Pair pr = queue.front();
        queue.erase(queue.begin());
        if (coprime_leads(basis[pr.i], basis[pr.j]))
            continue;  // Buchberger's first criterion
        const Polynomial s = normal_form(s_polynomial(basis[pr.i], basis[pr.j]), basis);
        if (!s.is_zero()) {
            basis.push_back(s.monic());
            push_pairs(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j)
                continue;
            if (basis[j].leading_monomial().divides(basis[i].leading_monomial())) {
                // on ties (equal leads) keep the earlier element
                if (basis[i].leading_monomial() == basis[j].leading_monomial() && i < j)
                    continue;
                redundant = true;
                break;
            }
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }

    // reduce tails: each element is replaced by its normal form against the
    // others, iterating to a fixed point
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i)
                    others.push_back(minimal[j]);
            const Polynomial r = normal_form(minimal[i], others).monic();
            if (!(r == minimal[i])) {
                minimal[i] = r;
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [](const Polynomial& f, const Polynomial& g) {
        const int df = f.degree(), dg = g.degree();
        if (df != dg)
            return df < dg;
        return grevlex_less(g.leading_monomial(), f.leading_monomial());
    });
    return minimal;
}

namespace {

// All monomials of the given degree in m variables; generated in a fixed
// recursive order, then sorted grevlex-ascending.
std::vector<Monomial> monomials_of_degree(std::size_t m, int degree) {
    std::vector<Monomial> out;
    Monomial cur(m);
    const std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
        if (pos + 1 == m) {
            cur.e[pos] = left;
            out.push_back(cur);
            cur.e[pos] = 0;
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur.e[pos] = v;
            rec(pos + 1, left - v);
        }
        cur.e[pos] = 0;
    };
    if (m == 0) {
        if (degree == 0)
            out.push_back(Monomial(std::size_t{0}));
        return out;
    }
    rec(0, degree);
    std::sort(out.begin(), out.end(), grevlex_less);
    return out;
}

std::vector<Monomial> face_monomials(const SimplicialComplex& k, int degree) {
    std::vector<Monomial> out;
    for (Monomial& mono : monomials_of_degree(k.vertex_count(), degree))
        if (k.is_face(mono.support()))
            out.push_back(std::move(mono));
    return out;
}

}  // namespace

GradedQuotient graded_quotient(const MarkedFan& fan) {
    const SimplicialComplex& k = fan.complex;
    const int n = fan.dim;
    const std::size_t m = k.vertex_count();

    const LinearSystemOfParameters lsop = linear_ideal(fan);
    for (const VertexSet& f : k.facets()) {
        std::vector<std::size_t> cols;
        for (int v : f.elements())
            cols.push_back(static_cast<std::size_t>(v));
        if (rank(lsop.a.submatrix_cols(cols)) != cols.size())
            throw std::invalid_argument("linear system of parameters fails on facet " +
                                        f.str());
    }

    std::vector<Polynomial> gens;
    for (const Monomial& mono : stanley_reisner_ideal(k))
        gens.push_back(Polynomial::term(mono, Scalar(1)));
    for (const Polynomial& f : lsop.forms)
        gens.push_back(f);

    GradedQuotient q;
    q.num_vars = m;
    q.groebner = groebner_basis(std::move(gens));

    std::vector<Monomial> leads;
    for (const Polynomial& g : q.groebner)
        leads.push_back(g.leading_monomial());

    for (int deg = 0; deg <= n + 2; ++deg) {
        std::vector<Monomial> std_monos;
        for (Monomial& mono : monomials_of_degree(m, deg)) {
            const bool reducible = std::any_of(leads.begin(), leads.end(),
                                               [&](const Monomial& l) { return l.divides(mono); });
            if (!reducible)
                std_monos.push_back(std::move(mono));
        }
        q.std_monomials.push_back(std::move(std_monos));
        q.hilbert.push_back(static_cast<long>(q.std_monomials.back().size()));
    }
    if (q.hilbert[n + 1] != 0 || q.hilbert[n + 2] != 0)
        throw std::invalid_argument(
            "quotient is not Artinian with socle degree <= n: nonzero dimension past degree " +
            std::to_string(n));
    while (!q.hilbert.empty() && q.hilbert.back() == 0) {
        q.hilbert.pop_back();
        q.std_monomials.pop_back();
    }
    return q;
}

std::vector<long> basic_betti(const MarkedFan& fan) { return graded_quotient(fan).hilbert; }

long graded_dimension_oracle(const SimplicialComplex& k,
                             const LinearSystemOfParameters& lsop, int deg) {
    if (deg < 0)
        return 0;
    const std::vector<Monomial> basis_k = face_monomials(k, deg);
    if (deg == 0)
        return static_cast<long>(basis_k.size());
    const std::vector<Monomial> basis_km1 = face_monomials(k, deg - 1);

    std::map<Monomial, std::size_t, GrevlexGreater> index;
    for (std::size_t i = 0; i < basis_k.size(); ++i)
        index.emplace(basis_k[i], i);

    const std::size_t nforms = lsop.forms.size();
    Matrix rel(basis_k.size(), basis_km1.size() * nforms);
    for (std::size_t c = 0; c < basis_km1.size(); ++c) {
        for (std::size_t r = 0; r < nforms; ++r) {
            // theta_r * mu, projected to the face-monomial basis
            for (std::size_t w = 0; w < lsop.a.cols(); ++w) {
                const Scalar& coef = lsop.a(r, w);
                if (coef.is_zero())
                    continue;
                const Monomial prod = basis_km1[c].times_var(static_cast<int>(w));
                const auto it = index.find(prod);
                if (it != index.end())
                    rel(it->second, c * nforms + r) += coef;
            }
        }
    }
    return static_cast<long>(basis_k.size()) - static_cast<long>(rank(rel));
}

namespace {

// Size-i subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int i) {
    std::vector<std::vector<int>> out;
    if (i < 0 || i > n)
        return out;
    std::vector<int> sel(i);
    for (int t = 0; t < i; ++t)
        sel[t] = t;
    while (true) {
        out.push_back(sel);
        int t = i - 1;
        while (t >= 0 && sel[t] == n - i + t)
            --t;
        if (t < 0)
            break;
        ++sel[t];
        for (int u = t + 1; u < i; ++u)
            sel[u] = sel[u - 1] + 1;
    }
    if (i == 0)
        out = {{}};
    return out;
}

// Basis of the Koszul chain group C_{i,k} = Lambda^i(span theta) (x) R[K]_{k-i}
// and the matrix of d_i : C_{i,k} -> C_{i-1,k}.
struct KoszulData {
    std::vector<std::vector<int>> subsets;
    std::vector<Monomial> monos;
    std::size_t dim() const { return subsets.size() * monos.size(); }
};

KoszulData koszul_basis(const SimplicialComplex& k, int n, int i, int deg) {
    KoszulData d;
    if (i < 0 || i > n || deg - i < 0)
        return d;
    d.subsets = subsets_of_size(n, i);
    d.monos = face_monomials(k, deg - i);
    if (d.monos.empty())
        d.subsets.clear();
    return d;
}

Matrix koszul_differential(const SimplicialComplex& k, const LinearSystemOfParameters& lsop,
                           int n, int i, int deg) {
    const KoszulData from = koszul_basis(k, n, i, deg);
    const KoszulData to = koszul_basis(k, n, i - 1, deg);
    Matrix d(to.dim(), from.dim());
    if (from.dim() == 0 || to.dim() == 0)
        return d;

    std::map<std::vector<int>, std::size_t> sub_index;
    for (std::size_t s = 0; s < to.subsets.size(); ++s)
        sub_index.emplace(to.subsets[s], s);
    std::map<Monomial, std::size_t, GrevlexGreater> mono_index;
    for (std::size_t t = 0; t < to.monos.size(); ++t)
        mono_index.emplace(to.monos[t], t);

    for (std::size_t s = 0; s < from.subsets.size(); ++s) {
        const std::vector<int>& sub = from.subsets[s];
        for (std::size_t t = 0; t < from.monos.size(); ++t) {
            const std::size_t col = s * from.monos.size() + t;
            for (std::size_t pos = 0; pos < sub.size(); ++pos) {
                std::vector<int> reduced = sub;
                reduced.erase(reduced.begin() + static_cast<long>(pos));
                const std::size_t srow = sub_index.at(reduced);
                const Scalar sign((pos % 2 == 0) ? 1 : -1);
                const int form = sub[pos];
                // theta_form * mono projected to face monomials
                for (std::size_t w = 0; w < lsop.a.cols(); ++w) {
                    const Scalar& coef = lsop.a(form, w);
                    if (coef.is_zero())
                        continue;
                    const Monomial prod = from.monos[t].times_var(static_cast<int>(w));
                    const auto it = mono_index.find(prod);
                    if (it != mono_index.end())
                        d(srow * to.monos.size() + it->second, col) += sign * coef;
                }
            }
        }
    }
    return d;
}

}  // namespace

long koszul_homology(const SimplicialComplex& k, const LinearSystemOfParameters& lsop,
                     int i, int deg) {
    const int n = static_cast<int>(lsop.a.rows());
    const KoszulData mid = koszul_basis(k, n, i, deg);
    if (mid.dim() == 0)
        return 0;
    const Matrix d_i = koszul_differential(k, lsop, n, i, deg);
    const Matrix d_ip1 = koszul_differential(k, lsop, n, i + 1, deg);
    const long dim_mid = static_cast<long>(mid.dim());
    const long rank_out = d_i.rows() ? static_cast<long>(rank(d_i)) : 0;
    const long rank_in = d_ip1.cols() ? static_cast<long>(rank(d_ip1)) : 0;
    return dim_mid - rank_out - rank_in;
}

std::vector<CupEntry> cup_product_table(const GradedQuotient& q) {
    std::vector<Monomial> flat;
    for (const auto& level : q.std_monomials)
        for (const Monomial& mono : level)
            flat.push_back(mono);
    std::vector<CupEntry> table;
    for (std::size_t a = 0; a < flat.size(); ++a)
        for (std::size_t b = a; b < flat.size(); ++b) {
            CupEntry entry{flat[a], flat[b],
                           normal_form(Polynomial::term(flat[a].times(flat[b]), Scalar(1)),
                                       q.groebner)};
            table.push_back(std::move(entry));
        }
    return table;
}

RingPresentation ring_presentation(const MarkedFan& fan) {
    RingPresentation pres;
    pres.m = fan.ray_count();
    pres.n = fan.dim;
    pres.variables = variable_names(pres.m);
    pres.monomial_relations = stanley_reisner_ideal(fan.complex);
    pres.linear_relations = linear_ideal(fan).forms;
    pres.betti = basic_betti(fan);
    return pres;
}

}  // namespace toric
