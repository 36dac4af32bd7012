#pragma once

#include <map>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/linalg.hpp"
#include "toric/simplicial.hpp"

namespace toric {

// Exponent vector over the polynomial ring R[v_1..v_m]. All internal degrees
// use deg v_i = 1; the geometric grading deg v_i = 2 is restored only when
// dimensions are reported in cohomological degrees.
struct Monomial {
    std::vector<int> e;

    explicit Monomial(std::size_t m) : e(m, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    std::size_t vars() const { return e.size(); }
    int degree() const;
    bool is_one() const { return degree() == 0; }
    VertexSet support() const;

    Monomial times(const Monomial& o) const;
    Monomial times_var(int i) const;
    bool divides(const Monomial& o) const;
    Monomial divide(const Monomial& o) const;  // o / this
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return e == o.e; }
    std::string str(const std::vector<std::string>& names) const;
};

// Graded reverse lexicographic, v_1 > v_2 > ... > v_m.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar, GrevlexGreater>;

    Polynomial() = default;
    static Polynomial term(const Monomial& mono, const Scalar& c);
    static Polynomial variable(int i, std::size_t m);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    const Monomial& leading_monomial() const;
    const Scalar& leading_coefficient() const;
    int degree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scale(const Scalar& c) const;
    Polynomial times_term(const Monomial& mono, const Scalar& c) const;
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    std::string str(const std::vector<std::string>& names) const;

private:
    TermMap terms_;  // leading term first; zero coefficients never stored

    void insert(const Monomial& mono, const Scalar& c);
};

// One square-free generator per minimal non-face (ghost singletons included).
std::vector<Monomial> stanley_reisner_ideal(const SimplicialComplex& k);

// The n linear forms theta_r = sum_i A(r,i) v_i read off the rows of the
// marking matrix (ghost columns zero).
struct LinearSystemOfParameters {
    Matrix a;  // n x m
    std::vector<Polynomial> forms;
};

// Throws std::invalid_argument if the marking matrix has dependent rows
// (markings fail to span, contradicting completeness).
LinearSystemOfParameters linear_ideal(const MarkedFan& fan);

// True iff for every facet I the submatrix of A on columns I has rank |I|.
bool lsop_check(const SimplicialComplex& k, const LinearSystemOfParameters& lsop);

// Reduced Groebner basis under grevlex, deterministic output order.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens);

// Unique remainder modulo a (reduced) Groebner basis.
Polynomial normal_form(Polynomial p, const std::vector<Polynomial>& gb);

struct GradedQuotient {
    std::size_t num_vars = 0;
    std::vector<Polynomial> groebner;
    std::vector<std::vector<Monomial>> std_monomials;  // by internal degree
    std::vector<long> hilbert;                         // trailing zeros trimmed
};

// R[v]/(I_K + J) for a valid fan. Throws std::invalid_argument when the lsop
// check fails (with the offending facet) or when dimensions fail to vanish
// past degree n (the quotient would not be Artinian).
GradedQuotient graded_quotient(const MarkedFan& fan);

// Hilbert function of the quotient, reported in cohomological degrees
// 0, 2, 4, ...; entry k is the dimension in degree 2k.
std::vector<long> basic_betti(const MarkedFan& fan);

// Dimension of degree-k part of R[K]/J computed without Groebner bases:
// face monomials of degree k modulo the image of degree-(k-1) times the lsop
// forms, by exact rank.
long graded_dimension_oracle(const SimplicialComplex& k,
                             const LinearSystemOfParameters& lsop, int deg);

// Dimension of Koszul homology of (theta_1..theta_n) on R[K] at homological
// degree i and total internal degree k, by exact ranks of the two adjacent
// differentials.
long koszul_homology(const SimplicialComplex& k, const LinearSystemOfParameters& lsop,
                     int i, int deg);

struct CupEntry {
    Monomial x, y;
    Polynomial product;  // normal form, a combination of standard monomials
};

// Products of all unordered pairs of standard monomials, in normal form.
std::vector<CupEntry> cup_product_table(const GradedQuotient& q);

struct RingPresentation {
    int m = 0;
    int n = 0;
    std::vector<std::string> variables;
    std::vector<Monomial> monomial_relations;
    std::vector<Polynomial> linear_relations;
    std::vector<long> betti;  // cohomological degrees 0,2,4,...
};

RingPresentation ring_presentation(const MarkedFan& fan);

std::vector<std::string> variable_names(std::size_t m);

}  // namespace toric
