#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "toric/linalg.hpp"

namespace toric {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;  // list of rows

struct HnfResult {
    ZMat h;                          // H = U * A, row-style Hermite normal form
    ZMat u;                          // unimodular
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

// Row-style Hermite normal form: H = U*A with U unimodular, H in row echelon
// form with positive pivots and entries above each pivot reduced into
// [0, pivot).
HnfResult hermite_normal_form(const ZMat& a);

// Fraction-free (Bareiss) determinant of a square integer matrix.
mpz_class det_integer(ZMat m);

// Elementary divisors d_1 | d_2 | ... of an integer matrix, via gcds of k x k
// minors. Length equals the rank.
std::vector<mpz_class> elementary_divisors(const ZMat& a);

// A finitely generated subgroup of Q(sqrt(d))^len given by generators. The
// quadratic case is reduced to Q by splitting every coordinate a + b*sqrt(d)
// into the pair (a, b); denominators are cleared by one common multiple.
class ZLattice {
public:
    ZLattice(const std::vector<Vec>& generators, long disc, std::size_t len);

    bool contains(const Vec& v) const;
    // Coordinates of v in the HNF basis rows; nullopt if v is not a member.
    std::optional<ZVec> coordinates(const Vec& v) const;
    std::size_t rank() const { return hnf_.rank(); }
    // Nonzero HNF rows (a Z-basis of the lattice, in the split integer
    // coordinates scaled by the denominator-clearing factor).
    ZMat basis_rows() const;

private:
    long disc_;
    std::size_t len_;       // ambient dimension over the scalar field
    std::size_t split_len_; // len or 2*len
    mpz_class scale_;       // common denominator multiplier
    HnfResult hnf_;

    std::optional<ZVec> integerize(const Vec& v) const;
};

// v is an integer combination of the generators.
bool zmodule_membership(const std::vector<Vec>& generators, const Vec& v);

// Equality of spans over Z (mutual membership).
bool zmodule_equal(const std::vector<Vec>& gens1, const std::vector<Vec>& gens2);

}  // namespace toric
