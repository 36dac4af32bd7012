#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/linalg.hpp"
#include "toric/simplicial.hpp"

namespace toric {

// A complete simplicial marked fan: ambient dimension n, underlying complex K
// on m vertices (ghosts allowed), one marking vector per vertex (for a ghost
// vertex the slot holds an arbitrary lattice element), and generators of the
// finitely generated spanning subgroup the markings live in.
struct MarkedFan {
    int dim = 0;                        // n
    SimplicialComplex complex;          // m vertices
    std::vector<Vec> markings;          // m vectors of length n
    std::vector<Vec> lattice_generators;
    long disc = 0;                      // field: 0 = Q, else square-free d

    MarkedFan(int n, SimplicialComplex k, std::vector<Vec> marks, std::vector<Vec> gens);

    int ray_count() const { return complex.vertex_count(); }
    // n x m; column i is the marking of vertex i.
    Matrix full_marking_matrix() const;
    // n x m with ghost columns zeroed (the lsop matrix of the face ring).
    Matrix lsop_matrix() const;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool all_passed() const;
    const CheckResult* find(const std::string& name) const;
    void add(const std::string& name, bool pass, const std::string& witness = "");
};

enum class ValidateMode { fast, exact };

inline constexpr int kCoverSamples = 200;
inline constexpr std::uint64_t kDefaultSeed = 1;

// Layered completeness/validity certificate. Checks, in order:
// marking-lattice-membership, lattice-spans, marking-rank,
// proportional-markings, pure, facet-independence, walls, wall-separation,
// connected, cover (randomized, seeded), and in exact mode
// pairwise-intersections (cone(I) ∩ cone(J) = cone(I∩J) by Fourier-Motzkin).
// Structurally malformed fans are rejected by the MarkedFan constructor
// before any check runs.
ValidationReport validate_marked_fan(const MarkedFan& fan, ValidateMode mode,
                                     std::uint64_t seed);

struct ConeLocation {
    int facet = 0;        // index into fan.complex.facets()
    bool interior = false;  // all cone coefficients strictly positive
};

// All facets I with direction = sum_{i in I} c_i a_i, c_i >= 0 (exact solve).
// Requires facet markings independent.
std::vector<ConeLocation> ray_locate(const MarkedFan& fan, const Vec& direction);

// Whether Ker of the marking map (over all m columns) admits an all-rational
// basis; decided by comparing the kernel with its Galois conjugate.
bool is_rational(const MarkedFan& fan);
bool kernel_is_rational(const Matrix& lambda);

}  // namespace toric
