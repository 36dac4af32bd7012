#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "toric/fan.hpp"
#include "toric/linalg.hpp"

namespace toric {

// Cheap necessary invariants of marked-fan isomorphism. Ghost vertices do not
// enter (isomorphism ignores them); neither does the scalar field, since an
// isomorphism may carry a rational fan onto an irrational one.
struct Fingerprint {
    int n = 0;
    std::vector<long> f;
    std::vector<long> h;
    std::vector<int> adjacency_degrees;       // sorted per-facet neighbour counts
    std::vector<mpz_class> marking_divisors;  // elementary divisors of the
                                              // marking sublattice inside Gamma

    bool operator==(const Fingerprint& o) const = default;
};

Fingerprint invariant_fingerprint(const MarkedFan& fan);

// A witness of marked-fan isomorphism: sigma maps vertices of the first fan
// to vertices of the second (ghosts -> -1) and phi is the linear map with
// phi(a_i) = a'_{sigma(i)} and phi(Gamma_1) = Gamma_2.
struct FanIsomorphism {
    std::vector<int> sigma;
    Matrix phi;
};

// Decision procedure of p-equivalence: fingerprints, then enumeration of
// complex isomorphisms; for each candidate sigma, phi is solved from n
// independent markings and checked on all markings and on the lattices.
// Returns the first witness in enumeration order. Throws FieldMismatchError
// when the fans live over distinct quadratic fields.
std::optional<FanIsomorphism> marked_fan_isomorphic(const MarkedFan& f1, const MarkedFan& f2);

bool p_equivalent(const MarkedFan& f1, const MarkedFan& f2);

// Re-verification of a witness from scratch: sigma is a bijection of
// non-ghost vertices carrying facets onto facets, phi is invertible, the
// markings match, and phi carries the first lattice onto the second.
bool verify_isomorphism(const MarkedFan& f1, const MarkedFan& f2, const FanIsomorphism& iso);

}  // namespace toric
