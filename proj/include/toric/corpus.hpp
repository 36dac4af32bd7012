#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric::corpus {

struct Entry {
    std::string name;
    MarkedFan fan;
    bool sphere = true;  // K triangulates a sphere (Poincare duality applies)
};

struct FailureEntry {
    std::string name;
    MarkedFan fan;
    std::string failing_check;  // the named validator check that must reject
};

// Complex projective space fan: rays e_1..e_n and -(e_1+...+e_n).
MarkedFan cp(int n);
// Product of two projective lines: rays +-e_1, +-e_2 on the 4-cycle.
MarkedFan square();
// Hirzebruch-type marking of the 4-cycle: (1,0),(0,1),(-1,a),(0,-1).
MarkedFan hirzebruch(int a);
// Boundary of the 3-dimensional cross-polytope, rays +-e_i.
MarkedFan octahedron();
// Boundary of the 4-dimensional cross-polytope (the 16-cell).
MarkedFan cross16();
// 4-cycle marked with (1,0),(0,1),(-1,0),(0,-sqrt(2)) over Q(sqrt(2)).
MarkedFan sqrt2_cycle();
// m ghost vertices, trivial fan in R^0 (a complex torus datum).
MarkedFan ghost_torus(int m);

// Every bundled valid fan, in the shipped order.
std::vector<Entry> all();
// The six engineered-failure fixtures with their expected failing checks.
std::vector<FailureEntry> failures();

// Random stacked d-sphere (d = 2 or 3) on `vertices` vertices, grown from the
// boundary of a (d+1)-simplex by seeded stellar subdivisions. The complex
// depends only on (dim, vertices, seed); the marking also depends on
// marking_variant (variant 0: barycentric coefficients 1, variant k > 0:
// seeded coefficients in 1..5).
MarkedFan stacked_sphere(int dim, int vertices, std::uint64_t seed, int marking_variant = 0);

// Random valid marking of the octahedron complex: a seeded unimodular image
// of the standard cross-polytope markings with positive per-ray scalings.
MarkedFan octahedron_random_marking(std::uint64_t seed);

}  // namespace toric::corpus
