#include "toric/corpus.hpp"

#include <stdexcept>

#include "toric/rng.hpp"

namespace toric::corpus {

namespace {

Vec ivec(const std::vector<long>& entries) {
    Vec v;
    v.reserve(entries.size());
    for (long x : entries)
        v.push_back(Scalar(x));
    return v;
}

std::vector<Vec> std_basis(int n) {
    std::vector<Vec> basis;
    for (int i = 0; i < n; ++i) {
        Vec e = zero_vec(n);
        e[i] = Scalar(1);
        basis.push_back(std::move(e));
    }
    return basis;
}

}  // namespace

MarkedFan cp(int n) {
    if (n < 1)
        throw std::invalid_argument("cp(n) needs n >= 1");
    const int m = n + 1;
    std::vector<Vec> markings = std_basis(n);
    Vec last = zero_vec(n);
    for (int i = 0; i < n; ++i)
        last[i] = Scalar(-1);
    markings.push_back(std::move(last));
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip < m; ++skip) {
        std::vector<int> f;
        for (int v = 0; v < m; ++v)
            if (v != skip)
                f.push_back(v);
        facets.push_back(std::move(f));
    }
    return MarkedFan(n, SimplicialComplex(m, facets), markings, std_basis(n));
}

MarkedFan square() { return hirzebruch(0); }

MarkedFan hirzebruch(int a) {
    std::vector<Vec> markings = {ivec({1, 0}), ivec({0, 1}), ivec({-1, a}), ivec({0, -1})};
    std::vector<std::vector<int>> facets = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return MarkedFan(2, SimplicialComplex(4, facets), markings, std_basis(2));
}

namespace {

// Boundary of the n-dimensional cross-polytope: vertices i and i+n are the
// rays +-e_i; facets pick one vertex from each antipodal pair.
MarkedFan cross_polytope(int n) {
    const int m = 2 * n;
    std::vector<Vec> markings;
    for (int i = 0; i < n; ++i)
        markings.push_back(std_basis(n)[i]);
    for (int i = 0; i < n; ++i) {
        Vec v = zero_vec(n);
        v[i] = Scalar(-1);
        markings.push_back(std::move(v));
    }
    std::vector<std::vector<int>> facets;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> f;
        for (int i = 0; i < n; ++i)
            f.push_back((mask >> i) & 1 ? i + n : i);
        facets.push_back(std::move(f));
    }
    return MarkedFan(n, SimplicialComplex(m, facets), markings, std_basis(n));
}

}  // namespace

MarkedFan octahedron() { return cross_polytope(3); }

MarkedFan cross16() { return cross_polytope(4); }

MarkedFan sqrt2_cycle() {
    const Scalar sqrt2 = Scalar::quadratic(0, 1, 2);
    std::vector<Vec> markings = {ivec({1, 0}), ivec({0, 1}), ivec({-1, 0}),
                                 Vec{Scalar(0), -sqrt2}};
    std::vector<Vec> gens = {ivec({1, 0}), ivec({0, 1}), Vec{Scalar(0), sqrt2}};
    std::vector<std::vector<int>> facets = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return MarkedFan(2, SimplicialComplex(4, facets), markings, gens);
}

MarkedFan ghost_torus(int m) {
    return MarkedFan(0, SimplicialComplex(m, {}), std::vector<Vec>(m), {});
}

std::vector<Entry> all() {
    std::vector<Entry> out;
    out.push_back({"cp1", cp(1), true});
    out.push_back({"cp2", cp(2), true});
    out.push_back({"cp3", cp(3), true});
    out.push_back({"cp4", cp(4), true});
    out.push_back({"square", square(), true});
    out.push_back({"hirzebruch1", hirzebruch(1), true});
    out.push_back({"hirzebruch2", hirzebruch(2), true});
    out.push_back({"octahedron", octahedron(), true});
    out.push_back({"cell16", cross16(), true});
    out.push_back({"sqrt2cycle", sqrt2_cycle(), true});
    out.push_back({"ghost2", ghost_torus(2), false});
    return out;
}

std::vector<FailureEntry> failures() {
    std::vector<FailureEntry> out;

    // missing cone: CP^2 rays but only two facets; vertex walls are
    // underpopulated.
    out.push_back({"missing-cone",
                   MarkedFan(2, SimplicialComplex(3, {{0, 1}, {0, 2}}),
                             {ivec({1, 0}), ivec({0, 1}), ivec({-1, -1})}, std_basis(2)),
                   "walls"});

    // overlapping cones: third ray marked inside the first cone.
    out.push_back({"overlapping-cones",
                   MarkedFan(2, SimplicialComplex(3, {{0, 1}, {0, 2}, {1, 2}}),
                             {ivec({1, 0}), ivec({0, 1}), ivec({1, 1})}, std_basis(2)),
                   "wall-separation"});

    // dependent facet markings: two rays of one facet are collinear.
    out.push_back({"dependent-markings",
                   MarkedFan(2, SimplicialComplex(3, {{0, 1}, {0, 2}, {1, 2}}),
                             {ivec({1, 0}), ivec({2, 0}), ivec({0, 1})}, std_basis(2)),
                   "facet-independence"});

    // marking outside the lattice: generators span only 2Z x 2Z.
    out.push_back({"marking-outside-lattice",
                   MarkedFan(2, SimplicialComplex(3, {{0, 1}, {0, 2}, {1, 2}}),
                             {ivec({1, 0}), ivec({0, 1}), ivec({-1, -1})},
                             {ivec({2, 0}), ivec({0, 2})}),
                   "marking-lattice-membership"});

    // odd wall: the extra diagonal facet puts two vertices in three facets.
    out.push_back({"odd-wall",
                   MarkedFan(2, SimplicialComplex(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}),
                             {ivec({1, 0}), ivec({0, 1}), ivec({-1, 0}), ivec({0, -1})},
                             std_basis(2)),
                   "walls"});

    // rank-deficient marking matrix: all rays collinear.
    out.push_back({"rank-deficient",
                   MarkedFan(2, SimplicialComplex(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
                             {ivec({1, 0}), ivec({2, 0}), ivec({-1, 0}), ivec({-2, 0})},
                             std_basis(2)),
                   "marking-rank"});

    return out;
}

MarkedFan stacked_sphere(int dim, int vertices, std::uint64_t seed, int marking_variant) {
    if (dim < 1)
        throw std::invalid_argument("stacked_sphere: dim must be >= 1");
    const int n = dim + 1;
    if (vertices < n + 1)
        throw std::invalid_argument("stacked_sphere: need at least " + std::to_string(n + 1) +
                                    " vertices");

    // Start from the boundary of the (dim+1)-simplex.
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> f;
        for (int v = 0; v <= n; ++v)
            if (v != skip)
                f.push_back(v);
        facets.push_back(std::move(f));
    }
    std::vector<Vec> markings = std_basis(n);
    Vec last = zero_vec(n);
    for (int i = 0; i < n; ++i)
        last[i] = Scalar(-1);
    markings.push_back(std::move(last));

    Rng facet_rng(seed);
    Rng coef_rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(marking_variant));

    int m = n + 1;
    while (m < vertices) {
        const std::size_t pick =
            static_cast<std::size_t>(facet_rng.uniform(0, static_cast<long>(facets.size()) - 1));
        const std::vector<int> old = facets[pick];
        facets.erase(facets.begin() + static_cast<long>(pick));
        // New ray strictly inside the chosen cone keeps the fan complete.
        Vec fresh = zero_vec(n);
        for (int v : old) {
            const long c = marking_variant == 0 ? 1 : coef_rng.uniform(1, 5);
            fresh = add(fresh, scaled(markings[v], Scalar(c)));
        }
        markings.push_back(std::move(fresh));
        for (int drop : old) {
            std::vector<int> f;
            for (int v : old)
                if (v != drop)
                    f.push_back(v);
            f.push_back(m);
            facets.push_back(std::move(f));
        }
        ++m;
    }
    return MarkedFan(n, SimplicialComplex(m, facets), markings, std_basis(n));
}

MarkedFan octahedron_random_marking(std::uint64_t seed) {
    Rng rng(seed);
    // Random unimodular transform as a product of elementary row operations.
    Matrix u = Matrix::identity(3);
    for (int step = 0; step < 8; ++step) {
        const int i = static_cast<int>(rng.uniform(0, 2));
        int j = static_cast<int>(rng.uniform(0, 2));
        if (i == j)
            j = (j + 1) % 3;
        long c = rng.uniform(-2, 2);
        if (c == 0)
            c = 1;
        for (int col = 0; col < 3; ++col)
            u(i, col) += Scalar(c) * u(j, col);
    }
    MarkedFan base = octahedron();
    std::vector<Vec> markings;
    for (int v = 0; v < base.ray_count(); ++v) {
        const Scalar scale(rng.uniform(1, 3));
        markings.push_back(scaled(u * base.markings[v], scale));
    }
    return MarkedFan(3, base.complex, markings, base.lattice_generators);
}

}  // namespace toric::corpus
