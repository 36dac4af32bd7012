#include "toric/fan.hpp"

#include <algorithm>
#include <stdexcept>

#include "toric/rng.hpp"

namespace toric {

MarkedFan::MarkedFan(int n, SimplicialComplex k, std::vector<Vec> marks, std::vector<Vec> gens)
    : dim(n), complex(std::move(k)), markings(std::move(marks)),
      lattice_generators(std::move(gens)) {
    if (n < 0)
        throw std::invalid_argument("negative ambient dimension");
    if (static_cast<int>(markings.size()) != complex.vertex_count())
        throw std::invalid_argument("marking count " + std::to_string(markings.size()) +
                                    " does not match vertex count " +
                                    std::to_string(complex.vertex_count()));
    for (const Vec& a : markings)
        if (static_cast<int>(a.size()) != n)
            throw std::invalid_argument("marking dimension mismatch");
    for (const Vec& g : lattice_generators)
        if (static_cast<int>(g.size()) != n)
            throw std::invalid_argument("lattice generator dimension mismatch");
    for (const Vec& a : markings)
        disc = join_disc(disc, vec_disc(a));
    for (const Vec& g : lattice_generators)
        disc = join_disc(disc, vec_disc(g));
}

Matrix MarkedFan::full_marking_matrix() const {
    return Matrix::from_cols(markings, dim);
}

Matrix MarkedFan::lsop_matrix() const {
    std::vector<Vec> cols = markings;
    for (int i = 0; i < ray_count(); ++i)
        if (complex.is_ghost(i))
            cols[i] = zero_vec(dim);
    return Matrix::from_cols(cols, dim);
}

bool ValidationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

const CheckResult* ValidationReport::find(const std::string& name) const {
    for (const CheckResult& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

void ValidationReport::add(const std::string& name, bool pass, const std::string& witness) {
    checks.push_back({name, pass, witness});
}

namespace {

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        s += v[i].str();
    }
    return s + ")";
}

// Walls (size n-1 faces) with the list of facets containing each.
struct Wall {
    VertexSet face;
    std::vector<int> facets;
};

std::vector<Wall> collect_walls(const SimplicialComplex& k, int n) {
    std::vector<Wall> walls;
    for (const VertexSet& w : k.faces_of_size(n - 1)) {
        Wall wall{w, {}};
        for (std::size_t f = 0; f < k.facets().size(); ++f)
            if (w.subset_of(k.facets()[f]))
                wall.facets.push_back(static_cast<int>(f));
        walls.push_back(std::move(wall));
    }
    return walls;
}

}  // namespace

ValidationReport validate_marked_fan(const MarkedFan& fan, ValidateMode mode,
                                     std::uint64_t seed) {
    ValidationReport rep;
    const SimplicialComplex& k = fan.complex;
    const int n = fan.dim;
    const int m = fan.ray_count();
    const auto& facets = k.facets();

    // marking-lattice-membership: every marking slot lies in the subgroup
    // generated by the lattice generators.
    {
        const ZLattice gamma(fan.lattice_generators, fan.disc, n);
        bool ok = true;
        std::string witness;
        for (int i = 0; i < m; ++i) {
            if (!gamma.contains(fan.markings[i])) {
                ok = false;
                witness = "marking of ray " + std::to_string(i + 1) + " = " +
                          vec_str(fan.markings[i]) + " is outside the lattice";
                break;
            }
        }
        rep.add("marking-lattice-membership", ok, witness);
    }

    // lattice-spans: generators span the ambient space linearly.
    {
        const std::size_t r =
            rank(Matrix::from_rows(fan.lattice_generators, n));
        rep.add("lattice-spans", static_cast<int>(r) == n,
                static_cast<int>(r) == n
                    ? ""
                    : "lattice generators span a subspace of dimension " + std::to_string(r));
    }

    // marking-rank: non-ghost markings span the ambient space.
    bool marking_rank_ok;
    {
        std::vector<Vec> rows;
        for (int i = 0; i < m; ++i)
            if (!k.is_ghost(i))
                rows.push_back(fan.markings[i]);
        const std::size_t r = rank(Matrix::from_rows(rows, n));
        marking_rank_ok = static_cast<int>(r) == n;
        rep.add("marking-rank", marking_rank_ok,
                marking_rank_ok ? ""
                                : "markings span a subspace of dimension " + std::to_string(r) +
                                      " < " + std::to_string(n));
    }

    // proportional-markings: distinct rays of a fan are distinct 1-cones.
    {
        bool ok = true;
        std::string witness;
        const std::vector<int> verts = k.nonghost_vertices();
        for (std::size_t a = 0; a < verts.size() && ok; ++a) {
            if (is_zero_vec(fan.markings[verts[a]])) {
                ok = false;
                witness = "marking of ray " + std::to_string(verts[a] + 1) + " is zero";
                break;
            }
            for (std::size_t b = a + 1; b < verts.size(); ++b) {
                if (proportional(fan.markings[verts[a]], fan.markings[verts[b]])) {
                    ok = false;
                    witness = "rays " + std::to_string(verts[a] + 1) + " and " +
                              std::to_string(verts[b] + 1) + " have proportional markings";
                    break;
                }
            }
        }
        rep.add("proportional-markings", ok, witness);
    }

    // pure: every facet has n vertices (dimension n-1).
    bool pure_ok = true;
    {
        std::string witness;
        for (const VertexSet& f : facets) {
            if (f.size() != n) {
                pure_ok = false;
                witness = "facet " + f.str() + " has " + std::to_string(f.size()) +
                          " vertices, expected " + std::to_string(n);
                break;
            }
        }
        rep.add("pure", pure_ok, witness);
    }

    // facet-independence: the markings of each facet are linearly independent.
    bool indep_ok = true;
    {
        std::string witness;
        for (const VertexSet& f : facets) {
            std::vector<Vec> rows;
            for (int v : f.elements())
                rows.push_back(fan.markings[v]);
            if (rank(Matrix::from_rows(rows, n)) != rows.size()) {
                indep_ok = false;
                witness = "markings of facet " + f.str() + " are dependent";
                break;
            }
        }
        rep.add("facet-independence", indep_ok, witness);
    }

    // walls: every (n-2)-face lies in exactly two facets.
    bool walls_ok = true;
    std::vector<Wall> walls;
    if (n >= 1 && pure_ok) {
        walls = collect_walls(k, n);
        std::string witness;
        for (const Wall& w : walls) {
            if (w.facets.size() != 2) {
                walls_ok = false;
                witness = "wall " + w.face.str() + " lies in " +
                          std::to_string(w.facets.size()) + " facets, expected 2";
                break;
            }
        }
        rep.add("walls", walls_ok, witness);
    } else if (n >= 1) {
        walls_ok = false;
        rep.add("walls", false, "skipped: pure check failed");
    } else {
        rep.add("walls", true, "");
    }

    // wall-separation: across each wall the two opposite markings lie
    // strictly on opposite sides of the wall's hyperplane.
    if (walls_ok && indep_ok && marking_rank_ok && n >= 1) {
        bool ok = true;
        std::string witness;
        for (const Wall& w : walls) {
            const VertexSet& f1 = facets[w.facets[0]];
            const VertexSet& f2 = facets[w.facets[1]];
            std::vector<Vec> cols;
            for (int v : w.face.elements())
                cols.push_back(fan.markings[v]);
            const auto opposite = [&](const VertexSet& f) {
                for (int v : f.elements())
                    if (!w.face.contains(v))
                        return v;
                throw std::logic_error("facet equals wall");
            };
            const int v1 = opposite(f1), v2 = opposite(f2);
            std::vector<Vec> m1 = cols, m2 = cols;
            m1.push_back(fan.markings[v1]);
            m2.push_back(fan.markings[v2]);
            const int s1 = det(Matrix::from_cols(m1, n)).sign();
            const int s2 = det(Matrix::from_cols(m2, n)).sign();
            if (s1 == 0 || s2 == 0 || s1 == s2) {
                ok = false;
                witness = "across wall " + w.face.str() + " rays " + std::to_string(v1 + 1) +
                          " and " + std::to_string(v2 + 1) +
                          (s1 == s2 ? " lie on the same side" : " are degenerate");
                break;
            }
        }
        rep.add("wall-separation", ok, witness);
    } else if (n >= 1) {
        rep.add("wall-separation", false, "skipped: prerequisite check failed");
    } else {
        rep.add("wall-separation", true, "");
    }

    // connected: the facet adjacency graph (shared walls) is connected.
    {
        bool ok = true;
        std::string witness;
        const std::size_t nf = facets.size();
        if (nf > 1) {
            std::vector<int> comp(nf, -1);
            std::vector<std::size_t> stack{0};
            comp[0] = 0;
            while (!stack.empty()) {
                const std::size_t f = stack.back();
                stack.pop_back();
                for (std::size_t g = 0; g < nf; ++g) {
                    if (comp[g] >= 0 || g == f)
                        continue;
                    if (facets[f].intersect(facets[g]).size() == n - 1) {
                        comp[g] = 0;
                        stack.push_back(g);
                    }
                }
            }
            for (std::size_t f = 0; f < nf; ++f) {
                if (comp[f] < 0) {
                    ok = false;
                    witness = "facet " + facets[f].str() + " is not connected to " +
                              facets[0].str();
                    break;
                }
            }
        }
        rep.add("connected", ok, witness);
    }

    // cover: seeded random rational directions must land in the relative
    // interior of exactly one maximal cone; wall hits are resampled.
    if (n == 0) {
        rep.add("cover", true, "");
    } else if (pure_ok && indep_ok && marking_rank_ok) {
        bool ok = true;
        std::string witness;
        Rng rng(seed);
        int accepted = 0, attempts = 0;
        while (accepted < kCoverSamples) {
            if (++attempts > 50 * kCoverSamples) {
                ok = false;
                witness = "could not sample generic directions";
                break;
            }
            Vec dir(n);
            bool zero = true;
            for (int i = 0; i < n; ++i) {
                dir[i] = Scalar(rng.uniform(-10000, 10000));
                zero = zero && dir[i].is_zero();
            }
            if (zero)
                continue;
            const auto locs = ray_locate(fan, dir);
            if (locs.empty()) {
                ok = false;
                witness = "direction " + vec_str(dir) + " is covered by no maximal cone";
                break;
            }
            int interior = 0;
            for (const ConeLocation& l : locs)
                interior += l.interior ? 1 : 0;
            if (interior >= 1 && locs.size() > 1) {
                ok = false;
                witness = "direction " + vec_str(dir) + " lies in " +
                          std::to_string(locs.size()) + " maximal cones";
                break;
            }
            if (interior == 1)
                ++accepted;
            // boundary-only hit: non-generic sample, draw again
        }
        rep.add("cover", ok, witness);
    } else {
        rep.add("cover", false, "skipped: prerequisite check failed");
    }

    // pairwise-intersections (exact mode): cone(I) ∩ cone(J) = cone(I∩J),
    // decided by exact rational feasibility.
    if (mode == ValidateMode::exact) {
        if (pure_ok && indep_ok && marking_rank_ok) {
            bool ok = true;
            std::string witness;
            const Matrix lambda = fan.full_marking_matrix();
            for (std::size_t a = 0; a < facets.size() && ok; ++a) {
                for (std::size_t b = a + 1; b < facets.size() && ok; ++b) {
                    const std::vector<int> iv = facets[a].elements();
                    const std::vector<int> jv = facets[b].elements();
                    const VertexSet common = facets[a].intersect(facets[b]);
                    const std::size_t vars = iv.size() + jv.size();
                    // equalities: sum c_i a_i - sum e_j a_j = 0
                    Matrix eq(n, vars);
                    for (std::size_t t = 0; t < iv.size(); ++t)
                        for (int r = 0; r < n; ++r)
                            eq(r, t) = fan.markings[iv[t]][r];
                    for (std::size_t t = 0; t < jv.size(); ++t)
                        for (int r = 0; r < n; ++r)
                            eq(r, iv.size() + t) = -fan.markings[jv[t]][r];
                    const Vec eq_rhs = zero_vec(n);
                    for (std::size_t t = 0; t < iv.size() && ok; ++t) {
                        if (common.contains(iv[t]))
                            continue;
                        // nonnegativity plus c_t >= 1
                        Matrix ineq(vars + 1, vars);
                        Vec rhs = zero_vec(vars + 1);
                        for (std::size_t q = 0; q < vars; ++q)
                            ineq(q, q) = Scalar(1);
                        ineq(vars, t) = Scalar(1);
                        rhs[vars] = Scalar(1);
                        if (fm_feasible(eq, eq_rhs, ineq, rhs)) {
                            ok = false;
                            witness = "cones of facets " + facets[a].str() + " and " +
                                      facets[b].str() +
                                      " intersect outside their common face";
                        }
                    }
                }
            }
            rep.add("pairwise-intersections", ok, witness);
        } else {
            rep.add("pairwise-intersections", false, "skipped: prerequisite check failed");
        }
    }

    // informational: non-primitive markings are reported, not rejected.
    {
        const ZLattice gamma(fan.lattice_generators, fan.disc, n);
        for (int i = 0; i < m; ++i) {
            if (k.is_ghost(i))
                continue;
            const auto coords = gamma.coordinates(fan.markings[i]);
            if (!coords)
                continue;  // membership failure already reported above
            mpz_class g = 0;
            for (const mpz_class& c : *coords)
                g = gcd(g, c);
            if (g > 1)
                rep.notes.push_back("marking of ray " + std::to_string(i + 1) +
                                    " is non-primitive in the lattice (index " + g.get_str() +
                                    ")");
        }
    }

    return rep;
}

std::vector<ConeLocation> ray_locate(const MarkedFan& fan, const Vec& direction) {
    if (is_zero_vec(direction))
        throw std::invalid_argument("ray_locate: zero direction");
    std::vector<ConeLocation> out;
    const auto& facets = fan.complex.facets();
    for (std::size_t f = 0; f < facets.size(); ++f) {
        const std::vector<int> verts = facets[f].elements();
        std::vector<Vec> cols;
        for (int v : verts)
            cols.push_back(fan.markings[v]);
        const auto c = solve(Matrix::from_cols(cols, fan.dim), direction);
        if (!c)
            continue;
        bool nonneg = true, strict = true;
        for (const Scalar& x : *c) {
            const int s = x.sign();
            nonneg = nonneg && s >= 0;
            strict = strict && s > 0;
        }
        if (nonneg)
            out.push_back({static_cast<int>(f), strict});
    }
    return out;
}

bool kernel_is_rational(const Matrix& lambda) {
    if (lambda.disc() == 0)
        return true;
    Matrix stacked(2 * lambda.rows(), lambda.cols());
    for (std::size_t i = 0; i < lambda.rows(); ++i)
        for (std::size_t j = 0; j < lambda.cols(); ++j) {
            stacked(i, j) = lambda(i, j);
            stacked(lambda.rows() + i, j) = lambda(i, j).conjugate();
        }
    const std::size_t dim_ker = lambda.cols() - rank(lambda);
    const std::size_t dim_rat = lambda.cols() - rank(stacked);
    return dim_ker == dim_rat;
}

bool is_rational(const MarkedFan& fan) {
    return kernel_is_rational(fan.full_marking_matrix());
}

}  // namespace toric
