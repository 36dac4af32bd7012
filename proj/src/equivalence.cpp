#include "toric/equivalence.hpp"

#include <algorithm>
#include <set>

namespace toric {

Fingerprint invariant_fingerprint(const MarkedFan& fan) {
    Fingerprint fp;
    fp.n = fan.dim;
    fp.f = fan.complex.f_vector();
    fp.h = fan.complex.h_vector(fan.dim);

    const auto& facets = fan.complex.facets();
    for (std::size_t a = 0; a < facets.size(); ++a) {
        int deg = 0;
        for (std::size_t b = 0; b < facets.size(); ++b)
            if (a != b && facets[a].intersect(facets[b]).size() == fan.dim - 1)
                ++deg;
        fp.adjacency_degrees.push_back(deg);
    }
    std::sort(fp.adjacency_degrees.begin(), fp.adjacency_degrees.end());

    const ZLattice gamma(fan.lattice_generators, fan.disc, fan.dim);
    ZMat coords;
    for (int v : fan.complex.nonghost_vertices()) {
        const auto c = gamma.coordinates(fan.markings[v]);
        if (!c)
            throw std::invalid_argument("marking of ray " + std::to_string(v + 1) +
                                        " lies outside the lattice");
        coords.push_back(*c);
    }
    if (!coords.empty())
        fp.marking_divisors = elementary_divisors(coords);
    return fp;
}

namespace {

// Smallest-index set of non-ghost rays with linearly independent markings
// spanning the ambient space.
std::vector<int> spanning_rays(const MarkedFan& fan) {
    std::vector<int> chosen;
    std::vector<Vec> rows;
    std::size_t cur_rank = 0;
    for (int v : fan.complex.nonghost_vertices()) {
        rows.push_back(fan.markings[v]);
        const std::size_t r = rank(Matrix::from_rows(rows, fan.dim));
        if (r > cur_rank) {
            chosen.push_back(v);
            cur_rank = r;
        } else {
            rows.pop_back();
        }
        if (static_cast<int>(cur_rank) == fan.dim)
            return chosen;
    }
    throw std::invalid_argument("markings do not span the ambient space");
}

bool lattices_match(const MarkedFan& f1, const MarkedFan& f2, const Matrix& phi) {
    std::vector<Vec> image;
    image.reserve(f1.lattice_generators.size());
    for (const Vec& g : f1.lattice_generators)
        image.push_back(phi * g);
    return zmodule_equal(image, f2.lattice_generators);
}

}  // namespace

std::optional<FanIsomorphism> marked_fan_isomorphic(const MarkedFan& f1, const MarkedFan& f2) {
    if (f1.dim != f2.dim)
        return std::nullopt;
    join_disc(f1.disc, f2.disc);  // distinct quadratic fields are not modeled
    if (!(invariant_fingerprint(f1) == invariant_fingerprint(f2)))
        return std::nullopt;

    const int n = f1.dim;
    std::optional<FanIsomorphism> witness;
    if (n == 0) {
        // Zero-dimensional fans: the unique linear map works; ghosts ignored.
        witness = FanIsomorphism{std::vector<int>(f1.ray_count(), -1), Matrix(0, 0)};
        return witness;
    }

    const std::vector<int> span1 = spanning_rays(f1);
    std::vector<Vec> cols1;
    for (int v : span1)
        cols1.push_back(f1.markings[v]);
    const Matrix a_inv = inverse(Matrix::from_cols(cols1, n));

    for_each_complex_isomorphism(f1.complex, f2.complex, [&](const std::vector<int>& sigma) {
        std::vector<Vec> cols2;
        for (int v : span1)
            cols2.push_back(f2.markings[sigma[v]]);
        const Matrix phi = Matrix::from_cols(cols2, n) * a_inv;
        if (det(phi).is_zero())
            return true;  // keep searching
        for (int v : f1.complex.nonghost_vertices())
            if (phi * f1.markings[v] != f2.markings[sigma[v]])
                return true;
        if (!lattices_match(f1, f2, phi))
            return true;
        witness = FanIsomorphism{sigma, phi};
        return false;  // first witness in enumeration order
    });
    return witness;
}

bool p_equivalent(const MarkedFan& f1, const MarkedFan& f2) {
    return marked_fan_isomorphic(f1, f2).has_value();
}

bool verify_isomorphism(const MarkedFan& f1, const MarkedFan& f2, const FanIsomorphism& iso) {
    if (f1.dim != f2.dim)
        return false;
    const int n = f1.dim;
    if (static_cast<int>(iso.sigma.size()) != f1.ray_count())
        return false;

    // sigma: bijection of non-ghost vertices, ghosts untouched
    std::set<int> image;
    for (int v = 0; v < f1.ray_count(); ++v) {
        if (f1.complex.is_ghost(v)) {
            if (iso.sigma[v] != -1)
                return false;
            continue;
        }
        const int w = iso.sigma[v];
        if (w < 0 || w >= f2.ray_count() || f2.complex.is_ghost(w))
            return false;
        if (!image.insert(w).second)
            return false;
    }
    if (image.size() != f2.complex.nonghost_vertices().size())
        return false;

    // facets map onto facets
    std::set<VertexSet> facets2(f2.complex.facets().begin(), f2.complex.facets().end());
    std::set<VertexSet> mapped;
    for (const VertexSet& f : f1.complex.facets()) {
        VertexSet img;
        for (int v : f.elements())
            img.add(iso.sigma[v]);
        if (!facets2.count(img))
            return false;
        mapped.insert(img);
    }
    if (mapped.size() != facets2.size())
        return false;

    if (n > 0 && det(iso.phi).is_zero())
        return false;
    for (int v : f1.complex.nonghost_vertices())
        if (iso.phi * f1.markings[v] != f2.markings[iso.sigma[v]])
            return false;
    return lattices_match(f1, f2, iso.phi);
}

}  // namespace toric
