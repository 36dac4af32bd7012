#include "toric/realize.hpp"

#include <algorithm>

namespace toric {

std::vector<Vec> pad_generators(const MarkedFan& fan) {
    const int n = fan.dim;
    std::vector<Vec> padding;

    // smallest prefix of the generators restoring generation of the lattice
    std::vector<Vec> pool = fan.markings;
    bool generates = false;
    for (std::size_t plen = 0; plen <= fan.lattice_generators.size(); ++plen) {
        if (zmodule_equal(pool, fan.lattice_generators)) {
            generates = true;
            break;
        }
        if (plen == fan.lattice_generators.size())
            break;
        pool.push_back(fan.lattice_generators[plen]);
        padding.push_back(fan.lattice_generators[plen]);
    }
    if (!generates)
        throw RealizeError("pad-generators",
                           "markings plus all lattice generators fail to generate the lattice");

    const int total = fan.ray_count() + static_cast<int>(padding.size());
    if ((total - n) % 2 != 0) {
        padding.push_back(fan.lattice_generators.empty() ? zero_vec(n)
                                                         : fan.lattice_generators.front());
    }
    return padding;
}

Matrix lambda_map(const MarkedFan& fan, const std::vector<Vec>& padding) {
    std::vector<Vec> cols = fan.markings;
    cols.insert(cols.end(), padding.begin(), padding.end());
    return Matrix::from_cols(cols, fan.dim);
}

std::vector<std::pair<int, int>> complex_structure_subspace(const std::vector<Vec>& kernel) {
    if (kernel.size() % 2 != 0)
        throw RealizeError("complex-structure",
                           "kernel dimension " + std::to_string(kernel.size()) + " is odd");
    if (!kernel.empty()) {
        const std::size_t len = kernel.front().size();
        if (rank(Matrix::from_rows(kernel, len)) != kernel.size())
            throw RealizeError("complex-structure", "kernel vectors are dependent");
    }
    std::vector<std::pair<int, int>> pairing;
    for (std::size_t j = 0; j + 1 < kernel.size(); j += 2)
        pairing.emplace_back(static_cast<int>(j), static_cast<int>(j + 1));
    return pairing;
}

MarkedFan induced_marked_fan(const C2Object& obj) {
    const int m = obj.k.vertex_count();
    // rows of q = the canonical echelon basis of the annihilator of
    // span(kernel) inside (R^m)*
    const std::vector<Vec> ann = kernel_basis(Matrix::from_rows(obj.kernel, m));
    const Matrix q = Matrix::from_rows(ann, m);
    std::vector<Vec> markings;
    std::vector<Vec> gens;
    for (int i = 0; i < m; ++i) {
        markings.push_back(q.col(i));
        gens.push_back(q.col(i));
    }
    return MarkedFan(static_cast<int>(ann.size()), obj.k, markings, gens);
}

ValidationReport validate_c2_object(const C2Object& obj, std::uint64_t seed) {
    ValidationReport rep;
    const int m = obj.k.vertex_count();
    const std::size_t ell = obj.kernel.size();

    for (const Vec& u : obj.kernel)
        if (static_cast<int>(u.size()) != m)
            throw std::invalid_argument("kernel vector length mismatch");

    // pairing shape: consecutive pairs covering the kernel basis
    {
        bool ok = ell % 2 == 0 && obj.pairing.size() == ell / 2;
        for (std::size_t j = 0; ok && j < obj.pairing.size(); ++j)
            ok = obj.pairing[j].first == static_cast<int>(2 * j) &&
                 obj.pairing[j].second == static_cast<int>(2 * j + 1);
        rep.add("pairing-valid", ok,
                ok ? "" : "pairing does not tile the kernel basis into consecutive pairs");
    }

    // condition (a): Re restricted to h is injective, i.e. the kernel
    // vectors are independent; their span then equals Re(h) by construction.
    const bool indep =
        rank(Matrix::from_rows(obj.kernel, m)) == ell;
    rep.add("re-injective", indep, indep ? "" : "kernel vectors are dependent");

    if (!indep) {
        rep.add("image-fan-valid", false, "skipped: re-injective failed");
        rep.add("cone-map-bijective", false, "skipped: re-injective failed");
        return rep;
    }

    // condition (b)-side: the quotient of the coordinate fan by Re(h) must be
    // a complete simplicial fan; reuse the fan validator on the image.
    const MarkedFan image = induced_marked_fan(obj);
    const ValidationReport sub = validate_marked_fan(image, ValidateMode::fast, seed);
    {
        std::string witness;
        for (const CheckResult& c : sub.checks)
            if (!c.pass) {
                witness = "image fan check '" + c.name + "': " + c.witness;
                break;
            }
        rep.add("image-fan-valid", sub.all_passed(), witness);
    }

    // cone map bijectivity: distinct faces keep distinct simplicial images,
    // which reduces to facet-wise independence plus pairwise non-proportional
    // image markings.
    {
        const CheckResult* fi = sub.find("facet-independence");
        const CheckResult* pm = sub.find("proportional-markings");
        const bool ok = fi && fi->pass && pm && pm->pass;
        rep.add("cone-map-bijective", ok,
                ok ? "" : "image cones of distinct faces coincide or degenerate");
    }
    return rep;
}

Realization realize_moment_angle(const MarkedFan& fan, std::uint64_t seed) {
    Realization real;
    real.padding = pad_generators(fan);
    real.k_padded = fan.complex.add_ghost_vertices(static_cast<int>(real.padding.size()));
    real.m = real.k_padded.vertex_count();
    real.lambda = lambda_map(fan, real.padding);

    if (rank(real.lambda) != static_cast<std::size_t>(fan.dim))
        throw RealizeError("lambda-map", "Lambda is not surjective: markings do not span");

    real.kernel = kernel_basis(real.lambda);
    for (const Vec& u : real.kernel)
        if (!is_zero_vec(real.lambda * u))
            throw RealizeError("kernel", "kernel vector fails Lambda*u = 0");
    if (real.kernel.size() != static_cast<std::size_t>(real.m - fan.dim))
        throw RealizeError("kernel", "kernel dimension is not m - n");

    real.pairing = complex_structure_subspace(real.kernel);

    const C2Object obj{real.k_padded, real.kernel, real.pairing};
    real.c2_report = validate_c2_object(obj, seed);
    if (!real.c2_report.all_passed()) {
        for (const CheckResult& c : real.c2_report.checks)
            if (!c.pass)
                throw RealizeError("c2-validation", c.name + ": " + c.witness);
    }

    const MarkedFan induced = induced_marked_fan(obj);
    auto iso = marked_fan_isomorphic(fan, induced);
    if (!iso)
        throw RealizeError("round-trip", "induced marked fan is not isomorphic to the input");
    real.roundtrip = std::move(*iso);

    real.rational = kernel_is_rational(real.lambda);
    return real;
}

RealQuotientData real_quotient_data(const MarkedFan& fan) {
    RealQuotientData data;
    data.q = fan.full_marking_matrix();
    data.h_basis = kernel_basis(data.q);
    data.rational = is_rational(fan);
    if (data.h_basis.empty())
        data.note = "h' = 0: the canonical foliation is by points";
    else if (data.rational)
        data.note = "h' is rational: the canonical foliation is a holomorphic Seifert "
                    "fibration over the toric orbifold of the quotient fan";
    else
        data.note = "h' is irrational: leaves are non-compact, no Seifert fibration";
    return data;
}

}  // namespace toric
