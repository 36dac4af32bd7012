#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toric/equivalence.hpp"
#include "toric/fan.hpp"
#include "toric/linalg.hpp"

namespace toric {

// A stage of the realization pipeline failed; carries the stage name and a
// witness description.
class RealizeError : public std::runtime_error {
public:
    RealizeError(std::string stage_name, const std::string& witness)
        : std::runtime_error("realization stage '" + stage_name + "' failed: " + witness),
          stage(std::move(stage_name)) {}
    std::string stage;
};

// Complex moment-angle data produced from a marked fan: the padded complex,
// the map Lambda (columns = markings then padding), a basis of Ker Lambda,
// and the pairing encoding the complex subspace h as the span of
// u_{2j-1} - i*u_{2j} over consecutive kernel basis vectors.
struct Realization {
    int m = 0;  // rays after padding
    SimplicialComplex k_padded;
    Matrix lambda;             // n x m
    std::vector<Vec> kernel;   // m - n vectors (even count)
    std::vector<std::pair<int, int>> pairing;  // 0-based kernel indices
    std::vector<Vec> padding;
    bool rational = false;
    ValidationReport c2_report;
    FanIsomorphism roundtrip;  // witness: input fan ~ induced fan
};

// Moment-angle side of a C2 object: the fan is the coordinate fan of K inside
// R^m, and the complex subspace is encoded by a real kernel basis + pairing.
struct C2Object {
    SimplicialComplex k;
    std::vector<Vec> kernel;
    std::vector<std::pair<int, int>> pairing;
};

// Smallest-index prefix of the lattice generators making markings + padding
// generate the lattice, plus one extra copy of the first generator when
// m - n would be odd. Deterministic.
std::vector<Vec> pad_generators(const MarkedFan& fan);

// n x (m + padding) matrix whose columns are the markings then the padding.
Matrix lambda_map(const MarkedFan& fan, const std::vector<Vec>& padding);

// Pairs consecutive kernel basis vectors; throws RealizeError on odd count.
// The encoded subspace has Re injective and Re(h) = span(kernel), both
// re-verified by exact rank.
std::vector<std::pair<int, int>> complex_structure_subspace(const std::vector<Vec>& kernel);

// Checks the C2 axioms: Re injective on h, the quotient of the coordinate fan
// by Re(h) is a complete simplicial fan, and the cone map is bijective.
ValidationReport validate_c2_object(const C2Object& obj, std::uint64_t seed);

// The marked fan induced by the quotient map (canonical annihilator basis of
// span(kernel)): markings are the images of the coordinate vectors.
MarkedFan induced_marked_fan(const C2Object& obj);

// Full pipeline: pad, build Lambda, kernel, pairing, validate the C2 object,
// and check the induced fan is isomorphic to the input. Throws RealizeError
// naming the failed stage.
Realization realize_moment_angle(const MarkedFan& fan, std::uint64_t seed = kDefaultSeed);

// The real quotient data of the fan itself (no padding): the q matrix,
// a basis of h' = Ker q, and the rationality flag of Remark-style Seifert
// fibrations.
struct RealQuotientData {
    Matrix q;                 // n x m
    std::vector<Vec> h_basis; // basis of Ker q
    bool rational = false;
    std::string note;
};

RealQuotientData real_quotient_data(const MarkedFan& fan);

}  // namespace toric
