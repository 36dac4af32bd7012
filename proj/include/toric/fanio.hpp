#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "toric/fan.hpp"
#include "toric/realize.hpp"

namespace toric {

// Malformed fan file; `context` names the offending key or byte position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::string ctx)
        : std::runtime_error(what + (ctx.empty() ? "" : " (" + ctx + ")")),
          context(std::move(ctx)) {}
    std::string context;
};

using Json = nlohmann::ordered_json;

// Fan file schema "markedfan/1":
// { "schema": "markedfan/1", "field": "Q" | {"quadratic": d}, "dim": n,
//   "rays": [[scalar strings]], "ghosts": [1-based indices],
//   "facets": [[1-based indices]], "lattice_generators": [[scalar strings]] }
MarkedFan fan_from_json(const Json& j);
Json fan_to_json(const MarkedFan& fan);

MarkedFan read_fan_file(const std::string& path);
void write_fan_file(const std::string& path, const MarkedFan& fan);

// Realization JSON with exactly the fields
// {m, facets, ghosts, lambda, kernel, pairing, rational}; indices 1-based,
// scalars as exact strings.
Json realization_to_json(const Realization& real);

Json report_json(const ValidationReport& rep);

}  // namespace toric
