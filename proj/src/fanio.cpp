#include "toric/fanio.hpp"

#include <fstream>
#include <set>

namespace toric {

namespace {

long parse_field_tag(const Json& j) {
    if (!j.contains("field"))
        throw ParseError("missing key 'field'", "field");
    const Json& f = j.at("field");
    if (f.is_string()) {
        if (f.get<std::string>() != "Q")
            throw ParseError("unknown field '" + f.get<std::string>() + "'", "field");
        return 0;
    }
    if (f.is_object() && f.contains("quadratic") && f.at("quadratic").is_number_integer()) {
        const long d = f.at("quadratic").get<long>();
        if (!is_squarefree(d))
            throw ParseError("quadratic field discriminant must be square-free and > 1",
                             "field.quadratic");
        return d;
    }
    throw ParseError("field must be \"Q\" or {\"quadratic\": d}", "field");
}

std::vector<Vec> parse_vector_list(const Json& j, const std::string& key, int n, long disc) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw ParseError("missing or non-array key '" + key + "'", key);
    std::vector<Vec> out;
    std::size_t row = 0;
    for (const Json& jv : j.at(key)) {
        if (!jv.is_array() || static_cast<int>(jv.size()) != n)
            throw ParseError("vector of length " + std::to_string(jv.size()) +
                                 ", expected " + std::to_string(n),
                             key + "[" + std::to_string(row) + "]");
        Vec v;
        std::size_t col = 0;
        for (const Json& js : jv) {
            if (!js.is_string())
                throw ParseError("scalar entries must be exact strings",
                                 key + "[" + std::to_string(row) + "][" +
                                     std::to_string(col) + "]");
            try {
                v.push_back(Scalar::parse(js.get<std::string>(), disc));
            } catch (const ScalarParseError& e) {
                throw ParseError(std::string("bad scalar '") + js.get<std::string>() +
                                     "': " + e.what(),
                                 key + "[" + std::to_string(row) + "][" +
                                     std::to_string(col) + "]");
            }
            ++col;
        }
        out.push_back(std::move(v));
        ++row;
    }
    return out;
}

Json vector_list_to_json(const std::vector<Vec>& vs) {
    Json arr = Json::array();
    for (const Vec& v : vs) {
        Json jv = Json::array();
        for (const Scalar& s : v)
            jv.push_back(s.str());
        arr.push_back(std::move(jv));
    }
    return arr;
}

}  // namespace

MarkedFan fan_from_json(const Json& j) {
    if (!j.is_object())
        throw ParseError("fan file must be a JSON object", "");
    if (!j.contains("schema") || j.at("schema") != "markedfan/1")
        throw ParseError("expected schema \"markedfan/1\"", "schema");
    const long disc = parse_field_tag(j);

    if (!j.contains("dim") || !j.at("dim").is_number_integer())
        throw ParseError("missing integer key 'dim'", "dim");
    const int n = j.at("dim").get<int>();
    if (n < 0)
        throw ParseError("dim must be nonnegative", "dim");

    const std::vector<Vec> rays = parse_vector_list(j, "rays", n, disc);
    const int m = static_cast<int>(rays.size());

    if (!j.contains("facets") || !j.at("facets").is_array())
        throw ParseError("missing or non-array key 'facets'", "facets");
    std::vector<std::vector<int>> facets;
    std::size_t fi = 0;
    for (const Json& jf : j.at("facets")) {
        if (!jf.is_array())
            throw ParseError("facet must be an array of 1-based indices",
                             "facets[" + std::to_string(fi) + "]");
        std::vector<int> f;
        for (const Json& ji : jf) {
            if (!ji.is_number_integer())
                throw ParseError("facet entries must be integers",
                                 "facets[" + std::to_string(fi) + "]");
            const int v = ji.get<int>();
            if (v < 1 || v > m)
                throw ParseError("vertex index " + std::to_string(v) + " out of range 1.." +
                                     std::to_string(m),
                                 "facets[" + std::to_string(fi) + "]");
            f.push_back(v - 1);
        }
        facets.push_back(std::move(f));
        ++fi;
    }

    SimplicialComplex k = [&] {
        try {
            return SimplicialComplex(m, facets);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), "facets");
        }
    }();

    if (j.contains("ghosts")) {
        if (!j.at("ghosts").is_array())
            throw ParseError("'ghosts' must be an array of 1-based indices", "ghosts");
        std::set<int> declared;
        for (const Json& ji : j.at("ghosts")) {
            if (!ji.is_number_integer())
                throw ParseError("ghost entries must be integers", "ghosts");
            const int v = ji.get<int>();
            if (v < 1 || v > m)
                throw ParseError("ghost index " + std::to_string(v) + " out of range", "ghosts");
            declared.insert(v - 1);
        }
        std::set<int> derived;
        for (int v : k.ghost_vertices().elements())
            derived.insert(v);
        if (declared != derived)
            throw ParseError("declared ghost set does not match the vertices missing from "
                             "all facets",
                             "ghosts");
    }

    const std::vector<Vec> gens = parse_vector_list(j, "lattice_generators", n, disc);

    try {
        return MarkedFan(n, std::move(k), rays, gens);
    } catch (const std::exception& e) {
        throw ParseError(e.what(), "");
    }
}

Json fan_to_json(const MarkedFan& fan) {
    Json j;
    j["schema"] = "markedfan/1";
    if (fan.disc == 0)
        j["field"] = "Q";
    else
        j["field"] = Json{{"quadratic", fan.disc}};
    j["dim"] = fan.dim;
    j["rays"] = vector_list_to_json(fan.markings);
    Json ghosts = Json::array();
    for (int v : fan.complex.ghost_vertices().elements())
        ghosts.push_back(v + 1);
    j["ghosts"] = std::move(ghosts);
    Json facets = Json::array();
    for (const VertexSet& f : fan.complex.facets()) {
        Json jf = Json::array();
        for (int v : f.elements())
            jf.push_back(v + 1);
        facets.push_back(std::move(jf));
    }
    j["facets"] = std::move(facets);
    j["lattice_generators"] = vector_list_to_json(fan.lattice_generators);
    return j;
}

MarkedFan read_fan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file", path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what(),
                         path + " byte " + std::to_string(e.byte));
    }
    return fan_from_json(j);
}

void write_fan_file(const std::string& path, const MarkedFan& fan) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open file for writing", path);
    out << fan_to_json(fan).dump(2) << '\n';
}

Json realization_to_json(const Realization& real) {
    Json j;
    j["m"] = real.m;
    Json facets = Json::array();
    for (const VertexSet& f : real.k_padded.facets()) {
        Json jf = Json::array();
        for (int v : f.elements())
            jf.push_back(v + 1);
        facets.push_back(std::move(jf));
    }
    j["facets"] = std::move(facets);
    Json ghosts = Json::array();
    for (int v : real.k_padded.ghost_vertices().elements())
        ghosts.push_back(v + 1);
    j["ghosts"] = std::move(ghosts);
    Json lambda = Json::array();
    for (std::size_t r = 0; r < real.lambda.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < real.lambda.cols(); ++c)
            row.push_back(real.lambda(r, c).str());
        lambda.push_back(std::move(row));
    }
    j["lambda"] = std::move(lambda);
    j["kernel"] = vector_list_to_json(real.kernel);
    Json pairing = Json::array();
    for (const auto& [a, b] : real.pairing)
        pairing.push_back(Json::array({a + 1, b + 1}));
    j["pairing"] = std::move(pairing);
    j["rational"] = real.rational;
    return j;
}

Json report_json(const ValidationReport& rep) {
    Json checks = Json::array();
    for (const CheckResult& c : rep.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.witness.empty())
            jc["witness"] = c.witness;
        checks.push_back(std::move(jc));
    }
    Json j;
    j["checks"] = std::move(checks);
    j["notes"] = rep.notes;
    j["verdict"] = rep.all_passed() ? "pass" : "fail";
    return j;
}

}  // namespace toric
