#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "spinmod/graph.hpp"
#include "spinmod/moduli.hpp"
#include "spinmod/morphisms.hpp"
#include "spinmod/rational.hpp"
#include "spinmod/spin.hpp"
#include "spinmod/tropical.hpp"

namespace spinmod::io {

using nlohmann::json;

// Parses text, turning syntax errors into InputError with the location.
json parse_json(std::string_view text);
json read_json_file(const std::string& path);

// {"vertices":[{"id","weight"}], "edges":[[u,v]], "legs":[v]}; vertex ids
// are mapped densely in listing order. An optional "half_edges" block
// {"endpoint":[..], "involution":[..], "legs":[..]} takes precedence and
// reproduces half-edge ids exactly.
Graph graph_from_json(const json& j);
// Writes the half_edges block whenever the edge list alone would not
// rebuild identical half-edge ids.
json to_json(const Graph& g);

// {"P": hex or [edge indices], "sign": [{"component", "s"}]}; components
// not listed get sign 0.
SpinStructure spin_from_json(const Graph& g, const json& j);
json to_json(const Graph& g, const SpinStructure& s);

// "inf", a number, a "p/q" string, or {"num","den"}.
ExtRational rational_from_json(const json& j);
json to_json(const ExtRational& r);
// Array of lengths by position; object entries may carry "edge".
std::vector<ExtRational> lengths_from_json(const json& j, int num_edges);
json lengths_to_json(const std::vector<ExtRational>& lengths);

json to_json(const TropicalCurve& c);
json to_json(const SpinTropicalCurve& psi);
// {"graph": ..., "spin": ..., "val": [...]}
FamilyDescriptor family_from_json(const json& j);
json to_json(const FamilyDescriptor& fam);

json to_json(const Contraction& c);
json to_json(const Poset& p, const PosetStats& stats);

std::string to_dot(const Graph& g, const EdgeSet* highlight = nullptr);
std::string to_dot(const Poset& p);
std::string cells_csv(const ConeComplex& cx);
std::string cells_dot(const ConeComplex& cx);
std::string poset_csv(const Poset& p);

}  // namespace spinmod::io
