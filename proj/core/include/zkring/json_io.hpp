#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "zkring/betti.hpp"
#include "zkring/complex.hpp"
#include "zkring/quasitoric.hpp"
#include "zkring/ring_analysis.hpp"
#include "zkring/tor_algebra.hpp"

namespace zkring::json {

using nlohmann::json;

// {"m": int, "facets": [[int, ...], ...]}, 1-indexed.
json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& j);

// {"n": int, "m": int, "vertices": [[int, ...], ...]}.
json to_json(const PolytopeIncidence& p);
PolytopeIncidence polytope_from_json(const json& j);

// {"n": int, "m": int, "rows": [[int, ...], ...]}.
json to_json(const CharMatrix& c);
CharMatrix charmatrix_from_json(const json& j);

// {"field": "Q" | "Fp:<p>", "entries": [{"i", "J", "dim"}, ...]} sorted by
// (|J|, J, i).
json to_json(const BettiTable& b);
BettiTable betti_from_json(const json& j);

// Basis list plus nonzero structure constants. Materialises every product.
json to_json(const TorAlgebra& t);

json to_json(const Fingerprint& f);
Fingerprint fingerprint_from_json(const json& j);

json to_json(const SocleReport& s);
json to_json(const GorensteinReport& g);
json to_json(const DecompositionReport& d);
json to_json(const KunnethReport& k);
json to_json(const Comparison& c);
json to_json(const JoinSplit& s);
json to_json(const GradedAlgebra& a);
json to_json(const KoszulOfAlgebraResult& r);
json to_json(const RecoveryReport& r);
json to_json(const Certificate& c);

// Exact scalars as JSON: integers when integral, "p/q" strings otherwise.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

// Parses text, rethrowing parse failures as Error(kParse) carrying `origin`
// and the byte position.
json parse(const std::string& text, const std::string& origin);
json read_file(const std::string& path);

}  // namespace zkring::json
