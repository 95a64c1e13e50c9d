#include "zkring/json_io.hpp"

#include <fstream>
#include <sstream>

#include "zkring/error.hpp"

namespace zkring::json {

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string(what) + ": " + e.what());
  }
}

json vertex_list(VertexSet s) { return s.vertices(); }

VertexSet vertex_set_from(const json& j, int m) {
  std::vector<int> v = j.get<std::vector<int>>();
  for (int x : v) {
    if (x < 1 || x > m) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(x) + " outside [1, " + std::to_string(m) + "]");
    }
  }
  return VertexSet::of(v);
}

json sparse_to_json(const SparseVector& v) {
  json out = json::array();
  for (const auto& [i, c] : v) out.push_back({{"index", i}, {"coeff", scalar_to_json(c)}});
  return out;
}

json element_to_json(const Element& x) {
  json out = json::array();
  for (const Scalar& c : x) out.push_back(scalar_to_json(c));
  return out;
}

}  // namespace

json scalar_to_json(const Scalar& s) {
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return s.get_num().get_si();
  return s.get_str();
}

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    Scalar s;
    if (s.set_str(j.get<std::string>(), 10) != 0) {
      throw Error(ErrorCode::kParse, "not a rational number: " + j.get<std::string>());
    }
    s.canonicalize();
    return s;
  }
  throw Error(ErrorCode::kParse, "scalar must be an integer or a \"p/q\" string");
}

json to_json(const SimplicialComplex& k) {
  json facets = json::array();
  for (VertexSet f : k.facets()) facets.push_back(vertex_list(f));
  return {{"m", k.vertex_count()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
  return guarded("complex", [&] {
    const int m = j.at("m").get<int>();
    if (m < 0 || m > kMaxVertices) {
      throw Error(ErrorCode::kVertexBudgetExceeded, "m must lie in [0, 63]");
    }
    std::vector<VertexSet> facets;
    for (const auto& f : j.at("facets")) facets.push_back(vertex_set_from(f, m));
    if (m == 0) return SimplicialComplex::empty();
    return SimplicialComplex::from_facets(m, std::move(facets));
  });
}

json to_json(const PolytopeIncidence& p) {
  json vertices = json::array();
  for (VertexSet v : p.vertices) vertices.push_back(vertex_list(v));
  return {{"n", p.n}, {"m", p.m}, {"vertices", vertices}};
}

PolytopeIncidence polytope_from_json(const json& j) {
  return guarded("polytope", [&] {
    PolytopeIncidence p;
    p.n = j.at("n").get<int>();
    p.m = j.at("m").get<int>();
    if (p.m < 1 || p.m > kMaxVertices) {
      throw Error(ErrorCode::kVertexBudgetExceeded, "facet count must lie in [1, 63]");
    }
    for (const auto& v : j.at("vertices")) p.vertices.push_back(vertex_set_from(v, p.m));
    return p;
  });
}

json to_json(const CharMatrix& c) { return {{"n", c.n}, {"m", c.m}, {"rows", c.rows}}; }

CharMatrix charmatrix_from_json(const json& j) {
  return guarded("characteristic matrix", [&] {
    CharMatrix c;
    c.n = j.at("n").get<int>();
    c.m = j.at("m").get<int>();
    c.rows = j.at("rows").get<std::vector<std::vector<long long>>>();
    if (static_cast<int>(c.rows.size()) != c.n) {
      throw Error(ErrorCode::kDimensionMismatch, "rows.size() != n");
    }
    for (const auto& r : c.rows) {
      if (static_cast<int>(r.size()) != c.m) {
        throw Error(ErrorCode::kDimensionMismatch, "row length != m");
      }
    }
    return c;
  });
}

json to_json(const BettiTable& b) {
  json entries = json::array();
  for (const auto& [key, dim] : b.entries) {
    entries.push_back({{"i", key.i}, {"J", vertex_list(key.j)}, {"dim", dim}});
  }
  return {{"field", b.field.to_string()}, {"m", b.vertex_count}, {"entries", entries}};
}

BettiTable betti_from_json(const json& j) {
  return guarded("betti table", [&] {
    BettiTable b;
    b.field = FieldSpec::parse(j.at("field").get<std::string>());
    b.vertex_count = j.at("m").get<int>();
    for (const auto& e : j.at("entries")) {
      b.entries[BettiKey{e.at("i").get<int>(), vertex_set_from(e.at("J"), b.vertex_count)}] =
          e.at("dim").get<std::size_t>();
    }
    return b;
  });
}

json to_json(const TorAlgebra& t) {
  json basis = json::array();
  for (const TorClass& c : t.basis()) {
    json rep = json::array();
    for (const auto& [face, coeff] : c.representative) {
      rep.push_back({{"face", vertex_list(face)}, {"coeff", scalar_to_json(coeff)}});
    }
    basis.push_back({{"id", c.id},
                     {"i", c.homological_degree},
                     {"J", vertex_list(c.multidegree)},
                     {"degree", c.cohomological_degree()},
                     {"representative", rep}});
  }
  json products = json::array();
  for (std::size_t a = 1; a < t.dimension(); ++a) {
    for (std::size_t b = 1; b < t.dimension(); ++b) {
      SparseVector p = t.product(a, b);
      if (!p.empty()) products.push_back({{"a", a}, {"b", b}, {"result", sparse_to_json(p)}});
    }
  }
  return {{"field", t.field().to_string()},
          {"complex", to_json(t.complex())},
          {"basis", basis},
          {"products", products}};
}

json to_json(const Fingerprint& f) {
  json fields = json::array();
  for (const FieldFingerprint& x : f.fields) {
    json betti = json::array();
    for (const auto& [key, dim] : x.betti) {
      betti.push_back({{"i", key.first}, {"size", key.second}, {"dim", dim}});
    }
    json blocks = json::array();
    for (const auto& [key, dims] : x.block_dims) {
      blocks.push_back({{"i", key.first}, {"size", key.second}, {"dims", dims}});
    }
    json hilbert = json::array();
    for (const auto& [d, dim] : x.hilbert) hilbert.push_back({{"degree", d}, {"dim", dim}});
    json ranks = json::array();
    for (const auto& [key, r] : x.product_ranks) {
      ranks.push_back({{"a", key.first}, {"b", key.second}, {"rank", r}});
    }
    fields.push_back({{"field", x.field.to_string()},
                      {"betti", betti},
                      {"block_dims", blocks},
                      {"hilbert", hilbert},
                      {"top_degree", x.top_degree},
                      {"socle_degrees", x.socle_degrees},
                      {"product_ranks", ranks}});
  }
  return {{"fields", fields}};
}

Fingerprint fingerprint_from_json(const json& j) {
  return guarded("fingerprint", [&] {
    Fingerprint f;
    for (const auto& x : j.at("fields")) {
      FieldFingerprint fp;
      fp.field = FieldSpec::parse(x.at("field").get<std::string>());
      for (const auto& e : x.at("betti")) {
        fp.betti[{e.at("i").get<int>(), e.at("size").get<int>()}] = e.at("dim").get<std::size_t>();
      }
      for (const auto& e : x.at("block_dims")) {
        fp.block_dims[{e.at("i").get<int>(), e.at("size").get<int>()}] =
            e.at("dims").get<std::vector<std::size_t>>();
      }
      for (const auto& e : x.at("hilbert")) {
        fp.hilbert[e.at("degree").get<int>()] = e.at("dim").get<std::size_t>();
      }
      fp.top_degree = x.at("top_degree").get<int>();
      fp.socle_degrees = x.at("socle_degrees").get<std::vector<int>>();
      for (const auto& e : x.at("product_ranks")) {
        fp.product_ranks[{e.at("a").get<int>(), e.at("b").get<int>()}] =
            e.at("rank").get<std::size_t>();
      }
      f.fields.push_back(std::move(fp));
    }
    return f;
  });
}

json to_json(const SocleReport& s) {
  json basis = json::array();
  for (const auto& x : s.basis) basis.push_back(element_to_json(x));
  return {{"basis", basis},
          {"degrees", s.degrees},
          {"top_degree", s.top_degree},
          {"is_poincare_duality", s.is_poincare_duality}};
}

json to_json(const GorensteinReport& g) {
  return {{"field", g.field.to_string()},
          {"algebraic", g.algebraic},
          {"combinatorial", g.combinatorial},
          {"is_gorenstein", g.algebraic},
          {"is_gorenstein_star", g.is_gorenstein_star},
          {"socle_degrees", g.socle.degrees},
          {"top_degree", g.socle.top_degree}};
}

json to_json(const DecompositionReport& d) {
  json parts = json::array();
  for (VertexSet p : d.parts) parts.push_back(vertex_list(p));
  json factors = json::array();
  for (const Relabeled& r : d.factors) {
    factors.push_back({{"complex", to_json(r.complex)}, {"labels", r.labels}});
  }
  return {{"parts", parts},
          {"cone_vertices", vertex_list(d.cone_vertices)},
          {"trivial", d.is_trivial()},
          {"factors", factors}};
}

json to_json(const KunnethReport& k) {
  json out = {{"passed", k.passed},
              {"first_discrepancy", k.first_discrepancy},
              {"products_checked", k.products_checked},
              {"dimension", k.dimension}};
  if (k.socle_degrees) {
    const auto [n1, n2, n] = *k.socle_degrees;
    out["socle_degrees"] = {n1, n2, n};
  } else {
    out["socle_degrees"] = nullptr;
  }
  return out;
}

json to_json(const Comparison& c) {
  return {{"distinguished", c.distinguished}, {"component", c.component}, {"detail", c.detail}};
}

json to_json(const JoinSplit& s) {
  return {{"U", vertex_list(s.u)},
          {"V", vertex_list(s.v)},
          {"candidates_examined", s.candidates_examined},
          {"first_candidate_valid", s.first_candidate_valid}};
}

json to_json(const GradedAlgebra& a) {
  json basis = json::array();
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    basis.push_back({{"monomial", a.monomials()[i]}, {"degree", a.degree(i)}});
  }
  json products = json::array();
  for (std::size_t x = 1; x < a.dimension(); ++x) {
    for (std::size_t y = x; y < a.dimension(); ++y) {
      SparseVector p = a.product(x, y);
      if (!p.empty()) products.push_back({{"a", x}, {"b", y}, {"result", sparse_to_json(p)}});
    }
  }
  return {{"field", a.field().to_string()},
          {"dims", a.dimensions_by_degree()},
          {"basis", basis},
          {"generators", a.generators()},
          {"products", products}};
}

json to_json(const KoszulOfAlgebraResult& r) {
  json dims = json::array();
  for (const auto& [key, dim] : r.dims) {
    dims.push_back({{"s", key.first}, {"internal", key.second}, {"dim", dim}});
  }
  json poincare = json::array();
  for (const auto& [d, dim] : r.poincare) poincare.push_back({{"degree", d}, {"dim", dim}});
  return {{"dims", dims}, {"poincare", poincare}};
}

json to_json(const RecoveryReport& r) {
  json degrees = json::array();
  for (const auto& [d, pair] : r.by_degree) {
    degrees.push_back({{"degree", d}, {"koszul", pair.first}, {"hochster", pair.second}});
  }
  return {{"passed", r.passed}, {"by_degree", degrees}, {"first_mismatch", r.first_mismatch}};
}

json to_json(const Certificate& c) {
  json out = {{"certified", c.certified}, {"note", c.note}};
  out["split"] = c.split ? to_json(*c.split) : json(nullptr);
  return out;
}

json parse(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse,
                origin + " at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

}  // namespace zkring::json
