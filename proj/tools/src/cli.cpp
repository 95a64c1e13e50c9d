#include "zkring_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "zkring/catalog.hpp"
#include "zkring/error.hpp"
#include "zkring/json_io.hpp"

namespace zkring::cli {

namespace {

using nlohmann::json;
namespace zio = zkring::json;

constexpr std::uint64_t kDefaultSeed = 20240611;

struct Options {
  std::string complex;
  std::string complex2;
  std::vector<std::string> fields;
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  std::string charmatrix;
  std::string elements;
  std::size_t trials = 8;
  std::string action;
  std::vector<int> params;
};

// A verification failure: the command ran, and its check did not hold.
struct VerificationFailed {
  std::string message;
  json result;
};

void write_atomically(const std::string& path, const json& value) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::kParse, "cannot write " + tmp.string());
    file << value.dump(2) << "\n";
    if (!file) throw Error(ErrorCode::kParse, "short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

// "catalog:<name>[:<int>...]", a complex JSON file, or a polytope JSON file
// (dualized).
SimplicialComplex load_complex(const std::string& source) {
  if (source.empty()) throw Error(ErrorCode::kEmptyInput, "--complex is required");
  if (source.rfind("catalog:", 0) == 0) {
    std::stringstream ss(source.substr(8));
    std::string name;
    std::getline(ss, name, ':');
    std::vector<int> params;
    for (std::string part; std::getline(ss, part, ':');) {
      try {
        params.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kBadParams, "catalog parameter '" + part + "' is not an integer");
      }
    }
    return catalog::build(name, params);
  }
  const json doc = zio::read_file(source);
  if (doc.contains("vertices")) return dual_of_polytope(zio::polytope_from_json(doc));
  return zio::complex_from_json(doc);
}

FieldSpec single_field(const Options& o) {
  if (o.fields.size() > 1) throw Error(ErrorCode::kBadParams, "this command takes one --field");
  return o.fields.empty() ? FieldSpec::rationals() : FieldSpec::parse(o.fields.front());
}

std::vector<FieldSpec> field_list(const Options& o) {
  if (o.fields.empty()) return default_fields();
  std::vector<FieldSpec> out;
  for (const auto& f : o.fields) out.push_back(FieldSpec::parse(f));
  return out;
}

Element element_from_json(const json& j, const TorAlgebra& t) {
  Element x = zero_element(t);
  if (!j.is_array()) throw Error(ErrorCode::kParse, "element must be a JSON array");
  const bool sparse = !j.empty() && j.front().is_object();
  if (!sparse && j.size() != t.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch, "dense element has " + std::to_string(j.size()) +
                                                   " coordinates, algebra has " +
                                                   std::to_string(t.dimension()));
  }
  for (std::size_t n = 0; n < j.size(); ++n) {
    if (sparse) {
      const auto index = j[n].at("index").get<std::size_t>();
      if (index >= t.dimension()) throw Error(ErrorCode::kDimensionMismatch, "index out of range");
      x[index] = t.field().normalize(zio::scalar_from_json(j[n].at("coeff")));
    } else {
      x[n] = t.field().normalize(zio::scalar_from_json(j[n]));
    }
  }
  return x;
}

std::string degrees_line(const std::map<int, std::size_t>& m) {
  std::string s;
  for (const auto& [d, n] : m) s += " H^" + std::to_string(d) + "=" + std::to_string(n);
  return s;
}

json cmd_betti(const Options& o, std::ostream& out) {
  const SimplicialComplex k = load_complex(o.complex);
  const FieldSpec f = single_field(o);
  const BettiTable b = betti_table_hochster(k, f);
  out << "Betti table over " << f.short_name() << " (m=" << k.vertex_count() << "), total "
      << b.total() << ":" << degrees_line(b.by_cohomological_degree()) << "\n";
  for (const auto& [key, dim] : b.by_bidegree()) {
    out << "  i=" << key.first << " |J|=" << key.second << ": " << dim << "\n";
  }
  return zio::to_json(b);
}

json cmd_ring(const Options& o, std::ostream& out) {
  const TorAlgebra t = tor_algebra(load_complex(o.complex), single_field(o));
  json j = zio::to_json(t);
  out << "Tor algebra over " << t.field().short_name() << ": dimension " << t.dimension()
      << ", top degree " << t.top_degree() << ", " << j["products"].size()
      << " nonzero products of positive-degree classes\n";
  return j;
}

json cmd_gorenstein(const Options& o, std::ostream& out) {
  const SimplicialComplex k = load_complex(o.complex);
  json reports = json::array();
  for (const FieldSpec& f : field_list(o)) {
    GorensteinReport g;
    try {
      g = is_gorenstein(k, f);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kVerdictMismatch) throw VerificationFailed{e.what(), nullptr};
      throw;
    }
    out << f.short_name() << ": Gorenstein " << (g.algebraic ? "yes" : "no")
        << ", Gorenstein* " << (g.is_gorenstein_star ? "yes" : "no") << " (socle dimension "
        << g.socle.basis.size() << ", top degree " << g.socle.top_degree << ")\n";
    reports.push_back(zio::to_json(g));
  }
  return {{"reports", reports}};
}

json cmd_decompose(const Options& o, std::ostream& out) {
  const DecompositionReport d = join_decomposition(load_complex(o.complex));
  out << "parts:";
  for (VertexSet p : d.parts) out << " " << p.to_string();
  out << "; cone vertices: " << d.cone_vertices.to_string()
      << (d.is_trivial() ? " (join-indecomposable)" : "") << "\n";
  return zio::to_json(d);
}

json cmd_kunneth(const Options& o, std::ostream& out) {
  if (o.complex2.empty()) throw Error(ErrorCode::kEmptyInput, "--complex2 is required");
  const FieldSpec f = single_field(o);
  const KunnethReport r = verify_kunneth(load_complex(o.complex), load_complex(o.complex2), f);
  out << "Kunneth check over " << f.short_name() << ": " << (r.passed ? "passed" : "FAILED")
      << " (dimension " << r.dimension << ", " << r.products_checked << " products checked)";
  if (!r.passed) out << ": " << r.first_discrepancy;
  out << "\n";
  if (!r.passed) throw VerificationFailed{r.first_discrepancy, zio::to_json(r)};
  return zio::to_json(r);
}

json cmd_extract_split(const Options& o, std::ostream& out) {
  const TorAlgebra t = tor_algebra(load_complex(o.complex), single_field(o));
  if (o.elements.empty()) {
    const TensorSplitSearch s = search_tensor_split(t, o.seed, o.trials);
    json j = {{"seed", s.seed}, {"trials", s.trials}};
    if (s.split) {
      out << "split found: U=" << s.split->u.to_string() << " V=" << s.split->v.to_string()
          << " (seed " << s.seed << ", " << s.trials << " trials)\n";
      j["split"] = zio::to_json(*s.split);
    } else {
      out << "no split found in " << s.trials << " trials (seed " << s.seed
          << "); this does not prove indecomposability\n";
      j["split"] = nullptr;
    }
    return j;
  }
  const json doc = zio::read_file(o.elements);
  const Element t1 = element_from_json(doc.at("t1"), t);
  const Element t2 = element_from_json(doc.at("t2"), t);
  try {
    const JoinSplit s = extract_join_from_tensor(t, t1, t2);
    out << "U=" << s.u.to_string() << " V=" << s.v.to_string() << " ("
        << s.candidates_examined << " candidate(s) examined)\n";
    return zio::to_json(s);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNoValidSplit) throw VerificationFailed{e.what(), nullptr};
    throw;
  }
}

json cmd_fingerprint(const Options& o, std::ostream& out) {
  const Fingerprint fp = fingerprint(load_complex(o.complex), field_list(o));
  for (const auto& f : fp.fields) {
    std::size_t dim = 0;
    for (const auto& [d, n] : f.hilbert) dim += n;
    out << f.field.short_name() << ": dimension " << dim << ", top degree " << f.top_degree
        << ", socle degrees";
    for (int d : f.socle_degrees) out << " " << d;
    out << "\n";
  }
  return zio::to_json(fp);
}

json cmd_compare(const Options& o, std::ostream& out) {
  if (o.complex2.empty()) throw Error(ErrorCode::kEmptyInput, "--complex2 is required");
  const Comparison c = compare(load_complex(o.complex), load_complex(o.complex2), field_list(o));
  if (c.distinguished) {
    out << "Distinguished by " << c.component << ": " << c.detail << "\n";
  } else {
    out << "IndistinguishableByFingerprint: " << c.detail << "\n";
  }
  return zio::to_json(c);
}

// "catalog:<name>[:<int>]" for the shipped matrices, or a JSON file.
CharMatrix load_charmatrix(const std::string& source) {
  if (source.empty()) throw Error(ErrorCode::kEmptyInput, "--charmatrix is required");
  if (source.rfind("catalog:", 0) == 0) {
    const std::string entry = source.substr(8);
    const auto colon = entry.find(':');
    const std::string name = entry.substr(0, colon);
    const int param = colon == std::string::npos ? 0 : std::atoi(entry.c_str() + colon + 1);
    if (name == "standard_cpn") return charmatrix::standard_cpn(param);
    if (name == "square_surface") return charmatrix::square_surface();
    if (name == "hirzebruch") return charmatrix::hirzebruch(param);
    if (name == "cp3_sharp_cp3") return charmatrix::cp3_sharp_cp3();
    throw Error(ErrorCode::kUnknownCatalogEntry, "no characteristic matrix named '" + name + "'");
  }
  return zio::charmatrix_from_json(zio::read_file(source));
}

json cmd_quotient(const Options& o, std::ostream& out) {
  const GradedAlgebra a =
      quotient_algebra(load_complex(o.complex), load_charmatrix(o.charmatrix), single_field(o));
  out << "H*(M) over " << a.field().short_name() << ": dims";
  for (std::size_t d : a.dimensions_by_degree()) out << " " << d;
  out << " (total " << a.dimension() << ")\n";
  json j = zio::to_json(a);
  j["socle"] = zio::to_json(socle(a));
  return j;
}

json cmd_verify(const Options& o, std::ostream& out) {
  const FieldSpec f = single_field(o);
  const RecoveryReport r =
      verify_zp_recovery(load_complex(o.complex), load_charmatrix(o.charmatrix), f);
  out << "Koszul homology of H*(M) vs Hochster over " << f.short_name() << ": "
      << (r.passed ? "match" : "MISMATCH") << "\n";
  for (const auto& [d, pair] : r.by_degree) {
    out << "  degree " << d << ": " << pair.first << " / " << pair.second << "\n";
  }
  if (!r.passed) throw VerificationFailed{r.first_mismatch, zio::to_json(r)};
  return zio::to_json(r);
}

json cmd_certify(const Options& o, std::ostream& out) {
  const Certificate c = indecomposability_certificate(load_complex(o.complex),
                                                      load_charmatrix(o.charmatrix),
                                                      single_field(o));
  if (c.certified) {
    out << "Certified: " << c.note << "\n";
  } else {
    out << "NotCertified: K splits as a join (";
    for (VertexSet p : c.split->parts) out << " " << p.to_string();
    out << " ); " << c.note << "\n";
  }
  return zio::to_json(c);
}

json cmd_catalog(const Options& o, std::ostream& out) {
  if (o.action == "list") {
    json entries = json::array();
    for (const auto& e : catalog::inventory()) {
      out << e.name << " " << e.params << "\n    " << e.description << "\n";
      entries.push_back({{"name", e.name}, {"params", e.params}, {"description", e.description}});
    }
    return entries;
  }
  const SimplicialComplex k = catalog::build(o.action, o.params);
  out << to_string(k) << "\n";
  return zio::to_json(k);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology rings of moment-angle complexes via Tor algebras", "zkring"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool two_complexes) {
    sub->add_option("--complex", o.complex,
                    "complex JSON, polytope JSON, or catalog:<name>[:<param>...]");
    if (two_complexes) sub->add_option("--complex2", o.complex2, "second complex");
    sub->add_option("--field", o.fields, "Q or F<p> (repeatable where several fields apply)");
    sub->add_option("--out", o.out, "write JSON result here");
  };
  struct Verb {
    const char* name;
    const char* help;
    json (*fn)(const Options&, std::ostream&);
  };
  const std::vector<Verb> verbs = {
      {"betti", "bigraded Betti table via Hochster's formula", cmd_betti},
      {"ring", "Tor algebra with structure constants", cmd_ring},
      {"gorenstein", "algebraic and combinatorial Gorenstein verdicts", cmd_gorenstein},
      {"decompose", "join decomposition from missing faces", cmd_decompose},
      {"kunneth", "check Tor(K1 * K2) against the tensor product", cmd_kunneth},
      {"extract-split", "join split from a socle-spanning pair, or a seeded search", cmd_extract_split},
      {"fingerprint", "relabeling-invariant ring fingerprint", cmd_fingerprint},
      {"compare", "first fingerprint component separating two complexes", cmd_compare},
      {"quasitoric-quotient", "k[K]/(t_1..t_n) for a characteristic matrix", cmd_quotient},
      {"quasitoric-verify", "Koszul homology of the quotient vs Hochster", cmd_verify},
      {"certify", "tensor-indecomposability certificate", cmd_certify},
      {"catalog", "list shipped complexes, or build one: catalog <name> <params...>", cmd_catalog},
  };
  std::vector<CLI::App*> subs;
  for (const Verb& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    subs.push_back(sub);
    const std::string name = v.name;
    if (name == "catalog") {
      sub->add_option("action", o.action, "list, or a catalog entry name")->required();
      sub->add_option("params", o.params, "integer parameters");
      sub->add_option("--out", o.out, "write JSON result here");
      continue;
    }
    add_common(sub, name == "kunneth" || name == "compare");
    if (name == "extract-split") {
      sub->add_option("--elements", o.elements, "JSON file with t1 and t2 coordinates");
      sub->add_option("--seed", o.seed, "seed for the randomized search");
      sub->add_option("--trials", o.trials, "search trials per degree pair");
    }
    if (name.rfind("quasitoric", 0) == 0 || name == "certify") {
      sub->add_option("--charmatrix", o.charmatrix,
                      "characteristic matrix JSON, or catalog:<name>[:<param>]");
    }
  }

  std::vector<const char*> argv{"zkring"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitInputError;
  }

  for (std::size_t i = 0; i < verbs.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    try {
      const json result = verbs[i].fn(o, out);
      if (!o.out.empty()) write_atomically(o.out, result);
      return kExitOk;
    } catch (const VerificationFailed& f) {
      err << "verification failed: " << f.message << "\n";
      if (!o.out.empty() && !f.result.is_null()) write_atomically(o.out, f.result);
      return kExitVerificationFailed;
    } catch (const Error& e) {
      err << e.what() << "\n";
      return kExitInputError;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitInputError;
    }
  }
  return kExitInputError;
}

}  // namespace zkring::cli
