#include "aslforge/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "aslforge/asl.hpp"
#include "aslforge/errors.hpp"
#include "aslforge/groebner.hpp"
#include "aslforge/matrix_ideal.hpp"
#include "aslforge/serialize.hpp"

namespace aslforge::cli {

namespace {

constexpr int kLargeLimit = 8;

struct Options {
  std::optional<int> n;
  std::string pattern = "generic";
  std::string mask;
  std::string pattern_json;
  int degree = 4;
  std::string field = "rationals";
  std::string format = "json";
  std::string output;
  bool allow_large = false;
};

/// Validated run configuration.
struct RunConfig {
  MatrixPattern pattern;
  unsigned degree = 4;
  Field field;
  std::string format;
  std::string output;
};

Json parse_json_arg(const std::string& text, const char* what) {
  std::string body = text;
  if (!body.empty() && body.front() == '@') {
    std::ifstream in(body.substr(1));
    if (!in) throw UsageError(std::string("cannot read ") + what + " file '" + body.substr(1) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

RunConfig resolve(const Options& o) {
  RunConfig cfg;
  if (!o.pattern_json.empty()) {
    cfg.pattern = pattern_from_json(parse_json_arg(o.pattern_json, "pattern"));
    if (o.n && *o.n != cfg.pattern.n) throw UsageError("--n disagrees with the pattern JSON");
  } else if (o.pattern == "generic" || o.pattern == "symmetric") {
    if (!o.n) throw UsageError("--n is required");
    cfg.pattern = o.pattern == "generic" ? MatrixPattern::generic(*o.n) : MatrixPattern::symmetric(*o.n);
  } else if (o.pattern == "zero" || o.pattern == "zero_pattern") {
    if (o.mask.empty()) throw UsageError("--pattern zero needs --mask");
    Json spec;
    spec["n"] = o.n.value_or(0);
    spec["kind"] = "zero_pattern";
    spec["mask"] = parse_json_arg(o.mask, "mask");
    if (!o.n && spec["mask"].is_array()) spec["n"] = spec["mask"].size();
    cfg.pattern = pattern_from_json(spec);
  } else {
    throw UsageError("unknown pattern '" + o.pattern + "'");
  }
  cfg.pattern.validate();
  if (o.degree < 0) throw UsageError("--degree must be nonnegative");
  if (!o.allow_large && (cfg.pattern.n > kLargeLimit || o.degree > kLargeLimit)) {
    throw UsageError("n > 8 or degree > 8 requires --allow-large");
  }
  cfg.degree = static_cast<unsigned>(o.degree);
  cfg.field = Field::parse(o.field);
  cfg.format = o.format;
  cfg.output = o.output;
  return cfg;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError("format '" + cfg.format + "' is not supported by this command");
}

void require_generic(const RunConfig& cfg, const char* command) {
  if (cfg.pattern.kind != PatternKind::generic) {
    throw UsageError(std::string(command) + " is defined only for the generic pattern");
  }
}

Json header(const char* command, const RunConfig& cfg) {
  Json j;
  j["tool"] = "asl-forge";
  j["command"] = command;
  j["pattern"] = pattern_to_json(cfg.pattern);
  j["field"] = cfg.field.name();
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct Result {
  std::string text;
  int code = kPass;
};

std::vector<Polynomial> generators_of(const RunConfig& cfg, RingPtr& ring) {
  ring = ring_for(cfg.pattern, cfg.field);
  return ideal_generators(cfg.pattern, ring);
}

Result cmd_ideal(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  RingPtr ring;
  const auto gens = generators_of(cfg, ring);
  if (cfg.format == "text") {
    std::string s;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      s += "g_" + std::to_string(i + 1) + " = " + gens[i].to_string() + "\n";
    }
    return {s};
  }
  Json j = header("ideal", cfg);
  Json arr = Json::array();
  for (const Polynomial& g : gens) arr.push_back(polynomial_to_json(g));
  j["generators"] = std::move(arr);
  return {dump(j)};
}

std::string certificate_text(const GroebnerCertificate& cert) {
  std::string s = std::string("is_groebner: ") + (cert.is_groebner ? "true" : "false") + "\n";
  for (const PairRecord& p : cert.pairs) {
    s += "pair (" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) + "): " + to_string(p.criterion) +
         (p.remainder_zero ? ", remainder 0" : ", remainder nonzero") + "\n";
  }
  for (std::size_t k = 0; k < cert.basis.size(); ++k) {
    s += "b_" + std::to_string(k + 1) + " = " + cert.basis[k].to_string() + "\n";
  }
  return s;
}

Result cmd_gb(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  RingPtr ring;
  const GeneratorSet G = GeneratorSet::nonzero(ring, generators_of(cfg, ring));
  const GeneratorSet basis = buchberger(G);
  const GroebnerCertificate cert = is_groebner(basis);
  if (cfg.format == "text") return {certificate_text(cert), cert.is_groebner ? kPass : kVerificationFailed};
  Json j = header("gb", cfg);
  Json input = Json::array();
  for (const Polynomial& g : G.gens()) input.push_back(polynomial_to_json(g));
  j["input"] = std::move(input);
  j["certificate"] = certificate_to_json(cert);
  return {dump(j), cert.is_groebner ? kPass : kVerificationFailed};
}

Result cmd_verify_gb(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  RingPtr ring;
  const GeneratorSet G = GeneratorSet::nonzero(ring, generators_of(cfg, ring));
  const GroebnerCertificate cert = is_groebner(G);
  const int code = cert.is_groebner ? kPass : kVerificationFailed;
  if (cfg.format == "text") return {certificate_text(cert), code};
  Json j = header("verify-gb", cfg);
  j["certificate"] = certificate_to_json(cert);
  j["verdict"] = cert.is_groebner ? "pass" : "fail";
  return {dump(j), code};
}

Result cmd_init_ideal(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  RingPtr ring;
  const GeneratorSet G = GeneratorSet::nonzero(ring, generators_of(cfg, ring));
  const InitialIdeal in = initial_ideal(buchberger(G));
  if (cfg.format == "text") {
    std::string s;
    for (const Monomial& m : in.generators()) s += ring->format(m) + "\n";
    return {s};
  }
  Json j = header("init-ideal", cfg);
  j["initial_ideal"] = initial_ideal_to_json(in);
  return {dump(j)};
}

Result cmd_std_count(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  require_generic(cfg, "std-count");
  Json j = header("std-count", cfg);
  j["degree_bound"] = cfg.degree;
  Json counts = Json::array();
  bool ok = true;
  std::string text;
  for (unsigned d = 0; d <= cfg.degree; ++d) {
    const std::uint64_t enumerated = count_standard_monomials(cfg.pattern.n, d);
    const std::uint64_t formula = standard_monomial_formula(cfg.pattern.n, d);
    ok = ok && enumerated == formula;
    Json e;
    e["degree"] = d;
    e["enumerated"] = enumerated;
    e["formula"] = formula;
    e["match"] = enumerated == formula;
    counts.push_back(std::move(e));
    text += "degree " + std::to_string(d) + ": " + std::to_string(enumerated) + " (formula " +
            std::to_string(formula) + ")\n";
  }
  j["counts"] = std::move(counts);
  j["verdict"] = ok ? "pass" : "fail";
  const int code = ok ? kPass : kVerificationFailed;
  if (cfg.format == "text") return {text, code};
  return {dump(j), code};
}

Result cmd_poset(const RunConfig& cfg) {
  require_format(cfg, {"json", "dot", "text"});
  require_generic(cfg, "poset");
  const Poset p = build_poset(cfg.pattern.n);
  if (cfg.format == "dot") return {poset_to_dot(p)};
  if (cfg.format == "text") {
    std::string s;
    for (const auto& [a, b] : p.covers()) s += p.labels()[a] + " <= " + p.labels()[b] + "\n";
    return {s};
  }
  Json j = poset_to_json(p);
  j["interpretation_notes"] = poset_interpretation_notes();
  return {dump(j)};
}

bool same_set(const std::vector<Monomial>& a, std::span<const Monomial> b) {
  std::vector<Monomial> x = a;
  std::vector<Monomial> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

bool same_set(std::span<const Polynomial> a, std::span<const Polynomial> b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&b](const Polynomial& f) {
    return std::find(b.begin(), b.end(), f) != b.end();
  });
}

Result cmd_verify(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  const int n = cfg.pattern.n;
  RingPtr ring;
  const auto gens = generators_of(cfg, ring);
  const GeneratorSet G = GeneratorSet::nonzero(ring, gens);

  Json report = header("verify", cfg);
  report["degree_bound"] = cfg.degree;
  report["interpretation_notes"] = poset_interpretation_notes();
  Json gj = Json::array();
  for (const Polynomial& g : gens) gj.push_back(polynomial_to_json(g));
  report["generators"] = std::move(gj);

  // Groebner section.
  const GroebnerCertificate input_cert = is_groebner(G);
  const GeneratorSet reduced = buchberger(G);
  const GroebnerCertificate reduced_cert = is_groebner(reduced);
  const InitialIdeal in = initial_ideal(reduced);
  Json gb;
  gb["input_certificate"] = certificate_to_json(input_cert);
  gb["input_is_groebner"] = input_cert.is_groebner;
  gb["coprime_pairs"] = input_cert.pairs.size() - input_cert.reductions();
  gb["reduced_pairs"] = input_cert.reductions();
  Json rb = Json::array();
  for (const Polynomial& g : reduced.gens()) rb.push_back(polynomial_to_json(g));
  gb["reduced_basis"] = std::move(rb);
  gb["reduced_basis_is_groebner"] = reduced_cert.is_groebner;
  gb["initial_ideal"] = initial_ideal_to_json(in);

  bool gb_ok = reduced_cert.is_groebner;
  if (cfg.pattern.kind != PatternKind::zero_pattern) {
    std::vector<Monomial> diagonal;
    for (int i = 1; i <= n; ++i) {
      diagonal.push_back(Monomial::var(ring->context().x(i, i)) * Monomial::var(ring->context().y(i)));
    }
    const bool in_ok = same_set(diagonal, in.generators());
    const bool fixed = same_set(reduced.gens(), G.gens());
    gb["initial_ideal_is_diagonal"] = in_ok;
    gb["input_is_reduced_basis"] = fixed;
    gb_ok = gb_ok && input_cert.is_groebner && in_ok && fixed;
  }
  gb["passed"] = gb_ok;
  report["groebner"] = std::move(gb);

  // ASL section.
  Json asl;
  bool asl_ok = true;
  if (cfg.pattern.kind != PatternKind::generic) {
    asl["status"] = "skipped";
    asl["reason"] = "not covered by the theorem: the straightening-law structure is established only for generic X";
  } else {
    const Poset p = build_poset(n);
    asl["status"] = "checked";
    asl["poset"] = poset_to_json(p);
    asl["poset_antisymmetric"] = p.is_antisymmetric();
    Json inc = Json::array();
    std::vector<ElementPair> expected;
    for (int i = 1; i <= n; ++i) {
      auto a = static_cast<std::size_t>(ring->context().x(i, i));
      auto b = static_cast<std::size_t>(ring->context().y(i));
      expected.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(expected.begin(), expected.end());
    const auto pairs = incomparable_pairs(p);
    for (const auto& [a, b] : pairs) inc.push_back(Json::array({p.labels()[a], p.labels()[b]}));
    asl["incomparable_pairs"] = std::move(inc);
    const bool inc_ok = pairs == expected;
    asl["incomparable_pairs_are_diagonal"] = inc_ok;
    const Axiom1Report a1 = verify_axiom1(n, cfg.degree, cfg.field);
    const Axiom2Report a2 = verify_axiom2(n, cfg.field);
    asl["axiom1"] = axiom1_to_json(a1);
    asl["axiom2"] = axiom2_to_json(a2, p);
    asl_ok = p.is_antisymmetric() && inc_ok && a1.passed && a2.passed;
    asl["passed"] = asl_ok;
  }
  report["asl"] = std::move(asl);

  const bool ok = gb_ok && asl_ok;
  report["verdict"] = ok ? "pass" : "fail";
  const int code = ok ? kPass : kVerificationFailed;
  if (cfg.format == "text") {
    std::string s = "groebner: " + std::string(gb_ok ? "pass" : "fail") + "\n";
    s += "asl: " + report["asl"]["status"].get<std::string>();
    if (report["asl"]["status"] == "checked") s += asl_ok ? " (pass)" : " (fail)";
    s += "\nverdict: " + report["verdict"].get<std::string>() + "\n";
    return {s, code};
  }
  return {dump(report), code};
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Matrix size n");
  sub->add_option("--pattern", o.pattern, "generic | symmetric | zero");
  sub->add_option("--mask", o.mask, "Zero-pattern mask as JSON (or @file)");
  sub->add_option("--pattern-json", o.pattern_json, "Full pattern as JSON (or @file)");
  sub->add_option("--degree", o.degree, "Degree bound for enumeration checks");
  sub->add_option("--field", o.field, "rationals | gf(p)");
  sub->add_option("--format", o.format, "json | text | dot");
  sub->add_option("--output", o.output, "Write output to this path instead of stdout");
  sub->add_flag("--allow-large", o.allow_large, "Permit n > 8 or degree > 8");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner and straightening-law checks for the ideal of entries of XY", "asl-forge"};
  app.require_subcommand(1);
  Options o;
  using Handler = Result (*)(const RunConfig&);
  const std::vector<std::pair<const char*, Handler>> commands = {
      {"ideal", cmd_ideal},           {"gb", cmd_gb},           {"verify-gb", cmd_verify_gb},
      {"init-ideal", cmd_init_ideal}, {"std-count", cmd_std_count}, {"poset", cmd_poset},
      {"verify", cmd_verify},
  };
  const std::vector<std::string> help = {
      "Print the generators g_1..g_n of the ideal",
      "Compute the reduced Groebner basis with a certificate",
      "Check whether the generators already form a Groebner basis",
      "Print minimal generators of the initial ideal",
      "Count standard monomials by degree, by enumeration and closed form",
      "Export the poset H as JSON, DOT or text",
      "Run the full Groebner and straightening-law verification",
  };
  std::vector<CLI::App*> subs;
  for (std::size_t k = 0; k < commands.size(); ++k) {
    subs.push_back(app.add_subcommand(commands[k].first, help[k]));
    add_common(subs.back(), o);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    const RunConfig cfg = resolve(o);
    Result r;
    for (std::size_t k = 0; k < commands.size(); ++k) {
      if (subs[k]->parsed()) r = commands[k].second(cfg);
    }
    if (cfg.output.empty()) {
      out << r.text;
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + cfg.output + "'");
      file << r.text;
    }
    return r.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "verification error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace aslforge::cli
