#include "aslforge/serialize.hpp"

#include <sstream>

#include "aslforge/errors.hpp"

namespace aslforge {

Json monomial_to_json(const Monomial& m, const RingContext& ctx) {
  Json j = Json::object();
  for (const Factor& f : m.factors()) j[to_string(ctx.variable(f.var))] = f.exp;
  return j;
}

Monomial monomial_from_json(const Json& j, const RingContext& ctx) {
  if (!j.is_object()) throw UsageError("monomial must be a JSON object");
  std::vector<Factor> fs;
  for (const auto& [name, exp] : j.items()) {
    const auto v = ctx.find(parse_variable(name));
    if (!v) throw UsageError("variable '" + name + "' is not in the ring");
    if (!exp.is_number_unsigned()) throw UsageError("exponent of '" + name + "' must be a nonnegative integer");
    fs.push_back({*v, exp.get<Exponent>()});
  }
  return Monomial::from_factors(std::move(fs));
}

Json polynomial_to_json(const Polynomial& f) {
  Json arr = Json::array();
  for (const Term& t : f.terms()) {
    Json term;
    term["c"] = format_coeff(t.coeff);
    term["m"] = monomial_to_json(t.monomial, f.ring().context());
    arr.push_back(std::move(term));
  }
  return arr;
}

Polynomial polynomial_from_json(const Json& j, const RingPtr& ring) {
  if (!j.is_array()) throw UsageError("polynomial must be a JSON array");
  std::vector<Term> terms;
  for (const Json& t : j) {
    if (!t.is_object() || !t.contains("c") || !t.contains("m") || !t["c"].is_string()) {
      throw UsageError("polynomial term must be {\"c\": \"num/den\", \"m\": {...}}");
    }
    terms.push_back({parse_coeff(t["c"].get<std::string>()), monomial_from_json(t["m"], ring->context())});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

MatrixPattern pattern_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("pattern must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw UsageError("pattern needs an integer \"n\"");
  const int n = j["n"].get<int>();
  const std::string kind = j.value("kind", std::string("generic"));
  if (kind == "generic" || kind == "symmetric") {
    MatrixPattern p = kind == "generic" ? MatrixPattern::generic(n) : MatrixPattern::symmetric(n);
    p.validate();
    return p;
  }
  if (kind != "zero_pattern" && kind != "zero") throw UsageError("unknown pattern kind '" + kind + "'");
  if (!j.contains("mask") || !j["mask"].is_array()) throw UsageError("zero_pattern needs a \"mask\" array");
  std::vector<std::vector<bool>> mask;
  for (const Json& row : j["mask"]) {
    if (!row.is_array()) throw UsageError("mask rows must be arrays");
    std::vector<bool> r;
    for (const Json& e : row) {
      if (!e.is_boolean()) throw UsageError("mask entries must be booleans");
      r.push_back(e.get<bool>());
    }
    mask.push_back(std::move(r));
  }
  MatrixPattern p{n, PatternKind::zero_pattern, std::move(mask)};
  p.validate();
  return p;
}

Json pattern_to_json(const MatrixPattern& p) {
  Json j;
  j["n"] = p.n;
  j["kind"] = to_string(p.kind);
  if (p.kind == PatternKind::zero_pattern) {
    Json mask = Json::array();
    for (const auto& row : p.mask) {
      Json r = Json::array();
      for (bool b : row) r.push_back(b);
      mask.push_back(std::move(r));
    }
    j["mask"] = std::move(mask);
  }
  return j;
}

Json certificate_to_json(const GroebnerCertificate& cert) {
  Json j;
  j["is_groebner"] = cert.is_groebner;
  Json pairs = Json::array();
  for (const PairRecord& p : cert.pairs) {
    Json r;
    r["i"] = p.i + 1;
    r["j"] = p.j + 1;
    r["criterion"] = to_string(p.criterion);
    r["remainder_zero"] = p.remainder_zero;
    pairs.push_back(std::move(r));
  }
  j["pairs"] = std::move(pairs);
  Json basis = Json::array();
  for (const Polynomial& g : cert.basis) basis.push_back(polynomial_to_json(g));
  j["basis"] = std::move(basis);
  return j;
}

Json initial_ideal_to_json(const InitialIdeal& I) {
  Json arr = Json::array();
  for (const Monomial& m : I.generators()) arr.push_back(monomial_to_json(m, I.ring().context()));
  return arr;
}

Json poset_to_json(const Poset& p) {
  Json j;
  j["elements"] = p.labels();
  Json covers = Json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back(Json::array({p.labels()[a], p.labels()[b]}));
  j["covers"] = std::move(covers);
  return j;
}

std::string poset_to_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph H {\n  rankdir=BT;\n";
  for (const std::string& l : p.labels()) out << "  \"" << l << "\";\n";
  for (const auto& [a, b] : p.covers()) {
    out << "  \"" << p.labels()[a] << "\" -> \"" << p.labels()[b] << "\";\n";
  }
  out << "}\n";
  return out.str();
}

Json axiom1_to_json(const Axiom1Report& r) {
  Json j;
  j["n"] = r.n;
  j["degree_bound"] = r.degree_bound;
  Json degrees = Json::array();
  for (const Axiom1Degree& d : r.degrees) {
    Json e;
    e["degree"] = d.degree;
    e["monomials"] = d.monomials;
    e["standard"] = d.standard;
    e["normal"] = d.normal;
    e["formula"] = d.formula;
    e["standard_iff_normal"] = d.standard_iff_normal;
    e["ideal_rank"] = d.ideal_rank;
    e["projected_rank"] = d.projected_rank;
    e["basis"] = d.basis;
    degrees.push_back(std::move(e));
  }
  j["degrees"] = std::move(degrees);
  j["discrepancies"] = r.discrepancies;
  j["passed"] = r.passed;
  return j;
}

namespace {

Json chain_to_json(const std::vector<std::size_t>& chain, const Poset& p) {
  Json arr = Json::array();
  for (std::size_t e : chain) arr.push_back(p.labels()[e]);
  return arr;
}

}  // namespace

Json axiom2_to_json(const Axiom2Report& r, const Poset& p) {
  Json j;
  j["n"] = r.n;
  j["groebner_verified"] = r.groebner_verified;
  Json pairs = Json::array();
  for (const Axiom2Pair& pr : r.pairs) {
    Json e;
    e["alpha"] = p.labels()[pr.alpha];
    e["beta"] = p.labels()[pr.beta];
    Json terms = Json::array();
    for (const Axiom2Term& t : pr.terms) {
      Json tj;
      tj["c"] = format_coeff(t.term.coeff);
      Json factors = Json::array();
      for (VarIndex v : t.term.factors) factors.push_back(p.labels()[v]);
      tj["factors"] = std::move(factors);
      tj["standard"] = t.standard;
      tj["min_factor"] = p.labels()[t.min_factor];
      tj["below_alpha"] = t.below_alpha;
      tj["below_beta"] = t.below_beta;
      tj["chain_to_alpha"] = chain_to_json(t.chain_to_alpha, p);
      tj["chain_to_beta"] = chain_to_json(t.chain_to_beta, p);
      terms.push_back(std::move(tj));
    }
    e["expansion"] = std::move(terms);
    e["identity_in_ideal"] = pr.identity_in_ideal;
    e["passed"] = pr.passed;
    pairs.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs);
  j["passed"] = r.passed;
  return j;
}

}  // namespace aslforge
