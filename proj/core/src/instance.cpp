#include "wh/instance.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>
#include <openssl/evp.h>

namespace wh {

namespace {

using json = nlohmann::json;

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing '" + key + "'");
  return j.at(key);
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

Scalar parse_coeff(const Field& F, const json& j, const std::string& where) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = std::to_string(j.get<long long>());
  } else {
    throw InputError(where + ": coefficient must be a string");
  }
  try {
    return F.parse(text);
  } catch (const FieldError& e) {
    throw InputError(where + ": " + e.what());
  }
}

Element parse_element(const FinAlgebra& A, const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": element must be an object {label: coefficient}");
  Element e;
  for (const auto& [label, c] : j.items()) {
    auto i = A.find(label);
    if (!i) throw InputError(where + ": unknown basis label '" + label + "'");
    e.add_term(A.field(), *i, parse_coeff(A.field(), c, where));
  }
  return e;
}

json element_json(const FinAlgebra& A, const Element& e) {
  json out = json::object();
  for (const auto& [i, c] : e.terms()) out[A.label(i)] = Field::format(c);
  return out;
}

Field parse_field(const json& j) {
  std::string kind = as_string(require(j, "kind", "field"), "field.kind");
  if (kind == "rational") return Field::rationals();
  if (kind == "prime") {
    const json& p = require(j, "p", "field");
    if (!p.is_number_unsigned()) throw InputError("field.p must be a positive integer");
    try {
      return Field::prime(p.get<std::uint64_t>());
    } catch (const FieldError& e) {
      throw InputError(std::string("field: ") + e.what());
    }
  }
  throw InputError("field.kind must be 'rational' or 'prime'");
}

Groupoid parse_groupoid(const json& j) {
  std::vector<std::string> objects;
  const json& objs = require(j, "objects", "groupoid");
  if (!objs.is_array()) throw InputError("groupoid.objects must be an array");
  for (const auto& o : objs) objects.push_back(as_string(o, "groupoid.objects"));

  std::vector<MorphismSpec> morphisms;
  const json& ms = require(j, "morphisms", "groupoid");
  if (!ms.is_array()) throw InputError("groupoid.morphisms must be an array");
  for (const auto& m : ms) {
    morphisms.push_back({as_string(require(m, "id", "morphism"), "morphism.id"),
                         as_string(require(m, "src", "morphism"), "morphism.src"),
                         as_string(require(m, "tgt", "morphism"), "morphism.tgt"),
                         as_string(require(m, "inv", "morphism"), "morphism.inv")});
  }

  std::vector<CompositionSpec> composition;
  const json& cs = require(j, "composition", "groupoid");
  if (!cs.is_array()) throw InputError("groupoid.composition must be an array");
  for (const auto& c : cs) {
    if (!c.is_array() || c.size() != 3) throw InputError("composition entries are [left, right, result]");
    composition.push_back({as_string(c[0], "composition"), as_string(c[1], "composition"),
                           as_string(c[2], "composition")});
  }
  return Groupoid(std::move(objects), std::move(morphisms), std::move(composition));
}

FinAlgebra parse_algebra(const Field& F, const json& j) {
  std::vector<std::string> basis;
  const json& bs = require(j, "basis", "algebra");
  if (!bs.is_array() || bs.empty()) throw InputError("algebra.basis must be a nonempty array");
  for (const auto& b : bs) basis.push_back(as_string(b, "algebra.basis"));
  std::optional<FinAlgebra> built;
  try {
    built.emplace(F, std::move(basis));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("algebra: ") + e.what());
  }
  FinAlgebra& A = *built;

  A.set_unit(parse_element(A, require(j, "unit", "algebra"), "algebra.unit"));
  const json& mult = require(j, "multiplication", "algebra");
  if (!mult.is_array()) throw InputError("algebra.multiplication must be an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& t : mult) {
    if (!t.is_array() || t.size() != 3) throw InputError("multiplication entries are [left, right, element]");
    auto l = A.find(as_string(t[0], "multiplication"));
    auto r = A.find(as_string(t[1], "multiplication"));
    if (!l || !r) throw InputError("multiplication refers to an unknown basis label");
    if (!seen.emplace(*l, *r).second) {
      throw InputError("duplicate multiplication entry " + A.label(*l) + "·" + A.label(*r));
    }
    A.set_product(*l, *r, parse_element(A, t[2], "multiplication"));
  }
  return std::move(*built);
}

ModuleAction parse_action(const Groupoid& G, const FinAlgebra& A, const json& j) {
  if (!j.is_array()) throw InputError("action must be an array");
  ModuleAction action(G.size(), A.dim());
  std::vector<bool> seen(G.size() * A.dim(), false);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw InputError("action entries are [morphism, basis, element]");
    std::string gid = as_string(t[0], "action");
    auto g = G.find(gid);
    if (!g) throw InputError("action refers to unknown morphism '" + gid + "'");
    std::string bid = as_string(t[1], "action");
    auto b = A.find(bid);
    if (!b) throw InputError("action refers to unknown basis label '" + bid + "'");
    if (seen[*g * A.dim() + *b]) throw InputError("duplicate action entry " + gid + "·" + bid);
    seen[*g * A.dim() + *b] = true;
    action.set(*g, *b, parse_element(A, t[2], "action"));
  }
  for (std::size_t g = 0; g < G.size(); ++g) {
    for (std::size_t b = 0; b < A.dim(); ++b) {
      if (!seen[g * A.dim() + b]) throw InputError("missing action entry " + G.label(g) + "·" + A.label(b));
    }
  }
  return action;
}

std::vector<Stratum> parse_strata(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + " must be an array");
  std::vector<Stratum> out;
  for (const auto& s : j) {
    auto parsed = parse_stratum(as_string(s, where));
    if (!parsed) throw InputError(where + ": unknown stratum '" + s.get<std::string>() + "'");
    out.push_back(*parsed);
  }
  return out;
}

json strata_json(const std::vector<Stratum>& strata) {
  json out = json::array();
  for (auto s : strata) out.push_back(to_string(s));
  return out;
}

Instance parse_json(const json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  std::string name = j.contains("name") ? as_string(j.at("name"), "name") : std::string();
  Field F = parse_field(require(j, "field", "instance"));
  Groupoid G = parse_groupoid(require(j, "groupoid", "instance"));
  FinAlgebra A = parse_algebra(F, require(j, "algebra", "instance"));
  ModuleAction action = parse_action(G, A, require(j, "action", "instance"));
  std::optional<Expectation> expect;
  if (j.contains("expect")) {
    const json& e = j.at("expect");
    expect = Expectation{parse_strata(require(e, "kernel_strata", "expect"), "expect.kernel_strata"),
                         e.contains("empty_strata") ? parse_strata(e.at("empty_strata"), "expect.empty_strata")
                                                    : std::vector<Stratum>{}};
  }
  return Instance{std::move(name), std::move(G), std::move(A), std::move(action), std::move(expect)};
}

// Builtin helpers.

Element elem(const Field& F, std::initializer_list<std::pair<std::size_t, long>> terms) {
  Element e;
  for (const auto& [i, c] : terms) e.add_term(F, i, F.from_int(c));
  return e;
}

FinAlgebra ground_field(const Field& F) {
  FinAlgebra A(F, {"1"});
  A.set_product(0, 0, Element::basis(0));
  A.set_unit(Element::basis(0));
  return A;
}

// B = Ke1 ⊕ ... ⊕ Ke_n with orthogonal idempotents.
FinAlgebra diagonal(const Field& F, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  FinAlgebra A(F, labels);
  Element unit;
  for (std::size_t i = 0; i < n; ++i) {
    A.set_product(i, i, Element::basis(i));
    unit.add_term(F, i, F.one());
  }
  A.set_unit(unit);
  return A;
}

Instance trivial_group(const std::string& name, std::size_t n) {
  Field F = Field::rationals();
  Groupoid G = cyclic_group(n);
  ModuleAction action(G.size(), 1);
  for (std::size_t g = 0; g < G.size(); ++g) action.set(g, 0, Element::basis(0));
  return Instance{name, std::move(G), ground_field(F), std::move(action), std::nullopt};
}

Instance i2_swap() {
  Field F = Field::rationals();
  Groupoid G = builtin_i2();
  const std::size_t x = G.index_of("x"), y = G.index_of("y"), g = G.index_of("g"), gi = G.index_of("gi");
  ModuleAction action(G.size(), 2);
  action.set(x, 0, elem(F, {{0, 1}}));
  action.set(x, 1, {});
  action.set(y, 0, {});
  action.set(y, 1, elem(F, {{1, 1}}));
  action.set(g, 0, {});
  action.set(g, 1, elem(F, {{0, 1}}));
  action.set(gi, 0, elem(F, {{1, 1}}));
  action.set(gi, 1, {});
  return Instance{"i2-swap", std::move(G), diagonal(F, 2), std::move(action), std::nullopt};
}

// g·(a1e1+a2e2+a3e3) = a1e2+a2e1+a3e1 and the companion tables for gi, t(g),
// s(g) on the same three-dimensional B.
Instance example(const std::string& name, const Field& F) {
  Groupoid G = builtin_i2();
  const std::size_t x = G.index_of("x"), y = G.index_of("y"), g = G.index_of("g"), gi = G.index_of("gi");
  ModuleAction action(G.size(), 3);
  auto set = [&](std::size_t m, std::size_t a, std::size_t b, std::size_t c) {
    action.set(m, 0, elem(F, {{a, 1}}));
    action.set(m, 1, elem(F, {{b, 1}}));
    action.set(m, 2, elem(F, {{c, 1}}));
  };
  set(g, 1, 0, 0);
  set(gi, 1, 0, 1);
  set(y, 0, 1, 1);
  set(x, 0, 1, 0);
  Expectation expect{{Stratum::A3, Stratum::A4, Stratum::A5}, {Stratum::A6}};
  return Instance{name, std::move(G), diagonal(F, 3), std::move(action), expect};
}

WeakHopf parse_weak_hopf_json(const json& doc) {
  Field F = parse_field(require(doc, "field", "document"));
  const json& j = require(doc, "weak_hopf", "document");
  FinAlgebra A = parse_algebra(F, j);
  const std::size_t n = A.dim();
  CoStructure co;
  co.delta.resize(n);
  co.counit.assign(n, Scalar(0));

  const json& delta = require(j, "delta", "weak_hopf");
  if (!delta.is_array()) throw InputError("weak_hopf.delta must be an array");
  std::vector<bool> seen(n, false);
  for (const auto& entry : delta) {
    if (!entry.is_array() || entry.size() != 2 || !entry[1].is_array()) {
      throw InputError("delta entries are [x, [[left, right, coeff], ...]]");
    }
    auto x = A.find(as_string(entry[0], "delta"));
    if (!x) throw InputError("delta refers to an unknown basis label");
    if (seen[*x]) throw InputError("duplicate delta entry for " + A.label(*x));
    seen[*x] = true;
    for (const auto& t : entry[1]) {
      if (!t.is_array() || t.size() != 3) throw InputError("delta terms are [left, right, coeff]");
      auto l = A.find(as_string(t[0], "delta"));
      auto r = A.find(as_string(t[1], "delta"));
      if (!l || !r) throw InputError("delta refers to an unknown basis label");
      Scalar c = parse_coeff(F, t[2], "delta");
      if (!Field::is_zero(c)) co.delta[*x].push_back({*l, *r, c});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) throw InputError("missing delta entry for " + A.label(i));
  }
  Element eps = parse_element(A, require(j, "counit", "weak_hopf"), "counit");
  for (const auto& [i, c] : eps.terms()) co.counit[i] = c;

  if (j.contains("antipode")) {
    const json& s = j.at("antipode");
    if (!s.is_array()) throw InputError("weak_hopf.antipode must be an array");
    std::vector<Element> table(n);
    std::vector<bool> have(n, false);
    for (const auto& entry : s) {
      if (!entry.is_array() || entry.size() != 2) throw InputError("antipode entries are [x, element]");
      auto x = A.find(as_string(entry[0], "antipode"));
      if (!x) throw InputError("antipode refers to an unknown basis label");
      if (have[*x]) throw InputError("duplicate antipode entry for " + A.label(*x));
      have[*x] = true;
      table[*x] = parse_element(A, entry[1], "antipode");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!have[i]) throw InputError("missing antipode entry for " + A.label(i));
    }
    co.antipode = std::move(table);
  }
  return WeakHopf{std::move(A), std::move(co)};
}

}  // namespace

WeakHopf parse_weak_hopf(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_weak_hopf_json(j);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_json(j);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed instance: ") + e.what());
  }
}

std::string serialize_instance(const Instance& inst) {
  const Field& F = inst.field();
  const Groupoid& G = inst.groupoid;
  const FinAlgebra& A = inst.algebra;
  json j;
  j["name"] = inst.name;
  j["field"] = F.is_rational() ? json{{"kind", "rational"}} : json{{"kind", "prime"}, {"p", F.characteristic()}};

  json morphisms = json::array();
  for (const auto& m : G.morphism_specs()) {
    morphisms.push_back({{"id", m.id}, {"src", m.src}, {"tgt", m.tgt}, {"inv", m.inv}});
  }
  json composition = json::array();
  for (const auto& c : G.composition_specs()) composition.push_back({c.left, c.right, c.result});
  j["groupoid"] = {{"objects", G.object_ids()}, {"morphisms", morphisms}, {"composition", composition}};

  json mult = json::array();
  for (std::size_t a = 0; a < A.dim(); ++a) {
    for (std::size_t b = 0; b < A.dim(); ++b) {
      const Element& p = A.product(a, b);
      if (!p.is_zero()) mult.push_back({A.label(a), A.label(b), element_json(A, p)});
    }
  }
  j["algebra"] = {{"basis", A.labels()},
                  {"unit", A.unit() ? element_json(A, *A.unit()) : json::object()},
                  {"multiplication", mult}};

  json action = json::array();
  for (std::size_t g = 0; g < G.size(); ++g) {
    for (std::size_t b = 0; b < A.dim(); ++b) {
      action.push_back({G.label(g), A.label(b), element_json(A, inst.action.at(g, b))});
    }
  }
  j["action"] = action;
  if (inst.expect) {
    j["expect"] = {{"kernel_strata", strata_json(inst.expect->kernel_strata)},
                   {"empty_strata", strata_json(inst.expect->empty_strata)}};
  }
  return j.dump(2) + "\n";
}

std::string instance_digest(const Instance& inst) {
  const std::string text = serialize_instance(inst);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"z2-trivial", "z3-trivial", "i2-swap", "ex2.8", "ex2.8-gf2"};
  return names;
}

Instance builtin_instance(const std::string& name) {
  if (name == "z2-trivial") return trivial_group(name, 2);
  if (name == "z3-trivial") return trivial_group(name, 3);
  if (name == "i2-swap") return i2_swap();
  if (name == "ex2.8") return example(name, Field::rationals());
  if (name == "ex2.8-gf2") return example(name, Field::prime(2));
  throw std::invalid_argument("unknown builtin '" + name + "'");
}

Instance load_instance(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    try {
      return builtin_instance(source.substr(prefix.size()));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  std::error_code ec;
  if (!std::filesystem::exists(source, ec)) {
    for (const auto& n : builtin_names()) {
      if (n == source) return builtin_instance(n);
    }
    throw InputError("cannot read '" + source + "'");
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) throw InputError("cannot read '" + source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

}  // namespace wh
