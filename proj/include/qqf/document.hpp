#ifndef QQF_DOCUMENT_HPP
#define QQF_DOCUMENT_HPP

#include "errors.hpp"
#include "extensions.hpp"
#include "liesuper.hpp"
#include "structures.hpp"
#include "superlinalg.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qqf {

/// Parsed algebra document: basis, brackets and named forms and endomorphisms.
struct AlgebraDocument {
  std::string name;
  LieSuperalgebra alg;
  std::map<std::string, BilinearForm> forms;
  std::map<std::string, Endomorphism> endos;

  const SpacePtr& space() const { return alg.space(); }

  friend bool operator==(const AlgebraDocument& a, const AlgebraDocument& b)
  {
    return a.name == b.name && a.alg == b.alg && a.forms == b.forms && a.endos == b.endos;
  }
};

namespace detail {

using Json = nlohmann::json;

/// Parses with duplicate object keys rejected.
inline Json parse_json(const std::string& text)
{
  std::vector<std::set<std::string>> keys;
  std::string duplicate;
  auto cb = [&](int, Json::parse_event_t ev, Json& parsed) {
    if (ev == Json::parse_event_t::object_start) keys.emplace_back();
    else if (ev == Json::parse_event_t::object_end) keys.pop_back();
    else if (ev == Json::parse_event_t::key && !keys.empty() && !keys.back().insert(parsed.get<std::string>()).second &&
             duplicate.empty())
      duplicate = parsed.get<std::string>();
    return true;
  };
  Json j;
  try {
    j = Json::parse(text, cb);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!duplicate.empty()) throw ParseError("duplicate key '" + duplicate + "'");
  return j;
}

inline void require_object(const Json& j, const std::string& where, const std::set<std::string>& allowed,
                           const std::set<std::string>& required = {})
{
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ParseError(where + ": unknown field '" + k + "'");
  for (const auto& k : required)
    if (!j.contains(k)) throw ParseError(where + ": missing field '" + k + "'");
}

inline std::string get_string(const Json& j, const std::string& where)
{
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

inline Scalar get_rational(const Json& j, const std::string& where)
{
  const std::string s = get_string(j, where);
  try {
    return parse_scalar(s);
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline Parity get_parity(const Json& j, const std::string& where)
{
  if (!j.is_number_integer() || (j.get<long>() != 0 && j.get<long>() != 1))
    throw ParseError(where + ": parity must be 0 or 1");
  return j.get<long>() == 0 ? Parity::even : Parity::odd;
}

inline std::size_t get_label(const SuperSpace& s, const Json& j, const std::string& where)
{
  const std::string label = get_string(j, where);
  const auto i = s.find(label);
  if (!i) throw ParseError(where + ": unknown basis label '" + label + "'");
  return *i;
}

/// {label: rational} with zero coefficients allowed.
inline Vec get_combination(const SuperSpace& s, const Json& j, const std::string& where)
{
  if (!j.is_object()) throw ParseError(where + ": expected an object label -> rational");
  Vec v(s.dim());
  for (const auto& [k, x] : j.items()) {
    const auto i = s.find(k);
    if (!i) throw ParseError(where + ": unknown basis label '" + k + "'");
    v[*i] = get_rational(x, where + "." + k);
  }
  return v;
}

/// [[row, col, rational], ...] into a matrix; duplicates rejected.
inline Matrix get_entries(const SuperSpace& s, const Json& j, const std::string& where)
{
  if (!j.is_array()) throw ParseError(where + ": expected an array of [row, column, value]");
  Matrix m(s.dim(), s.dim());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) throw ParseError(where + ": entries are [row, column, value]");
    const std::size_t r = get_label(s, e[0], where), c = get_label(s, e[1], where);
    if (!seen.insert({r, c}).second)
      throw ParseError(where + ": duplicate entry (" + s.label(r) + ", " + s.label(c) + ")");
    m(r, c) = get_rational(e[2], where);
  }
  return m;
}

inline std::string quote(const std::string& s) { return Json(s).dump(); }

inline std::string combination_json(const SuperSpace& s, const Vec& v)
{
  std::string out = "{";
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (!first) out += ", ";
    first = false;
    out += quote(s.label(k)) + ": " + quote(to_string(v[k]));
  }
  return out + "}";
}

/// Nonzero entries in canonical (row, column) order, one per line.
inline std::string entries_json(const SuperSpace& s, const Matrix& m, const std::string& indent)
{
  std::vector<std::string> lines;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0)
        lines.push_back(indent + "  [" + quote(s.label(r)) + ", " + quote(s.label(c)) + ", " + quote(to_string(m(r, c))) + "]");
  if (lines.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t k = 0; k < lines.size(); ++k) out += lines[k] + (k + 1 < lines.size() ? ",\n" : "\n");
  return out + indent + "]";
}

inline std::string join_block(const std::vector<std::string>& lines, const std::string& open, const std::string& close,
                              const std::string& indent)
{
  if (lines.empty()) return open + close;
  std::string out = open + "\n";
  for (std::size_t k = 0; k < lines.size(); ++k) out += indent + "  " + lines[k] + (k + 1 < lines.size() ? ",\n" : "\n");
  return out + indent + close;
}

inline std::string basis_json(const SuperSpace& s)
{
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < s.dim(); ++i)
    basis.push_back("{\"name\": " + quote(s.label(i)) + ", \"parity\": " + to_string(s.parity(i)) + "}");
  return join_block(basis, "[", "]", "  ");
}

inline SpacePtr get_basis(const Json& j, const std::string& where)
{
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<BasisElement> basis;
  for (const auto& b : j) {
    require_object(b, where + " entry", {"name", "parity"}, {"name", "parity"});
    basis.push_back({get_string(b["name"], where + " name"), get_parity(b["parity"], where + " parity")});
  }
  try {
    return make_space(basis);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}


}  // namespace detail

/// Strict parse: unknown fields, duplicate keys, duplicate brackets and duplicate form or matrix entries are ParseErrors.
/// Parity and symmetry violations in forms and endomorphisms surface as HomogeneityError or SymmetryError.
inline AlgebraDocument parse_document(const std::string& text)
{
  using detail::Json;
  const Json j = detail::parse_json(text);
  detail::require_object(j, "document", {"name", "basis", "brackets", "forms", "endos"}, {"name", "basis"});
  AlgebraDocument doc;
  doc.name = detail::get_string(j["name"], "name");

  const SpacePtr space = detail::get_basis(j["basis"], "basis");
  const SuperSpace& s = *space;

  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw ParseError("brackets: expected an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& b : j["brackets"]) {
      detail::require_object(b, "bracket", {"left", "right", "value"}, {"left", "right", "value"});
      const std::size_t l = detail::get_label(s, b["left"], "bracket left");
      const std::size_t r = detail::get_label(s, b["right"], "bracket right");
      if (!seen.insert({std::min(l, r), std::max(l, r)}).second)
        throw ParseError("duplicate bracket [" + s.label(l) + ", " + s.label(r) + "]");
      entries.push_back({s.label(l), s.label(r), detail::get_combination(s, b["value"], "bracket value")});
    }
  }
  doc.alg = LieSuperalgebra(space, entries, doc.name);

  if (j.contains("forms")) {
    if (!j["forms"].is_object()) throw ParseError("forms: expected an object");
    for (const auto& [fname, f] : j["forms"].items()) {
      const std::string where = "form " + fname;
      detail::require_object(f, where, {"parity", "kind", "values"}, {"parity", "kind", "values"});
      const Parity p = detail::get_parity(f["parity"], where);
      const std::string kind = detail::get_string(f["kind"], where + " kind");
      if (kind != "symmetric" && kind != "antisymmetric")
        throw ParseError(where + ": kind must be symmetric or antisymmetric");
      const Symmetry sym = kind == "symmetric" ? Symmetry::symmetric : Symmetry::antisymmetric;
      const Matrix given = detail::get_entries(s, f["values"], where + " values");
      Matrix raw(s.dim(), s.dim());
      for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t k = 0; k < s.dim(); ++k) {
          if (given(i, k) == 0) continue;
          if (i != k && given(k, i) != 0)
            throw ParseError(where + ": duplicate entry (" + s.label(i) + ", " + s.label(k) + ") given in both orders");
          raw(i, k) = given(i, k);
          if (i != k) raw(k, i) = Scalar(koszul(s.parity(i), s.parity(k)) * (sym == Symmetry::symmetric ? 1 : -1)) * given(i, k);
        }
      doc.forms.emplace(fname, BilinearForm(space, raw, p, sym));
    }
  }

  if (j.contains("endos")) {
    if (!j["endos"].is_object()) throw ParseError("endos: expected an object");
    for (const auto& [ename, e] : j["endos"].items()) {
      const std::string where = "endo " + ename;
      detail::require_object(e, where, {"parity", "entries"}, {"parity", "entries"});
      doc.endos.emplace(ename, Endomorphism(space, detail::get_entries(s, e["entries"], where + " entries"),
                                            detail::get_parity(e["parity"], where)));
    }
  }
  return doc;
}

/// Canonical text: basis order, brackets for i <= j, form values for i <= j, matrix entries row-major; one entry per line.
inline std::string serialize(const AlgebraDocument& doc)
{
  using detail::quote;
  const SuperSpace& s = *doc.space();
  std::string out = "{\n  \"name\": " + quote(doc.name) + ",\n";

  out += "  \"basis\": " + detail::basis_json(s) + ",\n";

  std::vector<std::string> brackets;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t k = i; k < s.dim(); ++k)
      if (!is_zero(doc.alg.structure(i, k)))
        brackets.push_back("{\"left\": " + quote(s.label(i)) + ", \"right\": " + quote(s.label(k)) +
                           ", \"value\": " + detail::combination_json(s, doc.alg.structure(i, k)) + "}");
  out += "  \"brackets\": " + detail::join_block(brackets, "[", "]", "  ") + ",\n";

  std::vector<std::string> forms;
  for (const auto& [fname, f] : doc.forms) {
    if (f.symmetry() == Symmetry::none) throw Error("serialize: form " + fname + " has no declared symmetry");
    Matrix upper(s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t k = i; k < s.dim(); ++k) upper(i, k) = f.at(i, k);
    forms.push_back(quote(fname) + ": {\"parity\": " + to_string(f.parity()) + ", \"kind\": " +
                    quote(to_string(f.symmetry())) + ", \"values\": " + detail::entries_json(s, upper, "    ") + "}");
  }
  out += "  \"forms\": " + detail::join_block(forms, "{", "}", "  ") + ",\n";

  std::vector<std::string> endos;
  for (const auto& [ename, e] : doc.endos)
    endos.push_back(quote(ename) + ": {\"parity\": " + to_string(e.parity()) +
                    ", \"entries\": " + detail::entries_json(s, e.matrix(), "    ") + "}");
  out += "  \"endos\": " + detail::join_block(endos, "{", "}", "  ") + "\n}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Structures to and from documents

inline AlgebraDocument to_document(const QuasiFrobeniusStructure& qf, const std::string& name)
{
  AlgebraDocument d{name, qf.alg().renamed(name), {}, {}};
  d.forms.emplace("omega", qf.omega());
  return d;
}

/// Stores ω, 𝓑, ρ and δ.
inline AlgebraDocument to_document(const QQFStructure& q, const std::string& name)
{
  AlgebraDocument d = to_document(q.qf(), name);
  d.forms.emplace("B", q.b_form());
  d.endos.emplace("rho", q.rho());
  d.endos.emplace("delta", q.delta());
  return d;
}

inline QuasiFrobeniusStructure qf_from(const AlgebraDocument& doc)
{
  const auto it = doc.forms.find("omega");
  if (it == doc.forms.end()) throw HypothesisError("document has no form 'omega'", {});
  return {doc.alg, it->second};
}

inline bool has_quadratic(const AlgebraDocument& doc) { return doc.endos.count("rho") || doc.forms.count("B"); }

/// Cross-checks any stored B, ρ and δ against each other: B(u,v) = ω(ρu,v) and δ = ρ⁻¹.
inline ValidationReport check_stored_quadratic(const AlgebraDocument& doc, const BilinearForm& omega)
{
  ValidationReport r;
  const auto b = doc.forms.find("B");
  const auto rho = doc.endos.find("rho");
  const auto delta = doc.endos.find("delta");
  if (rho != doc.endos.end() && b != doc.forms.end() && !(form_from_rho(omega, rho->second).raw() == b->second.raw()))
    r.fail("rho", "stored B differs from omega(rho u, v)");
  if (delta != doc.endos.end()) {
    const auto inv = delta->second.inverse();
    if (!inv) r.fail("delta", "delta is not invertible");
    else if (rho != doc.endos.end() && !(*inv == rho->second)) r.fail("delta", "delta is not the inverse of rho");
  }
  return r;
}

/// QQF from ω and either ρ or 𝓑; stored extras must agree.
inline QQFStructure qqf_from(const AlgebraDocument& doc)
{
  QuasiFrobeniusStructure qf = qf_from(doc);
  const ValidationReport stored = check_stored_quadratic(doc, qf.omega());
  if (!stored.ok()) throw HypothesisError("stored quadratic data is inconsistent", stored);
  if (const auto rho = doc.endos.find("rho"); rho != doc.endos.end()) return {std::move(qf), rho->second};
  if (const auto b = doc.forms.find("B"); b != doc.forms.end()) return QQFStructure::from_forms(std::move(qf), b->second);
  if (const auto delta = doc.endos.find("delta"); delta != doc.endos.end()) {
    const auto inv = delta->second.inverse();
    if (inv) return {std::move(qf), *inv};
  }
  throw HypothesisError("document has neither 'rho' nor 'B'", {});
}

// ---------------------------------------------------------------------------
// Extension data documents

/// One-dimensional or planar extension data with its labels.
struct ExtensionDocument {
  struct Central {
    ExtensionKind kind;
    ExtensionData data;
    ExtensionLabels labels;
  };
  struct Planar {
    PlanarFlavor flavor;
    PlanarExtensionData data;
    PlanarLabels labels;
  };
  std::variant<Central, Planar> value;

  bool planar() const { return std::holds_alternative<Planar>(value); }
  std::string kind_label() const
  {
    if (const auto* p = std::get_if<Planar>(&value)) return "planar-" + to_string(p->flavor);
    return to_string(std::get<Central>(value).kind);
  }
};

/// Kinds accepted by `extend`: the four one-dimensional ones and planar-orthosymplectic, planar-periplectic.
inline bool is_known_kind(const std::string& k)
{
  return parse_kind(k) || k == "planar-orthosymplectic" || k == "planar-periplectic";
}

/// Labels are resolved against the base space.
inline ExtensionDocument parse_extension(const std::string& text, const SpacePtr& base)
{
  using detail::Json;
  const Json j = detail::parse_json(text);
  if (!j.is_object() || !j.contains("kind")) throw ParseError("extension data: missing field 'kind'");
  const std::string kind = detail::get_string(j["kind"], "kind");
  const SuperSpace& s = *base;
  auto scalar = [&](const char* f, Scalar dflt) { return j.contains(f) ? detail::get_rational(j[f], f) : dflt; };
  auto vec = [&](const char* f) {
    return SuperVector(base, j.contains(f) ? detail::get_combination(s, j[f], f) : Vec(s.dim()));
  };
  auto map = [&](const char* f, Parity p) {
    return Endomorphism(base, j.contains(f) ? detail::get_entries(s, j[f], f) : Matrix(s.dim(), s.dim()), p);
  };
  auto labels = [&](const std::set<std::string>& names) {
    std::map<std::string, std::string> out;
    if (!j.contains("labels")) return out;
    detail::require_object(j["labels"], "labels", names);
    for (const auto& [k, v] : j["labels"].items()) out[k] = detail::get_string(v, "labels." + k);
    return out;
  };

  if (const auto k = parse_kind(kind)) {
    detail::require_object(j, "extension data", {"kind", "labels", "xi", "b0", "a", "lambda", "t"});
    ExtensionDocument::Central c{*k, ExtensionData::zero(base, *k), {}};
    c.data.xi = map("xi", traits(*k).xi);
    c.data.b0 = vec("b0");
    c.data.a = vec("a");
    c.data.lambda = scalar("lambda", 1);
    c.data.t = scalar("t", 0);
    const auto l = labels({"d", "e"});
    if (l.count("d")) c.labels.d = l.at("d");
    if (l.count("e")) c.labels.e = l.at("e");
    return {c};
  }
  if (kind != "planar-orthosymplectic" && kind != "planar-periplectic")
    throw ParseError("extension data: unknown kind '" + kind + "'");
  detail::require_object(j, "extension data",
                         {"kind", "labels", "xi0", "xi1", "b0", "b1", "c0", "c1", "T", "a0", "a1", "lambda", "t"});
  ExtensionDocument::Planar p{*parse_flavor(kind.substr(7)), PlanarExtensionData::zero(base), {}};
  p.data.xi0 = map("xi0", Parity::even);
  p.data.xi1 = map("xi1", Parity::odd);
  p.data.b0 = vec("b0");
  p.data.b1 = vec("b1");
  p.data.c0 = vec("c0");
  p.data.c1 = vec("c1");
  p.data.T = scalar("T", 0);
  p.data.a0 = vec("a0");
  p.data.a1 = vec("a1");
  p.data.lambda = scalar("lambda", 1);
  p.data.t = scalar("t", 0);
  const auto l = labels({"d0", "d1", "e0", "e1"});
  if (l.count("d0")) p.labels.d0 = l.at("d0");
  if (l.count("d1")) p.labels.d1 = l.at("d1");
  if (l.count("e0")) p.labels.e0 = l.at("e0");
  if (l.count("e1")) p.labels.e1 = l.at("e1");
  return {p};
}

/// Every field is written, zero or not, in a fixed order.
inline std::string serialize(const ExtensionDocument& doc)
{
  using detail::quote;
  std::vector<std::string> lines{"\"kind\": " + quote(doc.kind_label())};
  auto label_line = [&](const std::vector<std::pair<std::string, std::string>>& ls) {
    std::string out = "\"labels\": {";
    for (std::size_t k = 0; k < ls.size(); ++k)
      out += (k ? ", " : "") + quote(ls[k].first) + ": " + quote(ls[k].second);
    return out + "}";
  };
  auto map_line = [&](const char* f, const Endomorphism& m) {
    return quote(f) + ": " + detail::entries_json(*m.space(), m.matrix(), "  ");
  };
  auto vec_line = [&](const char* f, const SuperVector& v) {
    return quote(f) + ": " + detail::combination_json(*v.space(), v.coeffs());
  };
  auto scalar_line = [&](const char* f, const Scalar& x) { return quote(f) + ": " + quote(to_string(x)); };
  if (const auto* c = std::get_if<ExtensionDocument::Central>(&doc.value)) {
    lines.push_back(label_line({{"d", c->labels.d}, {"e", c->labels.e}}));
    lines.push_back(map_line("xi", c->data.xi));
    lines.push_back(vec_line("b0", c->data.b0));
    lines.push_back(vec_line("a", c->data.a));
    lines.push_back(scalar_line("lambda", c->data.lambda));
    lines.push_back(scalar_line("t", c->data.t));
  } else {
    const auto& p = std::get<ExtensionDocument::Planar>(doc.value);
    lines.push_back(label_line({{"d0", p.labels.d0}, {"d1", p.labels.d1}, {"e0", p.labels.e0}, {"e1", p.labels.e1}}));
    lines.push_back(map_line("xi0", p.data.xi0));
    lines.push_back(map_line("xi1", p.data.xi1));
    lines.push_back(vec_line("b0", p.data.b0));
    lines.push_back(vec_line("b1", p.data.b1));
    lines.push_back(vec_line("c0", p.data.c0));
    lines.push_back(vec_line("c1", p.data.c1));
    lines.push_back(scalar_line("T", p.data.T));
    lines.push_back(vec_line("a0", p.data.a0));
    lines.push_back(vec_line("a1", p.data.a1));
    lines.push_back(scalar_line("lambda", p.data.lambda));
    lines.push_back(scalar_line("t", p.data.t));
  }
  return detail::join_block(lines, "{", "}", "") + "\n";
}

// ---------------------------------------------------------------------------
// Isomorphism witnesses


/// Images of the source basis vectors as [source label, target label, coefficient].
inline std::string serialize(const Isomorphism& phi)
{
  using detail::quote;
  std::vector<std::string> lines;
  for (std::size_t c = 0; c < phi.matrix.cols(); ++c)
    for (std::size_t r = 0; r < phi.matrix.rows(); ++r)
      if (phi.matrix(r, c) != 0)
        lines.push_back("[" + quote(phi.source->label(c)) + ", " + quote(phi.target->label(r)) + ", " +
                        quote(to_string(phi.matrix(r, c))) + "]");
  return "{\n  \"source\": " + detail::basis_json(*phi.source) + ",\n  \"target\": " + detail::basis_json(*phi.target) +
         ",\n  \"images\": " + detail::join_block(lines, "[", "]", "  ") + "\n}\n";
}

inline Isomorphism parse_witness(const std::string& text)
{
  using detail::Json;
  const Json j = detail::parse_json(text);
  detail::require_object(j, "witness", {"source", "target", "images"}, {"source", "target", "images"});
  const SpacePtr source = detail::get_basis(j["source"], "witness source");
  const SpacePtr target = detail::get_basis(j["target"], "witness target");
  if (!j["images"].is_array()) throw ParseError("witness images: expected an array");
  Matrix m(target->dim(), source->dim());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : j["images"]) {
    if (!e.is_array() || e.size() != 3) throw ParseError("witness images: entries are [source, target, value]");
    const std::size_t c = detail::get_label(*source, e[0], "witness source label");
    const std::size_t r = detail::get_label(*target, e[1], "witness target label");
    if (!seen.insert({r, c}).second) throw ParseError("witness images: duplicate entry");
    m(r, c) = detail::get_rational(e[2], "witness value");
  }
  return {source, target, m};
}

}  // namespace qqf

#endif  // QQF_DOCUMENT_HPP
