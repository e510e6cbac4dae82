#ifndef QQF_CATALOG_HPP
#define QQF_CATALOG_HPP

#include "catalog_data.hpp"
#include "document.hpp"
#include "errors.hpp"
#include "extensions.hpp"
#include "structures.hpp"

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace qqf {

// ---------------------------------------------------------------------------
// Frobenius algebras and the tensor construction

/// Associative supercommutative algebra with an even symmetric invariant form Ω.
class FrobeniusAlgebra {
 public:
  FrobeniusAlgebra() = default;

  /// `upper[i][j]` for i <= j is b_i·b_j; the rest follows from supercommutativity.
  FrobeniusAlgebra(std::string name, SpacePtr space, const std::vector<std::vector<Vec>>& upper, BilinearForm form)
      : name_(std::move(name)), space_(std::move(space)), form_(std::move(form))
  {
    require_same_space(space_, form_.space(), "FrobeniusAlgebra");
    const std::size_t n = space_->dim();
    table_.assign(n, std::vector<Vec>(n, Vec(n)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        table_[i][j] = upper[i][j];
        table_[j][i] = Scalar(koszul(space_->parity(i), space_->parity(j))) * upper[i][j];
      }
  }

  /// 𝕂 with Ω(1,1) = 1.
  static FrobeniusAlgebra field()
  {
    auto s = make_space({{"1", Parity::even}});
    Matrix w(1, 1);
    w(0, 0) = 1;
    return {"K", s, {{Vec{1}}}, BilinearForm(s, w, Parity::even, Symmetry::symmetric)};
  }

  /// 𝕂[ε], ε even, ε² = 0, Ω(1,ε) = Ω(ε,1) = 1.
  static FrobeniusAlgebra dual_numbers()
  {
    auto s = make_space({{"1", Parity::even}, {"eps", Parity::even}});
    Matrix w(2, 2);
    w(0, 1) = w(1, 0) = 1;
    return {"K[eps]", s, {{Vec{1, 0}, Vec{0, 1}}, {Vec{}, Vec{0, 0}}}, BilinearForm(s, w, Parity::even, Symmetry::symmetric)};
  }

  /// Grassmann algebra on one odd generator θ with Ω(1,1) = c; Ω(θ,θ) is forced to vanish.
  static FrobeniusAlgebra grassmann(const Scalar& c = 1)
  {
    auto s = make_space({{"1", Parity::even}, {"theta", Parity::odd}});
    Matrix w(2, 2);
    w(0, 0) = c;
    return {"Lambda1", s, {{Vec{1, 0}, Vec{0, 1}}, {Vec{}, Vec{0, 0}}}, BilinearForm(s, w, Parity::even, Symmetry::symmetric)};
  }

  const std::string& name() const { return name_; }
  const SpacePtr& space() const { return space_; }
  std::size_t dim() const { return space_->dim(); }
  const BilinearForm& form() const { return form_; }
  const Vec& product(std::size_t i, std::size_t j) const { return table_[i][j]; }

  Vec multiply(const Vec& a, const Vec& b) const
  {
    Vec out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        if (a[i] != 0 && b[j] != 0) out = out + (a[i] * b[j]) * table_[i][j];
    return out;
  }

  ValidationReport validate() const
  {
    ValidationReport r;
    const SuperSpace& s = *space_;
    const std::size_t n = dim();
    auto e = [&](std::size_t i) { return SuperVector::basis(space_, i).coeffs(); };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto p = detail::vector_parity(s, table_[i][j], "product");
        if (p && *p != s.parity(i) + s.parity(j))
          r.fail("parity", s.label(i) + "·" + s.label(j) + " has the wrong parity");
        if (table_[i][j] != Scalar(koszul(s.parity(i), s.parity(j))) * table_[j][i])
          r.fail("supercommutative", "a·b != (-1)^{|a||b|} b·a on (" + s.label(i) + ", " + s.label(j) + ")");
        for (std::size_t k = 0; k < n; ++k) {
          if (multiply(table_[i][j], e(k)) != multiply(e(i), table_[j][k]))
            r.fail("associative", "(ab)c != a(bc) on (" + s.label(i) + ", " + s.label(j) + ", " + s.label(k) + ")");
          if (form_(table_[i][j], e(k)) != form_(e(i), table_[j][k]))
            r.fail("invariant", "Omega(a·b, c) != Omega(a, b·c) on (" + s.label(i) + ", " + s.label(j) + ", " +
                                    s.label(k) + ")");
        }
      }
    if (form_.parity() != Parity::even) r.fail("form", "Omega is not even");
    if (form_.symmetry() != Symmetry::symmetric) r.fail("form", "Omega is not symmetric");
    if (!form_.nondegenerate()) r.fail("form", "Omega is degenerate");
    return r;
  }

 private:
  std::string name_;
  SpacePtr space_;
  std::vector<std::vector<Vec>> table_;
  BilinearForm form_;
};

/// Strict reader for {name, basis, products, form}; products list b_i·b_j once per unordered pair.
inline FrobeniusAlgebra parse_frobenius(const std::string& text)
{
  using detail::Json;
  const Json j = detail::parse_json(text);
  detail::require_object(j, "algebra", {"name", "basis", "products", "form"}, {"name", "basis", "form"});
  Json as_doc = {{"name", j["name"]}, {"basis", j["basis"]}, {"forms", {{"Omega", j["form"]}}}};
  const AlgebraDocument doc = parse_document(as_doc.dump());
  const SpacePtr& s = doc.space();
  const std::size_t n = s->dim();
  std::vector<std::vector<Vec>> upper(n, std::vector<Vec>(n, Vec(n)));
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  if (j.contains("products")) {
    if (!j["products"].is_array()) throw ParseError("products: expected an array");
    for (const auto& p : j["products"]) {
      detail::require_object(p, "product", {"left", "right", "value"}, {"left", "right", "value"});
      std::size_t a = detail::get_label(*s, p["left"], "product left"), b = detail::get_label(*s, p["right"], "product right");
      Vec v = detail::get_combination(*s, p["value"], "product value");
      if (a > b) {
        std::swap(a, b);
        v = Scalar(koszul(s->parity(a), s->parity(b))) * v;
      }
      if (seen[a][b]) throw ParseError("duplicate product " + s->label(a) + "·" + s->label(b));
      seen[a][b] = true;
      upper[a][b] = v;
    }
  }
  return {doc.name, s, upper, doc.forms.at("Omega")};
}

inline std::string serialize(const FrobeniusAlgebra& a)
{
  using detail::quote;
  const SuperSpace& s = *a.space();
  std::vector<std::string> basis, products;
  for (std::size_t i = 0; i < s.dim(); ++i)
    basis.push_back("{\"name\": " + quote(s.label(i)) + ", \"parity\": " + to_string(s.parity(i)) + "}");
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i; j < s.dim(); ++j)
      if (!is_zero(a.product(i, j)))
        products.push_back("{\"left\": " + quote(s.label(i)) + ", \"right\": " + quote(s.label(j)) +
                           ", \"value\": " + detail::combination_json(s, a.product(i, j)) + "}");
  Matrix upper(s.dim(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i; j < s.dim(); ++j) upper(i, j) = a.form().at(i, j);
  return "{\n  \"name\": " + quote(a.name()) + ",\n  \"basis\": " + detail::join_block(basis, "[", "]", "  ") +
         ",\n  \"products\": " + detail::join_block(products, "[", "]", "  ") +
         ",\n  \"form\": {\"parity\": " + to_string(a.form().parity()) + ", \"kind\": " + quote(to_string(a.form().symmetry())) + ", \"values\": " + detail::entries_json(s, upper, "  ") +
         "}\n}\n";
}

namespace detail {

/// Coordinates of u⊗a in the tensor space; labels are "u.a".
struct TensorLayout {
  SpacePtr space;
  std::vector<std::vector<std::size_t>> pos;  ///< pos[u][a]

  Vec pack(const Vec& u, const Vec& a) const
  {
    Vec out(space->dim());
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t k = 0; k < a.size(); ++k)
        if (u[i] != 0 && a[k] != 0) out[pos[i][k]] += u[i] * a[k];
    return out;
  }
};

inline TensorLayout tensor_layout(const SuperSpace& h, const SuperSpace& a)
{
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) basis.push_back({h.label(i) + "." + a.label(k), h.parity(i) + a.parity(k)});
  TensorLayout l{make_space(basis), std::vector<std::vector<std::size_t>>(h.dim(), std::vector<std::size_t>(a.dim()))};
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) l.pos[i][k] = l.space->permutation()[i * a.dim() + k];
  return l;
}

}  // namespace detail

/// (u⊗a)⋆(v⊗b) = (-1)^{|a||v|}(u⋆v)⊗(a·b) on every basis pair.
inline ValidationReport check_tensor_product_identity(const QQFStructure& h, const FrobeniusAlgebra& A,
                                                      const QQFStructure& g)
{
  ValidationReport r;
  const SuperSpace& hs = *h.space();
  const SuperSpace& as = *A.space();
  const detail::TensorLayout l = detail::tensor_layout(hs, as);
  const ProductTable& star = g.qf().star();
  for (std::size_t i = 0; i < hs.dim(); ++i)
    for (std::size_t k = 0; k < as.dim(); ++k)
      for (std::size_t j = 0; j < hs.dim(); ++j)
        for (std::size_t m = 0; m < as.dim(); ++m) {
          const Vec lhs = star.apply(SuperVector::basis(g.space(), l.pos[i][k]).coeffs(),
                                     SuperVector::basis(g.space(), l.pos[j][m]).coeffs());
          const Vec uv = h.qf().star().apply(SuperVector::basis(h.space(), i).coeffs(), SuperVector::basis(h.space(), j).coeffs());
          const Vec rhs = Scalar(koszul(as.parity(k), hs.parity(j))) * l.pack(uv, A.product(k, m));
          if (lhs != rhs)
            r.fail("tensor-star", "(u⊗a)⋆(v⊗b) != (-1)^{|a||v|}(u⋆v)⊗(a·b) on (" + hs.label(i) + "." + as.label(k) +
                                      ", " + hs.label(j) + "." + as.label(m) + ")");
        }
  return r;
}

/// [u⊗a, v⊗b] = (-1)^{|a||v|}[u,v]⊗(a·b); ω and 𝓑 likewise with Ω(a,b); ρ(u⊗a) = ρ(u)⊗a.
inline QQFStructure tensor_qqf(const QQFStructure& h, const FrobeniusAlgebra& A)
{
  ValidationReport hyp = A.validate();
  const FlatnessResult flat = h.qf().flatness();
  if (!flat) hyp.fail("flat", "h is not flat: " + flat.witness);
  if (!hyp.ok()) throw HypothesisError("tensor_qqf: hypotheses fail", hyp);

  const SuperSpace& hs = *h.space();
  const SuperSpace& as = *A.space();
  const detail::TensorLayout l = detail::tensor_layout(hs, as);
  const std::size_t n = l.space->dim();
  std::vector<std::vector<Vec>> upper(n, std::vector<Vec>(n, Vec(n)));
  Matrix w(n, n), rho(n, n);
  for (std::size_t i = 0; i < hs.dim(); ++i)
    for (std::size_t k = 0; k < as.dim(); ++k) {
      const std::size_t p = l.pos[i][k];
      const Vec ri = l.pack(h.rho().matrix().column(i), SuperVector::basis(A.space(), k).coeffs());
      for (std::size_t r = 0; r < n; ++r) rho(r, p) = ri[r];
      for (std::size_t j = 0; j < hs.dim(); ++j)
        for (std::size_t m = 0; m < as.dim(); ++m) {
          const std::size_t q = l.pos[j][m];
          const Scalar sg(koszul(as.parity(k), hs.parity(j)));
          w(p, q) = sg * h.omega().at(i, j) * A.form().at(k, m);
          if (p <= q) upper[p][q] = sg * l.pack(h.alg().structure(i, j), A.product(k, m));
        }
    }
  LieSuperalgebra alg = LieSuperalgebra::from_upper(l.space, upper, h.alg().name() + "(x)" + A.name());
  QuasiFrobeniusStructure qf = detail::finish_qf(std::move(alg), BilinearForm(l.space, w, h.omega().parity(), Symmetry::antisymmetric), "tensor_qqf");
  QQFStructure g(std::move(qf), Endomorphism(l.space, rho, h.rho().parity()));
  ValidationReport post = flat_qqf_suite(g);
  post.merge(check_tensor_product_identity(h, A, g));
  if (!post.ok()) throw HypothesisError("tensor_qqf: postconditions fail", post);
  return g;
}

// ---------------------------------------------------------------------------
// Catalog

struct CatalogEntry {
  std::string name;
  std::string document;  ///< canonical document text
  std::string notes;     ///< provenance and corrections
  bool quadratic = false;  ///< carries ρ
  bool flat = true;
  Verdict even_rho = Verdict::no;  ///< expected quadratic_existence verdicts
  Verdict odd_rho = Verdict::no;
  std::string certificate;  ///< FNV-1a digest of the certification summary
};

namespace detail {

struct EntryMeta {
  const char* name;
  const char* notes;
  bool quadratic;
  bool flat;
  Verdict even_rho;
  Verdict odd_rho;
  const char* certificate;
};

inline const std::vector<EntryMeta>& catalog_meta()
{
  static const std::vector<EntryMeta> meta = {
      {"g2",
       "omega, B and delta as printed; rho = delta^-1 = diag(-1/2,1/2|1,-1). The printed rho family has "
       "rho(y1) = -2 lambda y1, which fails invariance; the certified invertible family is diag(-lambda,lambda|2lambda,-2lambda).",
       true, true, Verdict::yes, Verdict::no, "0c32095edf76696a"},
      {"g4",
       "omega, odd B and delta as printed; rho = delta^-1 = diag(-1/2,1|-1,1/2). The printed 3-parameter rho family "
       "is invariant only for mu = 0.",
       true, true, Verdict::yes, Verdict::no, "6c0c7ae8dd81c429"},
      {"K+h3", "flat quasi-Frobenius; no quadratic structure (perp of the derived algebra differs from the center).",
       false, true, Verdict::no, Verdict::no, "57948b355671126e"},
      {"g3", "flat quasi-Frobenius; no quadratic structure (perp of the derived algebra differs from the center).",
       false, true, Verdict::no, Verdict::no, "be7771154255e1de"},
      {"dex6-even",
       "even-ortho extension of the 4-dim abelian Lie algebra with omega_b = e1*^e4* + e2*^e3*, xi = E13 - E24, "
       "a = lambda = 1. Printed: [d,e3] = a e1, [d,e4] = -a e2 with rho_b = diag(-2,2,-2,2) lambda, which fails "
       "closedness; stored: [d,e3] = -a e1, [d,e4] = a e2 with rho_b = diag(-2,-2,2,2) lambda.",
       true, true, Verdict::yes, Verdict::no, "71e2b1f2a8190632"},
      {"dex6-odd",
       "even-ortho extension of the purely odd 4-dim abelian superalgebra with omega_b = -e1*^e4* - e2*^e3*, "
       "xi = E13 + E24, a = lambda = 1. Printed: [d,e3] = a e1, [d,e4] = a e2; stored constructor output "
       "[d,e3] = -a e1, [d,e4] = -a e2.",
       true, true, Verdict::yes, Verdict::no, "5d0210825c5c0b2e"},
      {"dex6-mixed",
       "even-ortho extension of the (2|2) abelian superalgebra with omega_b = e1*^e2* - e3*^e4*, xi = E34, "
       "a = lambda = 1. Printed: [d,e4] = a e3; stored constructor output [d,e4] = -a e3.",
       true, true, Verdict::yes, Verdict::no, "01df6356331d3a33"},
      {"dex6-peri",
       "even-peri extension of the (2|2) abelian superalgebra with periplectic omega_b = e1*^e3* + e2*^e4*, "
       "xi = E21 + E34, a = lambda = 1; as printed.",
       true, true, Verdict::yes, Verdict::no, "9bd80cd3ffe83885"},
      {"planar8",
       "periplectic planar extension of the (2|2) abelian superalgebra with omega_b = f1*^f3* + f2*^f4* and odd "
       "rho_b(f1) = -2 f4, rho_b(f2) = -2 f3, rho_b(f3) = f2, rho_b(f4) = -f1, a = lambda = 1. Printed "
       "xi0 = 2a E21 + a E34, xi1 = (3/2)a E24 - a E31 reproduces the printed brackets but its rho is not invariant; "
       "stored: xi0 = a E21 + 2a E34, xi1 = (3/2)a E24 + a E31.",
       true, true, Verdict::no, Verdict::yes, "7de8a1df108a52db"},
  };
  return meta;
}

inline std::string fnv1a(const std::string& s)
{
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace detail

inline std::vector<std::string> catalog_names()
{
  std::vector<std::string> out;
  for (const auto& m : detail::catalog_meta()) out.push_back(m.name);
  return out;
}

inline CatalogEntry catalog_get(const std::string& name)
{
  for (const auto& m : detail::catalog_meta()) {
    if (name != m.name) continue;
    for (const auto& e : detail::embedded_catalog)
      if (name == e.name)
        return {m.name, e.text, m.notes, m.quadratic, m.flat, m.even_rho, m.odd_rho, m.certificate};
    throw UnknownEntry("catalog entry '" + name + "' has no embedded document");
  }
  throw UnknownEntry("unknown catalog entry '" + name + "'");
}

struct Certification {
  ValidationReport report;
  std::string summary;  ///< deterministic text the certificate digests
  std::string digest;
};

/// Full validator suite for one entry; compares with the stored expectations and certificate.
inline Certification certify(const CatalogEntry& entry)
{
  Certification c;
  ValidationReport& r = c.report;
  std::string& s = c.summary;
  try {
    const AlgebraDocument doc = parse_document(entry.document);
    if (doc.name != entry.name) r.fail("name", "document name '" + doc.name + "' != entry name");
    s += "dim " + std::to_string(doc.alg.space()->even_dim()) + "|" + std::to_string(doc.alg.space()->odd_dim()) + "\n";
    if (!doc.forms.count("omega")) {
      r.fail("omega", "document has no omega");
      return c;
    }
    const ValidationReport qfr = QuasiFrobeniusStructure::validate(doc.alg, doc.forms.at("omega"));
    r.merge(qfr);
    if (!qfr.ok()) return c;
    const QuasiFrobeniusStructure qf = qf_from(doc);
    const FlatnessResult f = qf.flatness();
    s += std::string("flat ") + (f.flat ? "yes" : "no") + "\n";
    if (f.flat != entry.flat) r.fail("flat", std::string("expected ") + (entry.flat ? "flat" : "not flat") + (f.flat ? "" : ": " + f.witness));
    r.merge(check_product(qf.alg(), qf.omega(), qf.star()));
    if (has_quadratic(doc) != entry.quadratic) r.fail("quadratic", "stored quadratic data does not match the entry kind");
    if (entry.quadratic && has_quadratic(doc)) {
      r.merge(check_stored_quadratic(doc, qf.omega()));
      const QQFStructure q = qqf_from(doc);
      const ValidationReport suite = flat_qqf_suite(q);
      r.merge(suite);
      s += "rho parity " + to_string(q.rho().parity()) + "\n";
      s += "B parity " + to_string(q.b_form().parity()) + "\n";
    }
    for (Parity p : {Parity::even, Parity::odd}) {
      const QuadraticExistence qe = quadratic_existence(qf, p);
      const Verdict want = p == Parity::even ? entry.even_rho : entry.odd_rho;
      s += "quadratic(" + to_string(p) + ") " + to_string(qe.verdict) + ": " + qe.witness + "\n";
      if (qe.verdict != want)
        r.fail("quadratic-existence", "rho parity " + to_string(p) + ": expected " + to_string(want) + ", got " +
                                          to_string(qe.verdict) + " (" + qe.witness + ")");
    }
    s += "center " + center(qf.alg()).str() + "\n";
    s += "derived " + derived(qf.alg()).str() + "\n";
  } catch (const HypothesisError& e) {
    r.merge(e.report());
    if (e.report().ok()) r.fail("structure", e.what());
  } catch (const Error& e) {
    r.fail("structure", e.what());
  }
  c.digest = detail::fnv1a(s);
  if (r.ok() && !entry.certificate.empty() && c.digest != entry.certificate)
    r.fail("certificate", "digest " + c.digest + " != stored " + entry.certificate);
  return c;
}

/// Certifies every entry; failures are prefixed with the entry name.
inline ValidationReport certify_all()
{
  ValidationReport r;
  for (const auto& name : catalog_names()) r.merge(certify(catalog_get(name)).report, name + ": ");
  return r;
}

}  // namespace qqf

#endif  // QQF_CATALOG_HPP
