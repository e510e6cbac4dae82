#ifndef QQF_STRUCTURES_HPP
#define QQF_STRUCTURES_HPP

#include "liesuper.hpp"
#include "report.hpp"
#include "superlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qqf {

/// Cyclic 2-cocycle condition on all basis triples.
inline ValidationReport check_closed(const LieSuperalgebra& alg, const BilinearForm& omega)
{
  require_same_space(alg.space(), omega.space(), "check_closed");
  ValidationReport r;
  const SuperSpace& s = *alg.space();
  const std::size_t n = alg.dim();
  auto e = [&](std::size_t i) { return SuperVector::basis(alg.space(), i).coeffs(); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Parity pu = s.parity(i), pv = s.parity(j), pw = s.parity(k);
        const Scalar sum = Scalar(koszul(pu, pw)) * omega(alg.structure(i, j), e(k)) +
                           Scalar(koszul(pv, pu)) * omega(alg.structure(j, k), e(i)) +
                           Scalar(koszul(pw, pv)) * omega(alg.structure(k, i), e(j));
        if (sum != 0)
          r.fail("closed", "(" + s.label(i) + ", " + s.label(j) + ", " + s.label(k) + ") sums to " + to_string(sum));
      }
  return r;
}

/// B([u,v],w) = B(u,[v,w]) on all basis triples.
inline ValidationReport check_invariant(const LieSuperalgebra& alg, const BilinearForm& b)
{
  require_same_space(alg.space(), b.space(), "check_invariant");
  ValidationReport r;
  const SuperSpace& s = *alg.space();
  const std::size_t n = alg.dim();
  auto e = [&](std::size_t i) { return SuperVector::basis(alg.space(), i).coeffs(); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar lhs = b(alg.structure(i, j), e(k));
        const Scalar rhs = b(e(i), alg.structure(j, k));
        if (lhs != rhs)
          r.fail("invariant", "(" + s.label(i) + ", " + s.label(j) + ", " + s.label(k) + "): " + to_string(lhs) +
                                  " != " + to_string(rhs));
      }
  return r;
}

/// Structural requirements on a candidate symplectic form (no closedness).
inline ValidationReport check_symplectic_form(const BilinearForm& omega)
{
  ValidationReport r;
  if (omega.symmetry() != Symmetry::antisymmetric) r.fail("omega", "form is not flagged antisymmetric");
  if (!omega.nondegenerate()) r.fail("omega", "form is degenerate");
  const SuperSpace& s = *omega.space();
  if (omega.parity() == Parity::odd && s.even_dim() != s.odd_dim())
    r.fail("dimension", "periplectic form requires even_dim = odd_dim");
  if (omega.parity() == Parity::even && s.even_dim() % 2 != 0)
    r.fail("dimension", "orthosymplectic form requires an even-dimensional even part");
  return r;
}

/// Bilinear product given by its values on all ordered basis pairs.
class ProductTable {
 public:
  ProductTable() = default;
  ProductTable(SpacePtr space, std::vector<std::vector<Vec>> table) : space_(std::move(space)), table_(std::move(table)) {}

  const SpacePtr& space() const { return space_; }
  std::size_t dim() const { return space_->dim(); }
  const Vec& product(std::size_t i, std::size_t j) const { return table_[i][j]; }

  Vec apply(const Vec& u, const Vec& v) const
  {
    const std::size_t n = dim();
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (qqf::is_zero(u[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (qqf::is_zero(v[j])) continue;
        const Vec& c = table_[i][j];
        const Scalar f = u[i] * v[j];
        for (std::size_t k = 0; k < n; ++k)
          if (!qqf::is_zero(c[k])) out[k] += f * c[k];
      }
    }
    return out;
  }

  SuperVector operator()(const SuperVector& u, const SuperVector& v) const
  {
    return {space_, apply(u.coeffs(), v.coeffs())};
  }

  /// L_u(v) = u⋆v
  Endomorphism left(const SuperVector& u) const
  {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      const Vec c = apply(u.coeffs(), SuperVector::basis(space_, j).coeffs());
      for (std::size_t i = 0; i < dim(); ++i) m(i, j) = c[i];
    }
    return {space_, m, u.parity().value_or(Parity::even)};
  }

  /// R_u(v) = v⋆u
  Endomorphism right(const SuperVector& u) const
  {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      const Vec c = apply(SuperVector::basis(space_, j).coeffs(), u.coeffs());
      for (std::size_t i = 0; i < dim(); ++i) m(i, j) = c[i];
    }
    return {space_, m, u.parity().value_or(Parity::even)};
  }

  bool is_zero() const
  {
    for (const auto& row : table_)
      for (const auto& c : row)
        if (!qqf::is_zero(c)) return false;
    return true;
  }

  friend bool operator==(const ProductTable& a, const ProductTable& b) { return a.table_ == b.table_; }

 private:
  SpacePtr space_;
  std::vector<std::vector<Vec>> table_;
};

/// ⋆ determined by ω(u⋆v,w) = ⅓(ω([u,v],w) + (-1)^{|v||w|} ω([u,w],v)).
inline ProductTable natural_product(const LieSuperalgebra& alg, const BilinearForm& omega)
{
  require_same_space(alg.space(), omega.space(), "natural_product");
  const auto inv = inverse(omega.raw().transpose());
  if (!inv) throw SingularFormError("natural_product: form is degenerate");
  const SuperSpace& s = *alg.space();
  const std::size_t n = alg.dim();
  auto e = [&](std::size_t i) { return SuperVector::basis(alg.space(), i).coeffs(); };
  std::vector<std::vector<Vec>> t(n, std::vector<Vec>(n));
  const Scalar third(1, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec rhs(n);
      for (std::size_t k = 0; k < n; ++k)
        rhs[k] = third * (omega(alg.structure(i, j), e(k)) +
                          Scalar(koszul(s.parity(j), s.parity(k))) * omega(alg.structure(i, k), e(j)));
      t[i][j] = inv->apply(rhs);
    }
  return {alg.space(), std::move(t)};
}

/// The two defining properties of ⋆: graded commutator is the bracket, and ω-skewness.
inline ValidationReport check_product(const LieSuperalgebra& alg, const BilinearForm& omega, const ProductTable& star)
{
  ValidationReport r;
  const SuperSpace& s = *alg.space();
  const std::size_t n = alg.dim();
  auto e = [&](std::size_t i) { return SuperVector::basis(alg.space(), i).coeffs(); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec c = star.product(i, j) - Scalar(koszul(s.parity(i), s.parity(j))) * star.product(j, i);
      if (c != alg.structure(i, j))
        r.fail("commutator", "(" + s.label(i) + ", " + s.label(j) + ")");
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar v = omega(star.product(i, j), e(k)) +
                         Scalar(koszul(s.parity(i), s.parity(j))) * omega(e(j), star.product(i, k));
        if (v != 0) r.fail("skew", "(" + s.label(i) + ", " + s.label(j) + ", " + s.label(k) + ")");
      }
    }
  return r;
}

/// K(u,v) = L_{[u,v]} - [L_u, L_v]
inline Endomorphism curvature(const ProductTable& star, const LieSuperalgebra& alg, const SuperVector& u,
                              const SuperVector& v)
{
  const Endomorphism lu = star.left(u), lv = star.left(v);
  const SuperVector b = alg.bracket(u, v);
  Endomorphism lb = star.left(b);
  const Parity p = u.parity().value_or(Parity::even) + v.parity().value_or(Parity::even);
  if (b.is_zero()) lb = Endomorphism::zero(alg.space(), p);
  return lb - graded_commutator(lu, lv);
}

struct FlatnessResult {
  bool flat = true;
  std::string witness;  ///< first nonzero curvature value, empty when flat
  explicit operator bool() const { return flat; }
};

/// Flatness via curvature and via left-symmetry of the associator; both must agree.
inline FlatnessResult check_flat(const ProductTable& star, const LieSuperalgebra& alg)
{
  require_same_space(star.space(), alg.space(), "check_flat");
  const SuperSpace& s = *alg.space();
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec c = star.product(i, j) - Scalar(koszul(s.parity(i), s.parity(j))) * star.product(j, i);
      if (c != alg.structure(i, j))
        throw IncompatibleProduct("graded commutator of the product differs from the bracket at (" + s.label(i) +
                                  ", " + s.label(j) + ")");
    }
  FlatnessResult by_curvature;
  for (std::size_t i = 0; i < n && by_curvature.flat; ++i)
    for (std::size_t j = 0; j < n && by_curvature.flat; ++j) {
      const Endomorphism k =
          curvature(star, alg, SuperVector::basis(alg.space(), i), SuperVector::basis(alg.space(), j));
      for (std::size_t w = 0; w < n; ++w) {
        const SuperVector kw = k.image(w);
        if (!kw.is_zero()) {
          by_curvature = {false, "K(" + s.label(i) + ", " + s.label(j) + ")(" + s.label(w) + ") = " + kw.str()};
          break;
        }
      }
    }
  bool by_associator = true;
  auto e = [&](std::size_t i) { return SuperVector::basis(alg.space(), i).coeffs(); };
  for (std::size_t i = 0; i < n && by_associator; ++i)
    for (std::size_t j = 0; j < n && by_associator; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec a1 = star.apply(star.product(i, j), e(k)) - star.apply(e(i), star.product(j, k));
        const Vec a2 = star.apply(star.product(j, i), e(k)) - star.apply(e(j), star.product(i, k));
        if (a1 != Scalar(koszul(s.parity(i), s.parity(j))) * a2) {
          by_associator = false;
          break;
        }
      }
  if (by_associator != by_curvature.flat) throw Error("check_flat: curvature and associator tests disagree");
  return by_curvature;
}

/// Quasi-Frobenius structure: a Lie superalgebra with a closed nondegenerate antisymmetric form.
class QuasiFrobeniusStructure {
 public:
  QuasiFrobeniusStructure() = default;
  QuasiFrobeniusStructure(LieSuperalgebra alg, BilinearForm omega) : alg_(std::move(alg)), omega_(std::move(omega))
  {
    require_same_space(alg_.space(), omega_.space(), "QuasiFrobeniusStructure");
    ValidationReport r = validate(alg_, omega_);
    if (!r.ok()) throw HypothesisError("not a quasi-Frobenius structure", r);
    star_ = natural_product(alg_, omega_);
  }

  static ValidationReport validate(const LieSuperalgebra& alg, const BilinearForm& omega)
  {
    ValidationReport r = validate_lie(alg);
    r.merge(check_symplectic_form(omega));
    if (r.ok()) r.merge(check_closed(alg, omega));
    return r;
  }

  const LieSuperalgebra& alg() const { return alg_; }
  const BilinearForm& omega() const { return omega_; }
  const ProductTable& star() const { return star_; }
  const SpacePtr& space() const { return alg_.space(); }
  std::size_t dim() const { return alg_.dim(); }
  Parity parity() const { return omega_.parity(); }
  std::string flavor() const { return omega_.parity() == Parity::even ? "orthosymplectic" : "periplectic"; }

  FlatnessResult flatness() const { return check_flat(star_, alg_); }

  /// ω-adjoint.
  Endomorphism adjoint(const Endomorphism& f) const { return qqf::adjoint(f, omega_); }

 private:
  LieSuperalgebra alg_;
  BilinearForm omega_;
  ProductTable star_;
};

/// ω(u,v) = B(δu, v)
inline Endomorphism delta_from(const BilinearForm& b, const BilinearForm& omega)
{
  require_same_space(b.space(), omega.space(), "delta_from");
  if (!b.nondegenerate() || !omega.nondegenerate()) throw SingularFormError("delta_from: degenerate form");
  const std::size_t n = b.dim();
  std::vector<SuperVector> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(solve_against_form(b, omega.raw().row(j)));
  return Endomorphism::from_images(b.space(), images, b.parity() + omega.parity());
}

/// B(u,v) = ω(ρu, v)
inline Endomorphism rho_from(const BilinearForm& b, const BilinearForm& omega)
{
  require_same_space(b.space(), omega.space(), "rho_from");
  if (!b.nondegenerate() || !omega.nondegenerate()) throw SingularFormError("rho_from: degenerate form");
  const std::size_t n = b.dim();
  std::vector<SuperVector> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(solve_against_form(omega, b.raw().row(j)));
  const Endomorphism rho = Endomorphism::from_images(b.space(), images, b.parity() + omega.parity());
  const Endomorphism delta = delta_from(b, omega);
  if (!(delta * rho == Endomorphism::identity(b.space()))) throw Error("rho_from: delta and rho are not inverse");
  return rho;
}

/// The raw table ω(ρ b_i, b_j); symmetry detected rather than assumed.
inline BilinearForm form_from_rho(const BilinearForm& omega, const Endomorphism& rho)
{
  require_same_space(omega.space(), rho.space(), "form_from_rho");
  const std::size_t n = omega.dim();
  Matrix raw(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec ri = rho.matrix().column(i);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!qqf::is_zero(ri[k])) raw(i, j) += ri[k] * omega.at(k, j);
  }
  const Symmetry sym = detail::detect_symmetry(*omega.space(), raw);
  return {omega.space(), raw, omega.parity() + rho.parity(), sym};
}

/// u⋆v = ⅓([u,v] + (-1)^{|u||δ|} δ⁻¹[u, δv])
inline ProductTable npl_product(const LieSuperalgebra& alg, const Endomorphism& delta)
{
  require_same_space(alg.space(), delta.space(), "npl_product");
  const auto inv = delta.inverse();
  if (!inv) throw SingularEndomorphism("npl_product: delta is not invertible");
  const SuperSpace& s = *alg.space();
  const std::size_t n = alg.dim();
  std::vector<std::vector<Vec>> t(n, std::vector<Vec>(n));
  const Scalar third(1, 3);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec ei = SuperVector::basis(alg.space(), i).coeffs();
    for (std::size_t j = 0; j < n; ++j) {
      const Vec dv = delta.matrix().column(j);
      const Vec term = inv->apply(alg.bracket(ei, dv));
      t[i][j] = third * (alg.structure(i, j) + Scalar(koszul(s.parity(i), delta.parity())) * term);
    }
  }
  return {alg.space(), std::move(t)};
}

/// Checks every QQF invariant for (g, ω, ρ); 𝓑 and δ are derived from ρ.
inline ValidationReport check_qqf(const QuasiFrobeniusStructure& qf, const Endomorphism& rho)
{
  ValidationReport r;
  require_same_space(qf.space(), rho.space(), "check_qqf");
  const auto delta = rho.inverse();
  if (!delta) {
    r.fail("rho", "rho is not invertible");
    return r;
  }
  const BilinearForm b = form_from_rho(qf.omega(), rho);
  if (b.symmetry() != Symmetry::symmetric) r.fail("rho", "rho is not omega-antisymmetric (B not symmetric)");
  r.merge(check_invariant(qf.alg(), b));
  if (b.parity() + qf.parity() != rho.parity()) r.fail("parity", "|rho| != |B| + |omega|");
  const DerivationCheck der = is_derivation(*delta, qf.alg());
  if (!der) r.fail("delta", "delta is not a derivation: " + der.witness);
  if (r.ok()) {
    const Endomorphism dstar = adjoint(*delta, b);
    if (!(dstar == -*delta)) r.fail("delta", "delta is not B-antisymmetric");
    const std::size_t n = qf.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec ei = SuperVector::basis(qf.space(), i).coeffs();
        const Vec ej = SuperVector::basis(qf.space(), j).coeffs();
        if (qf.omega()(ei, ej) != b(delta->apply(ei), ej)) r.fail("delta", "omega(u,v) != B(delta u, v)");
      }
  }
  return r;
}

/// Dimension theorems: total dimension even; divisible by 4 when ρ is odd.
inline ValidationReport dimension_checks(std::size_t dim, Parity rho_parity)
{
  ValidationReport r;
  if (dim % 2 != 0) r.fail("dim-even", "total dimension " + std::to_string(dim) + " is odd");
  if (rho_parity == Parity::odd && dim % 4 != 0)
    r.fail("dim-4n", "odd rho requires total dimension divisible by 4, got " + std::to_string(dim));
  return r;
}

/// Quasi-Frobenius structure with a compatible quadratic structure.
class QQFStructure {
 public:
  QQFStructure() = default;
  QQFStructure(QuasiFrobeniusStructure qf, Endomorphism rho) : qf_(std::move(qf)), rho_(std::move(rho))
  {
    ValidationReport r = check_qqf(qf_, rho_);
    if (!r.ok()) throw HypothesisError("not a QQF structure", r);
    b_ = form_from_rho(qf_.omega(), rho_);
    delta_ = *rho_.inverse();
  }

  static QQFStructure from_forms(QuasiFrobeniusStructure qf, const BilinearForm& b)
  {
    Endomorphism rho = rho_from(b, qf.omega());
    return {std::move(qf), std::move(rho)};
  }

  const QuasiFrobeniusStructure& qf() const { return qf_; }
  const LieSuperalgebra& alg() const { return qf_.alg(); }
  const BilinearForm& omega() const { return qf_.omega(); }
  const BilinearForm& b_form() const { return b_; }
  const Endomorphism& rho() const { return rho_; }
  const Endomorphism& delta() const { return delta_; }
  const SpacePtr& space() const { return qf_.space(); }
  std::size_t dim() const { return qf_.dim(); }

 private:
  QuasiFrobeniusStructure qf_;
  Endomorphism rho_;
  BilinearForm b_;
  Endomorphism delta_;
};

inline ValidationReport dimension_checks(const QQFStructure& q) { return dimension_checks(q.dim(), q.rho().parity()); }

/// Full flat-QQF suite: QQF invariants, flatness, ⋆ postconditions, npl cross-check, center facts, dimensions.
inline ValidationReport flat_qqf_suite(const QQFStructure& q)
{
  ValidationReport r = check_qqf(q.qf(), q.rho());
  r.merge(check_product(q.alg(), q.omega(), q.qf().star()));
  const FlatnessResult f = q.qf().flatness();
  if (!f) r.fail("flat", f.witness);
  if (!(npl_product(q.alg(), q.delta()) == q.qf().star())) r.fail("npl", "delta-expression differs from natural product");
  const Subspace z = center(q.alg());
  if (!(perp(derived(q.alg()), q.omega()) == z)) r.fail("center", "center != perp(derived, omega)");
  std::vector<Vec> images;
  for (const auto& v : z.basis()) images.push_back(q.rho()(v).coeffs());
  if (!(Subspace(q.space(), images) == z)) r.fail("center", "rho(center) != center");
  r.merge(dimension_checks(q));
  return r;
}

enum class Verdict { yes, no, inconclusive };

inline std::string to_string(Verdict v)
{
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "inconclusive";
  }
}

struct QuadraticExistence {
  Verdict verdict = Verdict::inconclusive;
  std::string witness;
  std::vector<Endomorphism> basis;     ///< solution space of candidate ρ
  std::optional<Endomorphism> sample;  ///< invertible member, if found
};

namespace detail {

/// Integer assignments with max-norm 1..bound, ordered by norm then lexicographically over (-1,1,-2,2,...).
inline void for_each_small_assignment(std::size_t k, int bound, std::size_t limit,
                                      const std::function<bool(const std::vector<int>&)>& visit)
{
  if (k == 0) return;
  std::vector<int> values{0};
  for (int v = 1; v <= bound; ++v) {
    values.push_back(-v);
    values.push_back(v);
  }
  std::size_t visited = 0;
  for (int norm = 1; norm <= bound; ++norm) {
    std::vector<std::size_t> idx(k, 0);
    const std::size_t range = static_cast<std::size_t>(2 * norm + 1);
    for (;;) {
      std::vector<int> a(k);
      int mx = 0;
      for (std::size_t t = 0; t < k; ++t) {
        a[t] = values[idx[t]];
        mx = std::max(mx, std::abs(a[t]));
      }
      if (mx == norm) {
        if (visit(a)) return;
        if (++visited >= limit) return;
      }
      bool done = true;
      for (std::size_t t = k; t-- > 0;) {
        if (++idx[t] < range) {
          done = false;
          break;
        }
        idx[t] = 0;
      }
      if (done) break;
    }
  }
}

/// Some parity block of every member of span(basis) is singular, proved exactly: a block determinant has
/// total degree <= d in the k parameters, so it vanishes identically iff it vanishes on the principal
/// lattice {α ∈ N^k : |α| <= d}, which is unisolvent for that degree. nullopt when a block is generically
/// invertible or the lattice exceeds the budget.
inline std::optional<std::string> identically_singular_block(const SuperSpace& s, const std::vector<Endomorphism>& basis,
                                                             Parity rho_parity, std::size_t budget = 200000)
{
  std::vector<std::size_t> rows[2], cols[2];
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const int p = s.parity(i) == Parity::odd;
    rows[p].push_back(i);
    cols[(s.parity(i) + rho_parity) == Parity::odd].push_back(i);
  }
  if (rows[0].size() != cols[0].size())
    return "a map of parity " + to_string(rho_parity) + " sends a " + std::to_string(cols[0].size()) +
           "-dim block onto a " + std::to_string(rows[0].size()) + "-dim one";
  const std::size_t k = basis.size();
  for (int b = 0; b < 2; ++b) {
    const std::size_t d = rows[b].size();
    if (d == 0) continue;
    // C(d+k, k) lattice points, computed incrementally to stay exact.
    std::size_t points = 1;
    for (std::size_t t = 1; t <= k && points <= budget; ++t) points = points * (d + t) / t;
    if (points > budget) return std::nullopt;
    std::vector<std::size_t> alpha(k, 0);
    bool nonzero = false;
    for (;;) {
      Matrix m(d, d);
      for (std::size_t t = 0; t < k; ++t) {
        if (alpha[t] == 0) continue;
        const Scalar v(static_cast<long>(alpha[t]));
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) m(r, c) += v * basis[t].matrix()(rows[b][r], cols[b][c]);
      }
      if (!qqf::is_zero(determinant(m))) {
        nonzero = true;
        break;
      }
      // next α with |α| <= d, odometer order
      std::size_t total = 0;
      for (const auto a : alpha) total += a;
      std::size_t t = k;
      while (t-- > 0) {
        if (total < d) {
          ++alpha[t];
          break;
        }
        total -= alpha[t];
        alpha[t] = 0;
      }
      if (t == static_cast<std::size_t>(-1)) break;
    }
    if (!nonzero)
      return "the determinant of the " + std::string(b == 0 ? "even" : "odd") + "-row block vanishes identically";
  }
  return std::nullopt;
}

}  // namespace detail

/// Solves for ρ of the given parity with ω(ρ·,·) symmetric and invariant; samples for invertibility.
inline QuadraticExistence quadratic_existence(const QuasiFrobeniusStructure& qf, Parity rho_parity)
{
  QuadraticExistence out;
  const LieSuperalgebra& alg = qf.alg();
  const BilinearForm& omega = qf.omega();
  const SuperSpace& s = *alg.space();
  const std::size_t n = alg.dim();
  const Subspace z = center(alg);
  const Subspace p = perp(derived(alg), omega);
  if (!(z == p)) {
    out.verdict = Verdict::no;
    out.witness = "perp(derived) = " + p.str() + " != center = " + z.str();
    return out;
  }
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s.parity(i) == s.parity(j) + rho_parity) slots.emplace_back(i, j);
  auto e = [&](std::size_t i) { return SuperVector::basis(alg.space(), i).coeffs(); };
  // Conditions as linear functionals of ρ: B(i,j) = ω(ρ b_i, b_j) = Σ_k ρ(k,i) ω(k,j).
  auto b_coeff = [&](std::size_t slot, const Vec& u, const Vec& v) {
    const auto [k, i] = slots[slot];
    if (qqf::is_zero(u[i])) return Scalar(0);
    Scalar acc = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (!qqf::is_zero(v[j])) acc += omega.at(k, j) * v[j];
    return u[i] * acc;
  };
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec row(slots.size());
      const Scalar sg = koszul(s.parity(i), s.parity(j));
      for (std::size_t t = 0; t < slots.size(); ++t) row[t] = b_coeff(t, e(i), e(j)) - sg * b_coeff(t, e(j), e(i));
      if (!qqf::is_zero(row)) rows.push_back(row);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (qqf::is_zero(alg.structure(i, j)) && qqf::is_zero(alg.structure(j, k))) continue;
        Vec row(slots.size());
        for (std::size_t t = 0; t < slots.size(); ++t)
          row[t] = b_coeff(t, alg.structure(i, j), e(k)) - b_coeff(t, e(i), alg.structure(j, k));
        if (!qqf::is_zero(row)) rows.push_back(row);
      }
  std::vector<Vec> ker = rows.empty() ? kernel(Matrix(1, slots.size())) : kernel(Matrix::from_rows(rows, slots.size()));
  for (auto& v : ker) {
    Scalar lead = 0;
    for (const auto& x : v)
      if (x != 0) {
        lead = x;
        break;
      }
    v = Scalar(1) / lead * v;
    Matrix m(n, n);
    for (std::size_t t = 0; t < slots.size(); ++t) m(slots[t].first, slots[t].second) = v[t];
    out.basis.emplace_back(alg.space(), m, rho_parity);
  }
  if (!out.basis.empty()) {
    if (const auto singular = detail::identically_singular_block(s, out.basis, rho_parity)) {
      out.verdict = Verdict::no;
      out.witness = std::to_string(out.basis.size()) + "-parameter family, every member singular: " + *singular;
      return out;
    }
  }
  detail::for_each_small_assignment(out.basis.size(), 3, 20000, [&](const std::vector<int>& a) {
    Matrix m(n, n);
    for (std::size_t t = 0; t < a.size(); ++t)
      if (a[t] != 0) m = m + Scalar(a[t]) * out.basis[t].matrix();
    if (!qqf::is_zero(determinant(m))) {
      out.sample = Endomorphism(alg.space(), m, rho_parity);
      return true;
    }
    return false;
  });
  if (out.basis.empty()) {
    out.verdict = Verdict::no;
    out.witness = "no nonzero candidate of parity " + to_string(rho_parity);
  } else if (out.sample) {
    out.verdict = Verdict::yes;
    out.witness = std::to_string(out.basis.size()) + "-parameter family";
  } else {
    out.verdict = Verdict::inconclusive;
    out.witness = std::to_string(out.basis.size()) + "-parameter family, no invertible sample found";
  }
  return out;
}

}  // namespace qqf

#endif  // QQF_STRUCTURES_HPP
