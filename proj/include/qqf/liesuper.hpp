#ifndef QQF_LIESUPER_HPP
#define QQF_LIESUPER_HPP

#include "report.hpp"
#include "superlinalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qqf {

struct BracketEntry {
  std::string left;
  std::string right;
  Vec value;  ///< coefficients in canonical basis order
};

/// Lie superalgebra given by structure constants.
class LieSuperalgebra {
 public:
  LieSuperalgebra() = default;

  /// Abelian algebra on the given space.
  explicit LieSuperalgebra(SpacePtr space, std::string name = {})
      : space_(std::move(space)), name_(std::move(name)),
        table_(space_->dim(), std::vector<Vec>(space_->dim(), Vec(space_->dim())))
  {
  }

  /// Entries may name either ordering; conflicting duplicates are rejected.
  LieSuperalgebra(SpacePtr space, const std::vector<BracketEntry>& entries, std::string name = {})
      : LieSuperalgebra(std::move(space), std::move(name))
  {
    const std::size_t n = space_->dim();
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (const auto& e : entries) {
      std::size_t i = space_->index_of(e.left), j = space_->index_of(e.right);
      if (e.value.size() != n) throw DimensionMismatch("bracket value has wrong length");
      Vec v = e.value;
      if (i > j) {
        std::swap(i, j);
        v = Scalar(-koszul(space_->parity(i), space_->parity(j))) * v;
      }
      if (seen[i][j] && table_[i][j] != v)
        throw Error("conflicting duplicate bracket [" + space_->label(i) + ", " + space_->label(j) + "]");
      seen[i][j] = true;
      table_[i][j] = v;
    }
    fill_lower();
  }

  /// Builds from values for i <= j; the rest follows from graded antisymmetry.
  static LieSuperalgebra from_upper(SpacePtr space, const std::vector<std::vector<Vec>>& upper, std::string name = {})
  {
    LieSuperalgebra a(std::move(space), std::move(name));
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a.table_[i][j] = upper[i][j];
    a.fill_lower();
    return a;
  }

  const SpacePtr& space() const { return space_; }
  std::size_t dim() const { return space_->dim(); }
  const std::string& name() const { return name_; }
  LieSuperalgebra renamed(std::string name) const
  {
    LieSuperalgebra a = *this;
    a.name_ = std::move(name);
    return a;
  }

  /// [b_i, b_j]
  const Vec& structure(std::size_t i, std::size_t j) const { return table_[i][j]; }

  Vec bracket(const Vec& u, const Vec& v) const
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

  SuperVector bracket(const SuperVector& u, const SuperVector& v) const
  {
    require_same_space(space_, u.space(), "bracket");
    require_same_space(space_, v.space(), "bracket");
    return {space_, bracket(u.coeffs(), v.coeffs())};
  }

  /// ad_u, parity |u|.
  Endomorphism ad(const SuperVector& u) const
  {
    require_same_space(space_, u.space(), "ad");
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const Vec c = bracket(u.coeffs(), SuperVector::basis(space_, j).coeffs());
      for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
    }
    return {space_, m, u.parity().value_or(Parity::even)};
  }

  Endomorphism ad(std::size_t i) const { return ad(SuperVector::basis(space_, i)); }

  bool is_abelian() const
  {
    for (const auto& row : table_)
      for (const auto& c : row)
        if (!qqf::is_zero(c)) return false;
    return true;
  }

  friend bool operator==(const LieSuperalgebra& a, const LieSuperalgebra& b)
  {
    return same_space(a.space_, b.space_) && a.table_ == b.table_;
  }

 private:
  void fill_lower()
  {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        table_[i][j] = Scalar(-koszul(space_->parity(i), space_->parity(j))) * table_[j][i];
  }

  SpacePtr space_;
  std::string name_;
  std::vector<std::vector<Vec>> table_;
};

/// Checks parity of structure constants, antisymmetry on even diagonals, and super-Jacobi.
inline ValidationReport validate_lie(const LieSuperalgebra& alg)
{
  ValidationReport r;
  const SuperSpace& s = *alg.space();
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vec& c = alg.structure(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!qqf::is_zero(c[k]) && s.parity(k) != s.parity(i) + s.parity(j)) {
          r.fail("parity", "[" + s.label(i) + ", " + s.label(j) + "] has a component on " + s.label(k));
          break;
        }
      if (i == j && s.parity(i) == Parity::even && !qqf::is_zero(c))
        r.fail("antisymmetry", "[" + s.label(i) + ", " + s.label(i) + "] must vanish for an even vector");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec ei = SuperVector::basis(alg.space(), i).coeffs();
        const Vec ej = SuperVector::basis(alg.space(), j).coeffs();
        const Vec lhs = alg.bracket(ei, alg.structure(j, k));
        const Vec rhs = alg.bracket(alg.structure(i, j), SuperVector::basis(alg.space(), k).coeffs()) +
                        Scalar(koszul(s.parity(i), s.parity(j))) * alg.bracket(ej, alg.structure(i, k));
        if (lhs != rhs)
          r.fail("jacobi", "(" + s.label(i) + ", " + s.label(j) + ", " + s.label(k) + "): " +
                               detail::format_combination(s, lhs) + " != " + detail::format_combination(s, rhs));
      }
  return r;
}

/// Subspace kept as the rows of its reduced echelon form.
class Subspace {
 public:
  Subspace() = default;
  Subspace(SpacePtr space, const std::vector<Vec>& spanning) : space_(std::move(space))
  {
    const std::size_t n = space_->dim();
    if (spanning.empty()) {
      rows_ = Matrix(0, n);
      return;
    }
    RowEchelon e = rref(Matrix::from_rows(spanning, n));
    rows_ = std::move(e.reduced);
    pivots_ = std::move(e.pivots);
  }

  static Subspace whole(const SpacePtr& s)
  {
    std::vector<Vec> b;
    for (std::size_t i = 0; i < s->dim(); ++i) b.push_back(SuperVector::basis(s, i).coeffs());
    return {s, b};
  }
  static Subspace zero(const SpacePtr& s) { return {s, {}}; }

  const SpacePtr& space() const { return space_; }
  std::size_t dim() const { return rows_.rows(); }
  const Matrix& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec vector(std::size_t r) const { return rows_.row(r); }
  std::vector<SuperVector> basis() const
  {
    std::vector<SuperVector> out;
    for (std::size_t r = 0; r < dim(); ++r) out.emplace_back(space_, rows_.row(r));
    return out;
  }

  bool contains(const Vec& v) const
  {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < dim(); ++r) rows.push_back(rows_.row(r));
    rows.push_back(v);
    return rank(Matrix::from_rows(rows, space_->dim())) == dim();
  }

  bool is_subset_of(const Subspace& other) const
  {
    for (std::size_t r = 0; r < dim(); ++r)
      if (!other.contains(rows_.row(r))) return false;
    return true;
  }

  bool is_graded() const
  {
    for (std::size_t r = 0; r < dim(); ++r)
      if (!SuperVector(space_, rows_.row(r)).is_homogeneous()) return false;
    return true;
  }

  std::string str() const
  {
    if (dim() == 0) return "{0}";
    std::string out = "span{";
    for (std::size_t r = 0; r < dim(); ++r) {
      if (r) out += ", ";
      out += detail::format_combination(*space_, rows_.row(r));
    }
    return out + "}";
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.rows_ == b.rows_; }

 private:
  SpacePtr space_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

/// Z(g): common kernel of all ad_{b_k} acting on the left argument.
inline Subspace center(const LieSuperalgebra& alg)
{
  const std::size_t n = alg.dim();
  Matrix m(n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& c = alg.structure(i, k);
      for (std::size_t l = 0; l < n; ++l) m(k * n + l, i) = c[l];
    }
  return {alg.space(), kernel(m)};
}

/// [g,g]
inline Subspace derived(const LieSuperalgebra& alg)
{
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i; j < alg.dim(); ++j)
      if (!qqf::is_zero(alg.structure(i, j))) vs.push_back(alg.structure(i, j));
  return {alg.space(), vs};
}

/// {u : B(u, s) = 0 for all s in sub}
inline Subspace perp(const Subspace& sub, const BilinearForm& b)
{
  require_same_space(sub.space(), b.space(), "perp");
  if (!b.nondegenerate()) throw SingularFormError("perp: form is degenerate");
  const std::size_t n = b.dim();
  Matrix m(sub.dim(), n);
  for (std::size_t r = 0; r < sub.dim(); ++r) {
    const Vec s = sub.vector(r);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!qqf::is_zero(s[k])) m(r, j) += b.at(j, k) * s[k];
  }
  return {b.space(), kernel(m)};
}

struct DerivationCheck {
  bool ok = true;
  std::string witness;
  explicit operator bool() const { return ok; }
};

/// Graded Leibniz rule f[u,v] = [f u, v] + (-1)^{|f||u|} [u, f v] on basis pairs.
inline DerivationCheck is_derivation(const Endomorphism& f, const LieSuperalgebra& alg)
{
  require_same_space(f.space(), alg.space(), "is_derivation");
  const SuperSpace& s = *alg.space();
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vec ei = SuperVector::basis(alg.space(), i).coeffs();
      const Vec ej = SuperVector::basis(alg.space(), j).coeffs();
      const Vec lhs = f.apply(alg.structure(i, j));
      const Vec rhs = alg.bracket(f.apply(ei), ej) + Scalar(koszul(f.parity(), s.parity(i))) * alg.bracket(ei, f.apply(ej));
      if (lhs != rhs)
        return {false, "(" + s.label(i) + ", " + s.label(j) + "): f[u,v] = " + detail::format_combination(s, lhs) +
                           " but Leibniz gives " + detail::format_combination(s, rhs)};
    }
  return {};
}

}  // namespace qqf

#endif  // QQF_LIESUPER_HPP
