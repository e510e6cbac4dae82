#include "fixtures.hpp"

#include "qqf/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sys/wait.h>

using namespace qqf;
using fx::E;
using fx::O;

namespace {

/// Collects every failing clause of one criterion.
class Probe {
public:
  void require(bool ok, const std::string& what)
  {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string detail() const
  {
    std::string out;
    for (std::size_t i = 0; i < failures_.size() && i < 3; ++i) out += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 3) out += "; and " + std::to_string(failures_.size() - 3) + " more";
    return out;
  }

private:
  std::vector<std::string> failures_;
};

std::string str(const Scalar& x) { return to_string(x); }

SuperVector b(const SpacePtr& s, const std::string& label) { return SuperVector::basis(s, label); }

/// The printed certification suite for a 4-dim example with its ω, 𝓑 and δ.
void certify_printed(Probe& p, const LieSuperalgebra& g, const BilinearForm& w, const BilinearForm& bf, const Endomorphism& d)
{
  const SpacePtr& s = g.space();
  p.require(validate_lie(g).ok(), "validate_lie: " + validate_lie(g).str());
  p.require(check_closed(g, w).ok(), "check_closed: " + check_closed(g, w).str());
  p.require(check_invariant(g, bf).ok(), "B-invariance: " + check_invariant(g, bf).str());
  const DerivationCheck dc = is_derivation(d, g);
  p.require(dc.ok, "is_derivation(delta): " + dc.witness);
  for (std::size_t i = 0; i < s->dim(); ++i)
    for (std::size_t j = 0; j < s->dim(); ++j)
      p.require(w(fx::e(s, i), fx::e(s, j)) == bf(d.apply(fx::e(s, i)), fx::e(s, j)),
                "omega(u,v) = B(delta u,v) fails on (" + s->label(i) + ", " + s->label(j) + ")");
  const QuasiFrobeniusStructure qf(g, w);
  p.require(qf.flatness().flat, "check_flat: " + qf.flatness().witness);
  p.require(fx::curvature_vanishes(qf.star(), g), "curvature oracle is nonzero");
  const auto inv = d.inverse();
  p.require(inv.has_value(), "delta is singular");
  if (inv) {
    const QQFStructure q(qf, *inv);
    p.require(flat_qqf_suite(q).ok(), "flat QQF suite: " + flat_qqf_suite(q).str());
    p.require(q.b_form() == bf, "B recovered from rho differs from the printed B");
  }
}

Probe criterion1()
{
  Probe p;
  const SpacePtr s = fx::space22();
  certify_printed(p, fx::g2_alg(), fx::g2_omega(s), fx::g2_b(s), fx::g2_delta(s));
  p.require(fx::g2_b(s).parity() == E, "g2 B is not even");
  return p;
}

Probe criterion2()
{
  Probe p;
  const SpacePtr s = fx::space22();
  certify_printed(p, fx::g4_alg(), fx::g4_omega(s), fx::g4_b(s), fx::g4_delta(s));
  p.require(fx::g4_b(s).parity() == O, "g4 B is not odd");
  p.require(fx::g4_delta(s).parity() == E, "g4 delta is not even");
  return p;
}

Probe criterion3()
{
  Probe p;
  for (const QuasiFrobeniusStructure& q : {fx::g3(), fx::k_h3()}) {
    const std::string n = q.alg().name();
    const Subspace pd = perp(derived(q.alg()), q.omega());
    p.require(!(pd == center(q.alg())), n + ": perp(derived) equals the center");
    for (Parity par : {E, O}) {
      const QuadraticExistence qe = quadratic_existence(q, par);
      p.require(qe.verdict == Verdict::no, n + ": verdict is " + to_string(qe.verdict));
      p.require(qe.witness.find("perp(derived) = " + pd.str()) == 0, n + ": witness '" + qe.witness + "'");
    }
  }
  for (const char* name : {"g2", "g4"})
    p.require(quadratic_existence(fx::catalog_qf(name), E).verdict == Verdict::yes, std::string(name) + " has no even rho");
  return p;
}

Probe criterion4()
{
  Probe p;
  const std::vector<Scalar> samples = {-2, -1, Scalar(1, 2), 1, 2, 0};

  const QuasiFrobeniusStructure g2 = fx::catalog_qf("g2");
  const SpacePtr& s = g2.space();
  const QuadraticExistence q2 = quadratic_existence(g2, E);
  p.require(q2.basis.size() == 1, "g2 even-rho space has dimension " + std::to_string(q2.basis.size()) + ", expected 1");
  for (const Scalar& l : samples) {
    const Endomorphism rho = Endomorphism::diagonal(s, {-l, l, 2 * l, -2 * l});
    p.require(fx::rho_is_invariant(g2, rho) && fx::in_span(q2.basis, rho.matrix()), "g2 diag(-l,l|2l,-2l) not a solution at l = " + str(l));
    p.require(rho.inverse().has_value() == (l != 0), "g2 invertibility at l = " + str(l));
  }

  const QuasiFrobeniusStructure g4 = fx::catalog_qf("g4");
  const QuadraticExistence q4 = quadratic_existence(g4, E);
  p.require(q4.basis.size() == 3, "g4 even-rho space has dimension " + std::to_string(q4.basis.size()) + ", expected 3");
  std::size_t not_invariant = 0;
  std::string first;
  for (const Scalar& l : samples)
    for (const Scalar& beta : samples)
      for (const Scalar& mu : samples) {
        const Endomorphism rho = fx::g4_printed_rho(g4.space(), l, beta, mu);
        p.require(rho.inverse().has_value() == (2 * l * l + beta * mu != 0),
                  "g4 invertibility disagrees with 2l^2+beta mu != 0 at (" + str(l) + ", " + str(beta) + ", " + str(mu) + ")");
        if (!fx::rho_is_invariant(g4, rho) || !fx::in_span(q4.basis, rho.matrix())) {
          if (not_invariant++ == 0) first = "(" + str(l) + ", " + str(beta) + ", " + str(mu) + ")";
        }
      }
  p.require(not_invariant == 0,
            "printed g4 family is not invariant at " + std::to_string(not_invariant) + " of 216 samples, first " + first);
  return p;
}

Probe criterion5()
{
  Probe p;
  for (const auto& name : catalog_names()) {
    const CatalogEntry entry = catalog_get(name);
    const QuasiFrobeniusStructure q = fx::catalog_qf(name);
    p.require(fx::satisfies_defining_identities(q.star(), q.alg(), q.omega()), name + ": defining identities fail");
    p.require(check_product(q.alg(), q.omega(), q.star()).ok(), name + ": check_product fails");
    if (entry.quadratic) {
      const QQFStructure qq = fx::catalog_qqf(name);
      p.require(npl_product(qq.alg(), qq.delta()) == q.star(), name + ": npl product differs from star");
    }
  }
  return p;
}

Probe criterion6()
{
  Probe p;
  const QuasiFrobeniusStructure a = qf_from(parse_document(fx::read_file(fx::data_path("aff1.json"))));
  const SpacePtr& s = a.space();
  const FlatnessResult f = a.flatness();
  p.require(!f.flat, "aff1 reported flat");
  p.require(f.witness == "K(x1, x2)(x1) = -2/9 x2", "witness '" + f.witness + "'");
  // Oracle: K(x1,x2) = L_[x1,x2] - [L_x1, L_x2] from the raw table.
  const Matrix l1 = fx::left_matrix(a.star(), fx::e(s, 0)), l2 = fx::left_matrix(a.star(), fx::e(s, 1));
  const Matrix k = fx::left_matrix(a.star(), a.alg().structure(0, 1)) - (l1 * l2 - l2 * l1);
  const Vec expect = (Scalar(-2, 9) * b(s, "x2")).coeffs();
  p.require(k.apply(fx::e(s, 0)) == expect, "oracle K(x1,x2)(x1) differs from -2/9 x2");
  p.require(curvature(a.star(), a.alg(), b(s, "x1"), b(s, "x2"))(b(s, "x1")).coeffs() == expect, "library curvature differs");
  return p;
}

Probe criterion7()
{
  Probe p;
  const QQFStructure base = fx::odd_plane();
  ExtensionData d = ExtensionData::zero(base.space(), ExtensionKind::even_ortho);
  d.xi = Endomorphism::unit(base.space(), "y2", "y1", Scalar(1, 2));
  d.lambda = Scalar(1, 2);
  p.require(validate_de(ExtensionKind::even_ortho, base.qf(), d).ok(), "validate_de fails");
  p.require(validate_dex(ExtensionKind::even_ortho, base, d).ok(), "validate_dex fails");
  const QQFStructure g = qqf_double_extend(ExtensionKind::even_ortho, base, d, {"x1", "x2"});
  p.require(g.dim() == 4, "dimension " + std::to_string(g.dim()));
  p.require(flat_qqf_suite(g).ok(), "flat QQF suite: " + flat_qqf_suite(g).str());
  p.require(fx::left_symmetric(g.qf()), "associator oracle: not left-symmetric");
  const Isomorphism phi = parse_witness(fx::read_file(fx::data_path("g2-witness.json")));
  const QQFStructure target = fx::catalog_qqf("g2");
  p.require(fx::is_isomorphism(g, target, phi.matrix), "witness fails the isomorphism oracle");
  p.require(verify_isomorphism(g, target, phi).ok(), "verify_isomorphism fails");
  return p;
}

Probe criterion8()
{
  Probe p;
  for (const auto& name : catalog_names()) {
    if (!catalog_get(name).quadratic) continue;
    const QQFStructure g = fx::catalog_qqf(name);
    if (g.rho().parity() != E || center(g.alg()).dim() == 0) continue;
    const ReductionResult r = central_reduce(g);
    const QQFStructure rebuilt = qqf_double_extend(r.kind, r.base, r.data, r.labels, Gate::verified);
    p.require(fx::is_isomorphism(rebuilt, g, r.witness.matrix), name + ": central round trip is not the identity");
    const PeelResult peeled = peel(g);
    p.require(peeled.complete && peeled.steps.size() == g.dim() / 2,
              name + ": peeling took " + std::to_string(peeled.steps.size()) + " steps (" + peeled.stopped + ")");
  }
  const QQFStructure g = fx::catalog_qqf("planar8");
  const PlanarReductionResult r = planar_reduce(g);
  const QQFStructure rebuilt = planar_qqf_extend(r.flavor, r.base, r.data, r.labels, Gate::verified);
  p.require(fx::is_isomorphism(rebuilt, g, r.witness.matrix), "planar8: planar round trip is not the identity");
  const PeelResult peeled = peel(g);
  p.require(peeled.complete && peeled.steps.size() == g.dim() / 4,
            "planar8: peeling stopped after " + std::to_string(peeled.steps.size()) + " of " + std::to_string(g.dim() / 4) +
                " steps (" + peeled.stopped + ")");
  return p;
}

Probe criterion9()
{
  Probe p;
  std::vector<std::pair<std::string, QQFStructure>> built;
  for (const auto& name : catalog_names()) {
    if (!catalog_get(name).quadratic) continue;
    const QQFStructure g = fx::catalog_qqf(name);
    built.emplace_back(name, g);
    if (g.rho().parity() == E) {
      const ReductionResult r = central_reduce(g);
      built.emplace_back(name + " base", r.base);
      built.emplace_back(name + " rebuilt", qqf_double_extend(r.kind, r.base, r.data, r.labels, Gate::verified));
    } else {
      const PlanarReductionResult r = planar_reduce(g);
      built.emplace_back(name + " base", r.base);
      built.emplace_back(name + " rebuilt", planar_qqf_extend(r.flavor, r.base, r.data, r.labels, Gate::verified));
    }
  }
  built.emplace_back("g2 (x) K[eps]", tensor_qqf(fx::catalog_qqf("g2"), FrobeniusAlgebra::dual_numbers()));
  built.emplace_back("planar8 (x) K[eps]", tensor_qqf(fx::catalog_qqf("planar8"), FrobeniusAlgebra::dual_numbers()));

  // Planar QQF extensions of {0}: whatever builds is abelian.
  const SpacePtr z = make_space({});
  std::size_t zero_builds = 0;
  for (PlanarFlavor f : {PlanarFlavor::orthosymplectic, PlanarFlavor::periplectic}) {
    const QuasiFrobeniusStructure base(LieSuperalgebra(z, "zero"), BilinearForm::zero(z, f == PlanarFlavor::periplectic ? O : E, Symmetry::antisymmetric));
    const QQFStructure qbase(base, Endomorphism::zero(z, O));
    for (const Scalar& lambda : {Scalar(1), Scalar(-2), Scalar(1, 2)})
      for (const Scalar& t : {Scalar(0), Scalar(1)}) {
        PlanarExtensionData d = PlanarExtensionData::zero(z);
        d.lambda = lambda;
        d.T = t;
        try {
          const QQFStructure g = planar_qqf_extend(f, qbase, d, {}, Gate::verified);
          ++zero_builds;
          p.require(derived(g.alg()).dim() == 0, "planar extension of {0} is not abelian");
          built.emplace_back("planar of {0}", g);
        } catch (const HypothesisError&) {
        }
      }
  }
  p.require(zero_builds > 0, "no planar QQF extension of {0} was built");

  for (const auto& [name, g] : built) {
    p.require(g.dim() % 2 == 0, name + ": odd dimension " + std::to_string(g.dim()));
    if (g.rho().parity() == O) p.require(g.dim() % 4 == 0, name + ": odd rho with dimension " + std::to_string(g.dim()));
    p.require(dimension_checks(g).ok(), name + ": dimension_checks fails");
  }
  return p;
}

Probe criterion10()
{
  Probe p;
  const QQFStructure t = tensor_qqf(fx::catalog_qqf("g2"), FrobeniusAlgebra::dual_numbers());
  p.require(t.dim() == 8, "g2 (x) K[eps] has dimension " + std::to_string(t.dim()));
  p.require(flat_qqf_suite(t).ok(), "g2 (x) K[eps]: " + flat_qqf_suite(t).str());
  p.require(fx::left_symmetric(t.qf()), "g2 (x) K[eps]: associator oracle fails");
  for (const auto& name : catalog_names()) {
    if (!catalog_get(name).quadratic) continue;
    const QQFStructure h = fx::catalog_qqf(name);
    const QQFStructure k = tensor_qqf(h, FrobeniusAlgebra::field());
    p.require(fx::is_isomorphism(h, k, Matrix::identity(h.dim())), name + " (x) K: identity is not an isomorphism");
  }
  return p;
}

Probe criterion11()
{
  Probe p;
  const QQFStructure printed_base = qqf_from(parse_document(fx::read_file(fx::data_path("planar8-base.json"))));
  const ExtensionDocument ext =
      parse_extension(fx::read_file(fx::data_path("planar8-printed-data.json")), printed_base.space());
  const auto& printed = std::get<ExtensionDocument::Planar>(ext.value);
  const std::vector<Scalar> values = {1, -1, 2, -2, Scalar(1, 2)};
  std::size_t rejected = 0;
  std::string first;
  for (const Scalar& a : values)
    for (const Scalar& lambda : values) {
      const std::string at = "(a, lambda) = (" + str(a) + ", " + str(lambda) + ")";
      const QQFStructure base(printed_base.qf(), lambda * printed_base.rho());
      PlanarExtensionData d = printed.data;
      d.xi0 = a * d.xi0;
      d.xi1 = a * d.xi1;
      d.lambda = lambda;
      p.require(validate_planar(printed.flavor, base.qf(), d).ok(), "validate_planar fails at " + at);
      p.require(validate_planar_rho(printed.flavor, base, d).ok(), "validate_planar_rho fails at " + at);
      const QuasiFrobeniusStructure q = planar_extend(printed.flavor, base.qf(), d, printed.labels);
      const SpacePtr& s = q.space();
      auto br = [&](const char* u, const char* v) { return q.alg().bracket(b(s, u), b(s, v)); };
      auto v = [&](const char* l, const Scalar& c) { return c * b(s, l); };
      const bool match = br("d0", "f1") == v("f2", -3 * a) && br("d1", "f1") == v("f3", 3 * a) &&
                         br("d1", "f4") == v("f2", Scalar(3, 2) * a) && br("f1", "f4") == v("e1", 3 * a) &&
                         br("f4", "f4") == v("e0", -3 * a);
      p.require(match, "brackets differ from the printed display at " + at);
      try {
        const QQFStructure g = planar_qqf_extend(printed.flavor, base, d, printed.labels);
        p.require(flat_qqf_suite(g).ok(), "flat QQF suite fails at " + at);
      } catch (const HypothesisError& e) {
        if (rejected++ == 0) {
          const std::string what = e.what();
          first = at + ": " + what.substr(0, what.find('\n'));
          const auto inv = what.find("invariant");
          if (inv != std::string::npos) first += " [" + what.substr(inv, what.find('\n', inv) - inv) + "]";
        }
      }
    }
  p.require(rejected == 0, "planar_qqf_extend rejects " + std::to_string(rejected) + " of 25 samples, first " + first);
  return p;
}

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args)
{
  const std::string cmd = std::string(QQF_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

Probe criterion12()
{
  Probe p;
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "qqf-acceptance";
  std::filesystem::create_directories(dir);
  auto data = [](const std::string& rel) { return fx::data_path(rel); };
  auto entry = [&](const std::string& name) { return data("catalog/" + name + ".json"); };

  // Each command runs twice; stdout, exit code and every written file must agree byte for byte.
  auto twice = [&](const std::string& args, const std::vector<std::filesystem::path>& files = {}) {
    std::vector<std::string> first;
    const Run a = run(args);
    for (const auto& f : files) first.push_back(fx::read_file(f.string()));
    const Run c = run(args);
    p.require(a.code == c.code && a.out == c.out, "output differs between runs: " + args);
    for (std::size_t i = 0; i < files.size(); ++i)
      p.require(fx::read_file(files[i].string()) == first[i], "file differs between runs: " + files[i].string());
    return a;
  };
  auto expect = [&](bool ok, const std::string& what) { p.require(ok, what); };

  // 1, 2
  for (const char* name : {"g2", "g4"}) {
    const Run r = twice("validate " + entry(name));
    expect(r.code == 0 && contains(r.out, "result: clean"), std::string("validate ") + name);
  }
  // 3, 4, 5, 6, 9
  for (const auto& name : catalog_names()) {
    const Run r = twice("analyze " + entry(name));
    const QuasiFrobeniusStructure qf = fx::catalog_qf(name);
    expect(r.code == 0, "analyze " + name + " exit " + std::to_string(r.code));
    for (Parity par : {E, O}) {
      const QuadraticExistence qe = quadratic_existence(qf, par);
      std::string line = "quadratic structure (" + std::string(par == E ? "even" : "odd") + " rho): " + to_string(qe.verdict) +
                         " (" + qe.witness + ")";
      if (qe.sample) line += "; invertible sample: " + qe.sample->str();
      expect(contains(r.out, line + "\n"), "analyze " + name + " quadratic line differs from the library");
    }
    expect(contains(r.out, "star postconditions: ok"), "analyze " + name + " star postconditions");
    expect(contains(r.out, qf.flatness().flat ? "flat: yes" : "flat: no"), "analyze " + name + " flatness");
    if (catalog_get(name).quadratic) {
      expect(contains(r.out, "npl product equals star: yes"), "analyze " + name + " npl product");
      expect(contains(r.out, "flat qqf suite: ok"), "analyze " + name + " flat qqf suite");
      expect(contains(r.out, "dimension even: yes"), "analyze " + name + " dimension");
    }
  }
  const Run aff = twice("analyze " + data("aff1.json"));
  expect(contains(aff.out, "flat: no (K(x1, x2)(x1) = -2/9 x2)"), "analyze aff1 curvature witness");
  // 7
  const Run g2 = twice("extend " + data("odd-abelian-2.json") + " --data " + data("xi-half.json") + " --witness " +
                       data("g2-witness.json") + " --name g2");
  expect(g2.code == 0 && g2.out == catalog_get("g2").document, "extend of the odd plane is not the g2 document");
  // 8
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog_get(name);
    if (!e.quadratic) continue;
    const auto base = dir / (name + "-base.json");
    const auto dat = dir / (name + "-base-data.json");
    const auto wit = dir / (name + "-base-witness.json");
    const Run r = twice("reduce " + entry(name) + " --out " + base.string(), {base, dat, wit});
    expect(r.code == 0, "reduce " + name + " exit " + std::to_string(r.code));
    const Run back = twice("extend " + base.string() + " --data " + dat.string() + " --witness " + wit.string() + " --name " +
                           name + " --gate verified");
    expect(back.code == 0 && back.out == e.document, "reduce then extend does not reproduce " + name);
    const PeelResult lib = peel(fx::catalog_qqf(name));
    const Run pr = twice("reduce --peel " + entry(name));
    expect(pr.code == (lib.complete ? 0 : 1) && contains(pr.out, "steps: " + std::to_string(lib.steps.size())),
           "peel " + name + " disagrees with the library");
  }
  // 10
  const auto tensor = dir / "g2-eps.json";
  const Run t = twice("tensor " + entry("g2") + " " + data("dual-numbers.json") + " --out " + tensor.string(), {tensor});
  expect(t.code == 0, "tensor g2 K[eps] exit " + std::to_string(t.code));
  const Run tv = twice("analyze " + tensor.string());
  expect(contains(tv.out, "flat qqf suite: ok") && contains(tv.out, "dim: 4|4"), "tensor g2 K[eps] analysis");
  const auto field = dir / "g2-field.json";
  twice("tensor " + entry("g2") + " " + data("field.json") + " --out " + field.string(), {field});
  const Run cmp = twice("compare " + field.string() + " " + entry("g2") + " --witness " + data("g2-field-witness.json"));
  expect(cmp.code == 0 && contains(cmp.out, "isomorphic: yes"), "compare g2 (x) K with g2");
  // 11: the library refuses the printed data, and so must the CLI
  bool lib_builds = true;
  try {
    const QQFStructure base = qqf_from(parse_document(fx::read_file(data("planar8-base.json"))));
    const ExtensionDocument ext = parse_extension(fx::read_file(data("planar8-printed-data.json")), base.space());
    const auto& pd = std::get<ExtensionDocument::Planar>(ext.value);
    (void)planar_qqf_extend(pd.flavor, base, pd.data, pd.labels);
  } catch (const HypothesisError&) {
    lib_builds = false;
  }
  const Run p8 = twice("extend " + data("planar8-base.json") + " --data " + data("planar8-printed-data.json"));
  expect(p8.code == (lib_builds ? 0 : 1), "extend of the printed 8-dim data disagrees with the library");
  // catalog
  const Run cert = twice("catalog certify");
  expect(cert.code == 0, "catalog certify exit " + std::to_string(cert.code));
  return p;
}

std::set<int> parse_list(const std::string& text)
{
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Acceptance criteria 1-12"};
  std::string expect_fail;
  app.add_option("--expect-fail", expect_fail, "comma-separated criteria that are known to fail");
  CLI11_PARSE(app, argc, argv);
  std::set<int> expected;
  try {
    expected = parse_list(expect_fail);
  } catch (const std::exception&) {
    std::cerr << "error: --expect-fail takes a comma-separated list of integers\n";
    return 2;
  }

  const std::vector<std::pair<std::string, std::function<Probe()>>> criteria = {
      {"g2 certification with its printed omega, B and delta", criterion1},
      {"g4 certification with its printed odd B and even delta", criterion2},
      {"g3 and K+h3 negative certificates", criterion3},
      {"rho families on g2 and g4", criterion4},
      {"natural product identities and npl product", criterion5},
      {"aff1 curvature witness", criterion6},
      {"odd plane extends to g2", criterion7},
      {"reduction round trips and peeling", criterion8},
      {"dimension theorems", criterion9},
      {"tensor construction", criterion10},
      {"printed 8-dim planar data", criterion11},
      {"CLI contract", criterion12},
  };

  const auto start = std::chrono::steady_clock::now();
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i + 1);
    Probe p;
    try {
      p = criteria[i].second();
    } catch (const std::exception& e) {
      p.require(false, std::string("exception: ") + e.what());
    }
    if (!p.ok()) failed.insert(n);
    std::string line = (p.ok() ? "PASS " : "FAIL ") + std::to_string(n) + " " + criteria[i].first;
    if (!p.ok()) {
      std::string d = p.detail();
      std::replace(d.begin(), d.end(), '\n', ' ');
      line += ": " + d;
    }
    std::cout << line << std::endl;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "time: " << std::fixed << std::setprecision(2) << seconds << " s\n";
  if (failed == expected) {
    std::cout << "result: " << (failed.empty() ? "all criteria pass" : "failures match --expect-fail") << "\n";
    return 0;
  }
  std::cout << "result: failing criteria differ from --expect-fail\n";
  return 1;
}
