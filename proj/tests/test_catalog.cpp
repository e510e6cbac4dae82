#include "fixtures.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <filesystem>

using namespace qqf;
using fx::E;
using fx::O;

TEST_CASE("every catalog entry certifies with its stored digest", "[catalog][certify]")
{
  for (const auto& name : catalog_names()) {
    INFO(name);
    const CatalogEntry e = catalog_get(name);
    const Certification c = certify(e);
    CHECK(c.report.ok());
    CHECK(c.digest == e.certificate);
  }
  CHECK(certify_all().ok());
}

TEST_CASE("embedded catalog documents equal the files under data/catalog", "[catalog][embed]")
{
  std::vector<std::string> files;
  for (const auto& f : std::filesystem::directory_iterator(fx::data_path("catalog"))) files.push_back(f.path().stem().string());
  std::sort(files.begin(), files.end());
  std::vector<std::string> names = catalog_names();
  std::sort(names.begin(), names.end());
  CHECK(files == names);
  for (const auto& name : names) {
    INFO(name);
    CHECK(catalog_get(name).document == fx::read_file(fx::data_path("catalog/" + name + ".json")));
  }
}

TEST_CASE("unknown entries are reported", "[catalog][errors]")
{
  CHECK_THROWS_AS(catalog_get("g5"), UnknownEntry);
}

TEST_CASE("a perturbed entry fails certification", "[catalog][certify]")
{
  CatalogEntry e = catalog_get("g2");
  const std::string from = R"(["x1", "x2", "2"])";
  const auto at = e.document.find(from);
  REQUIRE(at != std::string::npos);
  e.document.replace(at, from.size(), R"(["x1", "x2", "3"])");
  CHECK_FALSE(certify(e).report.ok());

  CatalogEntry wrong_digest = catalog_get("g3");
  wrong_digest.certificate = "0000000000000000";
  CHECK(certify(wrong_digest).report.failed("certificate"));

  CatalogEntry wrong_verdict = catalog_get("g4");
  wrong_verdict.odd_rho = Verdict::yes;
  CHECK(certify(wrong_verdict).report.failed("quadratic-existence"));
}

TEST_CASE("catalog quadratic verdicts", "[catalog][quadratic]")
{
  for (const char* name : {"g3", "K+h3"}) {
    INFO(name);
    const QuasiFrobeniusStructure qf = fx::catalog_qf(name);
    for (Parity p : {E, O}) {
      const QuadraticExistence qe = quadratic_existence(qf, p);
      CHECK(qe.verdict == Verdict::no);
      CHECK(qe.witness.find("perp") != std::string::npos);
    }
    CHECK_FALSE(perp(derived(qf.alg()), qf.omega()) == center(qf.alg()));
  }
  CHECK(quadratic_existence(fx::catalog_qf("g2"), E).verdict == Verdict::yes);
  CHECK(quadratic_existence(fx::catalog_qf("g4"), E).verdict == Verdict::yes);
  CHECK(quadratic_existence(fx::catalog_qf("planar8"), O).verdict == Verdict::yes);
}

TEST_CASE("every quadratic entry passes the flat QQF suite and has even dimension", "[catalog][property]")
{
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog_get(name);
    if (!e.quadratic) continue;
    INFO(name);
    const QQFStructure q = fx::catalog_qqf(name);
    CHECK(flat_qqf_suite(q).ok());
    CHECK(q.dim() % 2 == 0);
    if (q.rho().parity() == O) CHECK(q.dim() % 4 == 0);
  }
}

TEST_CASE("tensor with the dual numbers is an 8-dim flat QQF structure", "[catalog][tensor]")
{
  const QQFStructure h = fx::catalog_qqf("g2");
  const FrobeniusAlgebra a = FrobeniusAlgebra::dual_numbers();
  const QQFStructure g = tensor_qqf(h, a);
  CHECK(g.dim() == 8);
  CHECK(flat_qqf_suite(g).ok());
  CHECK(fx::left_symmetric(g.qf()));

  // [u⊗a, v⊗b] = (-1)^{|a||v|}[u,v]⊗(a·b) and ω likewise, on labels "u.a"
  const SuperSpace& hs = *h.space();
  const SuperSpace& as = *a.space();
  auto t = [&](std::size_t i, std::size_t k) { return SuperVector::basis(g.space(), hs.label(i) + "." + as.label(k)); };
  for (std::size_t i = 0; i < hs.dim(); ++i)
    for (std::size_t k = 0; k < as.dim(); ++k)
      for (std::size_t j = 0; j < hs.dim(); ++j)
        for (std::size_t m = 0; m < as.dim(); ++m) {
          const Scalar sg(koszul(as.parity(k), hs.parity(j)));
          SuperVector expect = SuperVector::zero(g.space());
          const Vec& uv = h.alg().structure(i, j);
          const Vec& ab = a.product(k, m);
          for (std::size_t p = 0; p < hs.dim(); ++p)
            for (std::size_t q = 0; q < as.dim(); ++q)
              if (uv[p] != 0 && ab[q] != 0) expect = expect + (sg * uv[p] * ab[q]) * t(p, q);
          CHECK(g.alg().bracket(t(i, k), t(j, m)) == expect);
          CHECK(g.omega()(t(i, k), t(j, m)) == sg * h.omega().at(i, j) * a.form().at(k, m));
        }
}

TEST_CASE("tensor with the field is isomorphic to the input via the identity", "[catalog][tensor]")
{
  for (const char* name : {"g2", "g4", "dex6-mixed", "planar8"}) {
    INFO(name);
    const QQFStructure h = fx::catalog_qqf(name);
    const QQFStructure g = tensor_qqf(h, FrobeniusAlgebra::field());
    const Matrix id = Matrix::identity(h.dim());
    CHECK(fx::is_isomorphism(h, g, id));
    CHECK(verify_isomorphism(h, g, Isomorphism{h.space(), g.space(), id}).ok());
  }
}

TEST_CASE("tensor refuses a degenerate Frobenius form", "[catalog][tensor]")
{
  const FrobeniusAlgebra grassmann = FrobeniusAlgebra::grassmann();
  CHECK(grassmann.validate().failed("form"));
  CHECK_THROWS_AS(tensor_qqf(fx::catalog_qqf("g2"), grassmann), HypothesisError);
  CHECK(FrobeniusAlgebra::dual_numbers().validate().ok());
  CHECK(FrobeniusAlgebra::field().validate().ok());
}
