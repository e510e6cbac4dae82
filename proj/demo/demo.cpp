#include "qqf/catalog.hpp"

#include <iostream>

using namespace qqf;

/// Builds g2 as a double extension of the odd abelian plane, reduces it back and tensors it with the dual numbers.
int main()
{
  const SpacePtr s = make_space({{"y1", Parity::odd}, {"y2", Parity::odd}});
  Matrix w(2, 2);
  w(0, 1) = 1;
  w(1, 0) = 1;
  const QQFStructure base(QuasiFrobeniusStructure(LieSuperalgebra(s, "plane"), BilinearForm(s, w, Parity::even, Symmetry::antisymmetric)),
                          Endomorphism::diagonal(s, {1, -1}));

  ExtensionData data = ExtensionData::zero(s, ExtensionKind::even_ortho);
  data.xi = Endomorphism::unit(s, "y2", "y1", Scalar(1, 2));
  data.lambda = Scalar(1, 2);
  const QQFStructure g = qqf_double_extend(ExtensionKind::even_ortho, base, data, {"x1", "x2"});
  std::cout << serialize(to_document(g, "g2-demo"));

  const FlatnessResult f = g.qf().flatness();
  std::cout << "flat: " << (f.flat ? "yes" : "no") << "\n";
  std::cout << "suite: " << (flat_qqf_suite(g).ok() ? "ok" : "FAIL") << "\n";

  const ReductionResult r = central_reduce(g);
  std::cout << "reduced to dim " << r.base.dim() << " via " << to_string(r.kind) << "\n";

  const QQFStructure t = tensor_qqf(g, FrobeniusAlgebra::dual_numbers());
  std::cout << "tensor with K[eps]: dim " << t.dim() << ", suite " << (flat_qqf_suite(t).ok() ? "ok" : "FAIL") << "\n";
}
