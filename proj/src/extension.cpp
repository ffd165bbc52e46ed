#include "leibal/extension.hpp"

namespace leibal {

Extension make_extension(const LeibnizAlgebra& total,
                         const LeibnizAlgebra& quotient,
                         const LinMap& projection) {
  if (projection.cols() != total.dim() || projection.rows() != quotient.dim() ||
      projection.field() != total.field() || total.field() != quotient.field())
    throw dim_mismatch("projection shape does not match the extension");
  for (uint32_t i = 0; i < total.dim(); ++i)
    for (uint32_t j = 0; j < total.dim(); ++j) {
      SVec lhs = projection.apply(total.basis_bracket(i, j));
      SVec rhs = quotient.bracket(projection.apply(SVec::unit(i)),
                                  projection.apply(SVec::unit(j)));
      if (!(lhs == rhs))
        throw bad_homomorphism("projection violates the homomorphism law on (" +
                               total.labels()[i] + ", " + total.labels()[j] + ")");
    }
  if (projection.image().dim() != quotient.dim())
    throw bad_homomorphism("projection is not surjective");
  Subspace ker = projection.kernel();
  if (auto w = two_sided_failure(total, ker))
    throw not_an_ideal("kernel of the projection is not a two-sided ideal");
  return {total, quotient, projection, {std::move(ker), true}};
}

Extension quotient_extension(const LeibnizAlgebra& g, const IdealWitness& n) {
  Quotient q = quotient_algebra(g, n);
  return {g, q.alg, q.proj, {n.space, true}};
}

std::optional<std::pair<SVec, SVec>> lie_central_failure(const Extension& ext) {
  const Field& f = ext.total.field();
  for (const SVec& u : ext.kernel.space.rows())
    for (uint32_t j = 0; j < ext.total.dim(); ++j) {
      SVec ej = SVec::unit(j);
      SVec sym = sv_add(f, ext.total.bracket(u, ej), ext.total.bracket(ej, u));
      if (!sym.is_zero())
        return std::make_pair(u, ej);
    }
  return std::nullopt;
}

} // namespace leibal
