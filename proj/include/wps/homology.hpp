#pragma once

#include "wps/abelian.hpp"
#include "wps/int_matrix.hpp"
#include "wps/int_types.hpp"
#include "wps/linear_solve.hpp"
#include "wps/smith.hpp"

#include <cstddef>
#include <utility>

namespace wps {

// Subgroup-with-relations presentation of a subquotient of an ambient free
// module. Columns of `generators` are vectors in Z^ambient_rank; columns of
// `relations` are the relation vectors among those generators, so the
// presented group is Z^k / column-span(relations) with k = generators.cols().
struct PresentedGroup {
  std::size_t ambient_rank = 0;
  IntMat generators;
  IntMat relations;

  FgAbelianGroup normal_form() const { return cokernel(relations); }
};

struct HomologyResult {
  FgAbelianGroup group;
  PresentedGroup witness;
};

// ker(g) / im(f) for Z^a --f--> Z^b --g--> Z^c with g*f = 0. The witness
// carries a kernel basis as generators, so classes have explicit
// representatives in the middle module.
inline HomologyResult homology(const IntMat& f, const IntMat& g) {
  require(f.rows() == g.cols(), "homology: middle module mismatch");
  require((g * f).is_zero(), "homology: g*f != 0");
  IntMat k = kernel_basis(g);
  auto z = solve_matrix(k, f);
  check_internal(z.has_value(), "homology: image of f not contained in ker(g)");
  HomologyResult out;
  out.witness.ambient_rank = f.rows();
  out.witness.generators = std::move(k);
  out.witness.relations = std::move(*z);
  out.group = out.witness.normal_form();
  return out;
}

// span(gens) / span(bnds) inside Z^ambient, with bnds contained in span(gens).
// Generators need not be independent; the relation matrix accounts for both
// the boundary coordinates and the kernel of the generator matrix.
class Subquotient {
 public:
  Subquotient(IntMat gens, IntMat bnds)
      : gens_(std::move(gens)), bnds_(std::move(bnds)), gens_snf_(smith_normal_form(gens_)) {
    check_internal(gens_.rows() == bnds_.rows(), "Subquotient: ambient mismatch");
    IntMat coords(gens_.cols(), bnds_.cols());
    for (std::size_t j = 0; j < bnds_.cols(); ++j) {
      auto c = detail::solve_with(gens_snf_, gens_.cols(), bnds_.col(j));
      check_internal(c.has_value(), "Subquotient: boundary not inside generator span");
      coords.set_col(j, *c);
    }
    relations_ = hstack(coords, col_range(gens_snf_.r, gens_snf_.rank(), gens_.cols()));
    group_ = cokernel(relations_);
  }

  std::size_t ambient_rank() const { return gens_.rows(); }
  std::size_t num_gens() const { return gens_.cols(); }
  const IntMat& gens() const { return gens_; }
  const IntMat& bnds() const { return bnds_; }
  const IntMat& relations() const { return relations_; }
  const FgAbelianGroup& group() const { return group_; }

  PresentedGroup presentation() const { return {ambient_rank(), gens_, relations_}; }

  // Coordinates of an ambient vector with respect to the generators; the
  // vector must lie in their span.
  IntVec coords(const IntVec& v) const {
    auto c = detail::solve_with(gens_snf_, gens_.cols(), v);
    check_internal(c.has_value(), "Subquotient: vector outside generator span");
    return *c;
  }

  IntMat coords_matrix(const IntMat& vs) const {
    check_internal(vs.rows() == ambient_rank(), "Subquotient: ambient mismatch");
    IntMat out(num_gens(), vs.cols());
    for (std::size_t j = 0; j < vs.cols(); ++j) out.set_col(j, coords(vs.col(j)));
    return out;
  }

 private:
  IntMat gens_;
  IntMat bnds_;
  SmithDecomposition gens_snf_;
  IntMat relations_;
  FgAbelianGroup group_;
};

// Matrix of the map induced on presentations by an ambient homomorphism that
// carries src generators into the span of dst generators (and boundaries to
// boundaries, which the caller guarantees).
inline IntMat induced_matrix(const Subquotient& src, const Subquotient& dst,
                             const IntMat& ambient_map) {
  check_internal(ambient_map.cols() == src.ambient_rank() &&
                     ambient_map.rows() == dst.ambient_rank(),
                 "induced_matrix: ambient shape mismatch");
  return dst.coords_matrix(ambient_map * src.gens());
}

// Every column lands in the boundary span of dst, i.e. the induced map is zero.
inline bool induced_is_zero(const Subquotient& dst, const IntMat& induced) {
  return solve_matrix(dst.relations(), induced).has_value();
}

// A homomorphism between finitely generated abelian groups of equal canonical
// form is an isomorphism as soon as it is surjective, so the verdict reduces
// to a group comparison plus a cokernel computation.
inline bool induced_is_isomorphism(const Subquotient& src, const Subquotient& dst,
                                   const IntMat& induced) {
  if (!(src.group() == dst.group())) return false;
  return cokernel(hstack(induced, dst.relations())).is_trivial();
}

}  // namespace wps
