#pragma once

// Exact rational realization of twisted complex tori: the twisted complex
// structure built from (J, B), the degree-n covering map it intertwines,
// torsion kernels of torus maps, the quotient-lattice presentation, and
// the symplectic-isomorphism criterion for candidate matrices.

#include <vector>

#include "tav/cocycle.hpp"
#include "tav/isogeny.hpp"

namespace tav {

// J with J^2 = -I, exact.
class ComplexStructure {
 public:
  ComplexStructure(Index genus, RatMatrix j);

  Index genus() const { return genus_; }
  const RatMatrix& matrix() const { return j_; }

 private:
  Index genus_ = 0;
  RatMatrix j_;
};

// Anti-symmetric rational B with n*B integral.
class BField {
 public:
  BField(Index genus, Int twist_order, RatMatrix b);

  Index genus() const { return genus_; }
  const Int& twist_order() const { return n_; }
  const RatMatrix& matrix() const { return b_; }

 private:
  Index genus_ = 0;
  Int n_;
  RatMatrix b_;
};

// J_alpha = [[J, 0], [B J + J^T B, -J^T]]; squares to -I whenever J does.
class TwistedComplexStructure {
 public:
  TwistedComplexStructure(Index genus, Int twist_order, RatMatrix j_alpha);

  Index genus() const { return genus_; }
  const Int& twist_order() const { return n_; }
  const RatMatrix& matrix() const { return j_alpha_; }

 private:
  Index genus_ = 0;
  Int n_;
  RatMatrix j_alpha_;
};

TwistedComplexStructure build_J_alpha(const ComplexStructure& cs, const BField& b);

// Covering map [[n I, 0], [n B, I]] on (lattice) x (dual lattice); it
// intertwines blockdiag(J, -J^T) with J_alpha exactly.
IntMatrix pi_tilde(const BField& b);
IntMatrix pi_tilde(const Int& n, const RatMatrix& b);

// Kernel of the induced torus map: M^{-1} Z^k / Z^k, with coset
// representatives in [0,1)^k sorted lexicographically.
struct TorusMapKernel {
  FiniteAbelianGroup group;
  std::vector<RatVector> representatives;
};

TorusMapKernel torus_map_kernel(const IntMatrix& m);

// The twist induced by a B-field on the n-torsion: (-n B) reduced mod n.
AntisymTwist twist_from_b_field(const BField& b);

// Lattice Z^{4g} + (1/n) {(u, A u)}, canonical column Hermite basis,
// index n^{2g} over Z^{4g}.
struct QuotientLatticeModel {
  Index genus = 0;
  Int twist_order;
  RatMatrix basis;
  Int index;
};

QuotientLatticeModel quotient_lattice(const Int& n, const AntisymTwist& twist);
// Raw entry point: requires only isotropy of the graph (not_isotropic
// otherwise); entries are reduced mod n first.
QuotientLatticeModel quotient_lattice(const Int& n, Index genus, const IntMatrix& a);

// True iff pi_tilde(b) maps the quotient lattice of the candidate twist
// exactly onto Z^{4g}. The one-argument form uses the twist induced by b.
bool presentations_agree(const BField& b);
bool presentations_agree(const BField& b, const AntisymTwist& candidate);

// |det psi| = 1, psi^T S psi = S, and psi J_src = J_dst psi, all exact.
bool is_symplectic_isomorphism(const IntMatrix& psi, const TwistedComplexStructure& src,
                               const TwistedComplexStructure& dst);

}  // namespace tav
