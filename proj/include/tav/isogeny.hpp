#pragma once

// Isogenies as nonsingular integer matrices between rank-2g lattices:
// degree/kernel bookkeeping, complements, and the extended isogeny on
// (lattice) x (dual lattice) together with its conformal-symplectic test.

#include "tav/smith.hpp"

namespace tav {

struct LatticeIsogeny {
  Index genus = 0;
  IntMatrix matrix;  // 2g x 2g, nonsingular; source basis mapped into target
};

// Validates shape and nonsingularity.
LatticeIsogeny make_lattice_isogeny(Index genus, IntMatrix m);

struct IsogenyProfile {
  Int degree;
  FiniteAbelianGroup kernel;
  bool principal = false;
  bool spectrally_paired = false;
};

IsogenyProfile kernel_and_degree(const LatticeIsogeny& f);

// F' = n * F^{-1} when integral, so that F F' = F' F = n I; throws
// not_annihilated_by_n when the cokernel exponent of F does not divide n.
IntMatrix complement_isogeny(const IntMatrix& f, const Int& n);

// [[0, I_h], [-I_h, 0]] on the block basis (lattice, dual lattice).
IntMatrix symplectic_form_matrix(Index half);

struct StandardSymplecticForm {
  Index genus = 0;
  IntMatrix matrix;  // 4g x 4g
};

StandardSymplecticForm standard_symplectic_form(Index genus);

// Phi = [[0, F], [-n F'^T, 0]] with F' the complement of F.
struct ExtendedIsogeny {
  Index genus = 0;
  Int twist_order;
  IntMatrix matrix;  // 4g x 4g
};

ExtendedIsogeny extend_isogeny(const IntMatrix& f, const Int& n);

// Phi^T S Phi = n^2 S, exactly.
bool verify_conformal_symplectic(const ExtendedIsogeny& phi);

}  // namespace tav
