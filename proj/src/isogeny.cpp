#include "tav/isogeny.hpp"

namespace tav {

LatticeIsogeny make_lattice_isogeny(Index genus, IntMatrix m) {
  require(genus >= 1, errc::invalid_argument, "genus must be at least 1");
  require(m.rows() == 2 * genus && m.cols() == 2 * genus, errc::invalid_argument,
          "isogeny matrix must be 2g x 2g");
  require(!determinant(m).is_zero(), errc::singular_matrix,
          "isogeny matrix must be nonsingular");
  return LatticeIsogeny{genus, std::move(m)};
}

IsogenyProfile kernel_and_degree(const LatticeIsogeny& f) {
  IsogenyProfile p;
  p.degree = abs(determinant(f.matrix));
  p.kernel = cokernel_of(f.matrix);
  p.principal = is_perfect_square(p.degree);
  p.spectrally_paired = p.kernel.spectrally_paired();
  return p;
}

IntMatrix complement_isogeny(const IntMatrix& f, const Int& n) {
  require(n >= 1, errc::invalid_argument, "n must be positive");
  require(f.rows() == f.cols(), errc::invalid_argument, "matrix must be square");
  require(!determinant(f).is_zero(), errc::singular_matrix,
          "matrix must be nonsingular");
  RatMatrix scaled = inverse(to_rational(f)) * Rat(n);
  require(is_integral(scaled), errc::not_annihilated_by_n,
          "cokernel exponent does not divide n");
  return to_integer(scaled);
}

IntMatrix symplectic_form_matrix(Index half) {
  IntMatrix s = int_zero(2 * half, 2 * half);
  s.block(0, half, half, half) = int_identity(half);
  s.block(half, 0, half, half) = -int_identity(half);
  return s;
}

StandardSymplecticForm standard_symplectic_form(Index genus) {
  require(genus >= 1, errc::invalid_argument, "genus must be at least 1");
  return StandardSymplecticForm{genus, symplectic_form_matrix(2 * genus)};
}

ExtendedIsogeny extend_isogeny(const IntMatrix& f, const Int& n) {
  require(f.rows() == f.cols() && f.rows() % 2 == 0 && f.rows() > 0,
          errc::invalid_argument, "matrix must be 2g x 2g");
  const Index two_g = f.rows();
  IntMatrix complement = complement_isogeny(f, n);
  IntMatrix phi = int_zero(2 * two_g, 2 * two_g);
  phi.block(0, two_g, two_g, two_g) = f;
  phi.block(two_g, 0, two_g, two_g) = -(complement.transpose() * n);
  return ExtendedIsogeny{two_g / 2, n, std::move(phi)};
}

bool verify_conformal_symplectic(const ExtendedIsogeny& phi) {
  const Index dim = phi.matrix.rows();
  if (phi.matrix.cols() != dim || dim % 2 != 0) return false;
  IntMatrix s = symplectic_form_matrix(dim / 2);
  IntMatrix lhs = phi.matrix.transpose() * s * phi.matrix;
  IntMatrix rhs = s * (phi.twist_order * phi.twist_order);
  return equal(lhs, rhs);
}

}  // namespace tav
