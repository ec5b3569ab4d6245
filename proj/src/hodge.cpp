#include "tav/hodge.hpp"

#include <algorithm>

namespace tav {

namespace {

bool squares_to_minus_identity(const RatMatrix& j) {
  if (j.rows() != j.cols()) return false;
  RatMatrix square = j * j;
  RatMatrix minus_id = -RatMatrix::Identity(j.rows(), j.cols());
  return equal(square, minus_id);
}

bool lex_less(const RatVector& a, const RatVector& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

}  // namespace

ComplexStructure::ComplexStructure(Index genus, RatMatrix j)
    : genus_(genus), j_(std::move(j)) {
  require(genus_ >= 1, errc::invalid_argument, "genus must be at least 1");
  require(j_.rows() == 2 * genus_ && j_.cols() == 2 * genus_, errc::invalid_argument,
          "complex structure must be 2g x 2g");
  require(squares_to_minus_identity(j_), errc::invalid_argument,
          "complex structure must square to -I");
}

BField::BField(Index genus, Int twist_order, RatMatrix b)
    : genus_(genus), n_(std::move(twist_order)), b_(std::move(b)) {
  require(genus_ >= 1, errc::invalid_argument, "genus must be at least 1");
  require(n_ >= 1, errc::invalid_argument, "twist order must be positive");
  require(b_.rows() == 2 * genus_ && b_.cols() == 2 * genus_, errc::invalid_argument,
          "B-field must be 2g x 2g");
  RatMatrix sum = b_ + b_.transpose();
  require(is_zero(sum), errc::invalid_argument, "B-field must be anti-symmetric");
  require(is_integral(b_ * Rat(n_)), errc::invalid_argument,
          "n * B must be integral");
}

TwistedComplexStructure::TwistedComplexStructure(Index genus, Int twist_order,
                                                 RatMatrix j_alpha)
    : genus_(genus), n_(std::move(twist_order)), j_alpha_(std::move(j_alpha)) {
  require(genus_ >= 1, errc::invalid_argument, "genus must be at least 1");
  require(n_ >= 1, errc::invalid_argument, "twist order must be positive");
  require(j_alpha_.rows() == 4 * genus_ && j_alpha_.cols() == 4 * genus_,
          errc::invalid_argument, "twisted structure must be 4g x 4g");
  require(is_zero(RatMatrix(j_alpha_.block(0, 2 * genus_, 2 * genus_, 2 * genus_))),
          errc::invalid_argument, "twisted structure must be block lower triangular");
  require(squares_to_minus_identity(j_alpha_), errc::invalid_argument,
          "twisted structure must square to -I");
}

TwistedComplexStructure build_J_alpha(const ComplexStructure& cs, const BField& b) {
  require(cs.genus() == b.genus(), errc::invalid_argument,
          "complex structure and B-field genus mismatch");
  const Index h = 2 * cs.genus();
  const RatMatrix& j = cs.matrix();
  const RatMatrix& bm = b.matrix();
  RatMatrix out = RatMatrix::Zero(2 * h, 2 * h);
  out.block(0, 0, h, h) = j;
  out.block(h, 0, h, h) = bm * j + j.transpose() * bm;
  out.block(h, h, h, h) = -j.transpose();
  TwistedComplexStructure result(cs.genus(), b.twist_order(), std::move(out));
  ensure(squares_to_minus_identity(result.matrix()),
         "J_alpha must square to -I when J does");
  return result;
}

IntMatrix pi_tilde(const Int& n, const RatMatrix& b) {
  require(b.rows() == b.cols(), errc::invalid_argument, "B must be square");
  require(n >= 1, errc::invalid_argument, "n must be positive");
  RatMatrix nb = b * Rat(n);
  require(is_integral(nb), errc::invalid_argument, "n * B must be integral");
  const Index h = b.rows();
  IntMatrix m = int_zero(2 * h, 2 * h);
  m.block(0, 0, h, h) = int_identity(h) * n;
  m.block(h, 0, h, h) = to_integer(nb);
  m.block(h, h, h, h) = int_identity(h);
  return m;
}

IntMatrix pi_tilde(const BField& b) { return pi_tilde(b.twist_order(), b.matrix()); }

TorusMapKernel torus_map_kernel(const IntMatrix& m) {
  require(m.rows() == m.cols(), errc::invalid_argument, "matrix must be square");
  require(!determinant(m).is_zero(), errc::singular_matrix,
          "torus map must be nonsingular");
  const Index k = m.rows();

  // M = U^{-1} D V^{-1}, so M^{-1} Z^k = V D^{-1} Z^k and the cosets are
  // enumerated by digit tuples below the diagonal of D.
  auto snf = smith_normal_form(m);
  const auto diag = snf.diagonal();

  TorusMapKernel out;
  out.group = cokernel_of(m);

  std::vector<Int> digits(diag.size(), Int(0));
  std::vector<RatVector> reps;
  for (;;) {
    RatVector fraction(k);
    for (Index i = 0; i < k; ++i)
      fraction(i) = Rat(digits[static_cast<std::size_t>(i)], diag[static_cast<std::size_t>(i)]);
    RatVector rep(k);
    for (Index i = 0; i < k; ++i) {
      Rat value = 0;
      for (Index j = 0; j < k; ++j) value += Rat(snf.V(i, j)) * fraction(j);
      rep(i) = fractional_part(value);
    }
    reps.push_back(std::move(rep));

    Index pos = k - 1;
    while (pos >= 0) {
      digits[static_cast<std::size_t>(pos)] += 1;
      if (digits[static_cast<std::size_t>(pos)] < diag[static_cast<std::size_t>(pos)]) break;
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }

  std::sort(reps.begin(), reps.end(), lex_less);
  out.representatives = std::move(reps);
  ensure(Int(static_cast<long>(out.representatives.size())) == out.group.order(),
         "coset enumeration must match the kernel order");
  return out;
}

AntisymTwist twist_from_b_field(const BField& b) {
  IntMatrix nb = to_integer(b.matrix() * Rat(b.twist_order()));
  return AntisymTwist(b.twist_order(), b.genus(), reduce_mod(-nb, b.twist_order()));
}

QuotientLatticeModel quotient_lattice(const Int& n, const AntisymTwist& twist) {
  require(n == twist.modulus(), errc::invalid_argument,
          "twist modulus must equal the quotient order");
  return quotient_lattice(n, twist.genus(), twist.matrix());
}

QuotientLatticeModel quotient_lattice(const Int& n, Index genus, const IntMatrix& a) {
  require(genus >= 1, errc::invalid_argument, "genus must be at least 1");
  require(a.rows() == 2 * genus && a.cols() == 2 * genus, errc::invalid_argument,
          "graph matrix must be 2g x 2g");
  require(n >= 1, errc::invalid_argument, "quotient order must be positive");
  IntMatrix reduced = reduce_mod(a, n);
  require(isotropy_check(reduced, n), errc::not_isotropic,
          "twist graph must be isotropic");
  const Index g = genus;
  const Index h = 2 * g;

  // n * Lambda is spanned by n Z^{4g} and the graph columns (u, A u).
  IntMatrix wide(2 * h, 2 * h + h);
  wide.setZero();
  wide.block(0, 0, 2 * h, 2 * h) = int_identity(2 * h) * n;
  wide.block(0, 2 * h, h, h) = int_identity(h);
  wide.block(h, 2 * h, h, h) = reduced;
  IntMatrix basis_scaled = hermite_column_basis(wide);

  RatMatrix basis(2 * h, 2 * h);
  for (Index i = 0; i < 2 * h; ++i)
    for (Index j = 0; j < 2 * h; ++j) basis(i, j) = Rat(basis_scaled(i, j), n);

  Int det_scaled = determinant(basis_scaled);
  ensure(det_scaled > 0, "Hermite basis must have positive determinant");
  Int numerator = pow(n, Int(2 * h));
  ensure(divides(det_scaled, numerator), "lattice index must be integral");
  Int index = numerator / det_scaled;
  ensure(index == pow(n, Int(h)), "graph quotient must have index n^(2g)");

  return QuotientLatticeModel{g, n, std::move(basis), std::move(index)};
}

bool presentations_agree(const BField& b, const AntisymTwist& candidate) {
  require(candidate.genus() == b.genus(), errc::invalid_argument,
          "twist and B-field genus mismatch");
  require(candidate.modulus() == b.twist_order(), errc::invalid_argument,
          "twist and B-field order mismatch");
  QuotientLatticeModel model = quotient_lattice(candidate.modulus(), candidate);
  RatMatrix image = to_rational(pi_tilde(b)) * model.basis;
  if (!is_integral(image)) return false;
  return abs(determinant(to_integer(image))) == Int(1);
}

bool presentations_agree(const BField& b) {
  return presentations_agree(b, twist_from_b_field(b));
}

bool is_symplectic_isomorphism(const IntMatrix& psi, const TwistedComplexStructure& src,
                               const TwistedComplexStructure& dst) {
  require(src.genus() == dst.genus(), errc::invalid_argument,
          "source and target genus mismatch");
  const Index dim = 4 * src.genus();
  require(psi.rows() == dim && psi.cols() == dim, errc::invalid_argument,
          "candidate must be 4g x 4g");
  if (abs(determinant(psi)) != Int(1)) return false;
  IntMatrix s = symplectic_form_matrix(dim / 2);
  if (!equal(IntMatrix(psi.transpose() * s * psi), s)) return false;
  RatMatrix psi_q = to_rational(psi);
  return equal(RatMatrix(psi_q * src.matrix()), RatMatrix(dst.matrix() * psi_q));
}

}  // namespace tav
