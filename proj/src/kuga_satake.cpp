#include "tav/kuga_satake.hpp"

namespace tav {

Int even_clifford_rank(Index r) {
  require(r >= 1, errc::invalid_argument, "rank must be at least 1");
  return pow(2, Int(r - 1));
}

Int ks_degree(const Int& d, Index r) {
  require(d >= 1, errc::invalid_argument, "lattice index must be positive");
  require(r >= 2, errc::invalid_argument, "rank must be at least 2");
  return pow(d, pow(2, Int(r - 2)));
}

KSDegreeReport exterior_kernel_oracle(const IntMatrix& a) {
  require(a.rows() == a.cols(), errc::invalid_argument, "matrix must be square");
  const Index r = a.rows();
  require(r >= 2, errc::invalid_argument, "rank must be at least 2");
  Int det = determinant(a);
  require(!det.is_zero(), errc::singular_matrix, "matrix must be nonsingular");

  KSDegreeReport report;
  report.rank = r;
  report.index_d = abs(det);
  report.closed_form = ks_degree(report.index_d, r);
  report.oracle_value = 1;
  for (Index grade = 2; grade <= r; grade += 2) {
    Int grade_det = abs(determinant(exterior_power(a, grade)));
    report.oracle_value *= grade_det;
    report.per_grade.emplace_back(grade, std::move(grade_det));
  }
  report.agree = report.oracle_value == report.closed_form;
  report.closed_form_square = is_perfect_square(report.closed_form);
  return report;
}

}  // namespace tav
