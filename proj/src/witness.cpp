#include "tav/witness.hpp"

namespace tav {

const char* twist_order_policy_name(TwistOrderPolicy policy) {
  switch (policy) {
    case TwistOrderPolicy::kernel_exponent: return "exponent";
    case TwistOrderPolicy::global_lcm: return "lcm";
  }
  return "unknown";
}

WitnessReport run_witness_pipeline(const InvariantFactorChain& chain,
                                   TwistOrderPolicy policy,
                                   const std::optional<Int>& prime) {
  WitnessReport report{chain, decompose_principal_chain(chain, prime),
                       false, policy, prime, {}, false};
  report.certificate_ok = verify_decomposition(report.certificate).ok();

  const Index g = chain.genus();

  Int shared_order = 1;
  if (policy == TwistOrderPolicy::global_lcm) {
    for (const auto& f : report.certificate.factors)
      shared_order = lcm(shared_order, cokernel_of(f).exponent());
  }

  bool all_true = report.certificate_ok;
  for (const auto& f : report.certificate.factors) {
    FiniteAbelianGroup kernel = cokernel_of(f);
    ensure(kernel.spectrally_paired(), "verified factors must have paired kernels");
    const Int n = policy == TwistOrderPolicy::global_lcm ? shared_order
                                                         : kernel.exponent();

    AntisymTwist twist = antisym_with_image(kernel.paired_targets(), n, g);
    FactorWitness w{f,
                    abs(determinant(f)),
                    kernel,
                    n,
                    twist,
                    image_mod_n(twist.matrix(), n) == kernel,
                    isotropy_check(twist),
                    verify_conformal_symplectic(extend_isogeny(f, n))};
    all_true = all_true && w.all_true();
    report.factors.push_back(std::move(w));
  }

  report.all_verdicts_true = all_true;
  return report;
}

}  // namespace tav
