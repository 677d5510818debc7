#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsg/gauss_code.hpp"

namespace vsg {

// Whether graph vertices must keep their stored rotation (up to reflection,
// which a planar mirror image always permits) or may be re-fanned freely.
enum class Rigidity { pliable, rigid };

// Thrown when an exhaustive search would exceed its instance budget. Distinct
// from a verdict: the caller learns nothing about the answer.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Witness that a code draws in the plane with no virtual crossings: a cyclic
// end order per graph vertex plus each crossing's strand interleaving. At a
// crossing met first by strand 1, `true` means cyclic order
// (1-in, 2-in, 1-out, 2-out), `false` its mirror (1-in, 2-out, 1-out, 2-in).
struct RealizationCertificate {
  std::map<std::string, std::vector<EndRef>> vertex_rotation;
  std::map<int, bool> crossing_positive;
};

struct RealizabilityResult {
  bool realizable = false;
  std::optional<RealizationCertificate> certificate;  // present on yes
  std::string obstruction;                            // human note on no
  // Rigid mode, on yes: whether the stored rotations hold exactly, allowing a
  // global reflection per connected component. Unset when the check would
  // exceed its budget.
  std::optional<bool> rigid_coherent;
};

// Decides realizability through a planarity reduction: crossings (and in rigid
// mode vertices of degree >= 3) become wheel gadgets whose hub pins the cyclic
// order up to reflection, and the gadget graph goes to a Boyer-Myrvold test.
// A yes always carries a certificate that has passed verify_certificate.
// Signs and over/under roles never obstruct: the question lives on the shadow.
RealizabilityResult realizable(const ShadowCode& code, Rigidity rig = Rigidity::pliable);
RealizabilityResult realizable(const GaussCode& code, Rigidity rig = Rigidity::pliable);

// Independent route: enumerates strand interleavings at crossings and, for
// pliable vertices, all cyclic end orders (rigid: stored order and its
// reversal), face-tracing each assignment. Throws BudgetError when the
// assignment count exceeds `budget`.
bool brute_force_realizable(const ShadowCode& code, Rigidity rig = Rigidity::pliable,
                            long long budget = 10'000'000);
bool brute_force_realizable(const GaussCode& code, Rigidity rig = Rigidity::pliable,
                            long long budget = 10'000'000);

// Face-traces the shadow with the certificate's rotations and checks every
// component embeds in the sphere. Trusts neither the planarity kernel nor the
// gadget construction.
bool verify_certificate(const ShadowCode& code, const RealizationCertificate& cert);

}  // namespace vsg
