#pragma once

#include <string>
#include <vector>

#include "curvelab/curve.hpp"

namespace curvelab {

enum class ViolationKind {
  /// (a) ρ″ₛ and ρ‴ₛ vanish together.
  degenerate_ses_singularity,
  /// (b) the base curve has an undulation.
  undulation,
  /// (c) an inflexion with det(γ′, γ‴) = 0.
  degenerate_inflexion,
  /// (d) ρ and ρ′ vanish together.
  front_not_transversal,
  /// (e) the singular set contains a whole parameter interval.
  degenerate_singular_set,
};

std::string to_string(ViolationKind kind);
/// The single-letter tag (a)–(e) of a check.
char tag_of(ViolationKind kind);

struct GenericityViolation {
  ViolationKind kind;
  double param{0.0};
  std::vector<double> values;
};

struct GenericityFlags {
  bool evolutoid{true};
  bool ses{true};
  bool front{true};
  bool gauss_bonnet{true};
};

struct GenericityReport {
  std::vector<GenericityViolation> violations;
  GenericityFlags is_generic_for;

  bool generic() const noexcept { return violations.empty(); }
  bool has(ViolationKind kind) const noexcept;
};

/// Runs checks (a)–(e) at scan resolution. Check (a) is skipped when (e)
/// fires, since ρ″ₛ then vanishes on an interval. Checks (b)–(c) apply to
/// parametric curves only (hedgehogs have no inflexions) and (d) to support
/// curves only.
GenericityReport check_genericity(const Curve& curve);

}  // namespace curvelab
