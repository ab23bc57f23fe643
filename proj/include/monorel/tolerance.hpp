#pragma once

#include <stdexcept>

namespace monorel {

/// Numeric tolerances shared by every subspace and spectral predicate.
///
/// `rel_rank_tol` drives rank decisions: a singular value is kept only if it
/// exceeds rel_rank_tol * ambient_dim * (largest singular value).  It also
/// bounds membership residuals, so subspace equality inherits it.
///
/// `psd_tol` drives sign decisions on eigenvalues of coupling forms; the
/// graph bases are orthonormal, hence those forms are well scaled and the
/// tolerance is meaningful as given.
///
/// Both values must lie strictly inside (0, 1e-3).
struct Tolerance {
  double rel_rank_tol{1e-9};
  double psd_tol{1e-9};

  Tolerance() = default;

  Tolerance(double rank_tol, double psd) : rel_rank_tol(rank_tol), psd_tol(psd) {
    if (!(rank_tol > 0.0) || !(rank_tol < 1e-3))
      throw std::invalid_argument("Tolerance: rel_rank_tol must lie in (0, 1e-3)");
    if (!(psd > 0.0) || !(psd < 1e-3))
      throw std::invalid_argument("Tolerance: psd_tol must lie in (0, 1e-3)");
  }

  /// Skips the range check.  Exists so the disagreement-reporting path can be
  /// driven with deliberately corrupted tolerances; the CLI never uses it.
  static Tolerance unchecked(double rank_tol, double psd) noexcept {
    Tolerance t;
    t.rel_rank_tol = rank_tol;
    t.psd_tol = psd;
    return t;
  }
};

}  // namespace monorel
