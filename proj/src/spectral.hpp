#pragma once

// Internal helper: eigenvalue classification of small symmetric matrices,
// shared by the monotonicity predicates and the conjugate computations so
// that every PSD / range decision uses one tolerance convention.

#include <Eigen/Dense>

#include "monorel/tolerance.hpp"

namespace monorel::detail {

struct SymmetricSpectrum {
  Eigen::VectorXd evals;  // ascending
  Eigen::MatrixXd evecs;
  double norm = 0.0;  // max |eigenvalue|

  static SymmetricSpectrum of(const Eigen::MatrixXd& s) {
    SymmetricSpectrum out;
    if (s.rows() == 0) {
      out.evals = Eigen::VectorXd(0);
      out.evecs = Eigen::MatrixXd(0, 0);
      return out;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
    out.evals = eig.eigenvalues();
    out.evecs = eig.eigenvectors();
    out.norm = out.evals.cwiseAbs().maxCoeff();
    return out;
  }

  double min_eig() const { return evals.size() ? evals(0) : 0.0; }

  /// Sign-classification threshold for eigenvalues.
  double eig_threshold(const Tolerance& tol) const { return tol.psd_tol * (1.0 + norm); }

  bool psd(const Tolerance& tol) const { return min_eig() >= -eig_threshold(tol); }

  /// Result of extremizing c^T S c -/+ linear terms against b.
  struct PinvForm {
    bool in_range = true;    // b has no component along null/negative directions
    double quarter_form = 0; // b^T S^+ b / 4 over the strictly positive part
  };

  /// Splits b along the eigenbasis: components over eigenvalues inside
  /// [-tau, tau] count as null and must vanish (within the rank tolerance)
  /// for b to lie in range(S).
  PinvForm quarter_pinv_form(const Eigen::VectorXd& b, const Tolerance& tol) const {
    PinvForm out;
    if (evals.size() == 0) return out;
    const double tau = eig_threshold(tol);
    const double b_floor = tol.rel_rank_tol * (1.0 + b.norm());
    const Eigen::VectorXd bt = evecs.transpose() * b;
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
      if (evals(i) > tau) {
        out.quarter_form += 0.25 * bt(i) * bt(i) / evals(i);
      } else if (std::abs(bt(i)) > b_floor) {
        out.in_range = false;
      }
    }
    return out;
  }

  /// Columns spanning the tolerance-null directions (|lambda| <= tau).
  Eigen::MatrixXd null_directions(const Tolerance& tol) const {
    const double tau = eig_threshold(tol);
    Eigen::Index count = 0;
    for (Eigen::Index i = 0; i < evals.size(); ++i)
      if (std::abs(evals(i)) <= tau) ++count;
    Eigen::MatrixXd out(evecs.rows(), count);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < evals.size(); ++i)
      if (std::abs(evals(i)) <= tau) out.col(k++) = evecs.col(i);
    return out;
  }

  /// S^+ restricted to the strictly positive part.
  Eigen::MatrixXd positive_pinv(const Tolerance& tol) const {
    const double tau = eig_threshold(tol);
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(evecs.rows(), evecs.rows());
    for (Eigen::Index i = 0; i < evals.size(); ++i)
      if (evals(i) > tau) out += evecs.col(i) * evecs.col(i).transpose() / evals(i);
    return out;
  }
};

}  // namespace monorel::detail
