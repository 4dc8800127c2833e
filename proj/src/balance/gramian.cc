// Copyright 2026 The UMV Design Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "umv/balance/gramian.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>
#include <unsupported/Eigen/MatrixFunctions>

#include "umv/common/errors.h"

namespace umv::balance {

namespace {

constexpr double kOverflow = 1e200;
// Negative eigenvalues smaller than this fraction of the largest are
// round-off.
constexpr double kIndefiniteTolerance = 1e-9;

void CheckSystem(const LinearizedSystem& sys) {
  if (sys.A.rows() != sys.A.cols() || sys.B.rows() != sys.A.rows()) {
    throw InvalidSpecError("A must be n x n and B must have n rows");
  }
}

struct Spectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  double largest = 0.0;
};

Spectrum Decompose(const Eigen::MatrixXd& W) {
  if (W.rows() != W.cols() || W.rows() == 0) {
    throw InvalidSpecError("Gramian must be square and non-empty");
  }
  const Eigen::MatrixXd sym = 0.5 * (W + W.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  if (eig.info() != Eigen::Success) {
    throw NumericalSingularityError("Gramian eigen-decomposition failed");
  }
  Spectrum s{eig.eigenvalues(), eig.eigenvectors(), eig.eigenvalues().maxCoeff()};
  if (s.values.minCoeff() < -kIndefiniteTolerance * std::max(s.largest, 0.0) ||
      (s.largest <= 0.0 && s.values.minCoeff() < 0.0)) {
    throw NumericalSingularityError("Gramian is indefinite");
  }
  return s;
}

bool Reachable(const Spectrum& s, int i) {
  return s.largest > 0.0 && s.values[i] >= kRankTolerance * s.largest;
}

// sign(M) by the scaled Newton iteration. M must have no eigenvalue on the
// imaginary axis.
Eigen::MatrixXd MatrixSign(const Eigen::MatrixXd& m) {
  const double n = static_cast<double>(m.rows());
  Eigen::MatrixXd s = m;
  for (int it = 0; it < 100; ++it) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(s);
    const double det = std::abs(lu.determinant());
    if (!(det > 0.0)) {
      throw NumericalSingularityError("eigenvalue on the splitting line");
    }
    double mu = std::pow(det, -1.0 / n);
    if (!std::isfinite(mu) || mu == 0.0) mu = 1.0;
    const Eigen::MatrixXd next = 0.5 * (mu * s + lu.inverse() / mu);
    const double change = (next - s).norm();
    s = next;
    if (change <= 1e-13 * s.norm()) return s;
  }
  throw NumericalSingularityError("matrix sign iteration did not converge");
}

// Orthonormal basis of the range of a projector of known rank.
Eigen::MatrixXd RangeBasis(const Eigen::MatrixXd& projector, int rank) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(projector);
  const Eigen::MatrixXd q = qr.householderQ();
  return q.leftCols(rank);
}

Eigen::MatrixXd BlockDiag(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(a.rows() + b.rows(),
                                              a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

}  // namespace

Eigen::MatrixXd MatrixExp(const Eigen::MatrixXd& a, double t) {
  if (a.rows() != a.cols()) throw InvalidSpecError("matrix must be square");
  return (a * t).exp();
}

Eigen::MatrixXd FiniteHorizonGramian(const LinearizedSystem& sys, double T,
                                     int steps) {
  CheckSystem(sys);
  if (!(T > 0)) throw InvalidSpecError("Gramian horizon must be positive");
  if (steps < 1) throw InvalidSpecError("Gramian step count must be positive");
  const Eigen::MatrixXd& A = sys.A;
  const Eigen::MatrixXd Q = sys.B * sys.B.transpose();
  auto rate = [&](const Eigen::MatrixXd& W) -> Eigen::MatrixXd {
    return A * W + W * A.transpose() + Q;
  };
  const double h = T / steps;
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(A.rows(), A.rows());
  for (int k = 0; k < steps; ++k) {
    const Eigen::MatrixXd k1 = rate(W);
    const Eigen::MatrixXd k2 = rate(W + 0.5 * h * k1);
    const Eigen::MatrixXd k3 = rate(W + 0.5 * h * k2);
    const Eigen::MatrixXd k4 = rate(W + h * k3);
    W += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!W.allFinite() || W.cwiseAbs().maxCoeff() > kOverflow) {
      throw HorizonOverflowError(
          "Gramian overflowed at t = " + std::to_string((k + 1) * h) +
          " s; use a shorter horizon");
    }
  }
  return 0.5 * (W + W.transpose());
}

FactoredGramian FactorGramian(const LinearizedSystem& sys, double T,
                              int steps) {
  CheckSystem(sys);
  if (!(T > 0)) throw InvalidSpecError("Gramian horizon must be positive");
  if (steps < 1) throw InvalidSpecError("Gramian step count must be positive");
  const int n = static_cast<int>(sys.A.rows());
  FactoredGramian out;
  out.horizon = T;
  out.basis = Eigen::MatrixXd::Identity(n, n);
  out.basis_inverse = Eigen::MatrixXd::Identity(n, n);
  if (n > 0 && sys.A.allFinite()) {
    // Modes growing faster than e^{t/T} go to the unstable block.
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd sign = MatrixSign(sys.A - id / T);
    const Eigen::MatrixXd up = 0.5 * (id + sign);
    out.unstable = static_cast<int>(std::lround(up.trace()));
    if (out.unstable > 0) {
      out.basis.leftCols(out.unstable) = RangeBasis(up, out.unstable);
      out.basis.rightCols(n - out.unstable) =
          RangeBasis(id - up, n - out.unstable);
      Eigen::FullPivLU<Eigen::MatrixXd> lu(out.basis);
      if (!lu.isInvertible()) {
        throw NumericalSingularityError("invariant subspaces are degenerate");
      }
      out.basis_inverse = lu.inverse();
    }
  }
  const int k = out.unstable;
  const Eigen::MatrixXd a = out.basis_inverse * sys.A * out.basis;
  const Eigen::MatrixXd a_u = a.topLeftCorner(k, k);
  // The z_u coordinates are carried by E(t); they contribute no drift.
  const Eigen::MatrixXd drift =
      BlockDiag(Eigen::MatrixXd::Zero(k, k), a.bottomRightCorner(n - k, n - k));
  const Eigen::MatrixXd b = out.basis_inverse * sys.B;
  const double h = T / steps;
  const Eigen::MatrixXd half_step = MatrixExp(-a_u, 0.5 * h);
  Eigen::MatrixXd e_u = Eigen::MatrixXd::Identity(k, k);
  auto forcing = [&](const Eigen::MatrixXd& eu) -> Eigen::MatrixXd {
    Eigen::MatrixXd eb = b;
    eb.topRows(k) = eu * b.topRows(k);
    return eb * eb.transpose();
  };
  auto rate = [&](const Eigen::MatrixXd& G, const Eigen::MatrixXd& f) {
    return Eigen::MatrixXd(drift * G + G * drift.transpose() + f);
  };
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n, n);
  for (int step = 0; step < steps; ++step) {
    const Eigen::MatrixXd e_mid = half_step * e_u;
    const Eigen::MatrixXd e_end = half_step * e_mid;
    const Eigen::MatrixXd f0 = forcing(e_u), f1 = forcing(e_mid),
                          f2 = forcing(e_end);
    const Eigen::MatrixXd k1 = rate(G, f0);
    const Eigen::MatrixXd k2 = rate(G + 0.5 * h * k1, f1);
    const Eigen::MatrixXd k3 = rate(G + 0.5 * h * k2, f1);
    const Eigen::MatrixXd k4 = rate(G + h * k3, f2);
    G += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    e_u = e_end;
    if (!G.allFinite() || G.cwiseAbs().maxCoeff() > kOverflow) {
      throw HorizonOverflowError(
          "Gramian overflowed at t = " + std::to_string((step + 1) * h) +
          " s; use a shorter horizon");
    }
  }
  out.core = 0.5 * (G + G.transpose());
  out.decay = BlockDiag(e_u, Eigen::MatrixXd::Identity(n - k, n - k));
  return out;
}

Eigen::MatrixXd FactoredGramian::Dense() const {
  const int n = static_cast<int>(core.rows());
  const int k = unstable;
  Eigen::MatrixXd grow = Eigen::MatrixXd::Identity(n, n);
  grow.topLeftCorner(k, k) =
      decay.topLeftCorner(k, k).inverse();
  const Eigen::MatrixXd m = basis * grow;
  const Eigen::MatrixXd w = m * core * m.transpose();
  if (!w.allFinite() || w.cwiseAbs().maxCoeff() > kOverflow) {
    throw HorizonOverflowError("Gramian overflows over a " +
                               std::to_string(horizon) +
                               " s horizon; use a shorter horizon");
  }
  return 0.5 * (w + w.transpose());
}

double MinControlEnergy(const Eigen::MatrixXd& W, const Eigen::VectorXd& x_s,
                        const Eigen::VectorXd& x_f, const LinearizedSystem& sys,
                        double T) {
  CheckSystem(sys);
  if (W.rows() != sys.A.rows() || x_s.size() != W.rows() ||
      x_f.size() != W.rows()) {
    throw InvalidSpecError("Gramian and states have mismatched sizes");
  }
  const Eigen::VectorXd d = x_f - MatrixExp(sys.A, T) * x_s;
  const Spectrum s = Decompose(W);
  const double d_norm = d.norm();
  if (d_norm == 0.0) return 0.0;
  double energy = 0.0;
  for (int i = 0; i < s.values.size(); ++i) {
    const double c = s.vectors.col(i).dot(d);
    if (Reachable(s, i)) {
      energy += c * c / s.values[i];
    } else if (std::abs(c) > 1e-9 * d_norm) {
      return std::numeric_limits<double>::infinity();
    }
  }
  return energy;
}

double LocalEffortMetric(const Eigen::MatrixXd& W) {
  const Spectrum s = Decompose(W);
  double sum = 0.0;
  for (int i = 0; i < s.values.size(); ++i) {
    if (!Reachable(s, i)) return std::numeric_limits<double>::infinity();
    sum += 1.0 / s.values[i];
  }
  return sum / static_cast<double>(s.values.size());
}

double LocalEffortMetric(const FactoredGramian& gramian) {
  const Spectrum s = Decompose(gramian.core);
  for (int i = 0; i < s.values.size(); ++i) {
    if (!Reachable(s, i)) return std::numeric_limits<double>::infinity();
  }
  Eigen::LLT<Eigen::MatrixXd> llt(gramian.core);
  if (llt.info() != Eigen::Success) {
    throw NumericalSingularityError("Gramian core is not positive definite");
  }
  // trace(W^-1) = ||L^-1 E P^-1||_F^2 with G = L L^T.
  const Eigen::MatrixXd x =
      llt.matrixL().solve(gramian.decay * gramian.basis_inverse);
  return x.squaredNorm() / static_cast<double>(gramian.core.rows());
}

double LocalEffortMetric(const LinearizedSystem& sys, double T, int steps) {
  return LocalEffortMetric(FactorGramian(sys, T, steps));
}

std::function<Eigen::VectorXd(double)> OptimalInput(
    const Eigen::MatrixXd& W, const Eigen::VectorXd& x_s,
    const Eigen::VectorXd& x_f, const LinearizedSystem& sys, double T) {
  CheckSystem(sys);
  const Spectrum s = Decompose(W);
  for (int i = 0; i < s.values.size(); ++i) {
    if (!Reachable(s, i)) {
      throw NumericalSingularityError("Gramian is rank deficient");
    }
  }
  const Eigen::VectorXd d = x_f - MatrixExp(sys.A, T) * x_s;
  const Eigen::VectorXd lambda =
      s.vectors * (s.vectors.transpose() * d).cwiseQuotient(s.values);
  const Eigen::MatrixXd At = sys.A.transpose();
  const Eigen::MatrixXd Bt = sys.B.transpose();
  return [At, Bt, lambda, T](double t) -> Eigen::VectorXd {
    return Bt * MatrixExp(At, T - t) * lambda;
  };
}

}  // namespace umv::balance
