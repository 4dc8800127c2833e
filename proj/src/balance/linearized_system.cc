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

#include "umv/balance/linearized_system.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "umv/common/errors.h"
#include "umv/common/number_format.h"

namespace umv::balance {

namespace {

constexpr std::string_view kMagic = "umv-linear-system 1";

}  // namespace

void Validate(const LinearizedSystem& sys) {
  const Eigen::Index n = sys.A.rows();
  if (sys.A.cols() != n || sys.B.rows() != n) {
    throw InvalidSpecError("A must be n x n and B must have n rows");
  }
  if (static_cast<Eigen::Index>(sys.state_names.size()) != n ||
      static_cast<Eigen::Index>(sys.input_names.size()) != sys.B.cols()) {
    throw InvalidSpecError("state or input names do not match A and B");
  }
  if (!sys.A.allFinite() || !sys.B.allFinite()) {
    throw LinearizationError("linearized system has non-finite entries");
  }
}

LinearizedSystem LinearizeFunction(const Dynamics& f, const Eigen::VectorXd& x0,
                                   const Eigen::VectorXd& u0, double eps) {
  if (!(eps > 0)) throw InvalidSpecError("perturbation must be positive");
  const Eigen::Index n = x0.size(), m = u0.size();
  LinearizedSystem sys;
  sys.A.resize(n, n);
  sys.B.resize(n, m);
  auto column = [&](const Eigen::VectorXd& xp, const Eigen::VectorXd& up,
                    const Eigen::VectorXd& xm, const Eigen::VectorXd& um,
                    double h) -> Eigen::VectorXd {
    const Eigen::VectorXd d = (f(xp, up) - f(xm, um)) / (2.0 * h);
    if (d.size() != n) {
      throw InvalidSpecError("dynamics returned a vector of the wrong size");
    }
    if (!d.allFinite()) throw LinearizationError("non-finite derivative");
    return d;
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    const double h = eps * std::max(1.0, std::abs(x0[i]));
    Eigen::VectorXd xp = x0, xm = x0;
    xp[i] += h;
    xm[i] -= h;
    sys.A.col(i) = column(xp, u0, xm, u0, h);
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    const double h = eps * std::max(1.0, std::abs(u0[j]));
    Eigen::VectorXd up = u0, um = u0;
    up[j] += h;
    um[j] -= h;
    sys.B.col(j) = column(x0, up, x0, um, h);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    sys.state_names.push_back("x" + std::to_string(i));
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    sys.input_names.push_back("u" + std::to_string(j));
  }
  return sys;
}

LinearizedSystem Linearize(const WheelieModel& model,
                           const WheelieConfig& config, double eps) {
  const WheelieDynamics dyn(model);
  const int n = dyn.coordinates();
  if (config.q.size() != n || config.u.size() != dyn.inputs()) {
    throw InvalidSpecError("wheelie config does not match the model");
  }
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(2 * n);
  x0.head(n) = config.q;
  LinearizedSystem sys = LinearizeFunction(
      [&](const Eigen::VectorXd& x, const Eigen::VectorXd& u) {
        return dyn.Derivative(x, u);
      },
      x0, config.u, eps);
  sys.state_names = StateNames(model);
  sys.input_names = InputNames(model);
  sys.config = config;
  return sys;
}

namespace {

void WriteMatrix(std::ostringstream& out, const Eigen::MatrixXd& mat) {
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    for (Eigen::Index j = 0; j < mat.cols(); ++j) {
      if (j > 0) out << ' ';
      out << FormatShortest(mat(i, j));
    }
    out << '\n';
  }
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::string_view Next() {
    if (pos_ >= text_.size()) Fail("unexpected end of input");
    const std::size_t end = std::min(text_.find('\n', pos_), text_.size());
    std::string_view line = text_.substr(pos_, end - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = end + 1;
    ++line_;
    return line;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw InvalidSpecError("linear system text, line " +
                           std::to_string(line_) + ": " + what);
  }

  bool AtEnd() const { return pos_ >= text_.size(); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 0;
};

std::vector<std::string> Words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

int ReadCount(LineReader& in, std::string_view key) {
  const std::vector<std::string> w = Words(in.Next());
  double v = 0.0;
  if (w.size() != 2 || w[0] != key || !ParseDouble(w[1], v) || v < 0 ||
      v != std::floor(v)) {
    in.Fail("expected '" + std::string(key) + " <count>'");
  }
  return static_cast<int>(v);
}

std::vector<std::string> ReadNames(LineReader& in, int count) {
  std::vector<std::string> w = Words(in.Next());
  if (static_cast<int>(w.size()) != count) {
    in.Fail("expected " + std::to_string(count) + " names");
  }
  return w;
}

Eigen::MatrixXd ReadMatrix(LineReader& in, std::string_view tag, int rows,
                           int cols) {
  if (Words(in.Next()) != std::vector<std::string>{std::string(tag)}) {
    in.Fail("expected '" + std::string(tag) + "'");
  }
  Eigen::MatrixXd mat(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const std::vector<std::string> w = Words(in.Next());
    if (static_cast<int>(w.size()) != cols) {
      in.Fail("expected " + std::to_string(cols) + " values");
    }
    for (int j = 0; j < cols; ++j) {
      if (!ParseDouble(w[j], mat(i, j))) in.Fail("bad number '" + w[j] + "'");
    }
  }
  return mat;
}

}  // namespace

std::string FormatLinearizedSystem(const LinearizedSystem& sys) {
  Validate(sys);
  std::ostringstream out;
  out << kMagic << '\n';
  out << "states " << sys.states() << '\n';
  for (std::size_t i = 0; i < sys.state_names.size(); ++i) {
    out << (i ? " " : "") << sys.state_names[i];
  }
  out << "\ninputs " << sys.inputs() << '\n';
  for (std::size_t i = 0; i < sys.input_names.size(); ++i) {
    out << (i ? " " : "") << sys.input_names[i];
  }
  out << "\nA\n";
  WriteMatrix(out, sys.A);
  out << "B\n";
  WriteMatrix(out, sys.B);
  return out.str();
}

LinearizedSystem ParseLinearizedSystem(std::string_view text) {
  LineReader in(text);
  if (in.Next() != kMagic) in.Fail("missing header");
  LinearizedSystem sys;
  const int n = ReadCount(in, "states");
  sys.state_names = n > 0 ? ReadNames(in, n) : (in.Next(), std::vector<std::string>{});
  const int m = ReadCount(in, "inputs");
  sys.input_names = m > 0 ? ReadNames(in, m) : (in.Next(), std::vector<std::string>{});
  sys.A = ReadMatrix(in, "A", n, n);
  sys.B = ReadMatrix(in, "B", n, m);
  Validate(sys);
  return sys;
}

}  // namespace umv::balance
