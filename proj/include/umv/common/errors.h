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
#ifndef UMV_COMMON_ERRORS_H_
#define UMV_COMMON_ERRORS_H_

#include <stdexcept>
#include <string>

namespace umv {

// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A spec value violates its invariants (non-positive length, empty grid...).
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

// A mass matrix or factorization was not positive definite.
class NumericalSingularityError : public Error {
 public:
  using Error::Error;
};

// Integration produced non-finite values.
class DivergenceError : public Error {
 public:
  DivergenceError(double time, const std::string& what)
      : Error(what + " (t = " + std::to_string(time) + " s)"), time_(time) {}
  double time() const { return time_; }

 private:
  double time_;
};

class DegenerateTraceError : public Error {
 public:
  using Error::Error;
};

class NoLiftoffError : public Error {
 public:
  using Error::Error;
};

class HorizonOverflowError : public Error {
 public:
  using Error::Error;
};

class LinearizationError : public Error {
 public:
  using Error::Error;
};

class AggregateUndefinedError : public Error {
 public:
  using Error::Error;
};

}  // namespace umv

#endif  // UMV_COMMON_ERRORS_H_
