// Copyright 2026 The svrgeg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SVRGEG_ERROR_H_
#define SVRGEG_ERROR_H_

#include <stdexcept>
#include <string>

namespace svrgeg {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments, dimension mismatches, unsupported set/problem pairs.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A solver produced a non-finite value. Carries the iteration and algorithm.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& algorithm, long long iteration,
                 const std::string& what)
      : Error(algorithm + ": non-finite value at iteration " +
              std::to_string(iteration) + " (" + what + ")"),
        algorithm_(algorithm),
        iteration_(iteration) {}

  const std::string& algorithm() const { return algorithm_; }
  long long iteration() const { return iteration_; }

 private:
  std::string algorithm_;
  long long iteration_;
};

}  // namespace svrgeg

#endif  // SVRGEG_ERROR_H_
