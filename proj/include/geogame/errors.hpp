// Copyright 2026 The geogame Authors
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

#ifndef GEOGAME_ERRORS_HPP
#define GEOGAME_ERRORS_HPP

#include <stdexcept>

namespace geogame {

// An agreement whose deviation loss coincides with the punishment loss: the
// discount-threshold ratio has no meaning there and callers must not average
// over it.
class SingularAgreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No interval of agreements keeps both players weakly better off than mutual
// punishment (degenerate scenarios, or a negative radicand in the edge
// computation).
class NoSustainableRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The scalar minimizer could not produce a finite result (e.g. the objective
// was singular at every probe).
class OptimizationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace geogame

#endif  // GEOGAME_ERRORS_HPP
