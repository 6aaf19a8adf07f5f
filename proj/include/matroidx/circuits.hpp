// Copyright 2026 The Authors.
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

#ifndef MATROIDX_CIRCUITS_HPP
#define MATROIDX_CIRCUITS_HPP

#include <string>

#include "matroidx/matroid.hpp"

namespace matroidx {

// The unique circuit inside I + e, found by element-removal probing with at
// most |I| independence calls. Preconditions: I independent, I + e dependent.
ElementSet fundamental_circuit(const MatroidOracle& m, const ElementSet& independent,
                               ElementId e);

struct AxiomReport {
  bool passed = true;
  std::string violation;  // empty when passed
  std::string witness;    // offending set(s), when any

  std::string to_string() const;
};

// Exhaustive check of the empty-set, downward-closure and exchange axioms.
// Exchange is verified through the equal-size-of-maximal-subsets
// characterization, which is equivalent given downward closure. Refuses
// universes larger than 12 elements.
AxiomReport verify_matroid_axioms(const MatroidOracle& m);

}  // namespace matroidx

#endif  // MATROIDX_CIRCUITS_HPP
