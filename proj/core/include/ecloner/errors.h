// Copyright 2026 The ecloner Authors
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

#ifndef ECLONER_ERRORS_H_
#define ECLONER_ERRORS_H_

#include <stdexcept>

// Argument errors (bad sizes, out-of-range indices, non-positive variances)
// are reported as std::invalid_argument. The types below cover the
// physics-specific failure modes.

namespace ecloner {

/// A covariance matrix that violates cov + iΩ ⪰ 0.
class UncertaintyViolation : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Input for which a quantity is undefined (zero conditioning variance,
/// singular overlap matrix).
class DegenerateInput : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A result that cannot occur for valid inputs, e.g. a negative radicand in
/// the inseparability product.
class InternalConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace ecloner

#endif  // ECLONER_ERRORS_H_
