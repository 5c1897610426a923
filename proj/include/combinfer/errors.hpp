// Copyright 2026 The combinfer Authors.
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

#ifndef COMBINFER_ERRORS_HPP
#define COMBINFER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace combinfer {

/// Base class for every contract violation raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define COMBINFER_DEFINE_ERROR(NAME)          \
  class NAME : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

COMBINFER_DEFINE_ERROR(DuplicateAddress);    // same address recorded twice in one trace
COMBINFER_DEFINE_ERROR(AddressCollision);    // merge of traces with overlapping addresses
COMBINFER_DEFINE_ERROR(InvalidParams);       // distribution parameters outside the family's space
COMBINFER_DEFINE_ERROR(InvalidValue);        // NaN or wrong-kind value handed to a density
COMBINFER_DEFINE_ERROR(OffSupport);          // score requested at a zero-density point
COMBINFER_DEFINE_ERROR(UnsupportedProposal); // proposal/target site roles disagree
COMBINFER_DEFINE_ERROR(AllWeightsZero);      // every particle weight is -inf
COMBINFER_DEFINE_ERROR(NonFiniteGradient);   // optimizer fed a NaN/inf gradient
COMBINFER_DEFINE_ERROR(NumericalUnderflow);  // a forward-message normalizer vanished
COMBINFER_DEFINE_ERROR(MissingConditioning); // score-only evaluation hit an unconditioned latent
COMBINFER_DEFINE_ERROR(ArityMismatch);       // model invoked with the wrong input count
COMBINFER_DEFINE_ERROR(InvalidGeometry);     // ball simulator settings incompatible with the box
COMBINFER_DEFINE_ERROR(ConfigError);         // run configuration failed validation

#undef COMBINFER_DEFINE_ERROR

}  // namespace combinfer

#endif  // COMBINFER_ERRORS_HPP
