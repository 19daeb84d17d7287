// Copyright 2026 The heliwave Authors
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

#ifndef HELIWAVE_ERRORS_HPP
#define HELIWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace heliwave {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Non-finite or out-of-range input.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Parameters that would overflow double precision (extreme rapidities).
class RangeError : public Error {
   public:
    using Error::Error;
};

/// A closed-form Wigner angle evaluated on its singular locus.
class SingularityError : public Error {
   public:
    SingularityError(double varpi, double theta, double phi);

    double varpi;
    double theta;
    double phi;
};

/// A momentum equal to the standard direction k where the construction excludes it.
class ExcludedDirectionError : public Error {
   public:
    using Error::Error;
};

/// A projection that annihilated the state (no detection possible).
class NullOutcomeError : public Error {
   public:
    using Error::Error;
};

/// Every candidate sample fell inside an exclusion band.
class EmptyPacketError : public Error {
   public:
    using Error::Error;
};

/// An internal cross-check failed (e.g. a little-group element that does not fix k).
class ConsistencyError : public Error {
   public:
    using Error::Error;
};

}  // namespace heliwave

#endif
