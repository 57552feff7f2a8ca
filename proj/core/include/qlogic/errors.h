// Copyright 2026 The qlogic Authors
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

#ifndef QLOGIC_ERRORS_H
#define QLOGIC_ERRORS_H

#include <stdexcept>
#include <string>

namespace qlogic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
   public:
    using Error::Error;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

class DimensionOverflow : public Error {
   public:
    using Error::Error;
};

class NonHermitian : public Error {
   public:
    using Error::Error;
};

class NotAProjection : public Error {
   public:
    using Error::Error;
};

class NotAState : public Error {
   public:
    using Error::Error;
};

/// The meet or join of two non-commuting events was requested.
class IncompatiblePair : public Error {
   public:
    using Error::Error;
};

/// Conditioning on an event of probability zero.
class ConditionOnNull : public Error {
   public:
    using Error::Error;
};

class ZeroEvent : public Error {
   public:
    using Error::Error;
};

class NotAnAtom : public Error {
   public:
    using Error::Error;
};

class DomainError : public Error {
   public:
    using Error::Error;
};

class BasisDegenerate : public Error {
   public:
    using Error::Error;
};

/// efe is not proportional to e where the construction promised it would be.
class TransitionNotStateIndependent : public Error {
   public:
    using Error::Error;
};

class ProtocolViolation : public Error {
   public:
    using Error::Error;
};

}  // namespace qlogic

#endif  // QLOGIC_ERRORS_H
