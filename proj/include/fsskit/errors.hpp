// Copyright 2026 The fsskit Authors
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

#ifndef FSSKIT_ERRORS_HPP_
#define FSSKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fsskit {

// Base class for every error thrown by the library. Callers that only
// want to distinguish "scheme error" from "bug" can catch this.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class MismatchedField : public Error {
 public:
  explicit MismatchedField(const std::string& msg) : Error(msg) {}
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

class NotPrime : public Error {
 public:
  explicit NotPrime(const std::string& msg) : Error(msg) {}
};

class DuplicatePoint : public Error {
 public:
  explicit DuplicatePoint(const std::string& msg) : Error(msg) {}
};

class InconsistentPoints : public Error {
 public:
  explicit InconsistentPoints(const std::string& msg) : Error(msg) {}
};

class ThresholdOutOfRange : public Error {
 public:
  explicit ThresholdOutOfRange(const std::string& msg) : Error(msg) {}
};

class FieldTooSmall : public Error {
 public:
  explicit FieldTooSmall(const std::string& msg) : Error(msg) {}
};

class NotEnoughShares : public Error {
 public:
  explicit NotEnoughShares(const std::string& msg) : Error(msg) {}
};

class InconsistentShares : public Error {
 public:
  explicit InconsistentShares(const std::string& msg) : Error(msg) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class TooManyKeys : public Error {
 public:
  explicit TooManyKeys(const std::string& msg) : Error(msg) {}
};

class ParamViolation : public Error {
 public:
  explicit ParamViolation(const std::string& msg) : Error(msg) {}
};

class LengthMismatch : public Error {
 public:
  explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};

class ShareSetInvalid : public Error {
 public:
  explicit ShareSetInvalid(const std::string& msg) : Error(msg) {}
};

class GroupTooSmall : public Error {
 public:
  explicit GroupTooSmall(const std::string& msg) : Error(msg) {}
};

class SerializationError : public Error {
 public:
  explicit SerializationError(const std::string& msg) : Error(msg) {}
};

class SelectorOutOfRange : public Error {
 public:
  explicit SelectorOutOfRange(const std::string& msg) : Error(msg) {}
};

class InfeasibleEnumeration : public Error {
 public:
  explicit InfeasibleEnumeration(const std::string& msg) : Error(msg) {}
};

class DegreeTooHigh : public Error {
 public:
  explicit DegreeTooHigh(const std::string& msg) : Error(msg) {}
};

}  // namespace fsskit

#endif  // FSSKIT_ERRORS_HPP_
