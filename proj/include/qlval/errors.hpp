// Copyright 2026 The qlval Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qlval {

/**
 * Coarse error families, used by the CLI to map exceptions to exit codes.
 *
 *   Parse      -> exit 2   malformed input (JSON syntax, schema, field types)
 *   Dimension  -> exit 3   shape mismatches (vector vs matrix, non-square, ...)
 *   Numeric    -> exit 4   failures arising during computation
 *   Validation -> exit 5   inputs that parse but violate a domain precondition
 */
enum class ErrorKind { Parse, Dimension, Numeric, Validation };

/** Base class for all library errors. */
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const char* code, const std::string& what)
      : std::runtime_error(what), kind_(kind), code_(code) {}

  ErrorKind kind() const { return kind_; }
  /** Stable machine-parsable tag, e.g. "E_ZERO_PIVOT". */
  const char* code() const { return code_; }

 private:
  ErrorKind kind_;
  const char* code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& what)
      : Error(ErrorKind::Parse, "E_PARSE", what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what)
      : Error(ErrorKind::Dimension, "E_DIMENSION", what) {}
};

struct DimensionTooSmall : Error {
  explicit DimensionTooSmall(const std::string& what)
      : Error(ErrorKind::Dimension, "E_DIMENSION_TOO_SMALL", what) {}
};

struct ZeroVector : Error {
  explicit ZeroVector(const std::string& what)
      : Error(ErrorKind::Validation, "E_ZERO_VECTOR", what) {}
};

struct NotHermitian : Error {
  explicit NotHermitian(const std::string& what)
      : Error(ErrorKind::Validation, "E_NOT_HERMITIAN", what) {}
};

struct NotIdempotent : Error {
  explicit NotIdempotent(const std::string& what)
      : Error(ErrorKind::Validation, "E_NOT_IDEMPOTENT", what) {}
};

struct RankUnsupported : Error {
  explicit RankUnsupported(const std::string& what)
      : Error(ErrorKind::Validation, "E_RANK_UNSUPPORTED", what) {}
};

struct ZeroPivot : Error {
  explicit ZeroPivot(const std::string& what)
      : Error(ErrorKind::Numeric, "E_ZERO_PIVOT", what) {}
};

struct ZeroProjector : Error {
  explicit ZeroProjector(const std::string& what)
      : Error(ErrorKind::Validation, "E_ZERO_PROJECTOR", what) {}
};

struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& what)
      : Error(ErrorKind::Validation, "E_PRECONDITION", what) {}
};

struct InvalidFamily : Error {
  explicit InvalidFamily(const std::string& what)
      : Error(ErrorKind::Validation, "E_INVALID_FAMILY", what) {}
};

struct NotFinalized : Error {
  explicit NotFinalized(const std::string& what)
      : Error(ErrorKind::Numeric, "E_NOT_FINALIZED", what) {}
};

struct DegenerateSeries : Error {
  explicit DegenerateSeries(const std::string& what)
      : Error(ErrorKind::Numeric, "E_DEGENERATE_SERIES", what) {}
};

struct Infeasible : Error {
  explicit Infeasible(const std::string& what)
      : Error(ErrorKind::Numeric, "E_INFEASIBLE", what) {}
};

struct UnsupportedDim : Error {
  explicit UnsupportedDim(const std::string& what)
      : Error(ErrorKind::Validation, "E_UNSUPPORTED_DIM", what) {}
};

}  // namespace qlval
