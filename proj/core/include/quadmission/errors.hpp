/*
 * Copyright 2026 The Quadmission Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QUADMISSION_ERRORS_HPP_
#define QUADMISSION_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace quadmission {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition or type invariant was violated by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Structured-text input could not be parsed. `line` is 1-based; 0 means
// the location is unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// A world point fell outside the camera ground footprint.
class OutOfFrameError : public Error {
 public:
  using Error::Error;
};

// The language backend failed or returned an unusable reply. Carries the
// raw payload for diagnosis.
class ExtractionError : public Error {
 public:
  ExtractionError(const std::string& what, std::string raw_reply)
      : Error(what), raw_reply_(std::move(raw_reply)) {}
  const std::string& raw_reply() const { return raw_reply_; }

 private:
  std::string raw_reply_;
};

// A point reply contained no point annotations.
class EmptyDetectionError : public ExtractionError {
 public:
  using ExtractionError::ExtractionError;
};

// A point reply contained annotations that violate the wire format.
class MalformedReplyError : public ExtractionError {
 public:
  using ExtractionError::ExtractionError;
};

// The multimodal pipeline produced no usable mission (e.g. zero targets).
class MissionPlanningError : public Error {
 public:
  using Error::Error;
};

// A scene fixture lacks the annotations a mock backend needs.
class FixtureError : public Error {
 public:
  using Error::Error;
};

// The plant produced a non-finite state.
class SimulationFault : public Error {
 public:
  using Error::Error;
};

}  // namespace quadmission

#endif  // QUADMISSION_ERRORS_HPP_
