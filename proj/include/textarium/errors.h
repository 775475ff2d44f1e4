// Copyright 2026 The Textarium Authors
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

#ifndef TEXTARIUM_ERRORS_H_
#define TEXTARIUM_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace textarium {

// Base class for every error raised by the library. Callers that only care
// about success/failure catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An index or span outside the valid range.
class RangeError : public Error {
 public:
  RangeError(const std::string& what, std::size_t offending_index)
      : Error(what), offending_index_(offending_index) {}
  std::size_t offending_index() const { return offending_index_; }

 private:
  std::size_t offending_index_;
};

// Input text that is not valid UTF-8 (or looks binary).
class EncodingError : public Error {
 public:
  EncodingError(const std::string& what, std::size_t byte_offset)
      : Error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Malformed regular expression. `position` counts code points from the
// start of the pattern.
class PatternError : public Error {
 public:
  PatternError(const std::string& message, std::size_t position)
      : Error("pattern error at " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Malformed URL fragment. `position` is a byte offset into the fragment.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error("parse error at " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A structurally invalid interpretation state (overlaps, bad ids, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The state was made for a different source text.
class DocumentMismatchError : public Error {
 public:
  using Error::Error;
};

// An annotation's recorded words no longer match the document.
class StaleStateError : public Error {
 public:
  StaleStateError(const std::string& what, std::size_t annotation)
      : Error(what), annotation_(annotation) {}
  std::size_t annotation() const { return annotation_; }

 private:
  std::size_t annotation_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// An essay embed points at a document the project does not contain.
class BrokenEmbedError : public Error {
 public:
  using Error::Error;
};

// Refusal to scaffold a project into a non-empty directory.
class ScaffoldError : public Error {
 public:
  using Error::Error;
};

// A malformed project configuration file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// The static server could not start.
class ServeError : public Error {
 public:
  using Error::Error;
};

}  // namespace textarium

#endif  // TEXTARIUM_ERRORS_H_
