// Copyright 2026 The resumeann Authors.
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

#ifndef RESUMEANN_ERRORS_H_
#define RESUMEANN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace resumeann {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. Carries the source name and 1-based line number.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string source, int line, const std::string &message)
      : Error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line) {}

  const std::string &source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

// Input bytes are not valid UTF-8.
class EncodingError : public Error {
 public:
  using Error::Error;
};

// A class name that does not resolve in the active ontology.
class UnknownClass : public Error {
 public:
  explicit UnknownClass(const std::string &name)
      : Error("unknown ontology class: " + name), name_(name) {}
  const std::string &name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace resumeann

#endif  // RESUMEANN_ERRORS_H_
