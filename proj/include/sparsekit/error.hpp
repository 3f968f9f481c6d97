// Copyright 2026 The sparsekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPARSEKIT_ERROR_HPP
#define SPARSEKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sparsekit {

enum class ErrorCode {
  InvalidArgument = 1,
  DimensionMismatch,
  Singular,       // normal matrix or restricted LS system has deficient rank
  Degenerate,     // e.g. zero column in a dictionary, zero hyperslab normal
  GuardExceeded,  // combinatorial search refused
  Io,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const char* what) {
  if (!condition) throw Error(code, what);
}

}  // namespace sparsekit

#endif  // SPARSEKIT_ERROR_HPP
