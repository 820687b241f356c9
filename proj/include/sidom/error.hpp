// Copyright 2026 The sidom Authors.
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

#ifndef SIDOM_ERROR_HPP_
#define SIDOM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sidom {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kNotStrong,
  kNotApplicable,
  kSizeLimit,
};

// Every failure raised by the library carries one of the codes above so the
// C API can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// Message used whenever a strong in-domatic quantity is requested for a
// digraph that is not strong.
inline constexpr const char* kNoPartitionMessage =
    "digraph is not strong; a digraph admits a strong in-domatic partition "
    "if and only if it is strong";

}  // namespace sidom

#endif  // SIDOM_ERROR_HPP_
