// common/error.h

// Copyright 2026  The ugp authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef UGP_COMMON_ERROR_H_
#define UGP_COMMON_ERROR_H_

#include <sstream>
#include <stdexcept>
#include <string>

namespace ugp {

enum class ErrorCode {
  kInvalidArgument,  // caller violated a precondition
  kDomain,           // input outside the operation's domain
  kIo,               // file or format problem
  kInternal,         // broken internal invariant
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

namespace internal {
class ErrorStream {
 public:
  explicit ErrorStream(ErrorCode code) : code_(code) {}
  [[noreturn]] ~ErrorStream() noexcept(false) { throw Error(code_, os_.str()); }
  template <typename T>
  ErrorStream &operator<<(const T &v) {
    os_ << v;
    return *this;
  }

 private:
  ErrorCode code_;
  std::ostringstream os_;
};
}  // namespace internal

}  // namespace ugp

// Usage: UGP_RAISE(kDomain) << "k=" << k << " exceeds N=" << n;
#define UGP_RAISE(code) ::ugp::internal::ErrorStream(::ugp::ErrorCode::code)

#define UGP_ASSERT(cond)                                              \
  do {                                                                \
    if (!(cond))                                                      \
      throw ::ugp::Error(::ugp::ErrorCode::kInternal,                 \
                         std::string("assertion failed: ") + #cond +  \
                             " at " + __FILE__ + ":" +                \
                             std::to_string(__LINE__));               \
  } while (0)

#endif  // UGP_COMMON_ERROR_H_
