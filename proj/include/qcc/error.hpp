// Copyright 2026 The qcc Authors
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

#ifndef QCC_ERROR_HPP
#define QCC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qcc {

/// Raised when an input violates a mathematical precondition (non-prime
/// characteristic, catastrophic encoder, non-commuting stabilizer, ...).
class DomainError : public std::runtime_error {
   public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the text readers; the message names the offending line.
class ParseError : public DomainError {
   public:
    explicit ParseError(const std::string& what) : DomainError(what) {}
};

}  // namespace qcc

#endif
