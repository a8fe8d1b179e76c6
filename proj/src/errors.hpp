/*
   Copyright 2026 The sagin-outage authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>

namespace sagin {

// Invalid input or parameter outside a function's domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
// An evaluator failed to converge or produced garbage.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sagin
