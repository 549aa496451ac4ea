/*
   Copyright 2026 The anumber Authors

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

#ifndef ANUMBER_ERRORS_HPP
#define ANUMBER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace anumber {

// Errors caused by the caller (bad degree, composite modulus, p | d, ...).
// The CLI maps every subclass of input_error to exit code 2.
class input_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class division_by_zero : public input_error {
   public:
    division_by_zero() : input_error("division by zero in prime field") {}
};

class shape_error : public input_error {
   public:
    using input_error::input_error;
};

class domain_error : public input_error {
   public:
    using input_error::input_error;
};

class invalid_characteristic : public input_error {
   public:
    invalid_characteristic() : input_error("characteristic divides degree") {}
    using input_error::input_error;
};

// Requested quantity does not exist for this input (e.g. empty level).
class not_applicable : public input_error {
   public:
    using input_error::input_error;
};

// A proven invariant failed. Never expected; exit code 1.
class internal_assertion : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace anumber

#endif
