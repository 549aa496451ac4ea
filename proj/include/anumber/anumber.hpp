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

#ifndef ANUMBER_ANUMBER_HPP
#define ANUMBER_ANUMBER_HPP

#include "combinatorics.hpp"
#include "dwork.hpp"
#include "errors.hpp"
#include "fermat.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "prime_field.hpp"
#include "residue.hpp"
#include "sparse_polynomial.hpp"

#define ANUMBER_VERSION "0.1.0"

#endif
