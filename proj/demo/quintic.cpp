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

// Prints the a-number of the Fermat quintic surface and threefold for the
// first few primes, next to the Hasse polynomial of the Dwork family.

#include <iostream>

#include <anumber/anumber.hpp>

int main() {
    using namespace anumber;
    for (auto p : primes_in_range(2, 40)) {
        if (p == 5) continue;
        const PrimeField F(p);
        const auto surface = a_number(FermatDescriptor(5, 3, F));
        const auto threefold = a_number(FermatDescriptor(5, 4, F));
        const auto h = hasse_polynomial(DworkFamily(F));
        std::cout << "p=" << p << "  surface a=" << surface.a_number << "  threefold a=" << threefold.a_number
                  << "  ord0 H=" << *h.ord0 << "  H(a)=" << h.polynomial << "\n";
    }
}
