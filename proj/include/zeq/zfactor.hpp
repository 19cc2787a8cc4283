/*
   Copyright 2026 The zeq authors

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

#ifndef ZEQ_ZFACTOR_HPP
#define ZEQ_ZFACTOR_HPP

#include <vector>

#include "zeq/rational.hpp"
#include "zeq/upoly.hpp"

namespace zeq {

struct QFactor {
    UPoly<Rational> poly;  // monic irreducible
    int multiplicity = 1;
};

// Complete factorization over Q:  f = lead * prod poly_i^mult_i.
// Factors are monic irreducible, sorted by degree then by ascending
// coefficient sequence, so the order is deterministic.
std::vector<QFactor> factor_rational_poly(const UPoly<Rational>& f, Rational* lead = nullptr);

bool is_irreducible_q(const UPoly<Rational>& f);

}  // namespace zeq

#endif
