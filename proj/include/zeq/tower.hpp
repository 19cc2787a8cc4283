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

#ifndef ZEQ_TOWER_HPP
#define ZEQ_TOWER_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "zeq/rational.hpp"
#include "zeq/upoly.hpp"

namespace zeq {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

// Element of a tower of algebraic extensions of Q. A null tower pointer
// means the ground field; otherwise the element is a polynomial of degree
// < deg(minpoly) in the top generator with coefficients one level down.
// Values are immutable after construction; mixed-level operands embed
// automatically when one tower is an extension of the other.
class TowerElem {
  public:
    TowerElem() : base_(0) {}
    TowerElem(long n) : base_(n) {}
    TowerElem(const Rational& r) : base_(r) {}
    TowerElem(TowerPtr tower, std::vector<TowerElem> coords);

    int level() const;
    const TowerPtr& tower() const { return tower_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()
    const std::vector<TowerElem>& coords() const { return coords_; }
    const Rational& base() const { return base_; }

    TowerElem operator-() const;
    friend TowerElem operator+(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator-(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
    friend bool operator==(const TowerElem& a, const TowerElem& b);
    friend bool operator!=(const TowerElem& a, const TowerElem& b) { return !(a == b); }

    TowerElem inverse() const;
    TowerElem promote(const TowerPtr& target) const;

    std::string str() const;

  private:
    TowerPtr tower_;                 // null at ground level
    Rational base_;                  // payload at ground level
    std::vector<TowerElem> coords_;  // payload above ground, ascending powers
    friend class Tower;
};

// deterministic total order used for tie-breaking (factor enumeration)
int compare(const TowerElem& a, const TowerElem& b);

class Tower : public std::enable_shared_from_this<Tower> {
  public:
    static TowerPtr extend(TowerPtr parent, std::string gen_name, UPoly<TowerElem> minpoly);

    const TowerPtr& parent() const { return parent_; }
    const std::string& gen_name() const { return gen_name_; }
    const UPoly<TowerElem>& minpoly() const { return minpoly_; }
    int depth() const { return depth_; }

    TowerElem generator() const;

  private:
    Tower() = default;
    TowerPtr parent_;
    std::string gen_name_;
    UPoly<TowerElem> minpoly_;  // monic irreducible over parent
    int depth_ = 0;
};

int tower_depth(const TowerPtr& t);
bool tower_is_prefix(const TowerPtr& prefix, const TowerPtr& of);
// least common tower of two compatible towers; throws IncompatibleDomains
TowerPtr tower_join(const TowerPtr& a, const TowerPtr& b);
// names of all generators, bottom first
std::vector<std::string> tower_generator_names(const TowerPtr& t);
// minpoly coefficient rows, serialized bottom first (for reports)
std::vector<std::pair<std::string, std::string>> tower_description(const TowerPtr& t);

// Factorization over the tower (Trager): f monic; returns monic irreducible
// factors with multiplicities, sorted deterministically.
struct TowerFactor {
    UPoly<TowerElem> poly;
    int multiplicity = 1;
};
std::vector<TowerFactor> factor_over_tower(const TowerPtr& tower, const UPoly<TowerElem>& f);

// Result of adjoining a root of a monic polynomial.
struct Adjoined {
    TowerPtr tower;           // possibly extended
    TowerElem root;           // a root of minpoly in the new tower
    bool was_reducible;       // minpoly factored over the input tower
    UPoly<TowerElem> factor;  // the irreducible factor actually used
};
// Picks the deterministically-first irreducible factor of minpoly; extends
// the tower when that factor has degree >= 2, otherwise returns the field
// unchanged with the rational-in-tower root.
Adjoined adjoin(const TowerPtr& tower, const UPoly<TowerElem>& minpoly, const std::string& gen_name);

// All roots of f (with multiplicity), adjoining as needed; deterministic order.
struct RootList {
    TowerPtr tower;
    std::vector<std::pair<TowerElem, int>> roots;
};
RootList all_roots(const TowerPtr& tower, const UPoly<TowerElem>& f, const std::string& name_hint);

// deterministic m-th root of a nonzero element, adjoining if needed
std::pair<TowerPtr, TowerElem> nth_root_elem(const TowerPtr& tower, const TowerElem& c, unsigned m);

}  // namespace zeq

#endif
