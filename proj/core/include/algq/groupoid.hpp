#pragma once

// Finite groupoids given by explicit tables: a unit set, an arrow set with
// source d and range r, a partial multiplication defined on composable
// pairs (d(g) = r(h)), an inverse map, and the unit embedding.

#include "algq/rational.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace algq {

class FiniteGroupoid {
 public:
  // Tables use string ids. mul maps composable (g,h) to gh; unit_arrows maps
  // each unit to its identity arrow. Structural problems (unknown ids,
  // duplicate ids, missing units) throw; violations of the groupoid axioms
  // are left for check_groupoid to report.
  FiniteGroupoid(std::vector<std::string> units,
                 std::vector<std::string> arrow_ids,
                 std::vector<std::pair<int, int>> arrow_ends,  // (d,r) unit indices
                 std::map<std::pair<int, int>, int> mul,
                 std::vector<int> inverse,
                 std::vector<int> unit_arrows);

  static FiniteGroupoid from_tables(
      const std::vector<std::string>& units,
      const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>&
          arrows,  // id -> (d,r)
      const std::vector<std::array<std::string, 3>>& mul,  // (g,h,gh)
      const std::map<std::string, std::string>& inverse,
      const std::map<std::string, std::string>& unit_arrows);

  int units() const { return static_cast<int>(unit_ids_.size()); }
  int arrows() const { return static_cast<int>(arrow_ids_.size()); }
  const std::string& unit_id(int x) const { return unit_ids_.at(x); }
  const std::string& arrow_id(int g) const { return arrow_ids_.at(g); }
  int unit_index(const std::string& id) const;
  int arrow_index(const std::string& id) const;

  int d(int g) const { return ends_.at(g).first; }
  int r(int g) const { return ends_.at(g).second; }
  bool composable(int g, int h) const { return d(g) == r(h); }
  // gh if the pair is listed, otherwise nullopt.
  std::optional<int> mul(int g, int h) const;
  int mul_or_throw(int g, int h) const;
  int inverse(int g) const { return inv_.at(g); }
  int unit_arrow(int x) const { return unit_arrows_.at(x); }

  // Arrows h with d(h) = x.
  const std::vector<int>& arrows_into(int x) const { return by_d_.at(x); }

  friend bool operator==(const FiniteGroupoid&, const FiniteGroupoid&) = default;

 private:
  std::vector<std::string> unit_ids_;
  std::vector<std::string> arrow_ids_;
  std::vector<std::pair<int, int>> ends_;
  std::map<std::pair<int, int>, int> mul_;
  std::vector<int> inv_;
  std::vector<int> unit_arrows_;
  std::vector<std::vector<int>> by_d_;
  std::map<std::string, int> unit_lookup_;
  std::map<std::string, int> arrow_lookup_;
};

using GroupoidRef = std::shared_ptr<const FiniteGroupoid>;

struct GroupoidReport {
  // (i): multiplication defined exactly on composable pairs, with the right
  // ends, and associative
  std::vector<std::string> domain;
  std::vector<std::string> ends;
  std::vector<std::string> associativity;
  // (ii): unit arrows behave as two-sided identities and embed injectively
  std::vector<std::string> units;
  // (iii): inverses have swapped ends and compose to units
  std::vector<std::string> inverses;

  bool ok() const {
    return domain.empty() && ends.empty() && associativity.empty() && units.empty() &&
           inverses.empty();
  }
};

// Exhaustive verification over all composable pairs and triples.
GroupoidReport check_groupoid(const FiniteGroupoid& G);

// A finite group as a one-unit table.
struct FiniteGroup {
  std::vector<std::string> elements;        // elements[0] is the identity
  std::vector<std::vector<int>> mul;        // mul[a][b]
  std::vector<int> inverse;

  void validate() const;  // group axioms; throws on failure
};

FiniteGroup cyclic_group(int n);

// All ordered pairs (a,b) of n points, (a,b)(b,c) = (a,c).
FiniteGroupoid pair_groupoid(int n);

// The one-unit groupoid carrying a finite group.
FiniteGroupoid group_groupoid(const FiniteGroup& G);

// Arrows are (point, group element) with d(p,g) = p.g, r(p,g) = p and
// (p,g)(p.g,h) = (p,gh). The action maps (point index, element index) to a
// point index and must be a right action; that is validated here.
FiniteGroupoid transformation_groupoid(const std::vector<std::string>& points,
                                       const FiniteGroup& group,
                                       const std::vector<std::vector<int>>& action);

}  // namespace algq
