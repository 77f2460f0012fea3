#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dblgpd/groupoid.hpp"
#include "dblgpd/report.hpp"

namespace dblgpd {

/// An explicitly tabulated groupoid. Objects and arrows are referred to by
/// index; names are only for printing. The tables are plain data so that
/// tests can corrupt them and watch validate_groupoid catch it.
struct FiniteGroupoid {
  struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;
  };

  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<int> identity;                  // object -> arrow
  std::vector<int> inverse;                   // arrow -> arrow
  std::map<std::pair<int, int>, int> compose; // (a, b) -> a then b

  [[nodiscard]] int object_index(const std::string& name) const;
  [[nodiscard]] int arrow_index(const std::string& name) const;
};

/// Lists every violated axiom instance; an empty report means G is a
/// groupoid. Exhaustive over all arrows, pairs and triples.
AuditReport validate_groupoid(const FiniteGroupoid& g);

FiniteGroupoid discrete(const std::vector<std::string>& objects);
FiniteGroupoid indiscrete(const std::vector<std::string>& objects);

/// Kernel pair of q: X -> Y, given as the image of each element of X.
/// One arrow (x, x') for every pair with q(x) = q(x').
FiniteGroupoid kernel_pair(const std::vector<std::string>& domain,
                           const std::map<std::string, std::string>& q);

/// Disjoint union of finite groupoids. Names must already be distinct
/// across the parts.
FiniteGroupoid disjoint_union(const std::vector<FiniteGroupoid>& parts);

/// View as a computable groupoid over names. The length measure is 0 for
/// identities and 1 for every other arrow.
Groupoid<std::string, std::string> as_groupoid(const FiniteGroupoid& g);

}  // namespace dblgpd
