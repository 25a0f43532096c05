#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "sqa/errors.hpp"
#include "sqa/path_algebra.hpp"

namespace testing {

// "y1 x2 y2" -> path with y1 leftmost.
inline sqa::Path path_of(const sqa::Quiver& q, const std::string& names) {
  std::istringstream in(names);
  std::vector<int> ids;
  for (std::string w; in >> w;) {
    auto id = q.find_arrow(w);
    if (!id) throw sqa::UnknownArrow(w);
    ids.push_back(*id);
  }
  return sqa::path_from(q, ids);
}

inline sqa::AlgebraElement el(const sqa::Quiver& q, const std::string& names, const sqa::Rational& c = 1) {
  return sqa::AlgebraElement(path_of(q, names), c);
}

inline int arrow(const sqa::Quiver& q, const std::string& name) {
  auto id = q.find_arrow(name);
  if (!id) throw sqa::UnknownArrow(name);
  return *id;
}

}  // namespace testing
