#include "helly/vertex_set.hpp"

#include <algorithm>

namespace helly {

VertexSet make_set(int n, const std::vector<int>& members) {
  VertexSet s(static_cast<std::size_t>(n));
  for (int v : members) s.set(static_cast<std::size_t>(v));
  return s;
}

std::vector<int> members_of(const VertexSet& s) {
  std::vector<int> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

bool canonical_less(const VertexSet& a, const VertexSet& b) {
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != VertexSet::npos && j != VertexSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return i == VertexSet::npos && j != VertexSet::npos;
}

}  // namespace helly
