#pragma once

#include <boost/dynamic_bitset.hpp>

#include <vector>

namespace helly {

// Subset of the vertex indices {0, ..., n-1} of a graph.
using VertexSet = boost::dynamic_bitset<>;

VertexSet make_set(int n, const std::vector<int>& members);

// Members in increasing index order.
std::vector<int> members_of(const VertexSet& s);

// Canonical order: lexicographic on the sorted member index lists, so
// {0} < {0,1} < {1}. Sets must have the same universe size.
bool canonical_less(const VertexSet& a, const VertexSet& b);

}  // namespace helly
