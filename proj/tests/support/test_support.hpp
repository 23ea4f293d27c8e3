#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string_view>
#include <vector>

#include "cordlasso/cords.hpp"
#include "cordlasso/tree.hpp"
#include "cordlasso/weighting.hpp"

// Test-only helpers. Everything here is written against the definitions and
// must not call the code paths it is used to check.
namespace cordlasso::testing {

XTree tree(std::string_view newick);

/// The interior vertex whose cluster is exactly `leaves`.
Vertex vertex_with_cluster(const XTree& t, const LeafSet& leaves);

/// Cords from two-letter strings: cords({"ab", "cd"}).
CordSet cords(std::initializer_list<std::string_view> pairs);

/// {"a", "b", ...} of size n.
std::vector<LeafLabel> labels(std::size_t n);

/// All 2^C(n,2) subsets of the cords on x_set, in binary-counter order.
std::vector<CordSet> all_cord_subsets(const std::vector<LeafLabel>& x_set);

// Independent tree counts.

/// Number of X-trees on n labelled leaves: the root splits X into >= 2 blocks
/// and each block carries its own tree.
std::uint64_t count_xtrees_by_partition(std::size_t n);
/// Each tree on n+1 leaves comes from exactly one tree on n leaves by hanging
/// the new leaf off an interior vertex or subdividing the edge above any vertex.
std::uint64_t count_xtrees_by_insertion(const std::vector<XTree>& trees_on_n);
/// (2n - 3)!!
std::uint64_t count_binary_by_double_factorial(std::size_t n);
/// Binary trees only admit subdivisions: one per vertex.
std::uint64_t count_binary_by_insertion(const std::vector<XTree>& binary_trees_on_n);

/// R(T) computed from the definition: restrict to every triple and compare
/// with the three triplet shapes.
std::set<Triplet> triplets_by_restriction(const XTree& t);

/// Child edges e, f of v are joined iff some cord's leaf-to-leaf path runs
/// through both; computed by walking the path edge by edge.
bool path_walk_adjacent(const XTree& t, const CordSet& cords, Vertex e, Vertex f);

/// Random proper heights on t with h(v) == pins[v] for each pinned vertex,
/// or nullopt when the pins cannot be met.
std::optional<HeightMap> heights_with_pins(const XTree& t, const std::map<Vertex, Rational>& pins,
                                           std::mt19937_64& rng);

}  // namespace cordlasso::testing
