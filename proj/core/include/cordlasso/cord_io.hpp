#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "cordlasso/cords.hpp"
#include "cordlasso/rational.hpp"
#include "cordlasso/tree.hpp"
#include "cordlasso/builders.hpp"

namespace cordlasso {

/// Cord file: one "labelA labelB" per line, optional third column with a
/// positive rational distance, '#' starts a comment. Labels must belong to
/// `x_set`; repeated cords are rejected. Throws ParseError.
struct CordFile {
  CordSet cords;
  std::map<Cord, Rational> distances;  // only cords that carried one
};

CordFile parse_cord_file(std::string_view text, const LeafSet& x_set);

/// One cord per line, sorted.
std::string format_cords(const CordSet& cords);

/// Lines "a b d" for each cord, sorted.
std::string format_distances(const std::map<Cord, Rational>& distances);

/// Partition file: first non-comment line lists block A, second lists block
/// B, labels separated by whitespace.
Bipartition parse_partition_file(std::string_view text, const LeafSet& x_set);

}  // namespace cordlasso
