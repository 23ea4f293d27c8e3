#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cordlasso/tree.hpp"
#include "cordlasso/weighting.hpp"

namespace cordlasso {

struct ParsedNewick {
  XTree tree;
  /// Present iff the text carried branch lengths; then every edge has one.
  std::optional<EdgeWeighting> weights;
};

/// Grammar:
///   tree    := subtree ";"
///   subtree := leaf | "(" subtree ("," subtree)+ ")" [":" weight]
///   leaf    := label [":" weight]
///   weight  := decimal | integer "/" integer
/// A length on the root is accepted and ignored. Throws ParseError (with line
/// and column) on syntax errors, unary vertices, duplicate labels, or partial
/// branch lengths.
ParsedNewick parse_newick(std::string_view text);

/// Children in canonical order, lengths written as exact rationals.
std::string print_newick(const XTree& t, const std::optional<EdgeWeighting>& weights = std::nullopt);

/// Same, with lengths taken from a height map.
std::string print_newick(const XTree& t, const HeightMap& heights);

}  // namespace cordlasso
