#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "cordlasso/cords.hpp"
#include "cordlasso/lasso.hpp"
#include "cordlasso/strict_lp.hpp"
#include "cordlasso/tree.hpp"
#include "cordlasso/weighting.hpp"

namespace cordlasso {

// Ground truth straight from the definitions: a cord set is a lasso of a kind
// iff no pair of L-isometric equidistant proper weightings separates the
// reference tree from a rival in the way that kind forbids. Each candidate
// pair is one strict linear feasibility problem over heights.

/// Every X-tree on x_set exactly once, sorted by canonical form.
/// Requires 2 <= |x_set| <= 6; throws InputError otherwise.
std::vector<XTree> enumerate_xtrees(const std::vector<LeafLabel>& x_set);
std::vector<XTree> enumerate_binary_xtrees(const std::vector<LeafLabel>& x_set);

/// Two L-isometric weighted trees that violate the lasso property. For the
/// equidistant kind the rival is the reference tree itself and the two height
/// maps differ.
struct Witness {
  XTree rival_tree;
  HeightMap heights_t;
  HeightMap heights_rival;
};

struct OracleVerdict {
  bool holds = false;
  std::optional<Witness> witness;  // set exactly when !holds
};

/// Variables: heights of t's interior vertices (in t.interior_vertices()
/// order), then the rival's. All heights >= 0, strictly decreasing along
/// interior edges of each tree, and h_t(lca_t(a,b)) == h_rival(lca_rival(a,b))
/// for every cord ab.
StrictLinearSystem joint_isometry_system(const XTree& t, const XTree& rival, const CordSet& cords);

/// All X-trees on one leaf set together with their triplet sets, shared
/// across many oracle calls on that leaf set.
class RivalCatalog {
 public:
  /// Throws InputError unless 3 <= |x_set| <= 5.
  explicit RivalCatalog(const std::vector<LeafLabel>& x_set);

  const std::vector<LeafLabel>& leaf_set() const noexcept { return x_set_; }
  const std::vector<XTree>& trees() const noexcept { return trees_; }
  const std::set<Triplet>& triplets_of(std::size_t i) const { return triplets_.at(i); }

 private:
  std::vector<LeafLabel> x_set_;
  std::vector<XTree> trees_;
  std::vector<std::set<Triplet>> triplets_;
};

struct OracleOptions {
  /// Rival candidates are split across this many threads. The reported
  /// witness is the first feasible rival in canonical order either way.
  unsigned threads = 1;
  /// Reused instead of enumerating the leaf set again; must match X(t).
  const RivalCatalog* catalog = nullptr;
};

OracleVerdict oracle_equidistant(const XTree& t, const CordSet& cords);
/// Requires |X| <= 5.
OracleVerdict oracle_weak(const XTree& t, const CordSet& cords, const OracleOptions& options = {});
/// Requires |X| <= 5.
OracleVerdict oracle_topological(const XTree& t, const CordSet& cords,
                                 const OracleOptions& options = {});

struct OracleReport {
  OracleVerdict equidistant;
  OracleVerdict weak;
  OracleVerdict topological;

  const OracleVerdict& verdict(LassoKind kind) const;
};

/// All three verdicts with one scan over the rivals.
OracleReport oracle_classify(const XTree& t, const CordSet& cords, const OracleOptions& options = {});

OracleVerdict oracle_lasso(const XTree& t, const CordSet& cords, LassoKind kind,
                           const OracleOptions& options = {});

/// Re-checks a witness from scratch: both height maps are valid, the weighted
/// trees agree on every cord, and the rival breaks the property of `kind`.
bool verify_witness(const XTree& t, const CordSet& cords, LassoKind kind, const Witness& witness);

}  // namespace cordlasso
