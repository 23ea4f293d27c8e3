#include "cordlasso/oracle.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "cordlasso/errors.hpp"

namespace cordlasso {

namespace {

/// Nested tree used only while enumerating.
struct Shape {
  LeafLabel label;  // leaves only
  std::vector<Shape> kids;
};

/// Calls `visit` with every partition of `items` into at least two blocks.
template <typename Visit>
void for_each_proper_partition(const std::vector<LeafLabel>& items, Visit&& visit) {
  const std::size_t n = items.size();
  std::vector<std::size_t> block(n, 0);  // restricted growth string
  while (true) {
    const std::size_t blocks = *std::max_element(block.begin(), block.end()) + 1;
    if (blocks >= 2) {
      std::vector<std::vector<LeafLabel>> parts(blocks);
      for (std::size_t i = 0; i < n; ++i) parts[block[i]].push_back(items[i]);
      visit(parts);
    }
    // Next restricted growth string.
    std::size_t i = n;
    while (i-- > 1) {
      const std::size_t prefix_max = *std::max_element(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(i));
      if (block[i] <= prefix_max) {
        ++block[i];
        std::fill(block.begin() + static_cast<std::ptrdiff_t>(i) + 1, block.end(), 0);
        break;
      }
    }
    if (i == 0) return;
  }
}

std::vector<Shape> shapes_on(const std::vector<LeafLabel>& leaves) {
  if (leaves.size() == 1) return {Shape{leaves.front(), {}}};
  std::vector<Shape> out;
  for_each_proper_partition(leaves, [&](const std::vector<std::vector<LeafLabel>>& parts) {
    std::vector<std::vector<Shape>> options;
    options.reserve(parts.size());
    for (const auto& part : parts) options.push_back(shapes_on(part));
    // Cartesian product over the blocks.
    std::vector<std::size_t> pick(parts.size(), 0);
    while (true) {
      Shape root;
      for (std::size_t b = 0; b < parts.size(); ++b) root.kids.push_back(options[b][pick[b]]);
      out.push_back(std::move(root));
      std::size_t b = 0;
      while (b < parts.size() && ++pick[b] == options[b].size()) pick[b++] = 0;
      if (b == parts.size()) break;
    }
  });
  return out;
}

XTree to_tree(const Shape& shape) {
  std::vector<Vertex> parents;
  std::map<Vertex, LeafLabel> labels;
  auto add = [&](auto&& self, const Shape& s, Vertex parent) -> void {
    const Vertex id = parents.size();
    parents.push_back(parent);
    if (s.kids.empty()) labels.emplace(id, s.label);
    for (const auto& kid : s.kids) self(self, kid, id);
  };
  add(add, shape, kNoVertex);
  return XTree(std::move(parents), labels);
}

void require_enumerable(const std::vector<LeafLabel>& x_set, std::size_t lo, std::size_t hi) {
  if (x_set.size() < lo || x_set.size() > hi) {
    throw InputError("leaf set of size " + std::to_string(x_set.size()) + " outside the supported range " +
                     std::to_string(lo) + ".." + std::to_string(hi));
  }
  const LeafSet unique(x_set.begin(), x_set.end());
  if (unique.size() != x_set.size()) throw InputError("leaf set has repeated labels");
}

std::map<Vertex, std::size_t> interior_index(const XTree& t, std::size_t offset) {
  std::map<Vertex, std::size_t> index;
  for (Vertex v : t.interior_vertices()) index.emplace(v, offset + index.size());
  return index;
}

/// Adds one height variable per interior vertex of `t`, constrained >= 0 and
/// strictly below the parent's.
std::map<Vertex, std::size_t> add_heights(StrictLinearSystem& sys, const XTree& t) {
  auto index = interior_index(t, sys.variable_count);
  for (std::size_t i = 0; i < index.size(); ++i) sys.add_variable(true);
  for (const auto& [v, var] : index) {
    const Vertex p = t.parent(v);
    if (p != kNoVertex) sys.add_greater(index.at(p), var);
  }
  return index;
}

HeightMap heights_from(const XTree& t, const std::map<Vertex, std::size_t>& index,
                       const std::vector<Rational>& point) {
  std::map<Vertex, Rational> h;
  for (const auto& [v, var] : index) h.emplace(v, point[var]);
  return HeightMap::from_interior(t, h);
}

struct JointSystem {
  StrictLinearSystem sys;
  std::map<Vertex, std::size_t> t_vars;
  std::map<Vertex, std::size_t> rival_vars;
};

JointSystem build_joint(const XTree& t, const XTree& rival, const CordSet& cords) {
  JointSystem js;
  js.t_vars = add_heights(js.sys, t);
  js.rival_vars = add_heights(js.sys, rival);
  for (const auto& cord : cords) {
    js.sys.add_equal(js.t_vars.at(lca(t, cord.a, cord.b)), js.rival_vars.at(lca(rival, cord.a, cord.b)));
  }
  return js;
}

void require_oracle_input(const XTree& t, const CordSet& cords) {
  if (t.leaf_count() < 3) throw InputError("lasso questions need at least three leaves");
  require_cords_in(t, cords);
}

/// First feasible rival that is not equivalent to t, and first feasible
/// rival that does not refine t, as indices into the catalog.
struct ScanResult {
  std::optional<std::size_t> first_inequivalent;
  std::optional<std::size_t> first_non_refining;
};

ScanResult scan_range(const XTree& t, const std::set<Triplet>& t_triplets, const std::string& t_canon,
                      const CordSet& cords, const RivalCatalog& catalog, std::size_t begin,
                      std::size_t end) {
  ScanResult result;
  for (std::size_t i = begin; i < end && !result.first_non_refining; ++i) {
    const XTree& rival = catalog.trees()[i];
    if (rival.canonical() == t_canon) continue;
    const auto& rt = catalog.triplets_of(i);
    const bool refining = std::includes(rt.begin(), rt.end(), t_triplets.begin(), t_triplets.end());
    if (refining && result.first_inequivalent) continue;
    if (!strict_feasible(build_joint(t, rival, cords).sys)) continue;
    if (!result.first_inequivalent) result.first_inequivalent = i;
    if (!refining) result.first_non_refining = i;
  }
  return result;
}

ScanResult scan_rivals(const XTree& t, const CordSet& cords, const RivalCatalog& catalog, unsigned threads) {
  const auto t_triplets = triplets(t);
  const auto t_canon = t.canonical();
  const std::size_t n = catalog.trees().size();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) return scan_range(t, t_triplets, t_canon, cords, catalog, 0, n);

  std::vector<ScanResult> partial(threads);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned k = 0; k < threads; ++k) {
      const std::size_t begin = std::min(n, k * chunk);
      const std::size_t end = std::min(n, begin + chunk);
      pool.emplace_back([&, k, begin, end] {
        partial[k] = scan_range(t, t_triplets, t_canon, cords, catalog, begin, end);
      });
    }
  }
  // Chunks are in canonical order, so the first hit wins.
  ScanResult merged;
  for (const auto& p : partial) {
    if (!merged.first_inequivalent) merged.first_inequivalent = p.first_inequivalent;
    if (!merged.first_non_refining) merged.first_non_refining = p.first_non_refining;
  }
  return merged;
}

OracleVerdict verdict_for(const XTree& t, const CordSet& cords, const RivalCatalog& catalog,
                          std::optional<std::size_t> hit) {
  if (!hit) return {true, std::nullopt};
  const XTree& rival = catalog.trees()[*hit];
  const auto js = build_joint(t, rival, cords);
  const auto point = strict_feasible(js.sys);
  return {false, Witness{rival, heights_from(t, js.t_vars, *point), heights_from(rival, js.rival_vars, *point)}};
}

}  // namespace

std::vector<XTree> enumerate_xtrees(const std::vector<LeafLabel>& x_set) {
  require_enumerable(x_set, 2, 6);
  for (const auto& label : x_set) {
    if (!is_valid_label(label)) throw InputError("invalid leaf label '" + label + "'");
  }
  std::vector<XTree> out;
  for (const auto& shape : shapes_on(x_set)) out.push_back(to_tree(shape));
  std::vector<std::pair<std::string, std::size_t>> keyed;
  for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(out[i].canonical(), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<XTree> sorted;
  sorted.reserve(out.size());
  for (const auto& [canon, i] : keyed) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::vector<XTree> enumerate_binary_xtrees(const std::vector<LeafLabel>& x_set) {
  auto all = enumerate_xtrees(x_set);
  std::erase_if(all, [](const XTree& t) { return !is_binary(t); });
  return all;
}

StrictLinearSystem joint_isometry_system(const XTree& t, const XTree& rival, const CordSet& cords) {
  if (t.labels() != rival.labels()) throw InputError("trees are on different leaf sets");
  require_cords_in(t, cords);
  return build_joint(t, rival, cords).sys;
}

RivalCatalog::RivalCatalog(const std::vector<LeafLabel>& x_set) {
  require_enumerable(x_set, 3, 5);
  x_set_ = x_set;
  std::sort(x_set_.begin(), x_set_.end());
  trees_ = enumerate_xtrees(x_set_);
  triplets_.reserve(trees_.size());
  for (const auto& tree : trees_) triplets_.push_back(triplets(tree));
}

OracleVerdict oracle_equidistant(const XTree& t, const CordSet& cords) {
  require_oracle_input(t, cords);
  // Two weightings of t agreeing on every cord but differing somewhere; by
  // symmetry it suffices to look for h(v) > h'(v) at each interior v.
  for (Vertex v : t.interior_vertices()) {
    auto js = build_joint(t, t, cords);
    js.sys.add_greater(js.t_vars.at(v), js.rival_vars.at(v));
    if (const auto point = strict_feasible(js.sys)) {
      return {false, Witness{t, heights_from(t, js.t_vars, *point), heights_from(t, js.rival_vars, *point)}};
    }
  }
  return {true, std::nullopt};
}

const OracleVerdict& OracleReport::verdict(LassoKind kind) const {
  switch (kind) {
    case LassoKind::kEquidistant: return equidistant;
    case LassoKind::kWeak: return weak;
    case LassoKind::kTopological: return topological;
  }
  return equidistant;
}

OracleReport oracle_classify(const XTree& t, const CordSet& cords, const OracleOptions& options) {
  require_oracle_input(t, cords);
  std::optional<RivalCatalog> own;
  const RivalCatalog* catalog = options.catalog;
  if (!catalog) catalog = &own.emplace(t.labels());
  if (catalog->leaf_set() != t.labels()) throw InputError("rival catalog is for a different leaf set");

  const auto scan = scan_rivals(t, cords, *catalog, options.threads);
  OracleReport report;
  report.equidistant = oracle_equidistant(t, cords);
  report.topological = verdict_for(t, cords, *catalog, scan.first_inequivalent);
  report.weak = verdict_for(t, cords, *catalog, scan.first_non_refining);
  return report;
}

OracleVerdict oracle_weak(const XTree& t, const CordSet& cords, const OracleOptions& options) {
  return oracle_lasso(t, cords, LassoKind::kWeak, options);
}

OracleVerdict oracle_topological(const XTree& t, const CordSet& cords, const OracleOptions& options) {
  return oracle_lasso(t, cords, LassoKind::kTopological, options);
}

OracleVerdict oracle_lasso(const XTree& t, const CordSet& cords, LassoKind kind, const OracleOptions& options) {
  if (kind == LassoKind::kEquidistant) return oracle_equidistant(t, cords);
  require_oracle_input(t, cords);
  std::optional<RivalCatalog> own;
  const RivalCatalog* catalog = options.catalog;
  if (!catalog) catalog = &own.emplace(t.labels());
  if (catalog->leaf_set() != t.labels()) throw InputError("rival catalog is for a different leaf set");
  const auto scan = scan_rivals(t, cords, *catalog, options.threads);
  return verdict_for(t, cords, *catalog,
                     kind == LassoKind::kWeak ? scan.first_non_refining : scan.first_inequivalent);
}

bool verify_witness(const XTree& t, const CordSet& cords, LassoKind kind, const Witness& w) {
  const XTree& rival = w.rival_tree;
  if (rival.labels() != t.labels()) return false;
  try {
    HeightMap check_t(t, w.heights_t.heights());
    HeightMap check_rival(rival, w.heights_rival.heights());
  } catch (const WeightingError&) {
    return false;
  }
  if (!is_l_isometric(t, w.heights_t, rival, w.heights_rival, cords)) return false;

  switch (kind) {
    case LassoKind::kEquidistant: {
      if (!is_equivalent(t, rival)) return false;
      // Interior heights are lca heights of leaf pairs, so the weightings
      // differ iff some leaf distance does.
      for (const auto& pair : all_cords(t.labels())) {
        if (leaf_distance(t, w.heights_t, pair.a, pair.b) != leaf_distance(rival, w.heights_rival, pair.a, pair.b)) {
          return true;
        }
      }
      return false;
    }
    case LassoKind::kWeak: return !refines(rival, t);
    case LassoKind::kTopological: return !is_equivalent(rival, t);
  }
  return false;
}

}  // namespace cordlasso
