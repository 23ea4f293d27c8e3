#include "cordlasso/strict_lp.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cordlasso/errors.hpp"

namespace cordlasso {

std::size_t StrictLinearSystem::add_variable(bool nonnegative) {
  nonneg.push_back(nonnegative);
  return variable_count++;
}

void StrictLinearSystem::add_equality(std::vector<LinearTerm> terms, Rational rhs) {
  equalities.push_back({std::move(terms), std::move(rhs)});
}

void StrictLinearSystem::add_strict(std::vector<LinearTerm> terms, Rational rhs) {
  strict.push_back({std::move(terms), std::move(rhs)});
}

void StrictLinearSystem::add_greater(std::size_t greater, std::size_t smaller) {
  add_strict({{greater, Rational(1)}, {smaller, Rational(-1)}}, Rational(0));
}

void StrictLinearSystem::add_equal(std::size_t left, std::size_t right) {
  add_equality({{left, Rational(1)}, {right, Rational(-1)}}, Rational(0));
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

/// Sums duplicate variables and drops zero coefficients.
std::map<std::size_t, Rational> collect(const std::vector<LinearTerm>& terms,
                                        const std::vector<std::size_t>& column_of) {
  std::map<std::size_t, Rational> out;
  for (const auto& term : terms) out[column_of[term.variable]] += term.coefficient;
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

bool is_plain_identification(const LinearConstraint& c) {
  return c.terms.size() == 2 && sgn(c.rhs) == 0 && c.terms[0].variable != c.terms[1].variable &&
         sgn(c.terms[0].coefficient) != 0 && c.terms[0].coefficient == -c.terms[1].coefficient;
}

/// Dense simplex tableau for: maximize objective over {A x = b, x >= 0}.
/// The objective row holds reduced costs; a positive entry improves.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cell_(rows * (cols + 1)), objective_(cols + 1), basis_(rows),
        blocked_(cols, false) {}

  Rational& at(std::size_t r, std::size_t c) { return cell_[r * (cols_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return at(r, cols_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::vector<Rational>& objective() { return objective_; }
  void block(std::size_t c) { blocked_[c] = true; }

  /// Loads objective coefficients `cost` and prices out the basic columns.
  void set_objective(const std::vector<Rational>& cost) {
    for (std::size_t j = 0; j <= cols_; ++j) objective_[j] = j < cols_ ? cost[j] : Rational(0);
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(at(r, j)) != 0) objective_[j] -= cb * at(r, j);
      }
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (sgn(at(r, j)) != 0) at(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(at(i, c)) == 0) continue;
      const Rational f = at(i, c);
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(at(r, j)) != 0) at(i, j) -= f * at(r, j);
      }
    }
    if (sgn(objective_[c]) != 0) {
      const Rational f = objective_[c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(at(r, j)) != 0) objective_[j] -= f * at(r, j);
      }
    }
    basis_[r] = c;
  }

  /// One iteration under Bland's rule. Returns false at optimality.
  bool step() {
    std::size_t entering = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!blocked_[j] && sgn(objective_[j]) > 0) {
        entering = j;
        break;
      }
    }
    if (entering == cols_) return false;

    std::size_t leaving = rows_;
    Rational best;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (sgn(at(r, entering)) <= 0) continue;
      Rational ratio = rhs(r) / at(r, entering);
      if (leaving == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leaving])) {
        leaving = r;
        best = std::move(ratio);
      }
    }
    if (leaving == rows_) throw std::logic_error("unbounded direction in a bounded program");
    pivot(leaving, entering);
    return true;
  }

  Rational value_of(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] == c) return rhs(r);
    }
    return Rational(0);
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> cell_;
  std::vector<Rational> objective_;
  std::vector<std::size_t> basis_;
  std::vector<bool> blocked_;
};

}  // namespace

std::optional<std::vector<Rational>> strict_feasible(const StrictLinearSystem& sys) {
  const std::size_t n = sys.variable_count;
  if (sys.nonneg.size() != n) throw InputError("nonneg flags do not match the variable count");
  auto check_terms = [n](const LinearConstraint& c) {
    for (const auto& t : c.terms) {
      if (t.variable >= n) throw InputError("constraint refers to an unknown variable");
    }
  };
  for (const auto& c : sys.equalities) check_terms(c);
  for (const auto& c : sys.strict) check_terms(c);

  // Merge variables tied by x_i == x_j.
  DisjointSets sets(n);
  std::vector<const LinearConstraint*> equalities;
  for (const auto& c : sys.equalities) {
    if (is_plain_identification(c)) {
      sets.unite(c.terms[0].variable, c.terms[1].variable);
    } else {
      equalities.push_back(&c);
    }
  }
  std::vector<std::size_t> class_of(n);
  std::map<std::size_t, std::size_t> class_index;
  for (std::size_t v = 0; v < n; ++v) {
    class_of[v] = class_index.emplace(sets.find(v), class_index.size()).first->second;
  }
  const std::size_t k = class_index.size();
  std::vector<bool> class_nonneg(k, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (sys.nonneg[v]) class_nonneg[class_of[v]] = true;
  }

  // Columns: one per nonnegative class, a +/- pair per free class, then eps.
  std::vector<std::size_t> pos_col(k), neg_col(k, SIZE_MAX);
  std::size_t structural = 0;
  for (std::size_t c = 0; c < k; ++c) {
    pos_col[c] = structural++;
    if (!class_nonneg[c]) neg_col[c] = structural++;
  }
  const std::size_t eps = structural++;

  struct Row {
    std::map<std::size_t, Rational> terms;  // class -> coefficient
    Rational rhs;
    bool strict;
  };
  std::vector<Row> rows;
  for (const auto* c : equalities) {
    auto terms = collect(c->terms, class_of);
    if (terms.empty()) {
      if (sgn(c->rhs) != 0) return std::nullopt;
      continue;
    }
    rows.push_back({std::move(terms), c->rhs, false});
  }
  for (const auto& c : sys.strict) {
    auto terms = collect(c.terms, class_of);
    if (terms.empty()) {
      if (!(c.rhs < 0)) return std::nullopt;
      continue;
    }
    rows.push_back({std::move(terms), c.rhs, true});
  }

  // Row layout: model rows, then eps + s = 1. Strict rows carry a surplus
  // column; every row gets an artificial column.
  const std::size_t strict_count =
      static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.strict; }));
  const std::size_t m = rows.size() + 1;
  const std::size_t surplus_base = structural;
  const std::size_t eps_slack = surplus_base + strict_count;
  const std::size_t artificial_base = eps_slack + 1;
  const std::size_t total_cols = artificial_base + m;

  Tableau tab(m, total_cols);
  std::size_t next_surplus = surplus_base;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [cls, coef] : rows[r].terms) {
      tab.at(r, pos_col[cls]) += coef;
      if (neg_col[cls] != SIZE_MAX) tab.at(r, neg_col[cls]) -= coef;
    }
    if (rows[r].strict) {
      tab.at(r, eps) = -1;
      tab.at(r, next_surplus++) = -1;
    }
    tab.rhs(r) = rows[r].rhs;
  }
  tab.at(m - 1, eps) = 1;
  tab.at(m - 1, eps_slack) = 1;
  tab.rhs(m - 1) = 1;

  for (std::size_t r = 0; r < m; ++r) {
    if (sgn(tab.rhs(r)) < 0) {
      for (std::size_t j = 0; j <= total_cols; ++j) {
        if (sgn(tab.at(r, j)) != 0) tab.at(r, j) = -tab.at(r, j);
      }
    }
    tab.at(r, artificial_base + r) = 1;
    tab.basis()[r] = artificial_base + r;
  }

  // Phase 1: drive the artificial columns to zero.
  std::vector<Rational> cost(total_cols, Rational(0));
  for (std::size_t r = 0; r < m; ++r) cost[artificial_base + r] = -1;
  tab.set_objective(cost);
  while (tab.step()) {
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis()[r] >= artificial_base && sgn(tab.rhs(r)) != 0) return std::nullopt;
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis()[r] < artificial_base) continue;
    for (std::size_t j = 0; j < artificial_base; ++j) {
      if (sgn(tab.at(r, j)) != 0) {
        tab.pivot(r, j);
        break;
      }
    }
  }
  for (std::size_t j = artificial_base; j < total_cols; ++j) tab.block(j);

  // Phase 2: maximize eps, stopping at the first positive value.
  std::fill(cost.begin(), cost.end(), Rational(0));
  cost[eps] = 1;
  tab.set_objective(cost);
  while (sgn(tab.value_of(eps)) <= 0) {
    if (!tab.step()) return std::nullopt;
  }

  std::vector<Rational> class_value(k);
  for (std::size_t c = 0; c < k; ++c) {
    class_value[c] = tab.value_of(pos_col[c]);
    if (neg_col[c] != SIZE_MAX) class_value[c] -= tab.value_of(neg_col[c]);
  }
  std::vector<Rational> point(n);
  for (std::size_t v = 0; v < n; ++v) point[v] = class_value[class_of[v]];
  return point;
}

bool satisfies(const StrictLinearSystem& sys, const std::vector<Rational>& point) {
  if (point.size() != sys.variable_count) return false;
  auto lhs = [&](const LinearConstraint& c) {
    Rational sum(0);
    for (const auto& t : c.terms) sum += t.coefficient * point.at(t.variable);
    return sum;
  };
  for (std::size_t v = 0; v < sys.variable_count; ++v) {
    if (sys.nonneg[v] && point[v] < 0) return false;
  }
  for (const auto& c : sys.equalities) {
    if (lhs(c) != c.rhs) return false;
  }
  for (const auto& c : sys.strict) {
    if (!(lhs(c) > c.rhs)) return false;
  }
  return true;
}

}  // namespace cordlasso
