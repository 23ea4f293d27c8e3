#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cordlasso/rational.hpp"

namespace cordlasso {

struct LinearTerm {
  std::size_t variable;
  Rational coefficient;
};

/// sum(terms) <relation> rhs, where the relation is fixed by the list the
/// constraint lives in.
struct LinearConstraint {
  std::vector<LinearTerm> terms;
  Rational rhs;
};

/// Finite system of rational linear equalities and strict inequalities over
/// variables 0..variable_count-1; variables flagged in `nonneg` are >= 0, the
/// others are free.
struct StrictLinearSystem {
  std::size_t variable_count = 0;
  std::vector<LinearConstraint> equalities;  // sum == rhs
  std::vector<LinearConstraint> strict;      // sum >  rhs
  std::vector<bool> nonneg;

  std::size_t add_variable(bool nonnegative);
  void add_equality(std::vector<LinearTerm> terms, Rational rhs);
  void add_strict(std::vector<LinearTerm> terms, Rational rhs);
  /// Convenience for x_greater - x_smaller > 0.
  void add_greater(std::size_t greater, std::size_t smaller);
  /// Convenience for x_left - x_right == 0.
  void add_equal(std::size_t left, std::size_t right);
};

/// A rational point satisfying every equality, every strict inequality and
/// every sign constraint, or nullopt when none exists.
///
/// Strict rows `a.x > b` become `a.x - eps >= b` with 0 <= eps <= 1, and eps
/// is maximized by a two-phase simplex over exact rationals (Bland's rule).
/// The system is strictly feasible iff the optimum is positive; the search
/// stops at the first basic solution with eps > 0. Equalities of the form
/// x_i == x_j are merged before pivoting.
std::optional<std::vector<Rational>> strict_feasible(const StrictLinearSystem& sys);

/// True iff `point` satisfies the system exactly.
bool satisfies(const StrictLinearSystem& sys, const std::vector<Rational>& point);

}  // namespace cordlasso
