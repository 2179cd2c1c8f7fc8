/* sfqmap: multiphase SFQ technology mapping
 * Copyright (C) 2025-2026  sfqmap authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file solver.hpp
  \brief Exact solver for bounded-integer + boolean linear models

  Branch-and-bound with bounds-consistency propagation on linear
  constraints and unit propagation on clauses.  All arithmetic is exact
  integer arithmetic.  Search is deterministic: variables branch in
  declaration order, values ascending.  With a node limit (and no
  wall-clock limit) results are bit-reproducible; a wall-clock limit
  may change which incumbent is returned.
*/

#pragma once

#include "decompose.hpp" // SolverBudget

#include <cstdint>
#include <string>
#include <vector>

namespace sfqmap
{

using VarId = uint32_t;

struct Literal
{
  VarId var{};
  bool positive{ true };

  friend Literal operator!( Literal l ) { return { l.var, !l.positive }; }
  friend bool operator==( Literal a, Literal b )
  {
    return a.var == b.var && a.positive == b.positive;
  }
  friend bool operator<( Literal a, Literal b )
  {
    return a.var != b.var ? a.var < b.var : a.positive < b.positive;
  }
};

struct LinearTerm
{
  int64_t coeff{};
  VarId var{};
};

enum class Cmp : uint8_t
{
  le,
  ge,
  eq
};

struct LinearConstraint
{
  std::vector<LinearTerm> terms;
  Cmp cmp{ Cmp::le };
  int64_t bound{};
};

/*! \brief Bounded-integer + boolean constraint model with a linear
 * objective to minimize.
 *
 * Booleans are 0/1 variables that may also appear in linear
 * constraints and the objective.  Models are immutable once handed to
 * the solver.
 */
class ConstraintModel
{
public:
  VarId add_int_var( std::string name, int64_t lower, int64_t upper );
  VarId add_bool_var( std::string name );

  void add_linear( std::vector<LinearTerm> terms, Cmp cmp, int64_t bound );
  void add_clause( std::vector<Literal> literals );
  void force_literal( Literal literal );
  void set_objective( std::vector<LinearTerm> terms );

  uint32_t num_vars() const { return static_cast<uint32_t>( lower_.size() ); }
  bool is_bool( VarId v ) const { return is_bool_[v]; }
  int64_t lower( VarId v ) const { return lower_[v]; }
  int64_t upper( VarId v ) const { return upper_[v]; }
  std::string const& name( VarId v ) const { return names_[v]; }

  std::vector<LinearConstraint> const& linear_constraints() const { return linear_; }
  std::vector<std::vector<Literal>> const& clauses() const { return clauses_; }
  std::vector<Literal> const& forced_literals() const { return forced_; }
  std::vector<LinearTerm> const& objective() const { return objective_; }

private:
  void check_terms( std::vector<LinearTerm> const& terms ) const;

  std::vector<std::string> names_;
  std::vector<int64_t> lower_, upper_;
  std::vector<bool> is_bool_;
  std::vector<LinearConstraint> linear_;
  std::vector<std::vector<Literal>> clauses_;
  std::vector<Literal> forced_;
  std::vector<LinearTerm> objective_;
};

enum class SolveStatus : uint8_t
{
  optimal,
  feasible,
  infeasible,
  timeout_no_solution
};

const char* to_string( SolveStatus status );

struct SolveStats
{
  uint64_t nodes{};
  double wall_s{};
};

struct Solution
{
  SolveStatus status{ SolveStatus::infeasible };
  std::vector<int64_t> assignment; // indexed by VarId; empty unless a solution exists
  int64_t objective_value{};
  SolveStats stats;

  bool has_assignment() const
  {
    return status == SolveStatus::optimal || status == SolveStatus::feasible;
  }
};

/*! \brief Minimizes the model objective by branch-and-bound.
 *
 * Returns `optimal` when the search space is exhausted, `feasible`
 * with the best incumbent when a budget limit stops the search,
 * `infeasible` / `timeout_no_solution` otherwise.  `seed` is accepted
 * for interface stability; the search itself is deterministic.
 */
Solution solve( ConstraintModel const& model, SolverBudget const& budget, uint64_t seed = 1 );

/*! \brief Re-evaluates every constraint against a full assignment.
 *
 * Shares no state with the solver.  Throws std::invalid_argument if
 * the assignment does not cover all variables.
 */
bool verify_solution( ConstraintModel const& model, std::vector<int64_t> const& assignment );

/*! \brief Debug dump, one constraint per line. */
std::string dump_model( ConstraintModel const& model );

} // namespace sfqmap
