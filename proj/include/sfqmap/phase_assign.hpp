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
  \file phase_assign.hpp
  \brief Multiphase stage assignment via constraint solving

  Assigns a clock stage to every node, including unclocked AA/SA
  elements.  Edges into clocked gates are strictly increasing in stage;
  other edges are non-decreasing.  An SA gate must be one stage after
  any fanin whose pulse reaches it through an unclocked element (a
  non-AS fanin, or any multi-fanout fanin, since fanout legalization
  places a splitter there).  PIs share epoch 0 and POs share one epoch.
  The objective approximates the number of path-balancing DFFs, either
  per edge or per gate over its latest fanout.
*/

#pragma once

#include "decompose.hpp"
#include "solver.hpp"
#include "stage.hpp"

namespace sfqmap
{

/*! \brief Per-node stage windows plus the global stage ceiling. */
struct StageBounds
{
  std::vector<int32_t> asap; // indexed by node id
  std::vector<int32_t> alap;
  int32_t sigma_max{ 0 }; // n * (clocked depth + 1) - 1
};

/*! \brief Stage offset required from fanin `a` into an SA gate.
 *
 * 0 only when the pulse is released by a clocked reference (AS gate or
 * PI) that feeds the SA gate directly, i.e. with fanout one; any other
 * source interposes an unclocked element and costs one stage.
 */
int32_t sa_fanin_offset( SfqNetwork const& sfq, uint32_t fanin,
                         std::vector<uint32_t> const& fanout_counts );

/*! \brief Minimum stage increase along edge (i, j). */
int32_t edge_offset( SfqNetwork const& sfq, uint32_t i, uint32_t j,
                     std::vector<uint32_t> const& fanout_counts );

/*! \brief ASAP/ALAP stage windows from greedy forward/backward passes. */
StageBounds build_stage_bounds( SfqNetwork const& sfq, uint32_t n );

/*! \brief Constraint model plus the variable map needed to read it back. */
struct PhaseModel
{
  ConstraintModel model;
  std::vector<VarId> sigma_var; // per node id; POs alias their driver
  VarId epoch_out{};            // shared PO epoch
};

PhaseModel build_phase_model( SfqNetwork const& sfq, uint32_t n, ObjectiveMode mode,
                              StageBounds const& bounds );

struct PhaseResult
{
  StageAssignment stages;
  SolveStatus status{ SolveStatus::infeasible };
  int64_t objective{ 0 };
  SolveStats stats;
};

/*! \brief Builds and solves the phase model under the configured budget. */
PhaseResult assign_stages( SfqNetwork const& sfq, MappingConfig const& cfg );

/*! \brief Re-evaluates the per-edge objective from a stage map. */
int64_t edge_objective_value( SfqNetwork const& sfq, StageAssignment const& stages );

/*! \brief Re-evaluates the per-gate max-fanout objective from a stage map. */
int64_t gate_max_objective_value( SfqNetwork const& sfq, StageAssignment const& stages );

/*! \brief Checks the stage-assignment invariants directly (edge rules,
 * SA fanin rule, PI epoch 0, equal PO epochs).  Returns violations.
 */
ValidationReport check_stage_invariants( SfqNetwork const& sfq, StageAssignment const& stages );

} // namespace sfqmap
