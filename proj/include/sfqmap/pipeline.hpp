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
  \file pipeline.hpp
  \brief End-to-end mapping: decompose, assign stages, legalize fanout,
  insert DFFs, canonicalize, verify, report
*/

#pragma once

#include "decompose.hpp"
#include "dff_insert.hpp"
#include "network.hpp"
#include "phase_assign.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace sfqmap
{

struct MapOptions
{
  MappingConfig cfg;
  uint32_t jobs{ 1 };
  SpacingEncoding encoding{ SpacingEncoding::gap_window };
};

struct MapOutcome
{
  bool mapped{ false }; // stage assignment produced a usable solution
  SfqNetwork sfq;
  StageAssignment stages;
  MappingReport report;
  ValidationReport timing;
  SolveStatus phase_status{ SolveStatus::infeasible };
  SolveStatus dff_status{ SolveStatus::infeasible };
  std::vector<PathStats> path_stats;

  bool solved() const
  {
    return mapped &&
           ( phase_status == SolveStatus::optimal || phase_status == SolveStatus::feasible ) &&
           ( dff_status == SolveStatus::optimal || dff_status == SolveStatus::feasible );
  }
  bool ok() const { return solved() && timing.ok; }
};

/*! \brief Runs the full mapping flow on a parsed source network. */
MapOutcome run_mapping( Network const& source, MapOptions const& options,
                        CostTable const& costs );

/*! \brief Categories for an already-mapped netlist (OR counts as SA:
 * merger-style mapping never leaves OR nodes behind). */
SfqNetwork attach_categories( Network const& net );

/*! \brief Functional equivalence: exhaustive for up to 16 PIs, else
 * `vectors` seeded random patterns. */
bool functionally_equivalent( Network const& a, Network const& b, uint64_t seed = 1,
                              uint32_t vectors = 10000 );

} // namespace sfqmap
