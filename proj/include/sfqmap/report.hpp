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
  \file report.hpp
  \brief Cost accounting, DOT/JSON/netlist emission

  All emitted artifacts are byte-stable for fixed inputs and seed:
  keys are sorted, node order is deterministic, and wall-clock times
  never appear in files (they are reported on standard output only).
*/

#pragma once

#include "decompose.hpp"
#include "solver.hpp"
#include "stage.hpp"

#include <map>
#include <string>

namespace sfqmap
{

/*! \brief Reads a {kind: jj-count} table; keys starting with '_' are
 * ignored (used for notes inside the shipped default table). */
CostTable read_cost_table( std::string const& path );

/*! \brief Built-in placeholder table used when none is supplied.
 *
 * The values are rough per-cell JJ counts for accounting only; real
 * flows should pass a table for their cell library.
 */
CostTable default_cost_table();

/*! \brief Sum of per-kind costs; PI/PO cost nothing unless listed.
 *
 * Throws std::invalid_argument if a gate kind present in the network
 * has no table entry.
 */
int64_t count_jjs( SfqNetwork const& sfq, CostTable const& costs );

struct MappingReport
{
  std::string circuit;
  uint32_t n{ 1 };
  std::map<GateKind, uint32_t> gate_counts; // excludes PI/PO
  uint32_t dff_count{};
  uint32_t splitter_count{};
  int64_t jj_count{};
  int32_t epoch_depth{};
  SolveStatus phase_status{ SolveStatus::optimal };
  SolveStatus dff_status{ SolveStatus::optimal };
  uint64_t seed{ 1 };
  // wall times are kept out of emitted artifacts
  double phase_wall_s{};
  double dff_wall_s{};
  double total_wall_s{};
};

MappingReport make_report( SfqNetwork const& sfq, StageAssignment const& stages,
                           MappingConfig const& cfg, CostTable const& costs,
                           SolveStatus phase_status, SolveStatus dff_status );

/*! \brief Canonical JSON (sorted keys, integers and strings only). */
std::string emit_report_json( MappingReport const& report );

/*! \brief DOT digraph with stage ranks; clocked gates drawn as boxes. */
std::string emit_dot( SfqNetwork const& sfq, StageAssignment const& stages );

/*! \brief Annotated native netlist (stage/epoch/phase per gate). */
std::string emit_netlist( SfqNetwork const& sfq, StageAssignment const& stages );

/*! \brief Unannotated native netlist. */
std::string emit_netlist( Network const& net );

} // namespace sfqmap
