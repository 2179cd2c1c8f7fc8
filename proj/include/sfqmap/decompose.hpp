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
  \file decompose.hpp
  \brief SFQ gate classification and network decomposition

  SFQ primitives fall into three synchronization categories: AA gates
  (splitter, merger) process pulses immediately; AS gates (DFF, NOT,
  XOR) release their output on the clock; SA gates (AND, tuned OR)
  require simultaneous input arrival and release asynchronously.
  Decomposition maps a generic network onto these primitives, strips
  pre-existing DFFs and dissolves BUFs; pipelining is re-derived from
  scratch afterwards.
*/

#pragma once

#include "network.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace sfqmap
{

enum class GateCategory : uint8_t
{
  AA, //!< asynchronous input, asynchronous output
  AS, //!< asynchronous input, synchronous (clocked) output
  SA, //!< synchronous input, asynchronous output
  IO  //!< PI/PO pseudo-nodes
};

const char* to_string( GateCategory category );

/*! \brief Per-kind JJ cost used for area accounting. */
using CostTable = std::map<GateKind, uint32_t>;

struct SolverBudget
{
  double time_limit_s{ 20.0 }; //!< 0 = no wall-clock limit
  uint64_t node_limit{ 0 };    //!< 0 = no node limit
};

enum class ObjectiveMode
{
  gate_max, //!< one floor term per gate over its max fanout stage
  edge      //!< one floor term per edge
};

enum class OrStyle
{
  merger, //!< OR realized as an asynchronous merger (AA)
  sa_or   //!< OR realized as a synchronous-input element (SA)
};

struct MappingConfig
{
  uint32_t n{ 1 }; //!< number of clock phases
  ObjectiveMode objective_mode{ ObjectiveMode::gate_max };
  OrStyle or_style{ OrStyle::merger };
  SolverBudget solver_budget;
  uint64_t seed{ 1 };
  CostTable cost_table;
};

/*! \brief SFQ-typed network: primitive kinds plus a category per node. */
struct SfqNetwork
{
  Network net;
  std::vector<GateCategory> category; // indexed by node id

  GateCategory category_of( uint32_t id ) const { return category[id]; }
  bool is_clocked( uint32_t id ) const { return category[id] == GateCategory::AS; }
};

/*! \brief Synchronization category of an SFQ primitive kind.
 *
 * OR classifies as AA (merger) or SA depending on `cfg.or_style`.
 * Throws std::invalid_argument for non-primitive kinds (PI, PO, BUF).
 */
GateCategory classify( GateKind kind, MappingConfig const& cfg );

/*! \brief Converts a validated network into an SFQ-typed network.
 *
 * DFFs are removed by reconnecting fanouts to fanins, BUFs are
 * dissolved, and OR gates are rewritten as mergers under the default
 * or_style.  Multi-fanout nodes are left as-is; splitter insertion
 * happens after phase assignment.
 */
SfqNetwork decompose( Network const& net, MappingConfig const& cfg );

} // namespace sfqmap
