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
  \file dff_insert.hpp
  \brief Minimum path-balancing DFF insertion per independent datapath

  The stage-assigned network partitions into independent datapaths:
  each maximal connected region of AA gates together with the clocked
  gates on its boundary, plus one trivial datapath per direct
  clocked-to-clocked edge.  Within a datapath, candidate DFF sites are
  enumerated per edge and stage, and a constraint model selects the
  minimum set such that along every source-to-sink traversal
  consecutive clocked elements are at most n stages apart and no stage
  holds two of them, with a forced site in front of every SA sink that
  is not fed by a clocked reference at its own stage.
*/

#pragma once

#include "decompose.hpp"
#include "solver.hpp"
#include "stage.hpp"

#include <optional>

namespace sfqmap
{

struct PathEdge
{
  uint32_t from{};
  uint32_t to{};
  uint32_t slot{}; // fanin slot of `to` carrying this edge
};

/*! \brief Independent datapath P = (I, A, O) plus its edge list. */
struct IndependentPath
{
  std::vector<uint32_t> sources;  // I: clocked gates or PIs feeding the region
  std::vector<uint32_t> internal; // A: the AA region (empty for a trivial path)
  std::vector<uint32_t> sinks;    // O: clocked gates or POs fed by the region
  std::vector<PathEdge> edges;

  uint32_t min_node() const;
};

/*! \brief Partition of the post-splitter network into datapaths.
 *
 * Every edge of the network belongs to exactly one path; paths are
 * ordered by their minimum contained node id.
 */
std::vector<IndependentPath> extract_paths( SfqNetwork const& sfq, StageAssignment const& stages );

/*! \brief Candidate DFF location: one edge of the path at one stage. */
struct DffSite
{
  uint32_t edge{}; // index into IndependentPath::edges
  int32_t stage{};
  bool forced{ false }; // in front of an SA sink (must be selected)
};

/*! \brief All admissible sites of a path.
 *
 * A site must lie at least one stage after every clocked release that
 * reaches it through the AA region, at most at its edge head's stage
 * window, and strictly before any AS sink it can reach.  SA sinks not
 * directly fed by a clocked reference at their own stage contribute a
 * forced site.  Throws std::invalid_argument when a forced site has no
 * admissible stage (an upstream stage-assignment bug).
 */
std::vector<DffSite> enumerate_sites( IndependentPath const& path, SfqNetwork const& sfq,
                                      StageAssignment const& stages, uint32_t n );

enum class SpacingEncoding
{
  gap_window,  //!< sliding window over n consecutive stages (default)
  eq13_literal //!< chains of span exactly n (debug comparison mode)
};

struct InsertionModel
{
  ConstraintModel model;
  std::vector<VarId> site_var; // per site index
  uint64_t traversals{};       // enumerated source-to-sink traversals
  bool merged_encoding{ false }; // traversal cap hit; merged-at-AA encoding used
};

/*! \brief Builds the per-path minimization model.
 *
 * Traversal enumeration is capped; past the cap an equivalent encoding
 * merges window obligations at AA nodes with auxiliary variables.
 */
InsertionModel build_insertion_model( IndependentPath const& path,
                                      std::vector<DffSite> const& sites, SfqNetwork const& sfq,
                                      StageAssignment const& stages, uint32_t n,
                                      SpacingEncoding encoding = SpacingEncoding::gap_window,
                                      uint64_t traversal_cap = 10000 );

/*! \brief Exhaustive oracle over all site subsets (at most 20 sites).
 *
 * Checks the timing rules directly on each traversal without the
 * solver or the model builder; returns the minimum feasible DFF count,
 * or nullopt if no subset is feasible.
 */
std::optional<int64_t> brute_force_min_dffs( IndependentPath const& path,
                                             std::vector<DffSite> const& sites,
                                             SfqNetwork const& sfq,
                                             StageAssignment const& stages, uint32_t n );

struct PathStats
{
  uint32_t sites{};
  uint32_t dffs{};
  SolveStatus status{ SolveStatus::infeasible };
  uint64_t solver_nodes{};
};

struct DffInsertResult
{
  SfqNetwork sfq;
  StageAssignment stages;
  std::vector<PathStats> per_path;
  SolveStatus overall{ SolveStatus::optimal };
  uint32_t total_dffs{};
  uint32_t total_sites{};
};

/*! \brief Solves every datapath and materializes the selected DFFs.
 *
 * Paths are independent and may be solved by `jobs` worker threads
 * (0 = hardware concurrency); results merge in path order, so the
 * output is identical regardless of thread count.
 */
DffInsertResult insert_dffs( SfqNetwork const& sfq, StageAssignment const& stages,
                             MappingConfig const& cfg, uint32_t jobs = 1,
                             SpacingEncoding encoding = SpacingEncoding::gap_window );

/*! \brief Rewrites every AA stage to the minimum fanout stage.
 *
 * Run after DFF insertion: pins the don't-care freedom of splitter and
 * merger stages to the as-late-as-possible convention the verifier
 * checks.
 */
void canonicalize_aa_stages( SfqNetwork const& sfq, StageAssignment& stages );

} // namespace sfqmap
