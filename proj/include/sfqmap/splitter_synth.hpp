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
  \file splitter_synth.hpp
  \brief Fanout legalization with late-placed splitter chains

  After stage assignment, each multi-fanout node gets a splitter chain:
  fanouts are sorted by stage (ties by node id), splitter i takes the
  stage of its paired fanout, feeds that fanout plus the next splitter,
  and the last splitter feeds the two latest fanouts.  Placing each
  splitter as late as possible maximizes sharing of the upstream
  path-balancing DFF sites.
*/

#pragma once

#include "decompose.hpp"
#include "stage.hpp"

namespace sfqmap
{

/*! \brief One splitter chain: sorted fanout edges and their splitters. */
struct SplitterPlan
{
  uint32_t source{};                                    // multi-fanout node
  std::vector<std::pair<uint32_t, uint32_t>> fanouts;   // (consumer, fanin slot), sorted
  std::vector<int32_t> fanout_stages;                   // stage per sorted fanout
  std::vector<uint32_t> splitters;                      // assigned node ids, one per fanout but the last
  std::vector<int32_t> splitter_stages;
};

struct SplitterResult
{
  SfqNetwork sfq;
  StageAssignment stages;
  std::vector<SplitterPlan> plans;
};

/*! \brief Returns the fanout-legalized network with extended stages. */
SplitterResult insert_splitter_trees( SfqNetwork const& sfq, StageAssignment const& stages );

} // namespace sfqmap
