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

#include "sfqmap/splitter_synth.hpp"

#include <algorithm>

namespace sfqmap
{

SplitterResult insert_splitter_trees( SfqNetwork const& sfq, StageAssignment const& stages )
{
  SplitterResult result;
  result.sfq = sfq;
  result.stages = stages;

  auto& net = result.sfq.net;
  auto& category = result.sfq.category;
  auto& sigma = result.stages.sigma;

  // Per-source fanout edge lists (consumer, slot), collected before any
  // rewiring so node ids below refer to the original network.
  const uint32_t original_size = net.size();
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> edges( original_size );
  for ( auto const& node : net.nodes() )
  {
    for ( uint32_t slot = 0; slot < node.fanins.size(); ++slot )
      edges[node.fanins[slot]].push_back( { node.id, slot } );
  }

  for ( uint32_t g = 0; g < original_size; ++g )
  {
    if ( edges[g].size() < 2 )
      continue;

    SplitterPlan plan;
    plan.source = g;
    plan.fanouts = edges[g];
    std::stable_sort( plan.fanouts.begin(), plan.fanouts.end(),
                      [&]( auto const& a, auto const& b ) {
                        if ( sigma[a.first] != sigma[b.first] )
                          return sigma[a.first] < sigma[b.first];
                        return a < b;
                      } );
    for ( auto const& [consumer, slot] : plan.fanouts )
    {
      (void)slot;
      plan.fanout_stages.push_back( sigma[consumer] );
    }

    // Chain of k splitters for k+1 fanouts; splitter i inherits the
    // stage of its paired fanout a_i.
    uint32_t previous = g;
    const size_t k = plan.fanouts.size() - 1;
    for ( size_t i = 0; i < k; ++i )
    {
      const uint32_t s = net.add_node( GateKind::SPLITTER, { previous } );
      category.push_back( GateCategory::AA );
      sigma.push_back( plan.fanout_stages[i] );
      plan.splitters.push_back( s );
      plan.splitter_stages.push_back( plan.fanout_stages[i] );

      auto const& [consumer, slot] = plan.fanouts[i];
      net.replace_fanin( consumer, slot, s );
      previous = s;
    }
    auto const& [last_consumer, last_slot] = plan.fanouts[k];
    net.replace_fanin( last_consumer, last_slot, previous );

    result.plans.push_back( std::move( plan ) );
  }

  return result;
}

} // namespace sfqmap
