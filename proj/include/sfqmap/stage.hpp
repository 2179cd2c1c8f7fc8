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
  \file stage.hpp
  \brief Stage assignment: sigma = n * epoch + phase per node
*/

#pragma once

#include <cstdint>
#include <vector>

namespace sfqmap
{

/*! \brief Clock stage per node of an n-phase network.
 *
 * A stage combines epoch and phase: `sigma = n * epoch + phase` with
 * `0 <= phase < n`.  Every node of the network carries a stage; POs
 * carry the stage of their driver.
 */
struct StageAssignment
{
  uint32_t n{ 1 };
  std::vector<int32_t> sigma; // indexed by node id

  int32_t stage( uint32_t id ) const { return sigma[id]; }
  int32_t epoch( uint32_t id ) const { return sigma[id] / static_cast<int32_t>( n ); }
  int32_t phase( uint32_t id ) const { return sigma[id] % static_cast<int32_t>( n ); }
};

} // namespace sfqmap
