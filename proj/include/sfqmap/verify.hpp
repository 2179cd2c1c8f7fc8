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
  \file verify.hpp
  \brief Independent timing and structure verifier for mapped networks

  Checks a final mapped network against the multiphase timing rules
  without sharing any traversal code with the constraint builders:
  releases are propagated through unclocked elements and checked at
  every clocked consumer.  Violation rules:

  - `fanout`: non-splitter with fanout > 1, or splitter without exactly 2
  - `monotonic`: stage decreases along an edge, or fails to increase
    into a clocked gate fed by a clocked reference
  - `spacing`: a clocked consumer more than n stages after (or not
    strictly after) a release reaching it through unclocked elements
  - `sa-predecessor`: an SA gate fanin that is not an AS element or PI
    at the SA gate's own stage
  - `pi-epoch`: a PI outside epoch 0
  - `po-epoch` / `po-stage`: diverging PO epochs, or a PO whose stored
    stage differs from its driver
  - `aa-late`: an unclocked element not annotated at its earliest
    fanout stage (the as-late-as-possible convention)
*/

#pragma once

#include "decompose.hpp"
#include "stage.hpp"

namespace sfqmap
{

ValidationReport verify_timing( SfqNetwork const& sfq, StageAssignment const& stages, uint32_t n );

} // namespace sfqmap
