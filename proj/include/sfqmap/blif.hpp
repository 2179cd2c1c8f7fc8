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
  \file blif.hpp
  \brief Pattern-based BLIF reader

  Supports `.model`, `.inputs`, `.outputs`, `.names`, `.latch` and
  `.end`, with `#` comments and `\` line continuation.  `.names` tables
  are accepted only when they match a canonical AND/OR/NAND/NOR/XOR/
  XNOR/NOT/BUF function (any input count); gates with more than two
  inputs are decomposed into left-leaning two-input trees.  Latches are
  cut: each latch output becomes a PI and each latch input a PO.
*/

#pragma once

#include "network.hpp"

#include <stdexcept>
#include <string>

namespace sfqmap
{

class ParseError : public std::runtime_error
{
public:
  ParseError( uint32_t line, std::string const& message )
      : std::runtime_error( "line " + std::to_string( line ) + ": " + message ), line_( line )
  {
  }

  uint32_t line() const { return line_; }

private:
  uint32_t line_;
};

/*! \brief Parses BLIF text into a Network. */
Network parse_blif( std::string const& text );

/*! \brief Reads and parses a BLIF file. */
Network read_blif( std::string const& path );

} // namespace sfqmap
