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
  \file json_io.hpp
  \brief Native JSON netlist reader

  The native format is an object with `name`, `inputs[]`, `outputs[]`
  and `gates[] = { id, kind, fanins[] }`.  Field order is irrelevant;
  the emitted form sorts gates by id.  Mapped netlists additionally
  carry `phases` and per-gate `stage` / `epoch` / `phase` annotations.
*/

#pragma once

#include "network.hpp"
#include "stage.hpp"

#include <optional>
#include <string>

namespace sfqmap
{

struct ParsedNetlist
{
  Network net;
  std::optional<StageAssignment> stages; // present when annotated
};

/*! \brief Parses the native JSON netlist format. */
ParsedNetlist parse_netlist_json( std::string const& text );

/*! \brief Parses netlist source, auto-detecting BLIF vs native JSON. */
ParsedNetlist parse_netlist( std::string const& text );

/*! \brief Reads a netlist file (BLIF or native JSON by content). */
ParsedNetlist read_netlist( std::string const& path );

} // namespace sfqmap
