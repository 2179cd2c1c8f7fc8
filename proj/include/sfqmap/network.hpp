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
  \file network.hpp
  \brief Gate-level netlist: nodes, validation, traversal, simulation
*/

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfqmap
{

enum class GateKind : uint8_t
{
  PI,
  PO,
  AND,
  OR,
  XOR,
  NOT,
  BUF,
  DFF,
  SPLITTER,
  MERGER
};

const char* to_string( GateKind kind );
std::optional<GateKind> gate_kind_from_string( std::string const& s );

/*! \brief Fanin arity required for a gate kind (PI = 0). */
uint32_t gate_arity( GateKind kind );

struct Node
{
  uint32_t id{};
  GateKind kind{ GateKind::PI };
  std::vector<uint32_t> fanins;
};

/*! \brief Directed acyclic gate-level netlist.
 *
 * Node ids are dense integers `0 .. size()-1`.  Edges are the ordered
 * fanin lists; fanout lists are derived on demand.  Primary inputs and
 * outputs are explicit nodes (`GateKind::PI` / `GateKind::PO`); a PO
 * carries exactly one fanin, its driver.  Networks are immutable once
 * built and safe to share across concurrent readers.
 */
class Network
{
public:
  Network() = default;
  explicit Network( std::string name ) : name_( std::move( name ) ) {}

  uint32_t add_node( GateKind kind, std::vector<uint32_t> fanins = {} );

  /*! \brief Redirects one fanin edge; reserved for construction passes. */
  void replace_fanin( uint32_t node, uint32_t slot, uint32_t new_fanin )
  {
    nodes_.at( node ).fanins.at( slot ) = new_fanin;
  }

  uint32_t size() const { return static_cast<uint32_t>( nodes_.size() ); }
  Node const& node( uint32_t id ) const { return nodes_.at( id ); }
  std::vector<Node> const& nodes() const { return nodes_; }

  std::vector<uint32_t> const& pis() const { return pis_; }
  std::vector<uint32_t> const& pos() const { return pos_; }
  uint32_t num_pis() const { return static_cast<uint32_t>( pis_.size() ); }
  uint32_t num_pos() const { return static_cast<uint32_t>( pos_.size() ); }

  bool is_pi( uint32_t id ) const { return node( id ).kind == GateKind::PI; }
  bool is_po( uint32_t id ) const { return node( id ).kind == GateKind::PO; }

  /*! \brief Number of gates, excluding PI/PO pseudo-nodes. */
  uint32_t num_gates() const;

  /*! \brief Fanout counts per node (POs have none by construction). */
  std::vector<uint32_t> fanout_counts() const;

  /*! \brief Fanout adjacency, ordered by (target id, fanin slot). */
  std::vector<std::vector<uint32_t>> fanouts() const;

  std::string const& name() const { return name_; }
  void set_name( std::string name ) { name_ = std::move( name ); }

private:
  std::string name_;
  std::vector<Node> nodes_;
  std::vector<uint32_t> pis_;
  std::vector<uint32_t> pos_;
};

struct Violation
{
  std::string rule;
  uint32_t node{};
  std::string message;
};

struct ValidationReport
{
  bool ok{ true };
  std::vector<Violation> violations;

  void add( std::string rule, uint32_t node, std::string message )
  {
    ok = false;
    violations.push_back( { std::move( rule ), node, std::move( message ) } );
  }
};

/*! \brief Checks all structural invariants; every violation is reported. */
ValidationReport validate( Network const& net );

/*! \brief Topological order over all nodes, ties broken by ascending id.
 *
 * Throws std::runtime_error if the graph has a directed cycle.
 */
std::vector<uint32_t> topological_order( Network const& net );

/*! \brief Combinational evaluation of all POs for one input assignment.
 *
 * DFF, BUF and SPLITTER copy their fanin; MERGER computes OR.  The
 * clocked/unclocked distinction is ignored: this is the functional view
 * used for equivalence checking.
 */
std::vector<bool> simulate( Network const& net, std::vector<bool> const& pi_values );

/*! \brief Same, with a precomputed topological order (bulk simulation). */
std::vector<bool> simulate( Network const& net, std::vector<bool> const& pi_values,
                            std::vector<uint32_t> const& order );

} // namespace sfqmap
