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

#include "sfqmap/blif.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace sfqmap
{

namespace
{

struct Statement
{
  uint32_t line{};
  std::vector<std::string> tokens;
};

struct NamesBlock
{
  uint32_t line{};
  std::vector<std::string> inputs;
  std::string output;
  std::vector<std::string> rows;
};

std::vector<Statement> tokenize( std::string const& text )
{
  std::vector<Statement> statements;
  std::istringstream in( text );
  std::string raw;
  uint32_t line_no = 0;
  std::string pending;
  uint32_t pending_line = 0;

  while ( std::getline( in, raw ) )
  {
    ++line_no;
    if ( auto pos = raw.find( '#' ); pos != std::string::npos )
      raw.erase( pos );
    while ( !raw.empty() && ( raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t' ) )
      raw.pop_back();

    bool continued = false;
    if ( !raw.empty() && raw.back() == '\\' )
    {
      raw.pop_back();
      continued = true;
    }
    if ( pending.empty() )
      pending_line = line_no;
    pending += raw;
    pending += ' ';
    if ( continued )
      continue;

    std::istringstream ls( pending );
    Statement st;
    st.line = pending_line;
    std::string tok;
    while ( ls >> tok )
      st.tokens.push_back( tok );
    if ( !st.tokens.empty() )
      statements.push_back( std::move( st ) );
    pending.clear();
  }
  if ( !pending.empty() )
  {
    std::istringstream ls( pending );
    Statement st;
    st.line = pending_line;
    std::string tok;
    while ( ls >> tok )
      st.tokens.push_back( tok );
    if ( !st.tokens.empty() )
      statements.push_back( std::move( st ) );
  }
  return statements;
}

// Canonical single-gate functions recognized in `.names` tables.  The
// base kind is possibly wrapped in a trailing inverter.
struct RecognizedFunction
{
  GateKind base;     // AND, OR, XOR, BUF for k >= 1
  bool inverted{ false };
};

bool full_row( std::string const& row )
{
  return std::all_of( row.begin(), row.end(), []( char c ) { return c == '0' || c == '1'; } );
}

bool one_hot_row( std::string const& row, char hot )
{
  uint32_t hits = 0;
  for ( char c : row )
  {
    if ( c == hot )
      ++hits;
    else if ( c != '-' )
      return false;
  }
  return hits == 1;
}

std::optional<RecognizedFunction> match_structural( std::vector<std::string> const& planes, char out, uint32_t k )
{
  // Interpret the cover as its ON-set function f; `out == '0'` rows give
  // the complement, folded into `inverted`.
  const bool off_set = ( out == '0' );
  auto make = [&]( GateKind base, bool inv ) {
    return RecognizedFunction{ base, inv != off_set };
  };

  if ( k == 1 )
  {
    if ( planes.size() == 1 && planes[0] == "1" )
      return make( GateKind::BUF, false );
    if ( planes.size() == 1 && planes[0] == "0" )
      return make( GateKind::BUF, true );
    return std::nullopt;
  }

  if ( planes.size() == 1 )
  {
    auto const& p = planes[0];
    if ( std::all_of( p.begin(), p.end(), []( char c ) { return c == '1'; } ) )
      return make( GateKind::AND, false ); // all ones -> AND
    if ( std::all_of( p.begin(), p.end(), []( char c ) { return c == '0'; } ) )
      return make( GateKind::OR, true ); // all zeros -> NOR
    return std::nullopt;
  }

  if ( planes.size() == k )
  {
    std::set<size_t> hot1, hot0;
    bool ok1 = true, ok0 = true;
    for ( auto const& p : planes )
    {
      if ( one_hot_row( p, '1' ) )
        hot1.insert( p.find( '1' ) );
      else
        ok1 = false;
      if ( one_hot_row( p, '0' ) )
        hot0.insert( p.find( '0' ) );
      else
        ok0 = false;
    }
    if ( ok1 && hot1.size() == k )
      return make( GateKind::OR, false ); // one '1' per position -> OR
    if ( ok0 && hot0.size() == k )
      return make( GateKind::AND, true ); // one '0' per position -> NAND
  }

  if ( k < 31 && planes.size() == ( 1ull << ( k - 1 ) ) )
  {
    std::set<std::string> distinct( planes.begin(), planes.end() );
    if ( distinct.size() == planes.size() &&
         std::all_of( planes.begin(), planes.end(), full_row ) )
    {
      auto parity = [&]( std::string const& p ) {
        return std::count( p.begin(), p.end(), '1' ) % 2;
      };
      if ( std::all_of( planes.begin(), planes.end(), [&]( auto const& p ) { return parity( p ) == 1; } ) )
        return make( GateKind::XOR, false );
      if ( std::all_of( planes.begin(), planes.end(), [&]( auto const& p ) { return parity( p ) == 0; } ) )
        return make( GateKind::XOR, true ); // XNOR
    }
  }

  return std::nullopt;
}

// Fallback for covers in non-canonical row form: expand to a truth
// table (k <= 10) and compare against the recognized functions.
std::optional<RecognizedFunction> match_by_table( std::vector<std::string> const& planes, char out, uint32_t k )
{
  if ( k > 10 )
    return std::nullopt;
  const size_t words = 1ull << k;
  std::vector<bool> on( words, false );
  for ( auto const& p : planes )
  {
    std::vector<size_t> indices{ 0 };
    for ( uint32_t i = 0; i < k; ++i )
    {
      const char c = p[i];
      std::vector<size_t> next;
      for ( auto idx : indices )
      {
        if ( c == '0' || c == '-' )
          next.push_back( idx );
        if ( c == '1' || c == '-' )
          next.push_back( idx | ( 1ull << i ) );
      }
      indices = std::move( next );
    }
    for ( auto idx : indices )
      on[idx] = true;
  }
  if ( out == '0' )
    on.flip();

  auto equals = [&]( auto&& fn ) {
    for ( size_t m = 0; m < words; ++m )
    {
      if ( on[m] != fn( m ) )
        return false;
    }
    return true;
  };
  auto all_ones = [&]( size_t m ) { return m == words - 1; };
  auto any_one = [&]( size_t m ) { return m != 0; };
  auto odd = [&]( size_t m ) { return __builtin_popcountll( m ) % 2 == 1; };

  if ( equals( all_ones ) )
    return RecognizedFunction{ GateKind::AND, false };
  if ( equals( [&]( size_t m ) { return !all_ones( m ); } ) )
    return RecognizedFunction{ GateKind::AND, true };
  if ( equals( any_one ) )
    return RecognizedFunction{ GateKind::OR, false };
  if ( equals( [&]( size_t m ) { return !any_one( m ); } ) )
    return RecognizedFunction{ GateKind::OR, true };
  if ( equals( odd ) )
    return RecognizedFunction{ GateKind::XOR, false };
  if ( equals( [&]( size_t m ) { return !odd( m ); } ) )
    return RecognizedFunction{ GateKind::XOR, true };
  if ( k == 1 && equals( []( size_t m ) { return m == 1; } ) )
    return RecognizedFunction{ GateKind::BUF, false };
  if ( k == 1 && equals( []( size_t m ) { return m == 0; } ) )
    return RecognizedFunction{ GateKind::BUF, true };
  return std::nullopt;
}

class BlifBuilder
{
public:
  explicit BlifBuilder( std::vector<Statement> statements ) : statements_( std::move( statements ) ) {}

  Network run()
  {
    collect();

    net_.set_name( model_name_ );
    for ( auto const& name : input_names_ )
      define( name, net_.add_node( GateKind::PI ), 0 );
    for ( auto const& [latch_in, latch_out, line] : latches_ )
    {
      (void)latch_in;
      define( latch_out, net_.add_node( GateKind::PI ), line );
    }

    for ( auto& block : names_ )
      build_signal( block.output, block.line );

    uint32_t po_total = 0;
    for ( auto const& [name, line] : output_names_ )
    {
      net_.add_node( GateKind::PO, { require( name, line ) } );
      ++po_total;
    }
    for ( auto const& [latch_in, latch_out, line] : latches_ )
    {
      (void)latch_out;
      net_.add_node( GateKind::PO, { require( latch_in, line ) } );
      ++po_total;
    }
    if ( po_total == 0 )
      throw ParseError( 1, "no primary outputs" );
    return net_;
  }

private:
  void collect()
  {
    bool ended = false;
    for ( auto const& st : statements_ )
    {
      if ( ended )
        break;
      auto const& cmd = st.tokens[0];
      if ( cmd == ".model" )
      {
        if ( seen_model_ )
          throw ParseError( st.line, "multiple .model sections are not supported" );
        seen_model_ = true;
        if ( st.tokens.size() > 1 )
          model_name_ = st.tokens[1];
      }
      else if ( cmd == ".inputs" )
      {
        for ( size_t i = 1; i < st.tokens.size(); ++i )
        {
          if ( declared_inputs_.count( st.tokens[i] ) )
            throw ParseError( st.line, "duplicate input '" + st.tokens[i] + "'" );
          declared_inputs_.insert( st.tokens[i] );
          input_names_.push_back( st.tokens[i] );
        }
      }
      else if ( cmd == ".outputs" )
      {
        for ( size_t i = 1; i < st.tokens.size(); ++i )
          output_names_.push_back( { st.tokens[i], st.line } );
      }
      else if ( cmd == ".names" )
      {
        if ( st.tokens.size() < 2 )
          throw ParseError( st.line, ".names requires at least an output signal" );
        NamesBlock block;
        block.line = st.line;
        block.output = st.tokens.back();
        block.inputs.assign( st.tokens.begin() + 1, st.tokens.end() - 1 );
        names_.push_back( std::move( block ) );
        current_names_ = names_.size();
      }
      else if ( cmd == ".latch" )
      {
        if ( st.tokens.size() < 3 )
          throw ParseError( st.line, ".latch requires input and output signals" );
        latches_.push_back( { st.tokens[1], st.tokens[2], st.line } );
      }
      else if ( cmd == ".end" )
      {
        ended = true;
      }
      else if ( cmd[0] == '.' )
      {
        throw ParseError( st.line, "unsupported construct '" + cmd + "'" );
      }
      else
      {
        // Cover row of the active .names block.
        if ( current_names_ == 0 )
          throw ParseError( st.line, "cover row outside a .names block" );
        std::string row = st.tokens[0];
        if ( st.tokens.size() == 2 )
          row += " " + st.tokens[1];
        else if ( st.tokens.size() > 2 )
          throw ParseError( st.line, "malformed cover row" );
        names_[current_names_ - 1].rows.push_back( row );
      }
      if ( cmd != ".names" && cmd[0] == '.' )
        current_names_ = 0;
    }

    for ( auto const& block : names_ )
    {
      if ( declared_inputs_.count( block.output ) )
        throw ParseError( block.line, "signal '" + block.output + "' already declared as input" );
      auto [it, inserted] = producer_.insert( { block.output, &block } );
      if ( !inserted )
        throw ParseError( block.line, "duplicate definition of '" + block.output + "'" );
    }
    for ( auto const& [latch_in, latch_out, line] : latches_ )
    {
      (void)latch_in;
      if ( declared_inputs_.count( latch_out ) || producer_.count( latch_out ) )
        throw ParseError( line, "duplicate definition of '" + latch_out + "'" );
    }
  }

  void define( std::string const& name, uint32_t id, uint32_t line )
  {
    auto [it, inserted] = signal_.insert( { name, id } );
    if ( !inserted )
      throw ParseError( line, "duplicate definition of '" + name + "'" );
  }

  uint32_t require( std::string const& name, uint32_t line )
  {
    if ( auto it = signal_.find( name ); it != signal_.end() )
      return it->second;
    if ( producer_.count( name ) )
      return build_signal( name, line );
    throw ParseError( line, "undeclared signal '" + name + "'" );
  }

  uint32_t build_signal( std::string const& name, uint32_t line )
  {
    if ( auto it = signal_.find( name ); it != signal_.end() )
      return it->second;
    auto pit = producer_.find( name );
    if ( pit == producer_.end() )
      throw ParseError( line, "undeclared signal '" + name + "'" );
    if ( !in_progress_.insert( name ).second )
      throw ParseError( line, "combinational cycle through '" + name + "'" );

    auto const& block = *pit->second;
    std::vector<uint32_t> fanins;
    fanins.reserve( block.inputs.size() );
    for ( auto const& in : block.inputs )
      fanins.push_back( require( in, block.line ) );

    const uint32_t id = build_gate( block, fanins );
    in_progress_.erase( name );
    signal_.insert( { name, id } );
    return id;
  }

  uint32_t build_gate( NamesBlock const& block, std::vector<uint32_t> fanins )
  {
    const uint32_t k = static_cast<uint32_t>( block.inputs.size() );
    if ( k == 0 )
      throw ParseError( block.line, "constant '" + block.output + "' is not supported" );
    if ( std::set<std::string>( block.inputs.begin(), block.inputs.end() ).size() != k )
      throw ParseError( block.line, "repeated fanin in .names for '" + block.output + "'" );
    if ( block.rows.empty() )
      throw ParseError( block.line, "empty cover for '" + block.output + "'" );

    std::vector<std::string> planes;
    char out = 0;
    for ( auto const& row : block.rows )
    {
      std::istringstream rs( row );
      std::string plane, bit;
      rs >> plane >> bit;
      if ( bit.size() != 1 || ( bit != "0" && bit != "1" ) || plane.size() != k )
        throw ParseError( block.line, "malformed cover row for '" + block.output + "'" );
      for ( char c : plane )
      {
        if ( c != '0' && c != '1' && c != '-' )
          throw ParseError( block.line, "malformed cover row for '" + block.output + "'" );
      }
      if ( out == 0 )
        out = bit[0];
      else if ( out != bit[0] )
        throw ParseError( block.line, "mixed ON/OFF cover for '" + block.output + "'" );
      planes.push_back( plane );
    }

    auto fn = match_structural( planes, out, k );
    if ( !fn )
      fn = match_by_table( planes, out, k );
    if ( !fn )
      throw ParseError( block.line, "unsupported truth table for '" + block.output + "'" );

    uint32_t id;
    if ( fn->base == GateKind::BUF )
    {
      id = net_.add_node( fn->inverted ? GateKind::NOT : GateKind::BUF, { fanins[0] } );
      return id;
    }

    // Left-leaning two-input tree over fanins ordered by node id.
    std::sort( fanins.begin(), fanins.end() );
    id = fanins[0];
    for ( size_t i = 1; i < fanins.size(); ++i )
      id = net_.add_node( fn->base, { id, fanins[i] } );
    if ( fn->inverted )
      id = net_.add_node( GateKind::NOT, { id } );
    return id;
  }

  std::vector<Statement> statements_;
  bool seen_model_{ false };
  std::string model_name_{ "top" };
  std::vector<std::string> input_names_;
  std::vector<std::pair<std::string, uint32_t>> output_names_;
  std::vector<std::tuple<std::string, std::string, uint32_t>> latches_; // (input, output, line)
  std::vector<NamesBlock> names_;
  size_t current_names_{ 0 }; // 1-based index into names_, 0 = none
  std::set<std::string> declared_inputs_;
  std::map<std::string, NamesBlock const*> producer_;
  std::map<std::string, uint32_t> signal_;
  std::set<std::string> in_progress_;
  Network net_;
};

} // namespace

Network parse_blif( std::string const& text )
{
  return BlifBuilder( tokenize( text ) ).run();
}

Network read_blif( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( "cannot open '" + path + "'" );
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_blif( buffer.str() );
}

} // namespace sfqmap
