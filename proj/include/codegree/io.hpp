#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "codegree/hypergraph.hpp"

namespace codegree {

/// Malformed ".h3" content. Carries the 1-based line number when known.
struct FormatError : InputError
{
    FormatError( const std::string& what, std::size_t line );
    std::size_t line;
};

/// ".h3" text format: a header line `n m`, then m lines `a b c`.
/// Lines whose first non-blank character is '#' and blank lines are skipped.
Hypergraph3 read_h3( std::istream& in );
Hypergraph3 read_h3_file( const std::filesystem::path& path );

/// Writes the header and edges in lexicographic order, one per line.
void write_h3( std::ostream& out, const Hypergraph3& h );
void write_h3_file( const std::filesystem::path& path, const Hypergraph3& h );

std::string to_h3_string( const Hypergraph3& h );
Hypergraph3 from_h3_string( const std::string& text );

} // namespace codegree
