#include "codegree/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace codegree {

FormatError::FormatError( const std::string& what, std::size_t line_no )
    : InputError( "line " + std::to_string( line_no ) + ": " + what )
    , line( line_no )
{}

namespace {

bool skippable( const std::string& line )
{
    const auto pos = line.find_first_not_of( " \t\r" );
    return pos == std::string::npos || line[ pos ] == '#';
}

// Parses exactly `count` non-negative integers from the line, nothing else.
template < std::size_t Count >
std::array< unsigned long long, Count > parse_ints( const std::string& line, std::size_t line_no )
{
    std::istringstream ss( line );
    std::array< unsigned long long, Count > out{};
    for ( auto& v : out ) {
        std::string tok;
        if ( !( ss >> tok ) )
            throw FormatError( "expected " + std::to_string( Count ) + " integers", line_no );
        if ( tok.find_first_not_of( "0123456789" ) != std::string::npos )
            throw FormatError( "not a non-negative integer: '" + tok + "'", line_no );
        try {
            v = std::stoull( tok );
        } catch ( const std::out_of_range& ) {
            throw FormatError( "integer too large: '" + tok + "'", line_no );
        }
    }
    std::string extra;
    if ( ss >> extra )
        throw FormatError( "trailing content '" + extra + "'", line_no );
    return out;
}

} // namespace

Hypergraph3 read_h3( std::istream& in )
{
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    unsigned long long n = 0, m = 0;
    std::vector< Edge > edges;
    while ( std::getline( in, line ) ) {
        ++line_no;
        if ( skippable( line ) )
            continue;
        if ( !have_header ) {
            auto [ hn, hm ] = parse_ints< 2 >( line, line_no );
            if ( hn > 0xFFFFFFFFull )
                throw FormatError( "vertex count too large", line_no );
            n = hn;
            m = hm;
            have_header = true;
            edges.reserve( static_cast< std::size_t >( std::min< unsigned long long >( m, 1u << 20 ) ) );
            continue;
        }
        if ( edges.size() == m )
            throw FormatError( "more edge lines than declared", line_no );
        auto [ a, b, c ] = parse_ints< 3 >( line, line_no );
        if ( a >= n || b >= n || c >= n )
            throw FormatError( "vertex id out of range", line_no );
        if ( a == b || b == c || a == c )
            throw FormatError( "edge repeats a vertex", line_no );
        edges.push_back( make_edge( static_cast< Vertex >( a ), static_cast< Vertex >( b ), static_cast< Vertex >( c ) ) );
    }
    if ( !have_header )
        throw FormatError( "missing header line 'n m'", line_no );
    if ( edges.size() != m )
        throw FormatError( "declared " + std::to_string( m ) + " edges, found " + std::to_string( edges.size() ), line_no );
    try {
        return Hypergraph3( static_cast< std::size_t >( n ), std::move( edges ) );
    } catch ( const InputError& e ) {
        throw FormatError( e.what(), line_no );
    }
}

Hypergraph3 read_h3_file( const std::filesystem::path& path )
{
    std::ifstream in( path );
    if ( !in )
        throw std::runtime_error( "cannot open " + path.string() );
    return read_h3( in );
}

void write_h3( std::ostream& out, const Hypergraph3& h )
{
    out << h.n() << ' ' << h.edge_count() << '\n';
    for ( const auto& e : h.edges() )
        out << e[ 0 ] << ' ' << e[ 1 ] << ' ' << e[ 2 ] << '\n';
}

void write_h3_file( const std::filesystem::path& path, const Hypergraph3& h )
{
    std::ofstream out( path );
    if ( !out )
        throw std::runtime_error( "cannot write " + path.string() );
    write_h3( out, h );
    if ( !out.flush() )
        throw std::runtime_error( "write failed for " + path.string() );
}

std::string to_h3_string( const Hypergraph3& h )
{
    std::ostringstream ss;
    write_h3( ss, h );
    return ss.str();
}

Hypergraph3 from_h3_string( const std::string& text )
{
    std::istringstream ss( text );
    return read_h3( ss );
}

} // namespace codegree
