#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "codegree/constructions.hpp"
#include "codegree/io.hpp"

using namespace codegree;
namespace fs = std::filesystem;

namespace {

struct TempDir
{
    fs::path path;
    TempDir()
    {
        static int counter = 0;
        path = fs::temp_directory_path()
               / ( "codegree_cli_" + std::to_string( ::getpid() ) + "_" + std::to_string( counter++ ) );
        fs::create_directories( path );
    }
    ~TempDir() { fs::remove_all( path ); }
    std::string file( const std::string& name, const Hypergraph3& h ) const
    {
        const auto p = path / name;
        write_h3_file( p, h );
        return p.string();
    }
    std::string raw( const std::string& name, const std::string& text ) const
    {
        const auto p = path / name;
        std::ofstream( p ) << text;
        return p.string();
    }
};

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run call( std::vector< std::string > args )
{
    args.insert( args.begin(), "codegree-lab" );
    std::ostringstream out, err;
    const int code = cli::main_entry( args, out, err );
    return { code, out.str(), err.str() };
}

} // namespace

TEST_SUITE( "cli" )
{
    TEST_CASE( "parse_args fills the config" )
    {
        TempDir dir;
        const auto in = dir.file( "k6.h3", complete( 6 ) );
        const auto c = cli::parse_args( { "codegree-lab", "--format", "records", "find-c5", "--input", in, "--epsilon",
                                          "0.3", "--seed", "5", "--extended" } );
        CHECK( c.subcommand == "find-c5" );
        CHECK( c.input == in );
        CHECK( *c.epsilon == doctest::Approx( 0.3 ) );
        CHECK( *c.seed == 5 );
        CHECK( c.extended );
        CHECK( c.format == cli::ReportFormat::records );

        const auto f = cli::parse_args( { "codegree-lab", "freeness", "--input", in, "--lengths", "5,7,8" } );
        CHECK( f.lengths == std::vector< std::size_t >{ 5, 7, 8 } );

        const auto g = cli::parse_args( { "codegree-lab", "construct", "blow-up", "--l", "5", "--multiplicity", "3" } );
        CHECK( g.generator == "blow-up" );
        CHECK( g.length == 5 );
        CHECK( g.multiplicity == 3 );
    }

    TEST_CASE( "parse_args rejects bad input" )
    {
        TempDir dir;
        const auto in = dir.file( "k6.h3", complete( 6 ) );
        using V = std::vector< std::string >;
        CHECK_THROWS_AS( cli::parse_args( V{ "codegree-lab", "find-c5", "--input", in, "--epsilon", "1.5" } ), cli::UsageError );
        CHECK_THROWS_AS( cli::parse_args( V{ "codegree-lab", "find-c5", "--input", in, "--epsilon", "0" } ), cli::UsageError );
        CHECK_THROWS_AS( cli::parse_args( V{ "codegree-lab", "find-c5", "--input", in, "--epsilon", "abc" } ), cli::UsageError );
        CHECK_THROWS_AS( cli::parse_args( V{ "codegree-lab", "find-c5", "--input", "/no/such/file.h3", "--epsilon", "0.3" } ),
                         cli::UsageError );
        CHECK_THROWS_AS( cli::parse_args( V{ "codegree-lab", "construct", "petersen" } ), cli::UsageError );
        CHECK_THROWS_AS( cli::parse_args( V{ "codegree-lab", "ex2", "--n", "x", "--pattern", in } ), cli::UsageError );
        CHECK_THROWS_AS( cli::parse_args( V{ "codegree-lab", "--format", "json", "density", "--max-depth", "2" } ),
                         cli::UsageError );
        CHECK_THROWS_AS( cli::parse_args( V{ "codegree-lab" } ), cli::UsageError );
    }

    TEST_CASE( "help exits 0 and lists the subcommands" )
    {
        const auto r = call( { "--help" } );
        CHECK( r.code == 0 );
        for ( const char* s : { "construct", "profile", "embed", "find-c5", "ex2", "density", "freeness" } )
            CHECK( r.out.find( s ) != std::string::npos );
    }

    TEST_CASE( "embed C6- into C3(2)" )
    {
        TempDir dir;
        const auto f = dir.file( "c6m.h3", tight_cycle_minus( 6 ) );
        const auto h = dir.file( "c3x2.h3", blow_up( tight_cycle( 3 ), 2 ).result );
        const auto r = call( { "embed", "--pattern", f, "--host", h } );
        CHECK( r.code == 0 );
        CHECK( std::count( r.out.begin(), r.out.end(), '\n' ) == 6 );
        CHECK( r.out.find( "0 -> " ) == 0 );
    }

    TEST_CASE( "embed reports a budget cut with exit 1" )
    {
        TempDir dir;
        const auto f = dir.file( "c5m.h3", tight_cycle_minus( 5 ) );
        const auto h = dir.file( "mr2.h3", mubayi_rodl( 2 ).result );
        const auto r = call( { "embed", "--pattern", f, "--host", h, "--budget", "5" } );
        CHECK( r.code == 1 );
        CHECK( r.out == "INDETERMINATE\n" );
        const auto none = call( { "embed", "--pattern", f, "--host", h } );
        CHECK( none.code == 0 );
        CHECK( none.out == "NONE\n" );
    }

    TEST_CASE( "find-c5 on the depth-2 construction is a definitive not-found" )
    {
        TempDir dir;
        const auto h = dir.file( "mr2.h3", mubayi_rodl( 2 ).result );
        const auto r = call( { "--format", "records", "find-c5", "--input", h, "--epsilon", "0.2", "--seed", "3" } );
        CHECK( r.code == 0 );
        CHECK( r.out.rfind( "record=find-c5 outcome=not-found n=27 epsilon=0.2 seed=3 ", 0 ) == 0 );
        CHECK( r.out.find( "record=witness" ) == std::string::npos );
    }

    TEST_CASE( "find-c5 on K12 prints a witness and writes the report" )
    {
        TempDir dir;
        const auto h = dir.file( "k12.h3", complete( 12 ) );
        const auto report = ( dir.path / "report.txt" ).string();
        const auto r = call( { "--format", "records", "find-c5", "--input", h, "--epsilon", "0.5", "--report", report } );
        CHECK( r.code == 0 );
        CHECK( r.out.find( "outcome=found" ) != std::string::npos );
        std::size_t edges = 0;
        for ( std::size_t p = r.out.find( "record=witness_edge" ); p != std::string::npos; p = r.out.find( "record=witness_edge", p + 1 ) )
            ++edges;
        CHECK( edges == 4 );
        std::ifstream f( report );
        std::stringstream text;
        text << f.rdbuf();
        CHECK( text.str().find( "outcome: found" ) == 0 );
    }

    TEST_CASE( "records output is byte-identical across runs" )
    {
        TempDir dir;
        const auto h = dir.file( "mr1.h3", mubayi_rodl( 1 ).result );
        const std::vector< std::string > args{ "--format", "records", "find-c5", "--input", h, "--epsilon", "0.3", "--seed", "11" };
        const auto a = call( args );
        const auto b = call( args );
        CHECK( a.code == 0 );
        CHECK( a.out == b.out );
        const auto d1 = call( { "--format", "records", "density", "--max-depth", "3" } );
        const auto d2 = call( { "--format", "records", "density", "--max-depth", "3" } );
        CHECK( d1.out == d2.out );
        CHECK( d1.out.find( "record=density depth=1 n=9 edges=30 triples=84 density=5/14 decimal=0.357143" ) != std::string::npos );
    }

    TEST_CASE( "ex2 and freeness" )
    {
        TempDir dir;
        const auto f = dir.file( "c5m.h3", tight_cycle_minus( 5 ) );
        const auto r = call( { "--format", "records", "ex2", "--n", "5", "--pattern", f } );
        CHECK( r.code == 0 );
        CHECK( r.out.rfind( "record=ex2 n=5 value=1 method=exhaustive", 0 ) == 0 );

        const auto big = call( { "ex2", "--n", "12", "--pattern", f } );
        CHECK( big.code == 1 );
        CHECK( big.err.find( "heuristic" ) != std::string::npos );

        const auto h = dir.file( "mr1.h3", mubayi_rodl( 1 ).result );
        const auto fr = call( { "--format", "records", "freeness", "--input", h, "--lengths", "5,7,8" } );
        CHECK( fr.code == 0 );
        CHECK( fr.out.find( "record=freeness length=5 verdict=free" ) == 0 );
        CHECK( fr.out.find( "record=freeness length=8 verdict=free" ) != std::string::npos );

        const auto cut = call( { "freeness", "--input", dir.file( "mr2.h3", mubayi_rodl( 2 ).result ), "--lengths", "5", "--budget", "3" } );
        CHECK( cut.code == 1 );
        const auto bad = call( { "freeness", "--input", h, "--lengths", "3" } );
        CHECK( bad.code == 2 );
    }

    TEST_CASE( "exit codes for usage and i/o failures" )
    {
        TempDir dir;
        const auto ok = dir.file( "k6.h3", complete( 6 ) );
        CHECK( call( { "find-c5", "--input", ok, "--epsilon", "2" } ).code == 2 );
        CHECK( call( { "profile", "--input", "/no/such/file.h3" } ).code == 2 );
        const auto broken = dir.raw( "broken.h3", "5 2\n0 1 2\n" );
        const auto r = call( { "profile", "--input", broken } );
        CHECK( r.code == 3 );
        CHECK_FALSE( r.err.empty() );
        CHECK( call( { "find-c5", "--input", ok, "--epsilon", "0.5", "--report", "/no/such/dir/r.txt" } ).code == 3 );
        CHECK( call( { "construct", "complete", "--n", "5", "--out", "/no/such/dir/k5.h3" } ).code == 3 );
    }

    TEST_CASE( "construct, write, read and canonicalize round trip" )
    {
        TempDir dir;
        const auto out = ( dir.path / "c7m.h3" ).string();
        const auto r = call( { "construct", "tight-cycle-minus", "--l", "7", "--out", out } );
        REQUIRE( r.code == 0 );
        const auto h = read_h3_file( out );
        CHECK( h == tight_cycle_minus( 7 ) );
        CHECK( canonical_form( h ) == canonical_form( tight_cycle_minus( 7 ) ) );

        const auto stdout_run = call( { "construct", "blow-up", "--l", "5", "--multiplicity", "2" } );
        CHECK( from_h3_string( stdout_run.out ) == blow_up( tight_cycle_minus( 5 ), 2 ).result );

        const auto prof = call( { "--format", "records", "profile", "--input", out } );
        CHECK( prof.out == "record=profile n=7 m=6 min_degree=2 min_codegree=0 density=6/35 density_decimal=0.171429 seed=0\n" );
    }
}
