#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "codegree/constructions.hpp"
#include "codegree/extremal_search.hpp"
#include "codegree/io.hpp"
#include "codegree/nice_picture.hpp"

namespace codegree::cli {

namespace {

struct IoError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

const char* kGenerators = "tight-cycle, tight-cycle-minus, blow-up, mubayi-rodl, tripartite, complete";

Hypergraph3 load( const std::string& path )
{
    try {
        return read_h3_file( path );
    } catch ( const FormatError& e ) {
        throw IoError( path + ": " + e.what() );
    } catch ( const std::runtime_error& e ) {
        throw IoError( e.what() );
    }
}

void save( const std::string& path, const Hypergraph3& h, std::ostream& out )
{
    if ( path.empty() || path == "-" ) {
        write_h3( out, h );
        return;
    }
    try {
        write_h3_file( path, h );
    } catch ( const std::runtime_error& e ) {
        throw IoError( e.what() );
    }
}

std::string join( std::span< const Vertex > xs, char sep = ',' )
{
    std::string s;
    for ( std::size_t i = 0; i < xs.size(); ++i ) {
        if ( i )
            s += sep;
        s += std::to_string( xs[ i ] );
    }
    return s;
}

std::string rational_str( const Rational& r )
{
    return boost::multiprecision::numerator( r ).str() + "/" + boost::multiprecision::denominator( r ).str();
}

std::string edge_str( const Edge& e, char sep = ',' )
{
    return std::to_string( e[ 0 ] ) + sep + std::to_string( e[ 1 ] ) + sep + std::to_string( e[ 2 ] );
}

bool records( const RunConfig& c ) { return c.format == ReportFormat::records; }

// ---------------------------------------------------------------------------

int run_construct( const RunConfig& c, std::ostream& out, std::ostream& err )
{
    Hypergraph3 h;
    const std::string& g = c.generator;
    if ( g == "tight-cycle" )
        h = tight_cycle( c.length );
    else if ( g == "tight-cycle-minus" )
        h = tight_cycle_minus( c.length );
    else if ( g == "blow-up" ) {
        const Hypergraph3 base = c.base.empty() ? tight_cycle_minus( c.length ) : load( c.base );
        h = blow_up( base, c.multiplicity ).result;
    } else if ( g == "mubayi-rodl" )
        h = mubayi_rodl( c.depth ).result;
    else if ( g == "tripartite" )
        h = balanced_tripartite_complete( c.n );
    else if ( g == "complete" )
        h = complete( c.n );
    else
        throw UsageError( "unknown generator '" + g + "' (expected one of: " + kGenerators + ")" );

    const bool to_stdout = c.output.empty() || c.output == "-";
    save( c.output, h, out );
    if ( !to_stdout ) {
        if ( records( c ) )
            out << "record=construct generator=" << g << " n=" << h.n() << " m=" << h.edge_count()
                << " out=" << c.output << " seed=" << c.seed.value_or( 0 ) << '\n';
        else
            out << "wrote " << g << " (n=" << h.n() << ", m=" << h.edge_count() << ") to " << c.output << '\n';
    } else if ( c.verbosity > 0 ) {
        err << g << ": n=" << h.n() << " m=" << h.edge_count() << '\n';
    }
    return kOk;
}

int run_profile( const RunConfig& c, std::ostream& out, std::ostream& )
{
    const Hypergraph3 h = load( c.input );
    if ( h.n() < 3 )
        throw UsageError( "profile needs at least 3 vertices" );
    const auto p = degree_profile( h );
    const auto d = edge_density( h );
    if ( records( c ) ) {
        out << "record=profile n=" << h.n() << " m=" << h.edge_count() << " min_degree=" << p.min_degree
            << " min_codegree=" << p.min_codegree << " density=" << rational_str( d.value )
            << " density_decimal=" << d.decimal << " seed=" << c.seed.value_or( 0 ) << '\n';
    } else {
        out << "vertices:      " << h.n() << '\n'
            << "edges:         " << h.edge_count() << '\n'
            << "min degree:    " << p.min_degree << '\n'
            << "min codegree:  " << p.min_codegree << '\n'
            << "edge density:  " << rational_str( d.value ) << " (" << d.decimal << ")\n";
    }
    return kOk;
}

int run_embed( const RunConfig& c, std::ostream& out, std::ostream& )
{
    const Hypergraph3 f = load( c.pattern );
    const Hypergraph3 h = load( c.host );
    if ( f.n() > h.n() )
        throw UsageError( "pattern has more vertices than host" );
    const auto r = find_embedding( f, h, c.budget );
    if ( records( c ) ) {
        out << "record=embed status=" << to_string( r.status ) << " nodes=" << r.nodes << " budget=" << c.budget
            << " seed=" << c.seed.value_or( 0 ) << '\n';
        if ( r.embedding )
            for ( Vertex p = 0; p < r.embedding->map.size(); ++p )
                out << "record=map pattern=" << p << " host=" << r.embedding->map[ p ] << '\n';
    } else if ( r.status == SearchStatus::found ) {
        for ( Vertex p = 0; p < r.embedding->map.size(); ++p )
            out << p << " -> " << r.embedding->map[ p ] << '\n';
    } else {
        out << ( r.status == SearchStatus::none ? "NONE" : "INDETERMINATE" ) << '\n';
    }
    return r.status == SearchStatus::indeterminate ? kIndeterminate : kOk;
}

void text_report( std::ostream& o, const SearchReport& r )
{
    o << "outcome: " << to_string( r.outcome ) << '\n'
      << "n: " << r.n << "  epsilon: " << r.epsilon << "  seed: " << r.seed
      << ( r.random_initial ? " (random S_0)" : " (lowest-id S_0)" ) << '\n'
      << "min codegree: " << r.min_codegree << ( r.codegree_hypothesis ? " (>= epsilon*n)" : " (< epsilon*n)" ) << '\n';
    if ( r.below_threshold )
        o << "warning: n is below (2/epsilon)^(5/epsilon^2+2); the existence guarantee does not apply\n";
    o << "target pictures t: " << r.chain.target << "  |S_0|: " << r.chain.initial.size() << '\n';
    o << "stage  apex  pivot  |S_k-1|  |S_k|  |P_k|  mindeg(L)\n";
    for ( const auto& s : r.trace )
        o << s.k << "  " << s.apex << "  " << s.pivot << "  " << s.prev_size << "  " << s.size << "  " << s.pair_count
          << "  " << s.link_min_degree << '\n';
    if ( r.witness ) {
        o << "collision: P_" << r.collision->i << " and P_" << r.collision->j << " share (" << r.collision->x << ", "
          << r.collision->y << ")\n";
        o << "witness (cyclic order u b v x y): " << join( r.cycle, ' ' ) << '\n';
        const auto& [ u, b, v, x, y ] = r.cycle;
        for ( const Edge& e : { make_edge( u, b, v ), make_edge( b, v, x ), make_edge( v, x, y ), make_edge( x, y, u ) } )
            o << "  edge " << edge_str( e, ' ' ) << '\n';
        o << "  missing " << edge_str( make_edge( y, u, b ), ' ' ) << '\n';
    }
    if ( r.failure )
        o << "failure: stage " << r.failure->k << ", " << to_string( r.failure->reason ) << '\n';
    for ( const auto& note : r.notes )
        o << "note: " << note << '\n';
}

void records_report( std::ostream& o, const SearchReport& r )
{
    o << "record=find-c5 outcome=" << to_string( r.outcome ) << " n=" << r.n << " epsilon=" << r.epsilon
      << " seed=" << r.seed << " random_initial=" << r.random_initial << " min_codegree=" << r.min_codegree
      << " hypothesis=" << r.codegree_hypothesis << " below_threshold=" << r.below_threshold
      << " target=" << r.chain.target << " pictures=" << r.chain.pictures.size();
    if ( r.failure )
        o << " failure_stage=" << r.failure->k << " failure_reason=" << to_string( r.failure->reason );
    o << '\n';
    for ( const auto& s : r.trace )
        o << "record=stage k=" << s.k << " apex=" << s.apex << " pivot=" << s.pivot << " prev_size=" << s.prev_size
          << " size=" << s.size << " pairs=" << s.pair_count << " link_min_degree=" << s.link_min_degree << '\n';
    if ( r.witness ) {
        const auto& [ u, b, v, x, y ] = r.cycle;
        o << "record=witness cycle=" << join( r.cycle ) << " i=" << r.collision->i << " j=" << r.collision->j << '\n';
        for ( const Edge& e : { make_edge( u, b, v ), make_edge( b, v, x ), make_edge( v, x, y ), make_edge( x, y, u ) } )
            o << "record=witness_edge edge=" << edge_str( e ) << '\n';
    }
}

int run_find_c5( const RunConfig& c, std::ostream& out, std::ostream& err )
{
    const Hypergraph3 h = load( c.input );
    if ( h.n() < 5 )
        throw UsageError( "find-c5 needs at least 5 vertices" );
    SearchOptions opt;
    opt.seed = c.seed;
    opt.extended = c.extended;
    opt.apex_rule = c.apex_max_degree ? ApexRule::max_degree : ApexRule::smallest_id;
    const auto rep = find_c5_minus( h, *c.epsilon, opt );
    if ( records( c ) )
        records_report( out, rep );
    else
        text_report( out, rep );
    if ( !c.report.empty() ) {
        std::ofstream f( c.report );
        if ( !f )
            throw IoError( "cannot write " + c.report );
        text_report( f, rep );
        if ( !f.flush() )
            throw IoError( "write failed for " + c.report );
    }
    if ( c.verbosity > 0 && rep.below_threshold )
        err << "warning: below the theorem's size threshold\n";
    return kOk;
}

int run_ex2( const RunConfig& c, std::ostream& out, std::ostream& )
{
    const Hypergraph3 f = load( c.pattern );
    Ex2Result r;
    if ( c.heuristic ) {
        HeuristicOptions opt;
        opt.iterations = c.iterations;
        opt.seed = c.seed.value_or( 0 );
        opt.budget = c.budget;
        if ( !c.initial.empty() )
            opt.initial = load( c.initial );
        r = ex2_heuristic( c.n, f, opt );
    } else {
        r = ex2_exact( c.n, f );
    }
    if ( records( c ) )
        out << "record=ex2 n=" << r.n << " value=" << r.value << " method=" << to_string( r.method )
            << " witness_edges=" << r.witness.edge_count() << " work=" << r.work << " seed=" << c.seed.value_or( 0 )
            << '\n';
    else
        out << "ex2(" << r.n << ", F) " << ( c.heuristic ? ">= " : "= " ) << r.value << "  [" << to_string( r.method )
            << ", witness with " << r.witness.edge_count() << " edges]\n";
    if ( !c.output.empty() )
        save( c.output, r.witness, out );
    return kOk;
}

int run_density( const RunConfig& c, std::ostream& out, std::ostream& )
{
    const auto rows = density_sequence( c.max_depth );
    if ( !records( c ) )
        out << "depth  n  edges  density  decimal\n";
    for ( const auto& r : rows ) {
        if ( records( c ) )
            out << "record=density depth=" << r.depth << " n=" << r.n.str() << " edges=" << r.edge_count.str()
                << " triples=" << choose3( r.n ).str() << " density=" << rational_str( r.density )
                << " decimal=" << r.density_decimal << " direct=" << r.direct_checked
                << " seed=" << c.seed.value_or( 0 ) << '\n';
        else
            out << r.depth << "  " << r.n.str() << "  " << r.edge_count.str() << "  " << r.edge_count.str() << "/"
                << choose3( r.n ).str() << "  " << r.density_decimal << '\n';
    }
    return kOk;
}

int run_freeness( const RunConfig& c, std::ostream& out, std::ostream& )
{
    const Hypergraph3 h = load( c.input );
    for ( std::size_t l : c.lengths )
        if ( l < 4 || l > h.n() )
            throw UsageError( "length " + std::to_string( l ) + " must lie in [4, n]" );
    const auto entries = freeness_check( h, c.lengths, c.budget );
    bool indeterminate = false;
    for ( const auto& e : entries ) {
        indeterminate |= e.verdict == Freeness::indeterminate;
        if ( records( c ) ) {
            out << "record=freeness length=" << e.length << " verdict=" << to_string( e.verdict )
                << " nodes=" << e.nodes << " seed=" << c.seed.value_or( 0 );
            if ( e.witness )
                out << " witness=" << join( e.witness->map );
            out << '\n';
        } else {
            out << "C" << e.length << "-: " << to_string( e.verdict );
            if ( e.witness )
                out << "  [" << join( e.witness->map, ' ' ) << "]";
            out << '\n';
        }
    }
    return indeterminate ? kIndeterminate : kOk;
}

} // namespace

RunConfig parse_args( const std::vector< std::string >& argv )
{
    RunConfig cfg;
    CLI::App app{ "Codegree lab: 3-uniform hypergraph constructions, containment, and the C5- picture engine",
                  "codegree-lab" };
    app.require_subcommand( 1 );
    std::string format = "text";
    app.add_option( "--format", format, "Report format" )->check( CLI::IsMember( { "text", "records" } ) );
    app.add_flag( "-v,--verbose", cfg.verbosity, "More diagnostics on stderr" );

    auto budget_opt = [ & ]( CLI::App* sub ) {
        sub->add_option( "--budget", cfg.budget, "Backtracking node budget" )->check( CLI::PositiveNumber );
    };
    auto seed_opt = [ & ]( CLI::App* sub ) { return sub->add_option( "--seed", cfg.seed, "64-bit seed" ); };

    auto* construct = app.add_subcommand( "construct", "Generate a hypergraph and write it as .h3" );
    construct->add_option( "generator", cfg.generator, std::string( "One of: " ) + kGenerators )
        ->required()
        ->check( CLI::IsMember( { "tight-cycle", "tight-cycle-minus", "blow-up", "mubayi-rodl", "tripartite", "complete" } ) );
    construct->add_option( "--l", cfg.length, "Cycle length (also the C_l- base for blow-up)" );
    construct->add_option( "--n", cfg.n, "Vertex count (tripartite, complete)" );
    construct->add_option( "--depth", cfg.depth, "Iteration depth (mubayi-rodl)" );
    construct->add_option( "--multiplicity", cfg.multiplicity, "Blow-up multiplicity" )->check( CLI::PositiveNumber );
    construct->add_option( "--base", cfg.base, "Base hypergraph for blow-up" )->check( CLI::ExistingFile );
    construct->add_option( "--out", cfg.output, "Output path (stdout when omitted)" );
    seed_opt( construct );

    auto* profile = app.add_subcommand( "profile", "Degree and codegree profile" );
    profile->add_option( "--input", cfg.input )->required()->check( CLI::ExistingFile );
    seed_opt( profile );

    auto* embed = app.add_subcommand( "embed", "Search for a copy of a pattern in a host" );
    embed->add_option( "--pattern", cfg.pattern )->required()->check( CLI::ExistingFile );
    embed->add_option( "--host", cfg.host )->required()->check( CLI::ExistingFile );
    budget_opt( embed );
    seed_opt( embed );

    auto* find = app.add_subcommand( "find-c5", "Run the nice-picture engine for a copy of C5-" );
    find->add_option( "--input", cfg.input )->required()->check( CLI::ExistingFile );
    find->add_option( "--epsilon", cfg.epsilon, "Codegree density parameter in (0,1)" )
        ->required()
        ->check( CLI::Validator(
            []( std::string& s ) -> std::string {
                double v = 0;
                try {
                    std::size_t used = 0;
                    v = std::stod( s, &used );
                    if ( used != s.size() )
                        return "epsilon is not a number: " + s;
                } catch ( const std::exception& ) {
                    return "epsilon is not a number: " + s;
                }
                return ( v > 0.0 && v < 1.0 ) ? std::string() : "epsilon must lie in (0,1), got " + s;
            },
            "(0,1)" ) );
    seed_opt( find );
    find->add_flag( "--extended", cfg.extended, "Keep building pictures past t while S_k is non-empty" );
    find->add_flag( "--apex-max-degree", cfg.apex_max_degree, "Pick the apex of largest degree instead of smallest id" );
    find->add_option( "--report", cfg.report, "Also write the text report to this path" );

    auto* ex2 = app.add_subcommand( "ex2", "Codegree Turan number of a pattern at small n" );
    ex2->add_option( "--n", cfg.n )->required()->check( CLI::Range( 3, 1 << 20 ) );
    ex2->add_option( "--pattern", cfg.pattern )->required()->check( CLI::ExistingFile );
    auto* exact_flag = ex2->add_flag( "--exact", "Exhaustive search (default)" );
    auto* heur_flag = ex2->add_flag( "--heuristic", cfg.heuristic, "Local-search lower bound" );
    exact_flag->excludes( heur_flag );
    ex2->add_option( "--iters", cfg.iterations, "Local-search iterations" );
    ex2->add_option( "--initial", cfg.initial, "Initial F-free state for --heuristic" )->check( CLI::ExistingFile );
    ex2->add_option( "--out", cfg.output, "Write the witness as .h3" );
    budget_opt( ex2 );
    seed_opt( ex2 );

    auto* density = app.add_subcommand( "density", "Edge densities of the iterated tripartite construction" );
    density->add_option( "--max-depth", cfg.max_depth )->required();
    seed_opt( density );

    auto* freeness = app.add_subcommand( "freeness", "Certify C_l- freeness for several l" );
    freeness->add_option( "--input", cfg.input )->required()->check( CLI::ExistingFile );
    freeness->add_option( "--lengths", cfg.lengths, "Comma-separated cycle lengths" )->required()->delimiter( ',' );
    budget_opt( freeness );
    seed_opt( freeness );

    std::vector< const char* > raw;
    raw.reserve( argv.size() );
    for ( const auto& a : argv )
        raw.push_back( a.c_str() );
    try {
        app.parse( static_cast< int >( raw.size() ), raw.data() );
    } catch ( const CLI::CallForHelp& e ) {
        std::ostringstream o, e2;
        app.exit( e, o, e2 );
        cfg.help = o.str();
        return cfg;
    } catch ( const CLI::CallForAllHelp& e ) {
        std::ostringstream o, e2;
        app.exit( e, o, e2 );
        cfg.help = o.str();
        return cfg;
    } catch ( const CLI::ParseError& e ) {
        throw UsageError( e.what() );
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.format = format == "records" ? ReportFormat::records : ReportFormat::text;
    return cfg;
}

int run( const RunConfig& config, std::ostream& out, std::ostream& err )
{
    if ( !config.help.empty() ) {
        out << config.help;
        return kOk;
    }
    const std::string& s = config.subcommand;
    if ( s == "construct" )
        return run_construct( config, out, err );
    if ( s == "profile" )
        return run_profile( config, out, err );
    if ( s == "embed" )
        return run_embed( config, out, err );
    if ( s == "find-c5" )
        return run_find_c5( config, out, err );
    if ( s == "ex2" )
        return run_ex2( config, out, err );
    if ( s == "density" )
        return run_density( config, out, err );
    if ( s == "freeness" )
        return run_freeness( config, out, err );
    throw UsageError( "unknown subcommand '" + s + "'" );
}

int main_entry( const std::vector< std::string >& argv, std::ostream& out, std::ostream& err )
{
    try {
        return run( parse_args( argv ), out, err );
    } catch ( const UsageError& e ) {
        err << "usage error: " << e.what() << "\nrun with --help for usage\n";
        return kUsage;
    } catch ( const IoError& e ) {
        err << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch ( const ResourceError& e ) {
        err << "resource limit: " << e.what() << '\n';
        return kIndeterminate;
    } catch ( const InputError& e ) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace codegree::cli
