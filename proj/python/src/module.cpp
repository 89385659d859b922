#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "codegree/constructions.hpp"
#include "codegree/embedding.hpp"
#include "codegree/extremal_search.hpp"
#include "codegree/io.hpp"
#include "codegree/nice_picture.hpp"

namespace py = pybind11;
using namespace codegree;

namespace {

py::object big_int( const boost::multiprecision::cpp_int& v )
{
    return py::reinterpret_steal< py::object >( PyLong_FromString( v.str().c_str(), nullptr, 10 ) );
}

py::object fraction( const Rational& r )
{
    static py::object cls = py::module_::import( "fractions" ).attr( "Fraction" );
    return cls( big_int( boost::multiprecision::numerator( r ) ), big_int( boost::multiprecision::denominator( r ) ) );
}

py::dict embedding_dict( const Embedding& e )
{
    py::dict d;
    d[ "map" ] = e.map;
    d[ "pattern" ] = e.pattern;
    d[ "host" ] = e.host;
    return d;
}

py::dict search_dict( const SearchResult& r )
{
    py::dict d;
    d[ "status" ] = to_string( r.status );
    d[ "nodes" ] = r.nodes;
    d[ "map" ] = r.embedding ? py::cast( r.embedding->map ) : py::none();
    return d;
}

py::dict report_dict( const SearchReport& r )
{
    py::dict d;
    d[ "outcome" ] = to_string( r.outcome );
    d[ "n" ] = r.n;
    d[ "epsilon" ] = r.epsilon;
    d[ "seed" ] = r.seed;
    d[ "random_initial" ] = r.random_initial;
    d[ "min_codegree" ] = r.min_codegree;
    d[ "codegree_hypothesis" ] = r.codegree_hypothesis;
    d[ "below_threshold" ] = r.below_threshold;
    d[ "target" ] = r.chain.target;
    d[ "initial" ] = r.chain.initial;
    d[ "pictures" ] = r.chain.pictures.size();
    d[ "cycle" ] = r.witness ? py::cast( std::vector< Vertex >( r.cycle.begin(), r.cycle.end() ) ) : py::none();
    d[ "witness_map" ] = r.witness ? py::cast( r.witness->map ) : py::none();
    if ( r.collision ) {
        d[ "collision" ] = py::make_tuple( r.collision->i, r.collision->j, r.collision->x, r.collision->y );
    } else {
        d[ "collision" ] = py::none();
    }
    if ( r.failure ) {
        d[ "failure" ] = py::make_tuple( r.failure->k, to_string( r.failure->reason ) );
    } else {
        d[ "failure" ] = py::none();
    }
    py::list trace;
    for ( const auto& s : r.trace ) {
        py::dict t;
        t[ "k" ] = s.k;
        t[ "apex" ] = s.apex;
        t[ "pivot" ] = s.pivot;
        t[ "prev_size" ] = s.prev_size;
        t[ "size" ] = s.size;
        t[ "pairs" ] = s.pair_count;
        t[ "link_min_degree" ] = s.link_min_degree;
        trace.append( t );
    }
    d[ "trace" ] = trace;
    d[ "notes" ] = r.notes;
    return d;
}

py::dict ex2_dict( const Ex2Result& r )
{
    py::dict d;
    d[ "n" ] = r.n;
    d[ "value" ] = r.value;
    d[ "method" ] = to_string( r.method );
    d[ "witness" ] = r.witness;
    d[ "work" ] = r.work;
    return d;
}

} // namespace

PYBIND11_MODULE( _codegree, m )
{
    m.doc() = "3-uniform hypergraph codegree toolkit";

    static py::exception< ResourceError > resource_error( m, "ResourceError", PyExc_RuntimeError );
    static py::exception< InternalError > internal_error( m, "InternalError", PyExc_RuntimeError );
    py::register_exception_translator( []( std::exception_ptr p ) {
        try {
            if ( p )
                std::rethrow_exception( p );
        } catch ( const ResourceError& e ) {
            resource_error( e.what() );
        } catch ( const InternalError& e ) {
            internal_error( e.what() );
        } catch ( const InputError& e ) {
            PyErr_SetString( PyExc_ValueError, e.what() );
        }
    } );

    py::class_< Hypergraph3 >( m, "Hypergraph3" )
        .def( py::init< std::size_t >(), py::arg( "n" ) )
        .def( py::init< std::size_t, std::vector< Edge > >(), py::arg( "n" ), py::arg( "edges" ) )
        .def_property_readonly( "n", &Hypergraph3::n )
        .def_property_readonly( "edge_count", &Hypergraph3::edge_count )
        .def_property_readonly( "edges",
                                []( const Hypergraph3& h ) { return std::vector< Edge >( h.edges().begin(), h.edges().end() ); } )
        .def( "has_edge", py::overload_cast< Vertex, Vertex, Vertex >( &Hypergraph3::has_edge, py::const_ ) )
        .def( "degree", []( const Hypergraph3& h, Vertex v ) { return degree( h, v ); } )
        .def( "codegree", []( const Hypergraph3& h, Vertex u, Vertex v ) { return codegree::codegree( h, u, v ); } )
        .def( "neighborhood", []( const Hypergraph3& h, Vertex u, Vertex v ) { return neighborhood( h, u, v ); } )
        .def( "min_codegree", []( const Hypergraph3& h ) { return degree_profile( h ).min_codegree; } )
        .def( "min_degree", []( const Hypergraph3& h ) { return degree_profile( h ).min_degree; } )
        .def( "density", []( const Hypergraph3& h ) { return fraction( edge_density( h ).value ); } )
        .def( "link_edges",
              []( const Hypergraph3& h, Vertex v ) {
                  const auto l = link( h, v );
                  return std::vector< LinkGraph::Pair >( l.edges().begin(), l.edges().end() );
              } )
        .def( "relabeled", []( const Hypergraph3& h, std::vector< Vertex > perm ) { return h.relabeled( perm ); } )
        .def( "to_h3", &to_h3_string )
        .def_static( "from_h3", &from_h3_string )
        .def( "__eq__", []( const Hypergraph3& a, const Hypergraph3& b ) { return a == b; } )
        .def( "__repr__", []( const Hypergraph3& h ) {
            return "Hypergraph3(n=" + std::to_string( h.n() ) + ", m=" + std::to_string( h.edge_count() ) + ")";
        } );

    m.def( "tight_cycle", &tight_cycle, py::arg( "length" ) );
    m.def( "tight_cycle_minus", &tight_cycle_minus, py::arg( "length" ) );
    m.def( "blow_up", []( const Hypergraph3& base, std::size_t l ) { return blow_up( base, l ).result; }, py::arg( "base" ),
           py::arg( "multiplicity" ) );
    m.def( "mubayi_rodl", []( std::size_t depth ) { return mubayi_rodl( depth ).result; }, py::arg( "depth" ) );
    m.def( "complete", &complete, py::arg( "n" ) );
    m.def( "balanced_tripartite_complete", &balanced_tripartite_complete, py::arg( "n" ) );

    m.def( "find_embedding",
           []( const Hypergraph3& f, const Hypergraph3& h, std::uint64_t budget ) { return search_dict( find_embedding( f, h, budget ) ); },
           py::arg( "pattern" ), py::arg( "host" ), py::arg( "budget" ) = kDefaultBudget );
    m.def( "verify_embedding",
           []( const Hypergraph3& f, const Hypergraph3& h, std::vector< Vertex > map ) {
               return verify_embedding( { f, h, std::move( map ) } );
           },
           py::arg( "pattern" ), py::arg( "host" ), py::arg( "map" ) );
    m.def( "explicit_c7_embedding", []() { return embedding_dict( explicit_c7_embedding() ); } );
    m.def( "inductive_embedding", []( std::size_t l ) { return embedding_dict( inductive_embedding( l ) ); }, py::arg( "length" ) );
    m.def( "canonical_form", []( const Hypergraph3& h ) { return canonical_form( h ).bits(); }, py::arg( "h" ) );

    m.def( "find_c5_minus",
           []( const Hypergraph3& h, double epsilon, std::optional< std::uint64_t > seed, bool extended, bool apex_max_degree ) {
               SearchOptions opt;
               opt.seed = seed;
               opt.extended = extended;
               opt.apex_rule = apex_max_degree ? ApexRule::max_degree : ApexRule::smallest_id;
               return report_dict( find_c5_minus( h, epsilon, opt ) );
           },
           py::arg( "h" ), py::arg( "epsilon" ), py::arg( "seed" ) = py::none(), py::arg( "extended" ) = false,
           py::arg( "apex_max_degree" ) = false );

    m.def( "ex2_exact", []( std::size_t n, const Hypergraph3& f ) { return ex2_dict( ex2_exact( n, f ) ); }, py::arg( "n" ),
           py::arg( "pattern" ) );
    m.def( "ex2_heuristic",
           []( std::size_t n, const Hypergraph3& f, std::size_t iterations, std::uint64_t seed, std::optional< Hypergraph3 > initial ) {
               HeuristicOptions opt;
               opt.iterations = iterations;
               opt.seed = seed;
               opt.initial = std::move( initial );
               return ex2_dict( ex2_heuristic( n, f, opt ) );
           },
           py::arg( "n" ), py::arg( "pattern" ), py::arg( "iterations" ) = 2000, py::arg( "seed" ) = 0,
           py::arg( "initial" ) = py::none() );
    m.def( "density_sequence",
           []( std::size_t max_depth ) {
               py::list rows;
               for ( const auto& r : density_sequence( max_depth ) ) {
                   py::dict d;
                   d[ "depth" ] = r.depth;
                   d[ "n" ] = big_int( r.n );
                   d[ "edges" ] = big_int( r.edge_count );
                   d[ "density" ] = fraction( r.density );
                   d[ "decimal" ] = r.density_decimal;
                   d[ "direct_checked" ] = r.direct_checked;
                   rows.append( d );
               }
               return rows;
           },
           py::arg( "max_depth" ) );
    m.def( "freeness_check",
           []( const Hypergraph3& h, std::vector< std::size_t > lengths, std::uint64_t budget ) {
               py::dict out;
               for ( const auto& e : freeness_check( h, lengths, budget ) )
                   out[ py::int_( e.length ) ] = to_string( e.verdict );
               return out;
           },
           py::arg( "h" ), py::arg( "lengths" ), py::arg( "budget" ) = kDefaultBudget );
}
