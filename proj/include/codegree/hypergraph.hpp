#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "codegree/bitset.hpp"
#include "codegree/errors.hpp"

namespace codegree {

using Vertex = std::uint32_t;

/// A 3-edge, always stored with its vertices in increasing order.
using Edge = std::array< Vertex, 3 >;

using Rational = boost::multiprecision::cpp_rational;

/// Sorts the three vertices; throws InputError unless they are distinct.
Edge make_edge( Vertex a, Vertex b, Vertex c );

/// 3-uniform hypergraph on vertices 0..n-1.
///
/// Edges are kept sorted lexicographically and duplicate-free. A flat
/// pair-neighbourhood index (one n-bit row per ordered pair) answers
/// has_edge / codegree / N(uv) in O(1). Instances are immutable; the
/// with_edge / without_edge helpers return modified copies.
class Hypergraph3
{
public:
    Hypergraph3() = default;
    explicit Hypergraph3( std::size_t n );
    /// Edges may arrive in any order and with unsorted vertices.
    /// Throws InputError on out-of-range vertices, repeated vertices or
    /// duplicate edges.
    Hypergraph3( std::size_t n, std::vector< Edge > edges );

    std::size_t n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span< const Edge > edges() const noexcept { return edges_; }

    bool has_edge( Vertex a, Vertex b, Vertex c ) const noexcept
    {
        if ( a == b || b == c || a == c || a >= n_ || b >= n_ || c >= n_ )
            return false;
        return row( a, b ).test( c );
    }
    bool has_edge( const Edge& e ) const noexcept { return has_edge( e[ 0 ], e[ 1 ], e[ 2 ] ); }

    /// Unchecked accessors for kernels; callers guarantee ids are in range and u != v.
    BitsetView row( Vertex u, Vertex v ) const noexcept
    {
        return { pair_words_.data() + ( static_cast< std::size_t >( u ) * n_ + v ) * words_, n_ };
    }
    std::uint32_t codegree_unchecked( Vertex u, Vertex v ) const noexcept
    {
        return codegree_[ static_cast< std::size_t >( u ) * n_ + v ];
    }
    std::uint32_t degree_unchecked( Vertex v ) const noexcept { return degree_[ v ]; }

    Hypergraph3 with_edge( const Edge& e ) const;
    Hypergraph3 without_edge( const Edge& e ) const;

    /// Relabels vertex v as perm[v]; perm must be a permutation of 0..n-1.
    Hypergraph3 relabeled( std::span< const Vertex > perm ) const;

    /// Sub-hypergraph induced on `keep`, with keep[i] renamed to i.
    Hypergraph3 induced( std::span< const Vertex > keep ) const;

    friend bool operator==( const Hypergraph3& a, const Hypergraph3& b ) noexcept
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void build_index();
    void toggle_index( const Edge& e, bool on );

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector< Edge > edges_;
    std::vector< word_type > pair_words_;
    std::vector< std::uint32_t > codegree_;
    std::vector< std::uint32_t > degree_;
};

/// L_v: the graph on V∖{v} whose edges are e∖{v} for edges e through v.
class LinkGraph
{
public:
    using Pair = std::pair< Vertex, Vertex >;

    LinkGraph() = default;
    /// Throws InputError if `center` occurs in an edge or an id is out of range.
    LinkGraph( Vertex center, std::size_t n, std::vector< Pair > edges );

    Vertex center() const noexcept { return center_; }
    std::size_t n() const noexcept { return n_; }
    std::span< const Pair > edges() const noexcept { return edges_; }

    BitsetView neighbors( Vertex u ) const noexcept { return { adj_.data() + static_cast< std::size_t >( u ) * words_, n_ }; }
    std::size_t degree( Vertex u ) const noexcept { return neighbors( u ).count(); }
    bool has_edge( Vertex a, Vertex b ) const noexcept { return a != b && neighbors( a ).test( b ); }

    /// Minimum degree over V∖{center}; 0 when that set is empty.
    std::size_t min_degree() const noexcept;

private:
    Vertex center_ = 0;
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector< Pair > edges_;
    std::vector< word_type > adj_;
};

struct DegreeProfile
{
    std::size_t n = 0;
    std::uint32_t min_degree = 0;
    std::uint32_t min_codegree = 0;
    /// d(uv) for u < v, pairs in lexicographic order.
    std::vector< std::uint32_t > codegree_table;

    std::uint32_t codegree( Vertex u, Vertex v ) const;
};

struct Density
{
    Rational value;
    std::string decimal;
};

std::size_t degree( const Hypergraph3& h, Vertex v );
std::size_t codegree( const Hypergraph3& h, Vertex u, Vertex v );
std::vector< Vertex > neighborhood( const Hypergraph3& h, Vertex u, Vertex v );
LinkGraph link( const Hypergraph3& h, Vertex v );
DegreeProfile degree_profile( const Hypergraph3& h );
Density edge_density( const Hypergraph3& h );

/// C(n, 3) as an exact integer.
boost::multiprecision::cpp_int choose3( const boost::multiprecision::cpp_int& n );

/// Fixed six-decimal rendering used in reports.
std::string to_decimal( const Rational& r, int digits = 6 );

/// Index of pair u < v in the lexicographic pair order over n vertices.
constexpr std::size_t pair_index( std::size_t n, std::size_t u, std::size_t v ) noexcept
{
    return u * n - u * ( u + 1 ) / 2 + ( v - u - 1 );
}

} // namespace codegree
