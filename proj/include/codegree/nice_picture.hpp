#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "codegree/embedding.hpp"
#include "codegree/hypergraph.hpp"

namespace codegree {

using OrderedPair = std::pair< Vertex, Vertex >;

/// Set of ordered vertex pairs. Dense n²-bit storage up to kDenseLimit
/// vertices, an ordered tree above that. Iteration is ascending either way.
class PairSet
{
public:
    static constexpr std::size_t kDenseLimit = std::size_t{ 1 } << 13;

    PairSet() = default;
    explicit PairSet( std::size_t n );

    std::size_t n() const noexcept { return n_; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    bool dense() const noexcept { return n_ <= kDenseLimit; }

    void insert( Vertex x, Vertex y );
    bool contains( Vertex x, Vertex y ) const noexcept;

    template < typename Fn >
    void for_each( Fn&& fn ) const
    {
        if ( dense() ) {
            bits_.for_each( [ & ]( std::size_t i ) { fn( static_cast< Vertex >( i / n_ ), static_cast< Vertex >( i % n_ ) ); } );
        } else {
            for ( auto key : sparse_ )
                fn( static_cast< Vertex >( key / n_ ), static_cast< Vertex >( key % n_ ) );
        }
    }
    std::vector< OrderedPair > to_vector() const;

private:
    std::size_t n_ = 0;
    std::size_t size_ = 0;
    Bitset bits_;
    std::set< std::uint64_t > sparse_;
};

/// (v, S, b, P): S lies in the link neighbourhood of b around apex v, and every
/// u in S extends through b by every (x, y) in P to a path u-b-x-y of L_v.
struct NicePicture
{
    Vertex apex = 0;
    std::vector< Vertex > members;  // sorted
    Vertex pivot = 0;
    PairSet pairs;
};

struct PictureChain
{
    double epsilon = 0;
    std::size_t target = 0;          // t = ceil(5/ε²) + 1
    std::vector< Vertex > initial;   // S_0, sorted
    std::vector< NicePicture > pictures;  // pictures[k-1] holds S_k
};

enum class ApexRule
{
    smallest_id,
    max_degree  // largest degree in H among S_{k-1}, ties to smallest id
};

/// Per-stage numbers logged by the driver.
struct StageTrace
{
    std::size_t k = 0;
    Vertex apex = 0;
    Vertex pivot = 0;
    std::size_t prev_size = 0;      // |S_{k-1}|
    std::size_t size = 0;           // |S_k|
    std::size_t pair_count = 0;     // |P_k|
    std::size_t link_min_degree = 0;
};

struct Collision
{
    std::size_t i = 0;  // 1-based picture indices, i < j
    std::size_t j = 0;
    Vertex x = 0;
    Vertex y = 0;

    friend bool operator==( const Collision&, const Collision& ) = default;
};

enum class Outcome
{
    found,
    not_found
};

enum class FailureReason
{
    empty_set,     // S_{k-1} was empty, no apex to pick
    no_collision,  // all t pictures built, pairwise disjoint P's
    budget_exhausted
};

std::string to_string( Outcome o );
std::string to_string( FailureReason r );

struct FailureStage
{
    std::size_t k = 0;
    FailureReason reason = FailureReason::no_collision;
};

struct SearchOptions
{
    /// When set, S_0 is a seeded random subset; otherwise the lowest ids.
    std::optional< std::uint64_t > seed;
    /// Keep building past t while S_k is non-empty.
    bool extended = false;
    /// Picture cap for extended mode.
    std::size_t max_pictures = 100'000;
    ApexRule apex_rule = ApexRule::smallest_id;
};

struct SearchReport
{
    Outcome outcome = Outcome::not_found;
    double epsilon = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    bool random_initial = false;
    std::uint32_t min_codegree = 0;
    /// δ₂(H) >= εn.
    bool codegree_hypothesis = false;
    /// n < (2/ε)^(5/ε²+2): the guarantee does not apply, search still ran.
    bool below_threshold = false;
    std::optional< Embedding > witness;
    /// (u, b, v, x, y) in cyclic order, missing triple {y, u, b}.
    std::array< Vertex, 5 > cycle{};
    std::optional< Collision > collision;
    std::optional< FailureStage > failure;
    PictureChain chain;
    std::vector< StageTrace > trace;
    /// Quantitative bounds that failed although the hypothesis held, and
    /// bounds skipped because n is below 20/ε.
    std::vector< std::string > notes;
};

/// ceil(5/ε²) + 1.
std::size_t picture_target( double epsilon );
/// ceil(εn/2).
std::size_t initial_set_size( std::size_t n, double epsilon );
/// n < (2/ε)^(5/ε²+2).
bool below_theorem_threshold( std::size_t n, double epsilon );

bool verify_nice_picture( const Hypergraph3& h, const NicePicture& p );

/// P = {(x, y) : x ∈ N(b)∖(S∪{b}), y ∈ N(x)∖(S∪{b,x})} in L.
/// Throws InputError unless S ⊆ N_L(b).
PairSet build_pairs( const LinkGraph& link, Vertex pivot, std::span< const Vertex > members );

/// One step of the chain: apex from `prev` per `rule`, pivot by exact argmax
/// of |N_{L_v}(b) ∩ prev| (ties to smallest id), S_k = N_{L_v}(b) ∩ prev,
/// P_k = build_pairs. Throws InputError when prev is empty.
NicePicture extend_picture( const Hypergraph3& h, std::span< const Vertex > prev, std::size_t k, double epsilon,
                            ApexRule rule = ApexRule::smallest_id, StageTrace* trace = nullptr );

/// Least (i, j, x, y) with i < j and (x, y) ∈ P_i ∩ P_j.
std::optional< Collision > find_collision( const PictureChain& chain );

/// The copy v_j b_i v_i x y of C5⁻. Re-verifies all four edges.
Embedding assemble_c5( const Hypergraph3& h, const PictureChain& chain, const Collision& c );

/// Builds pictures until two share a pair, then assembles the copy. All
/// search failures are reported, not thrown. Throws InputError for ε ∉ (0,1)
/// or n < 5.
SearchReport find_c5_minus( const Hypergraph3& h, double epsilon, const SearchOptions& options = {} );

} // namespace codegree
