#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codegree/hypergraph.hpp"

namespace codegree {

/// A copy of `pattern` inside `host`: map[p] is the host vertex of pattern vertex p.
struct Embedding
{
    Hypergraph3 pattern;
    Hypergraph3 host;
    std::vector< Vertex > map;
};

enum class SearchStatus
{
    found,
    none,          // exhaustive: no copy exists
    indeterminate  // node budget ran out first
};

std::string to_string( SearchStatus s );

struct SearchResult
{
    SearchStatus status = SearchStatus::none;
    std::optional< Embedding > embedding;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// True iff the map is injective, in range, and carries every pattern edge
/// onto a host edge. Throws InputError if map.size() != pattern.n().
bool verify_embedding( const Embedding& e );

/// Non-induced containment by backtracking. Pattern vertices are placed
/// most-constrained first; candidates come from intersecting host pair
/// neighbourhoods and are filtered by degree and codegree. `budget` caps the
/// number of candidate placements tried. Deterministic.
/// Throws InputError when pattern.n() > host.n().
SearchResult find_embedding( const Hypergraph3& pattern, const Hypergraph3& host, std::uint64_t budget = kDefaultBudget );

/// Only copies whose image uses `host_edge`. This is the delta check after
/// adding that edge to an F-free host.
SearchResult find_embedding_through( const Hypergraph3& pattern, const Hypergraph3& host, const Edge& host_edge,
                                     std::uint64_t budget = kDefaultBudget );

/// outer ∘ inner. Requires inner.host == outer.pattern.
Embedding compose( const Embedding& inner, const Embedding& outer );

/// The hand-written copy of C7⁻ in C5⁻(2): cyclic order
/// v1 v3 v2 v4 v3' v5 v2' with {v3', v5, v2'} the missing edge.
/// v_i is vertex i-1 of C5⁻; its clones in the blow-up are 2(i-1) and 2(i-1)+1.
Embedding explicit_c7_embedding();

/// A copy of C_ℓ⁻ in blow_up(C_{ℓ-3}⁻, 2), found by containment search.
/// Requires ℓ >= 8. Throws ResourceError if the budget runs out and
/// InternalError if the search proves no copy exists.
Embedding inductive_embedding( std::size_t length, std::uint64_t budget = kDefaultBudget );

struct CanonicalForm
{
    std::size_t n = 0;
    /// Edge-slot bitstring, slots in lexicographic triple order, slot 0 in the
    /// most significant bit of word 0. Minimal over the admissible relabelings.
    std::vector< word_type > code;
    /// labeling[v] is the canonical label of original vertex v.
    std::vector< Vertex > labeling;

    std::string bits() const;
    friend bool operator==( const CanonicalForm& a, const CanonicalForm& b ) noexcept
    {
        return a.n == b.n && a.code == b.code;
    }
    friend bool operator<( const CanonicalForm& a, const CanonicalForm& b ) noexcept
    {
        return a.n != b.n ? a.n < b.n : a.code < b.code;
    }
};

/// Minimal code over all relabelings that list vertices in increasing order
/// of an isomorphism invariant (degree, then sorted codegree row). Equal codes
/// iff isomorphic. Throws ResourceError above limits.canonical_cap vertices.
CanonicalForm canonical_form( const Hypergraph3& h, const Limits& limits = Limits::from_env() );

/// h relabeled by its canonical labeling.
Hypergraph3 canonical_hypergraph( const Hypergraph3& h, const Limits& limits = Limits::from_env() );

} // namespace codegree
