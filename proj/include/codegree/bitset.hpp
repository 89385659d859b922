#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace codegree {

using word_type = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for( std::size_t bits ) noexcept { return ( bits + kWordBits - 1 ) / kWordBits; }

/// Read-only view over a packed bit row. Used for rows that live inside a
/// larger flat index (pair neighbourhoods, link adjacency).
class BitsetView
{
public:
    BitsetView() = default;
    BitsetView( const word_type* words, std::size_t bits ) noexcept
        : words_( words )
        , bits_( bits )
    {}

    std::size_t size() const noexcept { return bits_; }
    std::size_t word_count() const noexcept { return words_for( bits_ ); }
    std::span< const word_type > words() const noexcept { return { words_, word_count() }; }

    bool test( std::size_t i ) const noexcept { return ( words_[ i / kWordBits ] >> ( i % kWordBits ) ) & 1U; }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for ( auto w : words() )
            c += static_cast< std::size_t >( std::popcount( w ) );
        return c;
    }
    bool none() const noexcept
    {
        for ( auto w : words() )
            if ( w )
                return false;
        return true;
    }

    /// |this ∩ other| without materializing the intersection.
    std::size_t intersect_count( BitsetView other ) const noexcept
    {
        std::size_t c = 0;
        const std::size_t nw = word_count();
        for ( std::size_t i = 0; i < nw; ++i )
            c += static_cast< std::size_t >( std::popcount( words_[ i ] & other.words_[ i ] ) );
        return c;
    }

    /// Index of the first set bit at or after `from`, or size() when none.
    std::size_t next( std::size_t from ) const noexcept
    {
        if ( from >= bits_ )
            return bits_;
        std::size_t wi = from / kWordBits;
        word_type w = words_[ wi ] & ( ~word_type{ 0 } << ( from % kWordBits ) );
        const std::size_t nw = word_count();
        while ( true ) {
            if ( w )
                return wi * kWordBits + static_cast< std::size_t >( std::countr_zero( w ) );
            if ( ++wi == nw )
                return bits_;
            w = words_[ wi ];
        }
    }
    std::size_t first() const noexcept { return next( 0 ); }

    template < typename Fn >
    void for_each( Fn&& fn ) const
    {
        const std::size_t nw = word_count();
        for ( std::size_t wi = 0; wi < nw; ++wi ) {
            word_type w = words_[ wi ];
            while ( w ) {
                fn( wi * kWordBits + static_cast< std::size_t >( std::countr_zero( w ) ) );
                w &= w - 1;
            }
        }
    }

    std::vector< std::uint32_t > to_vector() const
    {
        std::vector< std::uint32_t > out;
        out.reserve( count() );
        for_each( [ & ]( std::size_t i ) { out.push_back( static_cast< std::uint32_t >( i ) ); } );
        return out;
    }

private:
    const word_type* words_ = nullptr;
    std::size_t bits_ = 0;
};

/// Owning bitset over vertex ids, sized once at construction.
class Bitset
{
public:
    Bitset() = default;
    explicit Bitset( std::size_t bits )
        : bits_( bits )
        , words_( words_for( bits ), 0 )
    {}
    explicit Bitset( BitsetView v )
        : bits_( v.size() )
        , words_( v.words().begin(), v.words().end() )
    {}

    BitsetView view() const noexcept { return { words_.data(), bits_ }; }
    operator BitsetView() const noexcept { return view(); }

    std::size_t size() const noexcept { return bits_; }
    bool test( std::size_t i ) const noexcept { return view().test( i ); }
    std::size_t count() const noexcept { return view().count(); }
    bool none() const noexcept { return view().none(); }
    std::size_t intersect_count( BitsetView other ) const noexcept { return view().intersect_count( other ); }
    std::size_t next( std::size_t from ) const noexcept { return view().next( from ); }
    std::size_t first() const noexcept { return view().first(); }
    std::vector< std::uint32_t > to_vector() const { return view().to_vector(); }
    template < typename Fn >
    void for_each( Fn&& fn ) const
    {
        view().for_each( std::forward< Fn >( fn ) );
    }

    void set( std::size_t i ) noexcept { words_[ i / kWordBits ] |= word_type{ 1 } << ( i % kWordBits ); }
    void reset( std::size_t i ) noexcept { words_[ i / kWordBits ] &= ~( word_type{ 1 } << ( i % kWordBits ) ); }
    void clear() noexcept
    {
        for ( auto& w : words_ )
            w = 0;
    }
    void fill() noexcept
    {
        for ( auto& w : words_ )
            w = ~word_type{ 0 };
        if ( bits_ % kWordBits && !words_.empty() )
            words_.back() &= ( word_type{ 1 } << ( bits_ % kWordBits ) ) - 1;
    }

    Bitset& operator&=( BitsetView other ) noexcept
    {
        auto ow = other.words();
        for ( std::size_t i = 0; i < words_.size(); ++i )
            words_[ i ] &= ow[ i ];
        return *this;
    }
    Bitset& operator|=( BitsetView other ) noexcept
    {
        auto ow = other.words();
        for ( std::size_t i = 0; i < words_.size(); ++i )
            words_[ i ] |= ow[ i ];
        return *this;
    }
    /// this := this ∖ other
    Bitset& subtract( BitsetView other ) noexcept
    {
        auto ow = other.words();
        for ( std::size_t i = 0; i < words_.size(); ++i )
            words_[ i ] &= ~ow[ i ];
        return *this;
    }

    friend bool operator==( const Bitset&, const Bitset& ) = default;

private:
    std::size_t bits_ = 0;
    std::vector< word_type > words_;
};

} // namespace codegree
