#ifndef TREEDEPTH_BITSET_HH
#define TREEDEPTH_BITSET_HH

#include <bit>
#include <cstdint>
#include <vector>

namespace treedepth
{
    namespace bits
    {
        /* Word-level helpers shared by VertexSet and the solver's arena sets.
         * A set over vertices 1..capacity is stored in words of 64 bits, with
         * bit position equal to the vertex number (bit 0 is never used). */

        constexpr int word_bits = 64;

        constexpr auto words_needed(int capacity) -> int
        {
            return (capacity + word_bits) / word_bits;
        }

        inline auto test(const std::uint64_t * s, int v) -> bool
        {
            return (s[v >> 6] >> (v & 63)) & 1;
        }

        inline auto set(std::uint64_t * s, int v) -> void
        {
            s[v >> 6] |= std::uint64_t{1} << (v & 63);
        }

        inline auto unset(std::uint64_t * s, int v) -> void
        {
            s[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        }

        inline auto clear(std::uint64_t * s, int w) -> void
        {
            for (int i = 0; i < w; ++i)
                s[i] = 0;
        }

        inline auto copy(std::uint64_t * dst, const std::uint64_t * src, int w) -> void
        {
            for (int i = 0; i < w; ++i)
                dst[i] = src[i];
        }

        inline auto popcount(const std::uint64_t * s, int w) -> int
        {
            int n = 0;
            for (int i = 0; i < w; ++i)
                n += std::popcount(s[i]);
            return n;
        }

        inline auto empty(const std::uint64_t * s, int w) -> bool
        {
            for (int i = 0; i < w; ++i)
                if (s[i])
                    return false;
            return true;
        }

        /// Lowest element, or 0 if the set is empty.
        inline auto first(const std::uint64_t * s, int w) -> int
        {
            for (int i = 0; i < w; ++i)
                if (s[i])
                    return i * word_bits + std::countr_zero(s[i]);
            return 0;
        }

        /// Lowest element strictly greater than v, or 0 if none.
        inline auto next(const std::uint64_t * s, int w, int v) -> int
        {
            int i = (v + 1) >> 6;
            if (i >= w)
                return 0;
            std::uint64_t word = s[i] & (~std::uint64_t{0} << ((v + 1) & 63));
            while (true) {
                if (word)
                    return i * word_bits + std::countr_zero(word);
                if (++i >= w)
                    return 0;
                word = s[i];
            }
        }

        inline auto intersect(std::uint64_t * dst, const std::uint64_t * a, const std::uint64_t * b, int w) -> void
        {
            for (int i = 0; i < w; ++i)
                dst[i] = a[i] & b[i];
        }

        inline auto subtract(std::uint64_t * dst, const std::uint64_t * a, const std::uint64_t * b, int w) -> void
        {
            for (int i = 0; i < w; ++i)
                dst[i] = a[i] & ~b[i];
        }

        inline auto unite(std::uint64_t * dst, const std::uint64_t * a, int w) -> void
        {
            for (int i = 0; i < w; ++i)
                dst[i] |= a[i];
        }

        inline auto is_subset(const std::uint64_t * a, const std::uint64_t * b, int w) -> bool
        {
            for (int i = 0; i < w; ++i)
                if (a[i] & ~b[i])
                    return false;
            return true;
        }

        inline auto intersects(const std::uint64_t * a, const std::uint64_t * b, int w) -> bool
        {
            for (int i = 0; i < w; ++i)
                if (a[i] & b[i])
                    return true;
            return false;
        }

        inline auto equal(const std::uint64_t * a, const std::uint64_t * b, int w) -> bool
        {
            for (int i = 0; i < w; ++i)
                if (a[i] != b[i])
                    return false;
            return true;
        }
    }

    /// A fixed-capacity set of vertices, identifying an induced subgraph of
    /// the graph it was sized for. Vertices are numbered from 1.
    class VertexSet
    {
    private:
        int capacity_ = 0;
        std::vector<std::uint64_t> words_;

    public:
        VertexSet() = default;

        explicit VertexSet(int capacity) :
            capacity_(capacity),
            words_(bits::words_needed(capacity), 0)
        {
        }

        /// The set {1, ..., n}.
        static auto full(int n) -> VertexSet
        {
            VertexSet s(n);
            for (int v = 1; v <= n; ++v)
                s.insert(v);
            return s;
        }

        auto capacity() const -> int { return capacity_; }
        auto word_count() const -> int { return int(words_.size()); }
        auto data() -> std::uint64_t * { return words_.data(); }
        auto data() const -> const std::uint64_t * { return words_.data(); }

        auto contains(int v) const -> bool { return v >= 1 && v <= capacity_ && bits::test(data(), v); }
        auto insert(int v) -> void { bits::set(data(), v); }
        auto remove(int v) -> void { bits::unset(data(), v); }
        auto clear() -> void { bits::clear(data(), word_count()); }

        auto count() const -> int { return bits::popcount(data(), word_count()); }
        auto empty() const -> bool { return bits::empty(data(), word_count()); }

        /// Lowest member, or 0 if empty.
        auto min() const -> int { return bits::first(data(), word_count()); }

        /// Lowest member strictly greater than v, or 0 if none; use
        /// `for (int v = s.min(); v; v = s.next(v))` to iterate.
        auto next(int v) const -> int { return bits::next(data(), word_count(), v); }

        auto operator&=(const VertexSet & other) -> VertexSet &
        {
            bits::intersect(data(), data(), other.data(), word_count());
            return *this;
        }

        auto operator|=(const VertexSet & other) -> VertexSet &
        {
            bits::unite(data(), other.data(), word_count());
            return *this;
        }

        auto subtract(const VertexSet & other) -> VertexSet &
        {
            bits::subtract(data(), data(), other.data(), word_count());
            return *this;
        }

        auto is_subset_of(const VertexSet & other) const -> bool
        {
            return bits::is_subset(data(), other.data(), word_count());
        }

        auto operator==(const VertexSet & other) const -> bool
        {
            return capacity_ == other.capacity_ && words_ == other.words_;
        }
    };
}

#endif
