#pragma once

#include <cstdint>
#include <vector>

namespace homcyl {

/**
 * Fixed-width bitset over 64-bit blocks, sized at construction.
 *
 * Used for adjacency rows and candidate sets; supports the subset and
 * intersection queries the fold and hom-complex machinery lives on.
 */
class Bits {
  public:
    Bits() = default;
    explicit Bits(int n) : n_(n), blocks_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    void set(int i) { blocks_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    bool test(int i) const
    {
        return (blocks_[i >> 6] >> (i & 63)) & 1;
    }

    bool any() const
    {
        for (auto b : blocks_)
            if (b) return true;
        return false;
    }

    int count() const
    {
        int c = 0;
        for (auto b : blocks_) c += __builtin_popcountll(b);
        return c;
    }

    bool is_subset_of(const Bits& other) const
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & ~other.blocks_[i]) return false;
        return true;
    }

    bool intersects(const Bits& other) const
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & other.blocks_[i]) return true;
        return false;
    }

    Bits& operator&=(const Bits& other)
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] &= other.blocks_[i];
        return *this;
    }

    Bits& operator|=(const Bits& other)
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] |= other.blocks_[i];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

    bool operator==(const Bits& other) const = default;

    // First set index >= from, or -1.
    int next(int from = 0) const
    {
        if (from >= n_) return -1;
        int blk = from >> 6;
        std::uint64_t cur = blocks_[blk] >> (from & 63);
        if (cur) return from + __builtin_ctzll(cur);
        for (blk += 1; blk < static_cast<int>(blocks_.size()); ++blk)
            if (blocks_[blk]) return blk * 64 + __builtin_ctzll(blocks_[blk]);
        return -1;
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        for (int i = next(0); i >= 0; i = next(i + 1)) out.push_back(i);
        return out;
    }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> blocks_;
};

}  // namespace homcyl
