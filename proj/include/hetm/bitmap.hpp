#ifndef HETM_BITMAP_HPP
#define HETM_BITMAP_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hetm/types.hpp"

namespace hetm {

/// Plain copy of a bitmap, handed to offline consumers (round records,
/// conflict oracle).
struct BitmapSnapshot {
    std::size_t granBytes = 0;
    std::size_t nBits = 0;
    std::vector<std::uint64_t> words;

    bool test(std::size_t bit) const {
        return (words[bit >> 6] >> (bit & 63)) & 1u;
    }
};

namespace detail {

/// Fixed-size bitset with atomic set/test. Bits only accrete during a round;
/// clearing happens at round reset under quiescence.
class AtomicBits {
public:
    explicit AtomicBits(std::size_t nBits)
        : nBits_(nBits), words_((nBits + 63) / 64) {}

    void set(std::size_t bit) {
        words_[bit >> 6].fetch_or(1ULL << (bit & 63), std::memory_order_relaxed);
    }

    bool test(std::size_t bit) const {
        return (words_[bit >> 6].load(std::memory_order_relaxed) >> (bit & 63)) & 1u;
    }

    void clear() {
        for (auto& w : words_) w.store(0, std::memory_order_relaxed);
    }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (const auto& w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w.load(std::memory_order_relaxed)));
        return n;
    }

    std::size_t size() const { return nBits_; }

    std::vector<std::uint64_t> snapshotWords() const {
        std::vector<std::uint64_t> out(words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i)
            out[i] = words_[i].load(std::memory_order_relaxed);
        return out;
    }

    /// True when every set bit of this is also set in other.
    bool subsetOf(const AtomicBits& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t a = words_[i].load(std::memory_order_relaxed);
            std::uint64_t b = other.words_[i].load(std::memory_order_relaxed);
            if (a & ~b) return false;
        }
        return true;
    }

    template <typename Fn>
    void forEachSet(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i].load(std::memory_order_relaxed);
            while (w) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
                fn(i * 64 + b);
                w &= w - 1;
            }
        }
    }

private:
    std::size_t nBits_;
    std::vector<std::atomic<std::uint64_t>> words_;
};

inline bool isPow2(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace detail

/// Bitset over the STMR at a configurable byte granularity. Instances play
/// the read-set / write-set roles of the device guest TM.
class AccessBitmap {
public:
    AccessBitmap(std::size_t regionBytes, std::size_t granBytes)
        : granBytes_(granBytes),
          bits_((regionBytes + granBytes - 1) / granBytes) {
        if (!detail::isPow2(granBytes) || granBytes % kWordBytes != 0)
            throw InvalidSizeError("bitmap granularity must be a power of two multiple of the word size");
    }

    std::size_t bitCoveringByte(std::uint64_t byteOffset) const { return byteOffset / granBytes_; }
    std::size_t bitCoveringWord(WordIdx addr) const { return addr * kWordBytes / granBytes_; }

    void setWord(WordIdx addr) { bits_.set(bitCoveringWord(addr)); }
    bool testWord(WordIdx addr) const { return bits_.test(bitCoveringWord(addr)); }
    void setBit(std::size_t bit) { bits_.set(bit); }
    bool testBit(std::size_t bit) const { return bits_.test(bit); }

    void clear() { bits_.clear(); }
    std::size_t popcount() const { return bits_.popcount(); }
    std::size_t bitCount() const { return bits_.size(); }
    std::size_t granBytes() const { return granBytes_; }
    bool subsetOf(const AccessBitmap& other) const { return bits_.subsetOf(other.bits_); }

    BitmapSnapshot snapshot() const {
        return BitmapSnapshot{granBytes_, bits_.size(), bits_.snapshotWords()};
    }

private:
    std::size_t granBytes_;
    detail::AtomicBits bits_;
};

/// One dirty bit per coarse chunk of the STMR; used by the merge phase to
/// select the regions updated by the device this round.
class ChunkMap {
public:
    static constexpr std::size_t kDefaultChunkBytes = 16384;

    ChunkMap(std::size_t regionBytes, std::size_t chunkBytes = kDefaultChunkBytes)
        : chunkBytes_(chunkBytes),
          bits_((regionBytes + chunkBytes - 1) / chunkBytes) {
        if (!detail::isPow2(chunkBytes) || chunkBytes % kWordBytes != 0)
            throw InvalidSizeError("chunk size must be a power of two multiple of the word size");
    }

    std::size_t chunkOfWord(WordIdx addr) const { return addr * kWordBytes / chunkBytes_; }

    void markWordWritten(WordIdx addr) { bits_.set(chunkOfWord(addr)); }
    void markChunk(std::size_t chunk) { bits_.set(chunk); }
    bool test(std::size_t chunk) const { return bits_.test(chunk); }

    void clear() { bits_.clear(); }
    std::size_t popcount() const { return bits_.popcount(); }
    std::size_t chunkCount() const { return bits_.size(); }
    std::size_t chunkBytes() const { return chunkBytes_; }

    template <typename Fn>
    void forEachDirty(Fn&& fn) const {
        bits_.forEachSet(fn);
    }

private:
    std::size_t chunkBytes_;
    detail::AtomicBits bits_;
};

}  // namespace hetm

#endif
