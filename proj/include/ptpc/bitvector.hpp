#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ptpc {

/// Exact nonnegative codeword counts. Plain Reed-Muller counts pass 2^100
/// long before the block lengths of interest run out.
using BigCount = boost::multiprecision::cpp_int;

/// 2^e as an exact integer.
inline BigCount pow2(std::size_t e) {
    BigCount x = 1;
    x <<= static_cast<unsigned>(e);
    return x;
}

/// Dense GF(2) vector of fixed length packed into 64-bit words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool test(std::size_t pos) const { return (words_[pos >> 6] >> (pos & 63)) & 1u; }
    void set(std::size_t pos, bool value = true) {
        const auto bit = std::uint64_t{1} << (pos & 63);
        if (value)
            words_[pos >> 6] |= bit;
        else
            words_[pos >> 6] &= ~bit;
    }
    void flip(std::size_t pos) { words_[pos >> 6] ^= std::uint64_t{1} << (pos & 63); }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    /// Set positions in ascending order.
    std::vector<std::size_t> support() const;

    BitVector& operator^=(const BitVector& other);

    std::span<std::uint64_t> words() { return words_; }
    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// A row of an upper-triangular matrix: only the words between the first and
/// last nonzero word are stored, so identity-like and banded rows stay tiny.
class PackedRow {
public:
    PackedRow() = default;

    bool test(std::size_t col) const {
        const auto w = col >> 6;
        if (w < first_word_ || w >= first_word_ + words_.size()) return false;
        return (words_[w - first_word_] >> (col & 63)) & 1u;
    }
    void set(std::size_t col);
    void reset(std::size_t col);
    void flip(std::size_t col) { test(col) ? reset(col) : set(col); }
    PackedRow& operator^=(const PackedRow& other);

    bool empty() const { return words_.empty(); }
    std::size_t first_word() const { return first_word_; }
    std::span<const std::uint64_t> words() const { return words_; }
    std::vector<std::size_t> support() const;
    void clear() {
        words_.clear();
        first_word_ = 0;
    }

    friend bool operator==(const PackedRow& a, const PackedRow& b) {
        return a.first_word_ == b.first_word_ && a.words_ == b.words_;
    }

private:
    void trim();

    std::size_t first_word_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ptpc
