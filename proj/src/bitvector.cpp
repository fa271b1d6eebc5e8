#include "ptpc/bitvector.hpp"

#include <algorithm>

namespace ptpc {

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto word = words_[w];
        while (word) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    const auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w) words_[w] ^= other.words_[w];
    return *this;
}

void PackedRow::set(std::size_t col) {
    const auto w = col >> 6;
    const auto bit = std::uint64_t{1} << (col & 63);
    if (words_.empty()) {
        first_word_ = w;
        words_.assign(1, bit);
        return;
    }
    if (w < first_word_) {
        words_.insert(words_.begin(), first_word_ - w, 0);
        first_word_ = w;
    } else if (w >= first_word_ + words_.size()) {
        words_.resize(w - first_word_ + 1, 0);
    }
    words_[w - first_word_] |= bit;
}

void PackedRow::reset(std::size_t col) {
    const auto w = col >> 6;
    if (w < first_word_ || w >= first_word_ + words_.size()) return;
    words_[w - first_word_] &= ~(std::uint64_t{1} << (col & 63));
    trim();
}

PackedRow& PackedRow::operator^=(const PackedRow& other) {
    if (other.words_.empty()) return *this;
    if (words_.empty()) {
        *this = other;
        return *this;
    }
    const auto lo = std::min(first_word_, other.first_word_);
    const auto hi = std::max(first_word_ + words_.size(), other.first_word_ + other.words_.size());
    if (lo < first_word_) {
        words_.insert(words_.begin(), first_word_ - lo, 0);
        first_word_ = lo;
    }
    words_.resize(hi - first_word_, 0);
    const auto offset = other.first_word_ - first_word_;
    for (std::size_t w = 0; w < other.words_.size(); ++w) words_[offset + w] ^= other.words_[w];
    trim();
    return *this;
}

std::vector<std::size_t> PackedRow::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto word = words_[w];
        while (word) {
            out.push_back((first_word_ + w) * 64 + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

void PackedRow::trim() {
    std::size_t lead = 0;
    while (lead < words_.size() && words_[lead] == 0) ++lead;
    if (lead == words_.size()) {
        clear();
        return;
    }
    std::size_t end = words_.size();
    while (words_[end - 1] == 0) --end;
    words_.erase(words_.begin() + static_cast<std::ptrdiff_t>(end), words_.end());
    words_.erase(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(lead));
    first_word_ += lead;
}

}  // namespace ptpc
