#pragma once

// Brute-force weight spectrum by enumerating every message. Exists to check
// the enumerator and the bounds; never used by them.

#include <cstdint>

#include "ptpc/bounds.hpp"
#include "ptpc/code_model.hpp"

namespace ptpc {

inline constexpr std::size_t kDefaultOracleDimensionLimit = 24;
inline constexpr int kOracleMaxLog2Length = 16;

class OracleSizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

struct SpectrumResult {
    /// Nonzero codewords only; counts sum to 2^K - 1.
    WeightSpectrum spectrum;
    std::uint64_t dmin = 0;
    BigCount a_dmin = 0;
};

/// Full weight spectrum of the code generated by (spec, t). Messages are
/// visited in Gray-code order so each step XORs a single basis codeword;
/// the message space is split across `threads` workers by its top bits.
/// Throws OracleSizeError if K > k_limit or n > 16.
SpectrumResult brute_force_spectrum(const CodeSpec& spec, const PreTransform& t,
                                    std::size_t k_limit = kDefaultOracleDimensionLimit, unsigned threads = 0);

/// Number of codewords of weight exactly w (0 for w = 0).
BigCount brute_force_count_at(const CodeSpec& spec, const PreTransform& t, std::uint64_t w,
                              std::size_t k_limit = kDefaultOracleDimensionLimit, unsigned threads = 0);

}  // namespace ptpc
