#pragma once

// Rate-profiles, pre-transform matrices and the pre-transformed polar encoder
//
//   m --(rate-profile I)--> v --(T)--> u --(G_N)--> c
//
// v carries the message on I and zeros on the frozen set F. T is upper
// triangular with t_{i,i} = 1 on I, so the frozen positions of u become
// parities of earlier message bits (dynamic frozen bits).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptpc/bitvector.hpp"

namespace ptpc {

/// Rate-profile of a length-2^n code: the information set I and its
/// complement, the frozen set F.
class CodeSpec {
public:
    /// Throws std::invalid_argument on duplicates, out-of-range indices,
    /// an empty set or n outside [1, kMaxLog2Length]. Indices may come in
    /// any order; they are stored sorted.
    CodeSpec(int n, std::vector<std::uint32_t> info_set);

    int n() const { return n_; }
    std::size_t length() const { return std::size_t{1} << n_; }
    std::size_t dimension() const { return info_.size(); }
    double rate() const { return static_cast<double>(dimension()) / static_cast<double>(length()); }

    std::span<const std::uint32_t> info_set() const { return info_; }
    std::vector<std::uint32_t> frozen_set() const;
    bool is_info(std::uint32_t i) const { return is_info_[i] != 0; }
    bool is_frozen(std::uint32_t i) const { return is_info_[i] == 0; }

    friend bool operator==(const CodeSpec& a, const CodeSpec& b) {
        return a.n_ == b.n_ && a.info_ == b.info_;
    }

private:
    int n_;
    std::vector<std::uint32_t> info_;
    std::vector<std::uint8_t> is_info_;
};

/// RM(r, n) rate-profile: I = { i : w(i) >= n - r }.
CodeSpec rm_profile(int r, int n);

/// True iff I is closed upward under the partial order, i.e. every
/// single left swap and single bit raise of every i in I stays in I.
bool is_decreasing_profile(const CodeSpec& spec);

/// Convolution polynomial p(x) = sum_d p_d x^d with p_0 = p_q = 1.
/// Bit d of the packed value holds p_d, which makes the octal rendering of
/// the value the usual MSB-first listing p_q ... p_0 (155_8 = x^6+x^5+x^3+x^2+1).
class PacPolynomial {
public:
    explicit PacPolynomial(std::uint64_t packed);
    /// Parses octal digits with an optional "_8" suffix, e.g. "155" or "5767471_8".
    static PacPolynomial from_octal(std::string_view text);

    std::uint64_t packed() const { return packed_; }
    int degree() const;
    bool coefficient(int d) const { return d >= 0 && d < 64 && ((packed_ >> d) & 1u); }
    int nonzero_count() const;
    std::string octal() const;

    friend bool operator==(const PacPolynomial&, const PacPolynomial&) = default;

private:
    std::uint64_t packed_;
};

/// Upper-triangular N x N matrix over GF(2), row h holding t_{h, .}.
class PreTransform {
public:
    /// All-zero matrix.
    explicit PreTransform(int n);
    static PreTransform identity(int n);

    int n() const { return n_; }
    std::size_t length() const { return rows_.size(); }
    bool entry(std::size_t h, std::size_t j) const { return rows_[h].test(j); }
    void set_entry(std::size_t h, std::size_t j, bool value);
    const PackedRow& row(std::size_t h) const { return rows_[h]; }
    bool systematized() const { return systematized_; }

    bool is_upper_triangular() const;
    /// Throws std::invalid_argument unless the matrix matches spec's length,
    /// is upper triangular and has t_{i,i} = 1 for every i in I.
    void validate_for(const CodeSpec& spec) const;

private:
    friend PreTransform systematize(const PreTransform&, const CodeSpec&);

    int n_;
    std::vector<PackedRow> rows_;
    bool systematized_ = false;
};

/// Toeplitz matrix with t_{h, h+d} = p_d for every row h. Requires deg p < N.
PreTransform pac_transform(const CodeSpec& spec, const PacPolynomial& p);

/// Random pre-transform: unit diagonal on I, every entry t_{i,j} with
/// i in I and j > i an independent fair bit, rows F zero.
///
/// Bits come from std::mt19937_64 seeded with `seed`: rows of I in ascending
/// order, one generator output per 64-bit word from word i/64 to the last
/// word, bits at columns <= i (and >= N) discarded. Results are therefore
/// reproducible across platforms.
PreTransform random_transform(const CodeSpec& spec, std::uint64_t seed);

/// Gauss-Jordan elimination on rows I with the pivot of row i at column i;
/// rows F are zeroed. The generated code is unchanged, and afterwards
/// u_I = v_I for every message.
PreTransform systematize(const PreTransform& t, const CodeSpec& spec);

/// In-place c = u * G_N via n butterfly stages. Size must be a power of two.
void polar_transform(BitVector& x);

/// c = (v * T) * G_N with v_I = m, v_F = 0. Accepts raw or systematized T.
BitVector encode(const CodeSpec& spec, const PreTransform& t, const BitVector& message);

/// Value the frozen position f must take given the already-fixed bits
/// u_i .. u_{f-1}: XOR over h in [i, f) of u_h * t_{h,f}.
bool dynamic_frozen_value(const CodeSpec& spec, const PreTransform& t_sys, const BitVector& u,
                          std::uint32_t i, std::uint32_t f);

}  // namespace ptpc
