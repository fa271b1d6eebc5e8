#include "ptpc/code_model.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "ptpc/bitops.hpp"

namespace ptpc {

CodeSpec::CodeSpec(int n, std::vector<std::uint32_t> info_set) : n_(n), info_(std::move(info_set)) {
    if (n < 1 || n > kMaxLog2Length)
        throw std::invalid_argument("n=" + std::to_string(n) + " out of range [1, " +
                                    std::to_string(kMaxLog2Length) + "]");
    if (info_.empty()) throw std::invalid_argument("information set is empty");
    std::sort(info_.begin(), info_.end());
    if (std::adjacent_find(info_.begin(), info_.end()) != info_.end())
        throw std::invalid_argument("information set contains duplicate indices");
    if (info_.back() >= length())
        throw std::invalid_argument("information index " + std::to_string(info_.back()) +
                                    " out of range for N=" + std::to_string(length()));
    is_info_.assign(length(), 0);
    for (auto i : info_) is_info_[i] = 1;
}

std::vector<std::uint32_t> CodeSpec::frozen_set() const {
    std::vector<std::uint32_t> out;
    out.reserve(length() - dimension());
    for (std::uint32_t f = 0; f < length(); ++f)
        if (!is_info_[f]) out.push_back(f);
    return out;
}

CodeSpec rm_profile(int r, int n) {
    if (n < 1 || n > kMaxLog2Length) throw std::invalid_argument("rm_profile: n out of range");
    if (r < 0 || r > n) throw std::invalid_argument("rm_profile: requires 0 <= r <= n");
    std::vector<std::uint32_t> info;
    const std::uint32_t N = 1u << n;
    for (std::uint32_t i = 0; i < N; ++i)
        if (bits::weight(i) >= n - r) info.push_back(i);
    return CodeSpec(n, std::move(info));
}

bool is_decreasing_profile(const CodeSpec& spec) {
    for (auto i : spec.info_set())
        for (auto j : order_successors(i, spec.n()))
            if (!spec.is_info(j)) return false;
    return true;
}

PacPolynomial::PacPolynomial(std::uint64_t packed) : packed_(packed) {
    if ((packed & 1u) == 0) throw std::invalid_argument("PAC polynomial needs p_0 = 1");
}

PacPolynomial PacPolynomial::from_octal(std::string_view text) {
    if (text.size() > 2 && text.substr(text.size() - 2) == "_8") text.remove_suffix(2);
    if (text.empty()) throw std::invalid_argument("empty octal polynomial");
    std::uint64_t value = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '7')
            throw std::invalid_argument("invalid octal digit '" + std::string(1, ch) + "' in polynomial");
        if (value >> 61) throw std::invalid_argument("octal polynomial exceeds degree 63");
        value = (value << 3) | static_cast<std::uint64_t>(ch - '0');
    }
    return PacPolynomial(value);
}

int PacPolynomial::degree() const { return 63 - std::countl_zero(packed_); }

int PacPolynomial::nonzero_count() const { return std::popcount(packed_); }

std::string PacPolynomial::octal() const {
    std::string out;
    auto v = packed_;
    do {
        out.push_back(static_cast<char>('0' + (v & 7u)));
        v >>= 3;
    } while (v);
    std::reverse(out.begin(), out.end());
    return out;
}

PreTransform::PreTransform(int n) : n_(n) {
    if (n < 1 || n > kMaxLog2Length) throw std::invalid_argument("PreTransform: n out of range");
    rows_.resize(std::size_t{1} << n);
}

PreTransform PreTransform::identity(int n) {
    PreTransform t(n);
    for (std::size_t h = 0; h < t.length(); ++h) t.rows_[h].set(h);
    return t;
}

void PreTransform::set_entry(std::size_t h, std::size_t j, bool value) {
    if (h >= length() || j >= length()) throw std::out_of_range("PreTransform::set_entry");
    if (value)
        rows_[h].set(j);
    else
        rows_[h].reset(j);
    systematized_ = false;
}

bool PreTransform::is_upper_triangular() const {
    for (std::size_t h = 0; h < rows_.size(); ++h) {
        const auto& r = rows_[h];
        if (r.empty()) continue;
        const auto low = r.first_word() * 64 + static_cast<std::size_t>(std::countr_zero(r.words().front()));
        if (low < h) return false;
    }
    return true;
}

void PreTransform::validate_for(const CodeSpec& spec) const {
    if (spec.length() != length())
        throw std::invalid_argument("pre-transform length " + std::to_string(length()) +
                                    " does not match code length " + std::to_string(spec.length()));
    if (!is_upper_triangular()) throw std::invalid_argument("pre-transform is not upper triangular");
    for (auto i : spec.info_set())
        if (!entry(i, i))
            throw std::invalid_argument("pre-transform has t_{i,i} = 0 at information index " +
                                        std::to_string(i));
}

PreTransform pac_transform(const CodeSpec& spec, const PacPolynomial& p) {
    const auto N = spec.length();
    if (static_cast<std::size_t>(p.degree()) >= N)
        throw std::invalid_argument("PAC polynomial degree must be below the code length");
    PreTransform t(spec.n());
    for (std::size_t h = 0; h < N; ++h)
        for (int d = 0; d <= p.degree() && h + static_cast<std::size_t>(d) < N; ++d)
            if (p.coefficient(d)) t.set_entry(h, h + static_cast<std::size_t>(d), true);
    return t;
}

PreTransform random_transform(const CodeSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto N = spec.length();
    PreTransform t(spec.n());
    for (auto i : spec.info_set()) {
        for (std::size_t w = i / 64; w * 64 < N; ++w) {
            const auto draw = rng();
            for (std::size_t b = 0; b < 64; ++b) {
                const auto col = w * 64 + b;
                if (col <= i || col >= N) continue;
                if ((draw >> b) & 1u) t.set_entry(i, col, true);
            }
        }
        t.set_entry(i, i, true);
    }
    return t;
}

PreTransform systematize(const PreTransform& t, const CodeSpec& spec) {
    t.validate_for(spec);
    PreTransform out(t.n());
    const auto info = spec.info_set();
    for (auto i : info) out.rows_[i] = t.rows_[i];

    // Back substitution from the last pivot: when pivot i is processed, row i
    // is already clear at every later information column.
    for (auto it = info.rbegin(); it != info.rend(); ++it) {
        const auto pivot = *it;
        const auto& pivot_row = out.rows_[pivot];
        for (auto h : info) {
            if (h >= pivot) break;
            if (out.rows_[h].test(pivot)) out.rows_[h] ^= pivot_row;
        }
    }
    for (auto i : info)
        if (!out.rows_[i].test(i)) throw std::logic_error("systematize: lost pivot");
    out.systematized_ = true;
    return out;
}

void polar_transform(BitVector& x) {
    const auto N = x.size();
    if (N == 0 || !std::has_single_bit(N)) throw std::invalid_argument("polar_transform: size must be 2^n");
    auto words = x.words();
    // c_x = XOR of u_i over all i whose bits contain x.
    static constexpr std::uint64_t kLowHalf[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
    };
    const int n = std::countr_zero(N);
    for (int s = 0; s < n && s < 6; ++s) {
        const unsigned shift = 1u << s;
        for (auto& w : words) w ^= (w >> shift) & kLowHalf[s];
    }
    for (int s = 6; s < n; ++s) {
        const std::size_t stride = std::size_t{1} << (s - 6);
        for (std::size_t w = 0; w < words.size(); ++w)
            if (!(w & stride)) words[w] ^= words[w | stride];
    }
}

BitVector encode(const CodeSpec& spec, const PreTransform& t, const BitVector& message) {
    if (message.size() != spec.dimension())
        throw std::invalid_argument("message length " + std::to_string(message.size()) +
                                    " does not match K=" + std::to_string(spec.dimension()));
    if (t.length() != spec.length()) throw std::invalid_argument("pre-transform length mismatch");
    BitVector u(spec.length());
    auto uw = u.words();
    const auto info = spec.info_set();
    for (auto rank : message.support()) {
        const auto& row = t.row(info[rank]);
        const auto rw = row.words();
        for (std::size_t w = 0; w < rw.size(); ++w) uw[row.first_word() + w] ^= rw[w];
    }
    polar_transform(u);
    return u;
}

bool dynamic_frozen_value(const CodeSpec& spec, const PreTransform& t_sys, const BitVector& u,
                          std::uint32_t i, std::uint32_t f) {
    if (!t_sys.systematized()) throw std::invalid_argument("dynamic_frozen_value: transform not systematized");
    if (f >= spec.length() || !spec.is_frozen(f))
        throw std::invalid_argument("dynamic_frozen_value: position " + std::to_string(f) + " is not frozen");
    if (f <= i) throw std::invalid_argument("dynamic_frozen_value: requires f > i");
    bool parity = false;
    for (std::uint32_t h = i; h < f; ++h)
        if (u.test(h) && t_sys.entry(h, f)) parity = !parity;
    return parity;
}

}  // namespace ptpc
