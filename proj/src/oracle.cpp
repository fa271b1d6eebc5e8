#include "ptpc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <vector>

namespace ptpc {
namespace {

void check_size(const CodeSpec& spec, std::size_t k_limit) {
    if (spec.n() > kOracleMaxLog2Length)
        throw OracleSizeError("oracle: n=" + std::to_string(spec.n()) + " exceeds " +
                              std::to_string(kOracleMaxLog2Length));
    if (spec.dimension() > k_limit || spec.dimension() > 40)
        throw OracleSizeError("oracle: K=" + std::to_string(spec.dimension()) + " exceeds limit " +
                              std::to_string(k_limit));
}

// Histogram of codeword weights over all nonzero messages.
std::vector<std::uint64_t> weight_histogram(const CodeSpec& spec, const PreTransform& t, unsigned threads) {
    const std::size_t K = spec.dimension();
    const std::size_t N = spec.length();
    const std::size_t W = (N + 63) / 64;

    std::vector<std::uint64_t> basis(K * W);
    for (std::size_t r = 0; r < K; ++r) {
        BitVector m(K);
        m.set(r);
        const auto c = encode(spec, t, m);
        std::copy(c.words().begin(), c.words().end(), basis.begin() + static_cast<std::ptrdiff_t>(r * W));
    }

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    // The top `split` message bits select a block; blocks are handed out dynamically.
    std::size_t split = 0;
    while (split < K && (std::size_t{1} << split) < 4 * static_cast<std::size_t>(threads)) ++split;
    if (K - split > 62) throw OracleSizeError("oracle: message space too large");
    const std::size_t low_bits = K - split;
    const std::size_t blocks = std::size_t{1} << split;

    std::atomic<std::size_t> next{0};
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(N + 1, 0));

    auto worker = [&](unsigned id) {
        auto& hist = partial[id];
        std::vector<std::uint64_t> cw(W);
        while (true) {
            const auto block = next.fetch_add(1);
            if (block >= blocks) break;
            std::fill(cw.begin(), cw.end(), 0);
            for (std::size_t b = 0; b < split; ++b)
                if ((block >> b) & 1u)
                    for (std::size_t w = 0; w < W; ++w) cw[w] ^= basis[(low_bits + b) * W + w];
            auto weight = [&] {
                std::uint64_t s = 0;
                for (auto x : cw) s += static_cast<std::uint64_t>(std::popcount(x));
                return s;
            };
            if (block != 0) ++hist[weight()];
            const std::uint64_t steps = std::uint64_t{1} << low_bits;
            for (std::uint64_t step = 1; step < steps; ++step) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(step));
                const auto* row = basis.data() + bit * W;
                for (std::size_t w = 0; w < W; ++w) cw[w] ^= row[w];
                ++hist[weight()];
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    }

    std::vector<std::uint64_t> hist(N + 1, 0);
    for (const auto& p : partial)
        for (std::size_t w = 0; w <= N; ++w) hist[w] += p[w];
    return hist;
}

}  // namespace

SpectrumResult brute_force_spectrum(const CodeSpec& spec, const PreTransform& t, std::size_t k_limit,
                                    unsigned threads) {
    check_size(spec, k_limit);
    t.validate_for(spec);
    const auto hist = weight_histogram(spec, t, threads);
    std::vector<std::pair<std::uint64_t, BigCount>> entries;
    for (std::size_t w = 0; w < hist.size(); ++w)
        if (hist[w]) entries.emplace_back(w, BigCount(hist[w]));
    SpectrumResult out;
    out.spectrum = WeightSpectrum(std::move(entries));
    if (!out.spectrum.empty()) {
        out.dmin = out.spectrum.entries().front().first;
        out.a_dmin = out.spectrum.entries().front().second;
    }
    return out;
}

BigCount brute_force_count_at(const CodeSpec& spec, const PreTransform& t, std::uint64_t w, std::size_t k_limit,
                              unsigned threads) {
    check_size(spec, k_limit);
    t.validate_for(spec);
    if (w == 0 || w > spec.length()) return 0;
    return weight_histogram(spec, t, threads)[w];
}

}  // namespace ptpc
