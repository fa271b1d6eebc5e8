#include "ptpc/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "ptpc/bitops.hpp"
#include "ptpc/enumerator.hpp"

namespace ptpc {

WeightSpectrum::WeightSpectrum(std::vector<std::pair<std::uint64_t, BigCount>> entries)
    : entries_(std::move(entries)) {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (entries_[k].second <= 0) throw std::invalid_argument("weight spectrum counts must be positive");
        if (k > 0 && entries_[k].first <= entries_[k - 1].first)
            throw std::invalid_argument("weight spectrum weights must strictly increase");
    }
}

BigCount WeightSpectrum::count_at(std::uint64_t w) const {
    for (const auto& [weight, count] : entries_)
        if (weight == w) return count;
    return 0;
}

BigCount WeightSpectrum::total() const {
    BigCount sum = 0;
    for (const auto& e : entries_) sum += e.second;
    return sum;
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double union_bound_fer(const WeightSpectrum& spectrum, double rate, double ebn0_db) {
    if (!(rate > 0.0 && rate <= 1.0)) throw std::invalid_argument("union_bound_fer: rate must lie in (0, 1]");
    if (spectrum.empty()) throw std::invalid_argument("union_bound_fer: empty spectrum");
    const double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    double sum = 0.0;
    for (const auto& [w, count] : spectrum.entries())
        sum += count.convert_to<double>() * q_function(std::sqrt(2.0 * static_cast<double>(w) * rate * ebn0));
    return sum;
}

CosetClassification classify_cosets(const CodeSpec& spec) {
    CosetClassification out;
    for (auto i : wmin_and_coset_indices(spec).second) {
        if (compute_coset_context(spec, i).pretransformable)
            out.pretransformable.push_back(i);
        else
            out.non_pretransformable.push_back(i);
    }
    return out;
}

BigCount lb_non_pretransformable(const CodeSpec& spec) {
    BigCount sum = 0;
    for (auto i : wmin_and_coset_indices(spec).second) {
        const auto ctx = compute_coset_context(spec, i);
        if (!ctx.pretransformable) sum += pow2(ctx.info_core_count);
    }
    return sum;
}

BigCount lb_rm_closed_form(int r) {
    if (r < 0) throw std::invalid_argument("lb_rm_closed_form: requires r >= 0");
    const auto ur = static_cast<std::size_t>(r);
    BigCount numerator = 8 * pow2(3 * ur) - 6 * pow2(2 * ur) + pow2(ur);
    if (numerator % 3 != 0) throw std::logic_error("lb_rm_closed_form: numerator not divisible by 3");
    return numerator / 3;
}

std::vector<std::uint32_t> rm_guaranteed_non_pretransformable(int r, int n) {
    if (n < 2 || n > kMaxLog2Length || r < 0 || r > n - 2)
        throw std::invalid_argument("rm_guaranteed_non_pretransformable: requires 0 <= r <= n - 2");
    std::uint32_t high = 0;
    for (int l = r + 2; l < n; ++l) high |= 1u << l;
    std::vector<std::uint32_t> out;
    for (int y = 1; y <= r + 1; ++y)
        for (int x = 0; x < y; ++x) out.push_back(high | (1u << x) | (1u << y));
    return out;
}

DminStatement dmin_statement(const CodeSpec& spec) {
    return {wmin_and_coset_indices(spec).first, is_decreasing_profile(spec)};
}

}  // namespace ptpc
