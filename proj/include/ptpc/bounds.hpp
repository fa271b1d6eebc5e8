#pragma once

// Analytic companions of the enumerator: the union bound on ML frame error
// rate, classification of minimum-weight cosets by whether a pre-transform can
// thin them out, and the resulting lower bounds on A_wmin.

#include <cstdint>
#include <utility>
#include <vector>

#include "ptpc/bitvector.hpp"
#include "ptpc/code_model.hpp"

namespace ptpc {

/// Sparse weight distribution: (w, A_w) with strictly increasing w and A_w > 0.
class WeightSpectrum {
public:
    WeightSpectrum() = default;
    /// Throws std::invalid_argument unless weights strictly increase and counts are positive.
    explicit WeightSpectrum(std::vector<std::pair<std::uint64_t, BigCount>> entries);

    const std::vector<std::pair<std::uint64_t, BigCount>>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    BigCount count_at(std::uint64_t w) const;
    /// Sum of all counts.
    BigCount total() const;

    friend bool operator==(const WeightSpectrum&, const WeightSpectrum&) = default;

private:
    std::vector<std::pair<std::uint64_t, BigCount>> entries_;
};

/// Gaussian tail Q(x) = erfc(x / sqrt 2) / 2.
double q_function(double x);

/// sum_w A_w Q(sqrt(2 w R 10^{EbN0/10})) over the given slice of the spectrum.
double union_bound_fer(const WeightSpectrum& spectrum, double rate, double ebn0_db);

struct CosetClassification {
    /// F ∩ K_i^c nonempty.
    std::vector<std::uint32_t> pretransformable;
    /// F ∩ K_i^c empty: A_wmin of the coset is 2^{|I ∩ K_i|} for every T.
    std::vector<std::uint32_t> non_pretransformable;
};

CosetClassification classify_cosets(const CodeSpec& spec);

/// sum over non-pretransformable i in I_wmin of 2^{|I ∩ K_i|}; a lower bound
/// on A_wmin valid for every upper-triangular pre-transform.
BigCount lb_non_pretransformable(const CodeSpec& spec);

/// (8 * 2^{3r} - 6 * 2^{2r} + 2^r) / 3, the RM(r, n) lower bound for r <= n - 2.
BigCount lb_rm_closed_form(int r);

/// Leaders of RM(r, n) whose support is {x, y} ∪ {r+2, ..., n-1} with
/// 0 <= x < y <= r+1: the non-pretransformable cosets summed by
/// lb_rm_closed_form. Requires 0 <= r <= n - 2.
std::vector<std::uint32_t> rm_guaranteed_non_pretransformable(int r, int n);

struct DminStatement {
    std::uint64_t wmin = 0;
    /// I is decreasing, hence d_min = wmin for every upper-triangular T.
    bool guaranteed_exact = false;
};

DminStatement dmin_statement(const CodeSpec& spec);

}  // namespace ptpc
