#pragma once

#include <vector>

#include "hodgemod/bigint.hpp"

namespace hodgemod {

/// One semistable quotient in a Harder-Narasimhan filtration.
struct HNPart {
    int rank = 0;         // > 0
    long long degree = 0;
    bool operator==(const HNPart&) const = default;
};

/// Harder-Narasimhan type of an unstable bundle: at least two parts whose
/// slopes degree/rank strictly decrease. Slopes are never materialized;
/// every comparison is an integer cross-multiplication.
class HNType {
public:
    /// Validates length >= 2, positive ranks, strictly decreasing slopes.
    explicit HNType(std::vector<HNPart> parts);

    const std::vector<HNPart>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int total_rank() const noexcept;
    long long total_degree() const noexcept;

    bool operator==(const HNType&) const = default;

private:
    std::vector<HNPart> parts_;
};

/// Complex codimension of the stratum of type mu:
///   sum over pairs j < i of n_i d_j - n_j d_i + n_i n_j (g - 1).
/// Positive for every valid type when g >= 2.
long long codimension(const HNType& mu, int g);

/// Tensor by a degree-e line bundle: each part (n_j, d_j) becomes
/// (n_j, d_j + e n_j). Leaves the codimension unchanged.
HNType shift(const HNType& mu, long long e);

/// Exactly the unstable types of rank n, degree d with codimension
/// <= max_codim, no duplicates, in a deterministic order (by length, then
/// rank composition, then degree vector). n = 1 has no unstable types.
std::vector<HNType> enumerate_types(int n, long long d, int g, long long max_codim);

}  // namespace hodgemod
