#include "hodgemod/hntypes.hpp"

#include <algorithm>

#include "hodgemod/errors.hpp"

namespace hodgemod {

namespace {

long long floor_div(long long a, long long b) {
    // b > 0
    long long q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

long long ceil_div(long long a, long long b) {
    // b > 0
    long long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

void require_genus(int g) {
    if (g < 2) throw DomainError("genus must be >= 2");
}

// Enumerates degree vectors for one rank composition. State carried across
// the left-to-right choice of d_1, d_2, ...:
//   chosen_degree_sum = d_1 + ... + d_k
//   chosen_rank_sum   = n_1 + ... + n_k
//   cross_sum         = sum over pairs j < i <= k of n_i d_j - n_j d_i
// The full codimension is cross_sum (over all pairs) + (g-1) * rank_pair_sum,
// and every cross pair of a valid type contributes at least 1, which gives
// integer pruning bounds with no rational arithmetic.
struct DegreeSearch {
    const std::vector<int>& comp;
    int n;
    long long d;
    long long budget;  // max_codim - (g-1) * rank_pair_sum
    std::vector<long long> degrees;
    std::vector<HNType>& out;

    void run() {
        degrees.clear();
        choose(0, 0, 0, 0);
    }

    void choose(int k, long long degree_sum, long long rank_sum, long long cross_sum) {
        const int p = static_cast<int>(comp.size());
        if (k == p - 1) {
            const long long dk = d - degree_sum;
            const long long nk = comp[static_cast<std::size_t>(k)];
            // strict slope decrease against the previous part
            const long long prev_n = comp[static_cast<std::size_t>(k - 1)];
            const long long prev_d = degrees.back();
            if (prev_d * nk - dk * prev_n < 1) return;
            const long long total_cross = cross_sum + nk * degree_sum - rank_sum * dk;
            if (total_cross > budget) return;
            std::vector<HNPart> parts;
            parts.reserve(static_cast<std::size_t>(p));
            for (int idx = 0; idx < p - 1; ++idx) {
                parts.push_back({comp[static_cast<std::size_t>(idx)],
                                 degrees[static_cast<std::size_t>(idx)]});
            }
            parts.push_back({static_cast<int>(nk), dk});
            out.push_back(HNType(std::move(parts)));
            return;
        }

        const long long nk = comp[static_cast<std::size_t>(k)];
        long long lo, hi;
        if (k == 0) {
            // d_1/n_1 > d/n, and (n d_1 - d n_1)/n_1 <= budget since the
            // gap-weighted sum dominates n * (first slope - mean slope).
            lo = floor_div(d * nk, n) + 1;
            hi = floor_div(nk * (budget + d), n);
        } else {
            const long long prev_n = comp[static_cast<std::size_t>(k - 1)];
            const long long prev_d = degrees.back();
            // slope strictly below the previous part
            hi = floor_div(prev_d * nk - 1, prev_n);
            // slope strictly above the average of the remaining parts
            lo = floor_div((d - degree_sum) * nk, n - rank_sum) + 1;
            // codimension budget: pairs not yet committed contribute >= 1 each
            const long long future_pairs =
                (static_cast<long long>(p) * (p - 1) - static_cast<long long>(k + 1) * k) / 2;
            const long long lo_budget =
                ceil_div(cross_sum + nk * degree_sum + future_pairs - budget, rank_sum);
            lo = std::max(lo, lo_budget);
        }
        for (long long dk = lo; dk <= hi; ++dk) {
            degrees.push_back(dk);
            choose(k + 1, degree_sum + dk, rank_sum + nk,
                   cross_sum + nk * degree_sum - rank_sum * dk);
            degrees.pop_back();
        }
    }
};

}  // namespace

HNType::HNType(std::vector<HNPart> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 2) {
        throw ContractError("HNType: an unstable type has at least two parts");
    }
    for (const HNPart& p : parts_) {
        if (p.rank < 1) throw ContractError("HNType: ranks must be positive");
    }
    for (std::size_t k = 0; k + 1 < parts_.size(); ++k) {
        // d_k / n_k > d_{k+1} / n_{k+1}, cross-multiplied
        if (parts_[k].degree * parts_[k + 1].rank <= parts_[k + 1].degree * parts_[k].rank) {
            throw ContractError("HNType: slopes must strictly decrease");
        }
    }
}

int HNType::total_rank() const noexcept {
    int n = 0;
    for (const HNPart& p : parts_) n += p.rank;
    return n;
}

long long HNType::total_degree() const noexcept {
    long long d = 0;
    for (const HNPart& p : parts_) d += p.degree;
    return d;
}

long long codimension(const HNType& mu, int g) {
    require_genus(g);
    const auto& parts = mu.parts();
    long long sum = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        for (std::size_t i = j + 1; i < parts.size(); ++i) {
            const long long ni = parts[i].rank, nj = parts[j].rank;
            const long long di = parts[i].degree, dj = parts[j].degree;
            sum += ni * dj - nj * di + ni * nj * (g - 1);
        }
    }
    return sum;
}

HNType shift(const HNType& mu, long long e) {
    std::vector<HNPart> parts = mu.parts();
    for (HNPart& p : parts) p.degree += e * p.rank;
    return HNType(std::move(parts));
}

std::vector<HNType> enumerate_types(int n, long long d, int g, long long max_codim) {
    if (n < 1) throw DomainError("rank must be >= 1");
    require_genus(g);

    std::vector<HNType> out;
    if (n == 1 || max_codim < 0) return out;

    // Walk the compositions of n with at least two parts in lexicographic
    // order, so the final sort only has to order degree vectors.
    std::vector<int> comp;
    auto visit = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (comp.size() < 2) return;
            long long rank_pair_sum = 0;  // sum over pairs of n_i n_j
            long long partial = 0;
            for (int r : comp) {
                rank_pair_sum += partial * r;
                partial += r;
            }
            const long long pairs =
                static_cast<long long>(comp.size()) * (static_cast<long long>(comp.size()) - 1) / 2;
            const long long budget = max_codim - rank_pair_sum * (g - 1);
            if (budget < pairs) return;  // every cross pair contributes >= 1
            DegreeSearch search{comp, n, d, budget, {}, out};
            search.run();
            return;
        }
        for (int first = 1; first <= remaining; ++first) {
            comp.push_back(first);
            self(self, remaining - first);
            comp.pop_back();
        }
    };
    visit(visit, n);

    std::sort(out.begin(), out.end(), [](const HNType& a, const HNType& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        const auto& pa = a.parts();
        const auto& pb = b.parts();
        for (std::size_t k = 0; k < pa.size(); ++k) {
            if (pa[k].rank != pb[k].rank) return pa[k].rank < pb[k].rank;
        }
        for (std::size_t k = 0; k < pa.size(); ++k) {
            if (pa[k].degree != pb[k].degree) return pa[k].degree < pb[k].degree;
        }
        return false;
    });
    return out;
}

}  // namespace hodgemod
