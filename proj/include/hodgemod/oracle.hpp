#pragma once

#include <map>
#include <mutex>

#include "hodgemod/biseries.hpp"
#include "hodgemod/unipoly.hpp"

namespace hodgemod {

/// Independent reference computations, used only for verification. Nothing
/// here reuses the bivariate recursion of the moduli module except the type
/// enumerator, so an arithmetic bug cannot confirm itself.

/// Closed form for the fixed-determinant space at rank 2, odd degree:
///   [ (1+x^2 y)^g (1+x y^2)^g - x^g y^g (1+x)^g (1+y)^g ]
///   / [ (1-xy)(1-x^2 y^2) ].
/// Checked to be a polynomial with top term x^{3(g-1)} y^{3(g-1)}.
BiSeries closed_form_rank2(int g, int cap);

/// Closed form for rank 3, degree coprime to 3: the three-term numerator
/// over (1-xy)(1-x^2 y^2)^2 (1-x^3 y^3). Checked to be a polynomial with
/// top term x^{8(g-1)} y^{8(g-1)}.
BiSeries closed_form_rank3(int g, int cap);

/// chi(t) closed form: ( prod_{r=1..n-1} (1-(-t)^r)(1-(-t)^{r+1}) )^{g-1},
/// as an exact polynomial. The empty product at n = 1 gives 1.
UniPoly chi_closed_form(int n, int g);

/// Memo store for the univariate Betti recursion, keyed like the bivariate
/// one on (n, d mod n, g, cap). Thread-safe.
class BettiCache {
public:
    std::optional<UniPoly> find(int n, long long d_residue, int g, int cap);
    void store(int n, long long d_residue, int g, int cap, const UniPoly& value);

private:
    struct Key {
        int n;
        long long residue;
        int g;
        int cap;
        auto operator<=>(const Key&) const = default;
    };
    mutable std::mutex mutex_;
    std::map<Key, UniPoly> entries_;
};

/// Gauge-equivariant Poincare series of the semistable stratum, by the
/// univariate recursion: ambient prod (1+t^{2l-1})^{2g} over
/// (1-t^{2n}) prod (1-t^{2l})^2, minus sum over unstable types of
/// t^{2 d_mu} times the product over the parts. Shares the type enumerator
/// with the bivariate engine but nothing else.
UniPoly betti_semistable(int n, long long d, int g, int cap, BettiCache& cache);

/// Poincare polynomial of the full moduli space: (1 - t^2) times the
/// semistable series.
UniPoly poincare_full(int n, long long d, int g, int cap, BettiCache& cache);

}  // namespace hodgemod
