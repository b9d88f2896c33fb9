#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "hodgemod/biseries.hpp"
#include "hodgemod/unipoly.hpp"

namespace hodgemod {

enum class Variant { full, fixed_determinant };

const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

/// Complex dimension of the moduli space of stable bundles, n^2(g-1)+1.
int dim_full(int n, int g);
/// Complex dimension of the fixed-determinant subspace, (n^2-1)(g-1).
int dim_fixed_det(int n, int g);
/// Session truncation cap: twice the full dimension plus a margin of 2 so
/// the polynomial cutoff assertions are genuine checks.
int default_cap(int n, int g);

struct HodgeTerm {
    int p = 0;
    int q = 0;
    Int h;  // > 0
    bool operator==(const HodgeTerm&) const = default;
};

/// Assembled result for one moduli space, ready for serialization.
struct HodgeReport {
    int n = 0;
    long long d = 0;
    int g = 0;
    Variant variant = Variant::full;
    int dim_complex = 0;
    std::vector<HodgeTerm> hodge_terms;  // sorted by (p+q, p)
    std::vector<Int> betti;              // b_0 .. b_{2 dim}
    UniPoly chi;                         // exact
    Int euler;                           // chi(-1)
    Int signature;                       // chi(1)
    int cap_used = 0;

    bool operator==(const HodgeReport&) const = default;
};

/// Memo store for semistable-stratum series, keyed by (n, d mod n, g, cap).
/// Keying on the residue is sound because the series is invariant under
/// d -> d + ne. Thread-safe: lookups and insertions are atomic, duplicate
/// computation of a key is harmless (results are identical).
///
/// With a directory, entries are mirrored on disk, one JSON file per key
/// with a header that is verified before the payload is trusted; a file
/// that fails validation is ignored and recomputed.
class SeriesCache {
public:
    SeriesCache() = default;
    explicit SeriesCache(std::filesystem::path dir);

    std::optional<BiSeries> find(int n, long long d_residue, int g, int cap);
    void store(int n, long long d_residue, int g, int cap, const BiSeries& value);
    std::size_t memory_entries() const;

private:
    struct Key {
        int n;
        long long residue;
        int g;
        int cap;
        auto operator<=>(const Key&) const = default;
    };

    std::filesystem::path file_for(const Key& key) const;

    mutable std::mutex mutex_;
    std::map<Key, BiSeries> entries_;
    std::optional<std::filesystem::path> dir_;
};

/// Equivariant Hodge-Poincare series of the ambient space:
///   prod_{l=1..n} (1+x^l y^{l-1})^g (1+x^{l-1} y^l)^g
///   / [ (1-x^n y^n) prod_{l=1..n-1} (1-x^l y^l)^2 ],
/// expanded at the cap. Independent of the degree d.
BiSeries ambient_hp(int n, int g, int cap);

/// The semistable-stratum series computed by the inductive formula:
/// ambient minus sum over unstable types of (xy)^{d_mu} times the product
/// of the series of the parts. Defined for all (n, d), coprime or not.
/// Memoized in `cache` under (n, d mod n, g, cap).
BiSeries semistable_hp(int n, long long d, int g, int cap, SeriesCache& cache);

/// Same recursion with no memoization and no residue reduction; exists so
/// the d -> d + ne invariance can be tested without the memo shortcut.
BiSeries semistable_hp_direct(int n, long long d, int g, int cap);

/// Hodge-Poincare polynomial of the full moduli space, (1 - xy) times the
/// semistable series. Requires gcd(n, d) = 1. The result is checked to be
/// a polynomial of total degree <= 2 dim_full.
BiSeries hp_full(int n, long long d, int g, SeriesCache& cache,
                 std::optional<int> cap_override = std::nullopt);

/// Hodge-Poincare polynomial of the fixed-determinant subspace: hp_full
/// divided exactly by (1+x)^g (1+y)^g. Checked to be a polynomial with
/// top term x^N y^N, N = dim_fixed_det.
BiSeries hp_fixed_det(int n, long long d, int g, SeriesCache& cache,
                      std::optional<int> cap_override = std::nullopt);

/// chi(t) = HP(fixed determinant)(t, -1), as an exact polynomial.
UniPoly chi_characteristic(int n, long long d, int g, SeriesCache& cache,
                           std::optional<int> cap_override = std::nullopt);

/// (chi(-1), chi(1)) of the fixed-determinant space: Euler characteristic
/// and signature. Both must vanish for n >= 2 (checked); for n = 1 the
/// space is a point and the pair is (1, 1).
std::pair<Int, Int> euler_and_signature(int n, long long d, int g, SeriesCache& cache);

/// Full report for one space; validates every HodgeReport invariant.
HodgeReport report(int n, long long d, int g, Variant variant, SeriesCache& cache,
                   std::optional<int> cap_override = std::nullopt);

}  // namespace hodgemod
