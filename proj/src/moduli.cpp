#include "hodgemod/moduli.hpp"

#include <numeric>

#include "hodgemod/errors.hpp"
#include "hodgemod/hntypes.hpp"
#include "hodgemod/serialize.hpp"

namespace hodgemod {

namespace {

void require_genus(int g) {
    if (g < 2) throw DomainError("genus must be >= 2");
}

void require_rank(int n) {
    if (n < 1) throw DomainError("rank must be >= 1");
}

void require_coprime(int n, long long d) {
    if (std::gcd(static_cast<long long>(n), d) != 1) {
        throw DomainError("rank " + std::to_string(n) + " and degree " + std::to_string(d) +
                          " must be coprime for moduli-space output");
    }
}

long long residue_mod(long long d, int n) {
    long long r = d % n;
    if (r < 0) r += n;
    return r;
}

BiSeries one_plus(int i, int j, int cap) {
    if (i + j > cap) return BiSeries::one(cap);
    return BiSeries::one(cap) + BiSeries::monomial(i, j, 1, cap);
}

BiSeries jacobian_hp(int g, int cap) {
    return mul(one_plus(1, 0, cap).pow(static_cast<unsigned>(g)),
               one_plus(0, 1, cap).pow(static_cast<unsigned>(g)));
}

// The recursion body, parameterized over how sub-series are obtained so the
// memoized and the direct variants share it. Each correction product is
// computed at cap - 2 d_mu, which the (xy)^{d_mu} shift makes equivalent to
// working at the full cap (equivalence covered by tests).
template <typename SubSeries>
BiSeries semistable_core(int n, long long d, int g, int cap, SubSeries&& sub) {
    BiSeries result = ambient_hp(n, g, cap);
    std::vector<BiSeries::Term> corrections;
    for (const HNType& mu : enumerate_types(n, d, g, cap / 2)) {
        const long long dmu = codimension(mu, g);
        const int sub_cap = cap - 2 * static_cast<int>(dmu);
        BiSeries prod = BiSeries::one(sub_cap);
        for (const HNPart& part : mu.parts()) {
            if (prod.is_zero()) break;
            prod = mul(prod, sub(part.rank, part.degree).truncated(sub_cap));
        }
        const int shift = static_cast<int>(dmu);
        for (const auto& t : prod.terms()) {
            corrections.push_back({t.i + shift, t.j + shift, t.c});
        }
    }
    return result - BiSeries::from_terms(std::move(corrections), cap);
}

}  // namespace

const char* variant_name(Variant v) {
    return v == Variant::full ? "full" : "fixed_determinant";
}

std::optional<Variant> variant_from_name(const std::string& name) {
    if (name == "full") return Variant::full;
    if (name == "fixed_determinant") return Variant::fixed_determinant;
    return std::nullopt;
}

int dim_full(int n, int g) { return n * n * (g - 1) + 1; }

int dim_fixed_det(int n, int g) { return (n * n - 1) * (g - 1); }

int default_cap(int n, int g) { return 2 * dim_full(n, g) + 2; }

SeriesCache::SeriesCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(*dir_);
}

std::filesystem::path SeriesCache::file_for(const Key& key) const {
    return *dir_ / ("f_n" + std::to_string(key.n) + "_r" + std::to_string(key.residue) + "_g" +
                    std::to_string(key.g) + "_cap" + std::to_string(key.cap) + ".json");
}

std::optional<BiSeries> SeriesCache::find(int n, long long d_residue, int g, int cap) {
    const Key key{n, d_residue, g, cap};
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
    if (dir_) {
        auto loaded = read_series_cache_file(file_for(key), n, d_residue, g, cap);
        if (loaded) {
            entries_.emplace(key, *loaded);
            return loaded;
        }
    }
    return std::nullopt;
}

void SeriesCache::store(int n, long long d_residue, int g, int cap, const BiSeries& value) {
    const Key key{n, d_residue, g, cap};
    std::lock_guard<std::mutex> lock(mutex_);
    entries_.insert_or_assign(key, value);
    if (dir_) {
        try {
            write_series_cache_file(file_for(key), n, d_residue, g, cap, value);
        } catch (const std::exception&) {
            // the disk cache is advisory; failure to persist is not an error
        }
    }
}

std::size_t SeriesCache::memory_entries() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

BiSeries ambient_hp(int n, int g, int cap) {
    require_rank(n);
    require_genus(g);
    BiSeries num = BiSeries::one(cap);
    for (int l = 1; l <= n; ++l) {
        num = mul(num, one_plus(l, l - 1, cap).pow(static_cast<unsigned>(g)));
        num = mul(num, one_plus(l - 1, l, cap).pow(static_cast<unsigned>(g)));
    }
    BiSeries result = mul(num, BiSeries::geom(n, n, cap));
    for (int l = 1; l < n; ++l) {
        const BiSeries inv = BiSeries::geom(l, l, cap);
        result = mul(mul(result, inv), inv);
    }
    return result;
}

BiSeries semistable_hp(int n, long long d, int g, int cap, SeriesCache& cache) {
    require_rank(n);
    require_genus(g);
    if (cap < 0) throw ContractError("semistable_hp: negative cap");
    const long long r = residue_mod(d, n);
    if (auto hit = cache.find(n, r, g, cap)) return *hit;
    BiSeries value = semistable_core(n, r, g, cap, [&](int nj, long long dj) {
        return semistable_hp(nj, dj, g, cap, cache);
    });
    cache.store(n, r, g, cap, value);
    return value;
}

BiSeries semistable_hp_direct(int n, long long d, int g, int cap) {
    require_rank(n);
    require_genus(g);
    return semistable_core(n, d, g, cap, [&](int nj, long long dj) {
        return semistable_hp_direct(nj, dj, g, cap);
    });
}

BiSeries hp_full(int n, long long d, int g, SeriesCache& cache, std::optional<int> cap_override) {
    require_rank(n);
    require_genus(g);
    require_coprime(n, d);
    const int bound = 2 * dim_full(n, g);
    const int cap = cap_override.value_or(default_cap(n, g));
    if (cap < bound) {
        throw DomainError("cap override " + std::to_string(cap) +
                          " is below twice the moduli dimension (" + std::to_string(bound) + ")");
    }
    const BiSeries f = semistable_hp(n, d, g, cap, cache);
    const BiSeries hp = mul(BiSeries::one(cap) - BiSeries::monomial(1, 1, 1, cap), f);
    if (!hp.is_polynomial_below(bound)) {
        throw ConsistencyError(
            "hp_full: (1-xy) * series is not a polynomial of total degree <= " +
            std::to_string(bound) + " (stray total degree " + std::to_string(hp.total_degree()) +
            ")");
    }
    return hp;
}

BiSeries hp_fixed_det(int n, long long d, int g, SeriesCache& cache,
                      std::optional<int> cap_override) {
    const BiSeries full = hp_full(n, d, g, cache, cap_override);
    const int cap = full.cap();
    const BiSeries quotient = div_exact(full, jacobian_hp(g, cap));
    const int dim = dim_fixed_det(n, g);
    if (!quotient.is_polynomial_below(2 * dim)) {
        throw ConsistencyError(
            "hp_fixed_det: quotient by the Jacobian factor is not a polynomial of total degree "
            "<= " +
            std::to_string(2 * dim));
    }
    if (quotient.coefficient(dim, dim) != 1) {
        throw ConsistencyError("hp_fixed_det: top Hodge number h^{N,N} is not 1, N = " +
                               std::to_string(dim));
    }
    return quotient;
}

UniPoly chi_characteristic(int n, long long d, int g, SeriesCache& cache,
                           std::optional<int> cap_override) {
    return hp_fixed_det(n, d, g, cache, cap_override).specialize_y_minus1().as_exact();
}

std::pair<Int, Int> euler_and_signature(int n, long long d, int g, SeriesCache& cache) {
    const UniPoly chi = chi_characteristic(n, d, g, cache);
    Int euler = chi.evaluate(-1);
    Int signature = chi.evaluate(1);
    if (n >= 2 && (euler != 0 || signature != 0)) {
        throw ConsistencyError("euler_and_signature: chi(-1) and chi(1) must vanish for n >= 2, got (" +
                               euler.str() + ", " + signature.str() + ")");
    }
    return {std::move(euler), std::move(signature)};
}

HodgeReport report(int n, long long d, int g, Variant variant, SeriesCache& cache,
                   std::optional<int> cap_override) {
    const BiSeries hp = variant == Variant::full ? hp_full(n, d, g, cache, cap_override)
                                                 : hp_fixed_det(n, d, g, cache, cap_override);
    const int dim = variant == Variant::full ? dim_full(n, g) : dim_fixed_det(n, g);

    HodgeReport rep;
    rep.n = n;
    rep.d = d;
    rep.g = g;
    rep.variant = variant;
    rep.dim_complex = dim;
    rep.cap_used = hp.cap();

    for (const auto& t : hp.terms()) {
        if (t.c < 0) {
            throw ConsistencyError("report: negative Hodge number h^{" + std::to_string(t.i) +
                                   "," + std::to_string(t.j) + "} = " + t.c.str());
        }
        if (t.i > dim || t.j > dim) {
            throw ConsistencyError("report: Hodge number outside the diamond at (" +
                                   std::to_string(t.i) + "," + std::to_string(t.j) + ")");
        }
        rep.hodge_terms.push_back({t.i, t.j, t.c});
        if (hp.coefficient(t.j, t.i) != t.c) {
            throw ConsistencyError("report: Hodge symmetry h^{p,q} = h^{q,p} fails at (" +
                                   std::to_string(t.i) + "," + std::to_string(t.j) + ")");
        }
        if (hp.coefficient(dim - t.i, dim - t.j) != t.c) {
            throw ConsistencyError("report: Poincare duality h^{p,q} = h^{N-p,N-q} fails at (" +
                                   std::to_string(t.i) + "," + std::to_string(t.j) + ")");
        }
    }

    rep.betti = hp.specialize_diag().coefficients_upto(2 * dim);
    if (rep.betti.empty() || rep.betti[0] != 1) {
        throw ConsistencyError("report: b_0 must be 1");
    }

    rep.chi = hp.specialize_y_minus1().as_exact();
    rep.euler = rep.chi.evaluate(-1);
    rep.signature = rep.chi.evaluate(1);

    Int alternating = 0;
    for (std::size_t j = 0; j < rep.betti.size(); ++j) {
        if (j % 2 == 0) {
            alternating += rep.betti[j];
        } else {
            alternating -= rep.betti[j];
        }
    }
    if (alternating != rep.euler) {
        throw ConsistencyError("report: Euler characteristic disagrees with the alternating "
                               "Betti sum");
    }
    return rep;
}

}  // namespace hodgemod
