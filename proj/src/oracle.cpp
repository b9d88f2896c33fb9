#include "hodgemod/oracle.hpp"

#include "hodgemod/errors.hpp"
#include "hodgemod/hntypes.hpp"

namespace hodgemod {

namespace {

void require_genus(int g) {
    if (g < 2) throw DomainError("genus must be >= 2");
}

BiSeries one_plus(int i, int j, int cap) {
    if (i + j > cap) return BiSeries::one(cap);
    return BiSeries::one(cap) + BiSeries::monomial(i, j, 1, cap);
}

void check_polynomial_top(const BiSeries& s, int top, const char* what) {
    if (!s.is_polynomial_below(2 * top)) {
        throw ConsistencyError(std::string(what) +
                               ": quotient is not a polynomial of total degree <= " +
                               std::to_string(2 * top));
    }
    if (s.coefficient(top, top) != 1) {
        throw ConsistencyError(std::string(what) + ": top term is not x^" + std::to_string(top) +
                               " y^" + std::to_string(top));
    }
}

long long residue_mod(long long d, int n) {
    long long r = d % n;
    if (r < 0) r += n;
    return r;
}

}  // namespace

BiSeries closed_form_rank2(int g, int cap) {
    require_genus(g);
    const int top = 3 * (g - 1);
    if (cap < 2 * top) throw ContractError("closed_form_rank2: cap below 6(g-1)");
    const unsigned ug = static_cast<unsigned>(g);
    const BiSeries num =
        mul(one_plus(2, 1, cap).pow(ug), one_plus(1, 2, cap).pow(ug)) -
        mul(BiSeries::monomial(g, g, 1, cap),
            mul(one_plus(1, 0, cap).pow(ug), one_plus(0, 1, cap).pow(ug)));
    const BiSeries result =
        mul(mul(num, BiSeries::geom(1, 1, cap)), BiSeries::geom(2, 2, cap));
    check_polynomial_top(result, top, "closed_form_rank2");
    return result;
}

BiSeries closed_form_rank3(int g, int cap) {
    require_genus(g);
    const int top = 8 * (g - 1);
    if (cap < 2 * top) throw ContractError("closed_form_rank3: cap below 16(g-1)");
    const unsigned ug = static_cast<unsigned>(g);

    const BiSeries term1 = mul(mul(one_plus(2, 3, cap).pow(ug), one_plus(3, 2, cap).pow(ug)),
                               mul(one_plus(1, 2, cap).pow(ug), one_plus(2, 1, cap).pow(ug)));
    const BiSeries term2 =
        mul(mul(BiSeries::monomial(2 * g - 1, 2 * g - 1, 1, cap), one_plus(1, 1, cap).pow(2)),
            mul(mul(one_plus(1, 0, cap).pow(ug), one_plus(0, 1, cap).pow(ug)),
                mul(one_plus(1, 2, cap).pow(ug), one_plus(2, 1, cap).pow(ug))));
    const BiSeries term3 =
        mul(mul(BiSeries::monomial(3 * g - 1, 3 * g - 1, 1, cap),
                BiSeries::one(cap) + BiSeries::monomial(1, 1, 1, cap) +
                    BiSeries::monomial(2, 2, 1, cap)),
            mul(one_plus(1, 0, cap).pow(2 * ug), one_plus(0, 1, cap).pow(2 * ug)));

    const BiSeries num = term1 - term2 + term3;
    const BiSeries geom2 = BiSeries::geom(2, 2, cap);
    const BiSeries result = mul(mul(mul(num, BiSeries::geom(1, 1, cap)), mul(geom2, geom2)),
                                BiSeries::geom(3, 3, cap));
    check_polynomial_top(result, top, "closed_form_rank3");
    return result;
}

UniPoly chi_closed_form(int n, int g) {
    if (n < 1) throw DomainError("rank must be >= 1");
    require_genus(g);
    UniPoly base = UniPoly::one();
    for (int r = 1; r <= n - 1; ++r) {
        // 1 - (-t)^r = 1 - (-1)^r t^r
        const Int cr = (r % 2 == 0) ? Int(-1) : Int(1);
        const Int cr1 = ((r + 1) % 2 == 0) ? Int(-1) : Int(1);
        base = mul(base, UniPoly::one() + UniPoly::monomial(r, cr));
        base = mul(base, UniPoly::one() + UniPoly::monomial(r + 1, cr1));
    }
    return base.pow(static_cast<unsigned>(g - 1));
}

std::optional<UniPoly> BettiCache::find(int n, long long d_residue, int g, int cap) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = entries_.find(Key{n, d_residue, g, cap});
    if (it != entries_.end()) return it->second;
    return std::nullopt;
}

void BettiCache::store(int n, long long d_residue, int g, int cap, const UniPoly& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    entries_.insert_or_assign(Key{n, d_residue, g, cap}, value);
}

namespace {

UniPoly ab_ambient(int n, int g, int cap) {
    UniPoly num = UniPoly::one(cap);
    for (int l = 1; l <= n; ++l) {
        num = mul(num, (UniPoly::one(cap) + UniPoly::monomial(2 * l - 1, 1, cap))
                           .pow(static_cast<unsigned>(2 * g)));
    }
    UniPoly result = mul(num, UniPoly::geom(2 * n, cap));
    for (int l = 1; l < n; ++l) {
        const UniPoly inv = UniPoly::geom(2 * l, cap);
        result = mul(mul(result, inv), inv);
    }
    return result;
}

}  // namespace

UniPoly betti_semistable(int n, long long d, int g, int cap, BettiCache& cache) {
    if (n < 1) throw DomainError("rank must be >= 1");
    require_genus(g);
    const long long r = residue_mod(d, n);
    if (auto hit = cache.find(n, r, g, cap)) return *hit;

    UniPoly result = ab_ambient(n, g, cap);
    for (const HNType& mu : enumerate_types(n, r, g, cap / 2)) {
        const long long dmu = codimension(mu, g);
        UniPoly prod = UniPoly::monomial(static_cast<int>(2 * dmu), 1, cap);
        for (const HNPart& part : mu.parts()) {
            prod = mul(prod, betti_semistable(part.rank, part.degree, g, cap, cache));
        }
        result = sub(result, prod);
    }
    cache.store(n, r, g, cap, result);
    return result;
}

UniPoly poincare_full(int n, long long d, int g, int cap, BettiCache& cache) {
    const UniPoly one_minus_t2 = UniPoly::one() - UniPoly::monomial(2, 1);
    return mul(one_minus_t2, betti_semistable(n, d, g, cap, cache));
}

}  // namespace hodgemod
