#include "hodgemod/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "hodgemod/errors.hpp"

namespace hodgemod {

namespace {

// Effective cap for a binary operation: exact counts as infinite.
std::optional<int> combined_cap(const std::optional<int>& a, const std::optional<int>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

}  // namespace

UniPoly UniPoly::zero(std::optional<int> cap) {
    UniPoly p;
    p.cap_ = cap;
    return p;
}

UniPoly UniPoly::constant(Int v, std::optional<int> cap) {
    UniPoly p = zero(cap);
    if (v != 0) p.terms_.push_back({0, std::move(v)});
    return p;
}

UniPoly UniPoly::one(std::optional<int> cap) { return constant(1, cap); }

UniPoly UniPoly::monomial(int e, Int c, std::optional<int> cap) {
    if (e < 0) throw ContractError("UniPoly::monomial: negative exponent");
    if (cap && e > *cap) throw ContractError("UniPoly::monomial: exponent exceeds cap");
    UniPoly p = zero(cap);
    if (c != 0) p.terms_.push_back({e, std::move(c)});
    return p;
}

UniPoly UniPoly::geom(int step, int cap) {
    if (step < 1) throw ContractError("UniPoly::geom: step must be >= 1");
    UniPoly p = zero(cap);
    for (int k = 0; k * step <= cap; ++k) p.terms_.push_back({k * step, Int(1)});
    return p;
}

UniPoly UniPoly::from_coefficients(const std::vector<Int>& coeffs) {
    UniPoly p;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e] != 0) p.terms_.push_back({static_cast<int>(e), coeffs[e]});
    }
    return p;
}

UniPoly UniPoly::from_terms(std::vector<Term> terms, std::optional<int> cap) {
    for (const Term& t : terms) {
        if (t.e < 0) throw ContractError("UniPoly::from_terms: negative exponent");
        if (cap && t.e > *cap) throw ContractError("UniPoly::from_terms: exponent exceeds cap");
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.e < b.e; });
    UniPoly p = zero(cap);
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().e == t.e) {
            p.terms_.back().c += t.c;
            if (p.terms_.back().c == 0) p.terms_.pop_back();
        } else if (t.c != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Int UniPoly::coefficient(int e) const {
    if (e < 0) return 0;
    if (cap_ && e > *cap_) {
        throw ContractError("UniPoly::coefficient: exponent " + std::to_string(e) +
                            " is beyond cap " + std::to_string(*cap_));
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int v) { return t.e < v; });
    if (it != terms_.end() && it->e == e) return it->c;
    return 0;
}

int UniPoly::degree() const { return terms_.empty() ? -1 : terms_.back().e; }

std::vector<Int> UniPoly::coefficients_upto(int n) const {
    std::vector<Int> out(static_cast<std::size_t>(n) + 1);
    for (const Term& t : terms_) {
        if (t.e <= n) out[static_cast<std::size_t>(t.e)] = t.c;
    }
    return out;
}

Int UniPoly::evaluate(const Int& t0) const {
    // Horner over the sparse term list, highest exponent first.
    Int acc = 0;
    int e_prev = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (e_prev < 0) {
            acc = it->c;
        } else {
            for (int k = 0; k < e_prev - it->e; ++k) acc *= t0;
            acc += it->c;
        }
        e_prev = it->e;
    }
    if (e_prev > 0) {
        for (int k = 0; k < e_prev; ++k) acc *= t0;
    }
    return acc;
}

UniPoly UniPoly::truncated(int new_cap) const {
    if (cap_ && new_cap > *cap_) throw ContractError("UniPoly::truncated: new cap exceeds current cap");
    UniPoly p = zero(new_cap);
    auto it = terms_.begin();
    while (it != terms_.end() && it->e <= new_cap) ++it;
    p.terms_.assign(terms_.begin(), it);
    return p;
}

UniPoly UniPoly::as_exact() const {
    UniPoly p;
    p.terms_ = terms_;
    return p;
}

UniPoly add(const UniPoly& a, const UniPoly& b) {
    auto cap = combined_cap(a.cap_, b.cap_);
    std::vector<UniPoly::Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    auto keep = [&](const UniPoly::Term& t) { return !cap || t.e <= *cap; };
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->e < ib->e)) {
            if (keep(*ia)) out.push_back(*ia);
            ++ia;
        } else if (ia == a.terms_.end() || ib->e < ia->e) {
            if (keep(*ib)) out.push_back(*ib);
            ++ib;
        } else {
            Int c = ia->c + ib->c;
            if (c != 0 && keep(*ia)) out.push_back({ia->e, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    return UniPoly::from_terms(std::move(out), cap);
}

UniPoly sub(const UniPoly& a, const UniPoly& b) {
    UniPoly neg = b;
    for (auto& t : neg.terms_) t.c = -t.c;
    return add(a, neg);
}

UniPoly mul(const UniPoly& a, const UniPoly& b) {
    auto cap = combined_cap(a.cap_, b.cap_);
    int bound;
    if (cap) {
        bound = *cap;
    } else {
        bound = (a.is_zero() || b.is_zero()) ? 0 : a.degree() + b.degree();
    }
    std::vector<Int> dense(static_cast<std::size_t>(bound) + 1);
    for (const auto& ta : a.terms_) {
        if (ta.e > bound) break;
        for (const auto& tb : b.terms_) {
            if (ta.e + tb.e > bound) break;
            dense[static_cast<std::size_t>(ta.e + tb.e)] += ta.c * tb.c;
        }
    }
    std::vector<UniPoly::Term> out;
    for (int e = 0; e <= bound; ++e) {
        if (dense[static_cast<std::size_t>(e)] != 0) {
            out.push_back({e, std::move(dense[static_cast<std::size_t>(e)])});
        }
    }
    return UniPoly::from_terms(std::move(out), cap);
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly result = one(cap_);
    if (e == 0) return result;
    UniPoly base = *this;
    while (true) {
        if (e & 1u) result = mul(result, base);
        e >>= 1u;
        if (e == 0) break;
        base = mul(base, base);
    }
    return result;
}

std::string UniPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Int mag = t.c < 0 ? Int(-t.c) : t.c;
        if (first) {
            if (t.c < 0) os << "-";
            first = false;
        } else {
            os << (t.c < 0 ? " - " : " + ");
        }
        if (mag != 1 || t.e == 0) os << mag.str();
        if (mag != 1 && t.e > 0) os << "*";
        if (t.e > 0) {
            os << "t";
            if (t.e > 1) os << "^" << t.e;
        }
    }
    return os.str();
}

std::string first_difference(const UniPoly& a, const UniPoly& b) {
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        int ea = ia != a.terms().end() ? ia->e : -1;
        int eb = ib != b.terms().end() ? ib->e : -1;
        if (ea == eb) {
            if (ia->c != ib->c) {
                return "first differing coefficient at t^" + std::to_string(ea) +
                       ": lhs=" + ia->c.str() + ", rhs=" + ib->c.str();
            }
            ++ia;
            ++ib;
        } else if (eb == -1 || (ea != -1 && ea < eb)) {
            return "first differing coefficient at t^" + std::to_string(ea) +
                   ": lhs=" + ia->c.str() + ", rhs=0";
        } else {
            return "first differing coefficient at t^" + std::to_string(eb) +
                   ": lhs=0, rhs=" + ib->c.str();
        }
    }
    return "";
}

}  // namespace hodgemod
