#include "hodgemod/biseries.hpp"

#include <algorithm>
#include <sstream>

#include "hodgemod/errors.hpp"

namespace hodgemod {

namespace {

// Dense triangular layout for all (i, j) with i + j <= cap, ordered
// graded-lex: position (i, j) lives at s(s+1)/2 + i with s = i + j.
inline std::size_t tri_size(int cap) {
    return static_cast<std::size_t>(cap + 1) * static_cast<std::size_t>(cap + 2) / 2;
}

inline std::size_t tri_index(int i, int j) {
    const int s = i + j;
    return static_cast<std::size_t>(s) * static_cast<std::size_t>(s + 1) / 2 +
           static_cast<std::size_t>(i);
}

inline bool graded_lex_less(const BiSeries::Term& a, const BiSeries::Term& b) {
    const int sa = a.i + a.j, sb = b.i + b.j;
    if (sa != sb) return sa < sb;
    return a.i < b.i;
}

void require_same_cap(const BiSeries& a, const BiSeries& b, const char* op) {
    if (a.cap() != b.cap()) {
        throw ContractError(std::string(op) + ": cap mismatch (" +
                            std::to_string(a.cap()) + " vs " + std::to_string(b.cap()) + ")");
    }
}

}  // namespace

BiSeries::BiSeries(int cap) : cap_(cap) {
    if (cap < 0) throw ContractError("BiSeries: negative cap");
}

BiSeries BiSeries::constant(Int v, int cap) {
    BiSeries s(cap);
    if (v != 0) s.terms_.push_back({0, 0, std::move(v)});
    return s;
}

BiSeries BiSeries::monomial(int i, int j, Int c, int cap) {
    BiSeries s(cap);
    if (i < 0 || j < 0) throw ContractError("monomial: negative exponent");
    if (i + j > cap) throw ContractError("monomial: total degree exceeds cap");
    if (c != 0) s.terms_.push_back({i, j, std::move(c)});
    return s;
}

BiSeries BiSeries::geom(int a, int b, int cap) {
    if (a < 0 || b < 0 || a + b < 1) {
        throw ContractError("geom: requires a, b >= 0 and a + b >= 1");
    }
    BiSeries s(cap);
    for (int k = 0; k * (a + b) <= cap; ++k) {
        s.terms_.push_back({a * k, b * k, Int(1)});
    }
    // graded-lex ordering holds by construction: total degree k(a+b) grows.
    return s;
}

BiSeries BiSeries::from_terms(std::vector<Term> terms, int cap) {
    for (const Term& t : terms) {
        if (t.i < 0 || t.j < 0) throw ContractError("from_terms: negative exponent");
        if (t.i + t.j > cap) throw ContractError("from_terms: total degree exceeds cap");
    }
    std::sort(terms.begin(), terms.end(), graded_lex_less);
    BiSeries s(cap);
    for (Term& t : terms) {
        if (!s.terms_.empty() && s.terms_.back().i == t.i && s.terms_.back().j == t.j) {
            s.terms_.back().c += t.c;
            if (s.terms_.back().c == 0) s.terms_.pop_back();
        } else if (t.c != 0) {
            s.terms_.push_back(std::move(t));
        }
    }
    return s;
}

BiSeries BiSeries::from_dense(int cap, std::vector<Int> buf) {
    BiSeries s(cap);
    std::size_t idx = 0;
    for (int deg = 0; deg <= cap; ++deg) {
        for (int i = 0; i <= deg; ++i, ++idx) {
            if (buf[idx] != 0) s.terms_.push_back({i, deg - i, std::move(buf[idx])});
        }
    }
    return s;
}

Int BiSeries::coefficient(int i, int j) const {
    if (i < 0 || j < 0) return 0;
    if (i + j > cap_) {
        throw ContractError("coefficient: (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is beyond cap " + std::to_string(cap_) +
                            "; the value is unknown, not zero");
    }
    const Term probe{i, j, Int(0)};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, graded_lex_less);
    if (it != terms_.end() && it->i == i && it->j == j) return it->c;
    return 0;
}

bool BiSeries::is_polynomial_below(int deg) const {
    if (deg > cap_) throw ContractError("is_polynomial_below: deg exceeds cap");
    return terms_.empty() || terms_.back().i + terms_.back().j <= deg;
}

int BiSeries::total_degree() const {
    return terms_.empty() ? -1 : terms_.back().i + terms_.back().j;
}

BiSeries BiSeries::truncated(int new_cap) const {
    if (new_cap > cap_) throw ContractError("truncated: new cap exceeds current cap");
    BiSeries s(new_cap);
    // terms are graded-sorted, so truncation keeps a prefix
    auto it = terms_.begin();
    while (it != terms_.end() && it->i + it->j <= new_cap) ++it;
    s.terms_.assign(terms_.begin(), it);
    return s;
}

BiSeries add(const BiSeries& a, const BiSeries& b) {
    require_same_cap(a, b, "add");
    BiSeries out(a.cap_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && graded_lex_less(*ia, *ib))) {
            out.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || graded_lex_less(*ib, *ia)) {
            out.terms_.push_back(*ib++);
        } else {
            Int c = ia->c + ib->c;
            if (c != 0) out.terms_.push_back({ia->i, ia->j, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    return out;
}

BiSeries sub(const BiSeries& a, const BiSeries& b) {
    require_same_cap(a, b, "sub");
    BiSeries out(a.cap_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && graded_lex_less(*ia, *ib))) {
            out.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || graded_lex_less(*ib, *ia)) {
            out.terms_.push_back({ib->i, ib->j, -ib->c});
            ++ib;
        } else {
            Int c = ia->c - ib->c;
            if (c != 0) out.terms_.push_back({ia->i, ia->j, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    return out;
}

BiSeries mul(const BiSeries& a, const BiSeries& b) {
    require_same_cap(a, b, "mul");
    const int cap = a.cap_;
    std::vector<Int> buf(tri_size(cap));
    for (const auto& ta : a.terms_) {
        const int room = cap - ta.i - ta.j;
        for (const auto& tb : b.terms_) {
            if (tb.i + tb.j > room) break;  // graded order: the rest is too big
            buf[tri_index(ta.i + tb.i, ta.j + tb.j)] += ta.c * tb.c;
        }
    }
    return BiSeries::from_dense(cap, std::move(buf));
}

BiSeries div_exact(const BiSeries& num, const BiSeries& den) {
    require_same_cap(num, den, "div_exact");
    const Int c0 = den.coefficient(0, 0);
    if (c0 != 1 && c0 != -1) {
        throw ContractError("div_exact: denominator constant term must be +1 or -1");
    }
    const bool negate = (c0 == -1);
    const int cap = num.cap_;

    std::vector<Int> q(tri_size(cap));
    std::vector<Int> rem(tri_size(cap));
    for (const auto& t : num.terms_) rem[tri_index(t.i, t.j)] = t.c;

    // Graded recovery: every referenced q position has strictly smaller
    // total degree, so it is already final when read.
    std::size_t idx = 0;
    for (int deg = 0; deg <= cap; ++deg) {
        for (int i = 0; i <= deg; ++i, ++idx) {
            const int j = deg - i;
            Int v = std::move(rem[idx]);
            for (const auto& td : den.terms_) {
                if (td.i == 0 && td.j == 0) continue;
                if (td.i > i || td.j > j) continue;
                v -= td.c * q[tri_index(i - td.i, j - td.j)];
            }
            q[idx] = negate ? -v : std::move(v);
        }
    }
    return BiSeries::from_dense(cap, std::move(q));
}

BiSeries BiSeries::pow(unsigned e) const {
    BiSeries result = one(cap_);
    if (e == 0) return result;
    BiSeries base = *this;
    while (true) {
        if (e & 1u) result = mul(result, base);
        e >>= 1u;
        if (e == 0) break;
        base = mul(base, base);
    }
    return result;
}

UniPoly BiSeries::specialize_diag() const {
    std::vector<UniPoly::Term> out;
    std::vector<Int> dense(static_cast<std::size_t>(cap_) + 1);
    for (const auto& t : terms_) dense[static_cast<std::size_t>(t.i + t.j)] += t.c;
    for (int e = 0; e <= cap_; ++e) {
        if (dense[static_cast<std::size_t>(e)] != 0) {
            out.push_back({e, std::move(dense[static_cast<std::size_t>(e)])});
        }
    }
    return UniPoly::from_terms(std::move(out), cap_);
}

UniPoly BiSeries::specialize_y_minus1() const {
    std::vector<Int> dense(static_cast<std::size_t>(cap_) + 1);
    for (const auto& t : terms_) {
        if (t.j % 2 == 0) {
            dense[static_cast<std::size_t>(t.i)] += t.c;
        } else {
            dense[static_cast<std::size_t>(t.i)] -= t.c;
        }
    }
    std::vector<UniPoly::Term> out;
    for (int e = 0; e <= cap_; ++e) {
        if (dense[static_cast<std::size_t>(e)] != 0) {
            out.push_back({e, std::move(dense[static_cast<std::size_t>(e)])});
        }
    }
    return UniPoly::from_terms(std::move(out), cap_);
}

std::string BiSeries::str() const {
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
        const bool has_var = t.i > 0 || t.j > 0;
        if (mag != 1 || !has_var) os << mag.str();
        if (mag != 1 && has_var) os << "*";
        if (t.i > 0) {
            os << "x";
            if (t.i > 1) os << "^" << t.i;
        }
        if (t.j > 0) {
            if (t.i > 0) os << "*";
            os << "y";
            if (t.j > 1) os << "^" << t.j;
        }
    }
    return os.str();
}

std::string first_difference(const BiSeries& a, const BiSeries& b) {
    const int cap = std::min(a.cap(), b.cap());
    for (int deg = 0; deg <= cap; ++deg) {
        for (int i = 0; i <= deg; ++i) {
            const Int ca = a.coefficient(i, deg - i);
            const Int cb = b.coefficient(i, deg - i);
            if (ca != cb) {
                return "first differing coefficient at (p,q)=(" + std::to_string(i) + "," +
                       std::to_string(deg - i) + "): lhs=" + ca.str() + ", rhs=" + cb.str();
            }
        }
    }
    if (a.cap() != b.cap()) {
        return "term lists agree up to shared cap, but caps differ (" +
               std::to_string(a.cap()) + " vs " + std::to_string(b.cap()) + ")";
    }
    return "";
}

}  // namespace hodgemod
