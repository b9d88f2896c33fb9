#pragma once

#include <string>
#include <vector>

#include "hodgemod/bigint.hpp"
#include "hodgemod/unipoly.hpp"

namespace hodgemod {

/// Bivariate power series in x, y over the integers, truncated at a
/// total-degree cap: only terms with i + j <= cap are represented, and a
/// term that is absent below the cap is zero.
///
/// Canonical form: terms sorted in graded-lex order (total degree, then
/// x-exponent), no zero coefficients. Two series are equal iff they have
/// the same cap and the same term list. Values are immutable after
/// construction; all operations are pure functions.
class BiSeries {
public:
    struct Term {
        int i = 0;  // x exponent
        int j = 0;  // y exponent
        Int c;      // nonzero
        bool operator==(const Term&) const = default;
    };

    /// Zero series at the given cap.
    explicit BiSeries(int cap);

    static BiSeries zero(int cap) { return BiSeries(cap); }
    static BiSeries constant(Int v, int cap);
    static BiSeries one(int cap) { return constant(1, cap); }
    static BiSeries monomial(int i, int j, Int c, int cap);
    /// Expansion of 1/(1 - x^a y^b): sum of x^{ak} y^{bk} over k(a+b) <= cap.
    /// Requires a, b >= 0 and a + b >= 1.
    static BiSeries geom(int a, int b, int cap);
    /// Canonicalizes arbitrary terms: sorts, merges duplicates, drops zeros.
    /// Throws ContractError if any exponent is negative or exceeds the cap.
    static BiSeries from_terms(std::vector<Term> terms, int cap);

    int cap() const noexcept { return cap_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Stored coefficient or 0; beyond the cap the value is unknown, not
    /// zero, so i + j > cap throws ContractError.
    Int coefficient(int i, int j) const;
    /// True iff every stored term has total degree <= deg. Requires
    /// deg <= cap (above the cap nothing is known).
    bool is_polynomial_below(int deg) const;
    /// Largest stored total degree, -1 when zero.
    int total_degree() const;
    /// Drops every term of total degree > new_cap. Requires new_cap <= cap.
    BiSeries truncated(int new_cap) const;

    BiSeries pow(unsigned e) const;

    /// x = y = t substitution (Betti numbers from Hodge numbers).
    UniPoly specialize_diag() const;
    /// x = t, y = -1 substitution (the chi(t)-characteristic).
    UniPoly specialize_y_minus1() const;

    friend BiSeries add(const BiSeries& a, const BiSeries& b);
    friend BiSeries sub(const BiSeries& a, const BiSeries& b);
    /// Convolution product, terms of total degree > cap discarded.
    friend BiSeries mul(const BiSeries& a, const BiSeries& b);
    /// Exact quotient q with mul(den, q) == num up to the cap, recovered
    /// coefficient-by-coefficient in graded order. Requires den to have
    /// constant term +1 or -1, so every step is integer-exact.
    friend BiSeries div_exact(const BiSeries& num, const BiSeries& den);

    BiSeries operator+(const BiSeries& o) const { return add(*this, o); }
    BiSeries operator-(const BiSeries& o) const { return sub(*this, o); }
    BiSeries operator*(const BiSeries& o) const { return mul(*this, o); }

    bool operator==(const BiSeries&) const = default;

    /// "1 + x*y + 2*x^2*y" style rendering, for diagnostics.
    std::string str() const;

private:
    int cap_ = 0;
    std::vector<Term> terms_;

    static BiSeries from_dense(int cap, std::vector<Int> buf);
};

/// Human-readable location of the first differing coefficient, or "" when
/// equal (including cap agreement for stored positions).
std::string first_difference(const BiSeries& a, const BiSeries& b);

}  // namespace hodgemod
