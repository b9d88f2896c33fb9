#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgemod/bigint.hpp"

namespace hodgemod {

/// Univariate polynomial (or truncated power series) in t with integer
/// coefficients. A finite cap means "coefficients above the cap are
/// unknown"; no cap means the value is an exact polynomial.
///
/// Terms are kept sorted by exponent with zero coefficients removed, so
/// equality is structural.
class UniPoly {
public:
    struct Term {
        int e = 0;
        Int c;
        bool operator==(const Term&) const = default;
    };

    /// Exact zero polynomial.
    UniPoly() = default;

    static UniPoly zero(std::optional<int> cap = std::nullopt);
    static UniPoly constant(Int v, std::optional<int> cap = std::nullopt);
    static UniPoly one(std::optional<int> cap = std::nullopt);
    static UniPoly monomial(int e, Int c, std::optional<int> cap = std::nullopt);
    /// Expansion of 1/(1 - t^step) truncated at the cap.
    static UniPoly geom(int step, int cap);
    /// Exact polynomial from dense coefficients (index = exponent).
    static UniPoly from_coefficients(const std::vector<Int>& coeffs);
    /// Canonicalizes arbitrary terms: sorts, merges duplicates, drops zeros.
    static UniPoly from_terms(std::vector<Term> terms, std::optional<int> cap = std::nullopt);

    /// nullopt means exact.
    std::optional<int> cap() const noexcept { return cap_; }
    bool is_exact() const noexcept { return !cap_.has_value(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Stored coefficient or 0. For a truncated series an exponent above
    /// the cap is unknown, not zero: ContractError.
    Int coefficient(int e) const;
    /// Largest stored exponent, -1 when zero.
    int degree() const;
    /// Dense coefficient list c_0..c_n.
    std::vector<Int> coefficients_upto(int n) const;
    Int evaluate(const Int& t0) const;

    UniPoly truncated(int new_cap) const;
    /// Re-tags a truncated value as exact; caller must have established
    /// that the underlying quantity is a polynomial within the cap.
    UniPoly as_exact() const;

    UniPoly pow(unsigned e) const;

    friend UniPoly add(const UniPoly& a, const UniPoly& b);
    friend UniPoly sub(const UniPoly& a, const UniPoly& b);
    friend UniPoly mul(const UniPoly& a, const UniPoly& b);

    UniPoly operator+(const UniPoly& o) const { return add(*this, o); }
    UniPoly operator-(const UniPoly& o) const { return sub(*this, o); }
    UniPoly operator*(const UniPoly& o) const { return mul(*this, o); }

    bool operator==(const UniPoly&) const = default;

    /// "1 + t - 2*t^2" style rendering, for diagnostics and text output.
    std::string str() const;

private:
    std::optional<int> cap_;
    std::vector<Term> terms_;
};

/// Human-readable location of the first differing coefficient, or "" when
/// the term lists agree (caps are ignored; this is a diagnostics helper).
std::string first_difference(const UniPoly& a, const UniPoly& b);

}  // namespace hodgemod
