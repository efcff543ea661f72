// Laurent polynomials over Q (the ring Lambda = Z[t,t^-1] with rational
// coefficients), their involution t -> t^-1 and augmentation t -> 1, and
// dense matrices over them with the two-block negative-inverse formula.
#pragma once

#include "beadcalc/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace beadcalc {

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c);
    explicit LaurentPoly(long c);

    /// c * t^k
    static LaurentPoly term(const Rational& c, long k);
    /// t^k
    static LaurentPoly t(long k = 1);
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }

    /// Text syntax: signed integer/rational coefficients with t^k monomials,
    /// e.g. "2*t^-1 + 1 - 1/2*t^3". Whitespace-insensitive.
    static LaurentPoly parse(const std::string& text);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    /// Exactly one term.
    bool is_monomial() const { return terms_.size() == 1; }
    /// Monomial with coefficient 1, i.e. a pure power t^k.
    bool is_unit_monomial() const;
    bool is_integral() const;

    Rational coeff(long k) const;
    /// Exponent of the unique term; requires is_monomial().
    long monomial_exponent() const;
    Rational monomial_coeff() const;

    const std::map<long, Rational>& terms() const { return terms_; }

    /// t -> t^-1, termwise.
    LaurentPoly involute() const;
    /// Sum of coefficients (evaluation at t = 1).
    Rational augment() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    /// Canonical text form; parse(str()) == *this.
    std::string str() const;

private:
    void set(long k, const Rational& c);
    // exponent -> coefficient, no zero coefficients stored
    std::map<long, Rational> terms_;
};

class LaurentMatrix {
public:
    LaurentMatrix(int rows, int cols);
    static LaurentMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    LaurentPoly& at(int i, int j);
    const LaurentPoly& at(int i, int j) const;

    LaurentMatrix operator*(const LaurentMatrix& o) const;
    LaurentMatrix operator-() const;
    bool operator==(const LaurentMatrix& o) const;

    /// Entrywise involution of the transpose.
    LaurentMatrix involute_transpose() const;
    bool is_symmetric_under_involution() const;

private:
    int rows_, cols_;
    std::vector<LaurentPoly> a_;
};

/// Input must be the full square matrix in block form [[0, I], [I, B]] with B
/// square and symmetric under transpose-plus-involution; returns
/// [[B, -I], [-I, 0]], whose product with the input is exactly -Identity.
/// Throws Error on any other shape.
LaurentMatrix block_negative_inverse(const LaurentMatrix& m);

}  // namespace beadcalc
