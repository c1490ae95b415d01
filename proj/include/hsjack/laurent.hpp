#ifndef HSJACK_LAURENT_HPP
#define HSJACK_LAURENT_HPP

#include "hsjack/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hsjack {

using Exponent = std::vector<int>;

// Lexicographically decreasing, so iteration starts at the leading term.
struct LexDesc {
    bool operator()(const Exponent& a, const Exponent& b) const { return b < a; }
};

/// Sparse Laurent polynomial in N variables z_1..z_N with exact rational
/// coefficients. Zero coefficients are never stored.
class LaurentPoly {
public:
    using TermMap = std::map<Exponent, Rational, LexDesc>;

    explicit LaurentPoly(int num_vars = 0) : n_(num_vars) {}

    static LaurentPoly constant(int num_vars, const Rational& c);
    static LaurentPoly variable(int num_vars, int j);  // z_j, 1-based
    static LaurentPoly monomial(const Exponent& e, const Rational& c = Rational(1));

    int num_vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);
    void set_term(const Exponent& e, const Rational& c);

    /// Leading term under lex order; throws on the zero polynomial.
    const TermMap::value_type& leading() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    LaurentPoly& operator/=(const Rational& c);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    bool operator==(const LaurentPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(unsigned k) const;

    /// Multiplies by z^e.
    LaurentPoly shifted(const Exponent& e) const;

    /// (s_sigma f)(z) = f(z_sigma(1), ..., z_sigma(N)), sigma given 0-based.
    LaurentPoly permuted(const std::vector<int>& sigma) const;

    /// Swap of z_i and z_j (1-based).
    LaurentPoly swapped(int i, int j) const;

    /// Re-embeds into a ring with `new_vars` variables: old variable k becomes
    /// variable target[k] (1-based).
    LaurentPoly embedded(int new_vars, const std::vector<int>& target) const;

    /// Per-variable minimum and maximum exponents (zeros for the zero polynomial).
    Exponent min_exponents() const;
    Exponent max_exponents() const;
    bool is_homogeneous() const;
    long total_degree() const;  // max over terms of the exponent sum

    /// Human-readable form, e.g. "z1 + (2/3) z2".
    std::string to_string() const;

private:
    int n_;
    TermMap terms_;
};

/// z_j d/dz_j (1-based j).
LaurentPoly euler(const LaurentPoly& f, int j);

/// sum_j z_j d/dz_j.
LaurentPoly total_momentum(const LaurentPoly& f);

/// Exact division by (z_i - z_j). Throws std::domain_error if not exact.
LaurentPoly divide_by_difference(const LaurentPoly& f, int i, int j);

/// Exact quotient f/g in the Laurent ring by lex reduction. Throws
/// std::domain_error carrying a remainder witness if g does not divide f.
LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace hsjack

#endif
