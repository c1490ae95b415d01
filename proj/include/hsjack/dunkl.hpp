#ifndef HSJACK_DUNKL_HPP
#define HSJACK_DUNKL_HPP

#include "hsjack/combinatorics.hpp"
#include "hsjack/laurent.hpp"

#include <utility>

namespace hsjack {

struct DunklConfig {
    int N = 1;
    Rational alpha = 1;  // alpha = 1/beta

    DunklConfig() = default;
    DunklConfig(int n, const Rational& a);

    Rational beta() const { return 1 / alpha; }
};

/// (z_i^A z_j^B - z_i^B z_j^A)/(z_i - z_j) for the monomial z^e, i.e. the
/// divided difference (1 - s_ij) z^e / (z_i - z_j); 1-based i != j.
LaurentPoly monomial_divided_difference(const Exponent& e, int i, int j);

/// (1 - s_ij) f / (z_i - z_j), term by term.
LaurentPoly divided_difference(const LaurentPoly& f, int i, int j);

/// Gauge-transformed Dunkl operator d_j (1-based).
LaurentPoly apply_dunkl(int j, const LaurentPoly& f, const DunklConfig& cfg);

/// Monic nonsymmetric Jack polynomial E_lambda. Negative parts are allowed
/// and handled through E_{lambda+l} = (z_1...z_N)^l E_lambda.
/// Throws SingularSystem when the triangular system degenerates.
LaurentPoly nonsym_jack(const Composition& lambda, const DunklConfig& cfg);

/// Empties the process-wide E_lambda memo table.
void clear_jack_cache();
std::size_t jack_cache_size();

/// Coefficients (a_i, b_i) in s_{i,i+1} E_lambda = a_i E_lambda + b_i E_{s_i lambda}.
std::pair<Rational, Rational> exchange_action(int i, const Composition& lambda, const DunklConfig& cfg);

/// Monic symmetric Jack polynomial P_lambda from symmetrising E_lambda.
LaurentPoly sym_jack(const Partition& lambda, const DunklConfig& cfg);

/// Monic antisymmetric Jack polynomial with leading monomial z^k, from
/// antisymmetrising E_k. Throws InvalidInput if k is not strictly decreasing.
LaurentPoly antisym_jack(const Composition& k, const DunklConfig& cfg);

/// The scale factor c with antisymmetrize(E_k) = c * antisym_jack(k), and the
/// analogous factor for symmetrisation (the by-product normalisations).
Rational antisym_normalisation(const Composition& k, const DunklConfig& cfg);
Rational sym_normalisation(const Partition& lambda, const DunklConfig& cfg);

/// Restricted effective Calogero-Sutherland operator H'_+ (sign = +1, on
/// symmetric input) or H'_- (sign = -1, on antisymmetric input), beta = 1/alpha.
/// Throws InvalidInput if f is in the wrong symmetry sector.
LaurentPoly scalar_eff_hamiltonian(const LaurentPoly& f, const DunklConfig& cfg, int sign);

/// E'(lambda) = (beta^2/2)(sum_i delta_i(lambda)^2 - E^0).
Rational scalar_energy(const Composition& lambda, const DunklConfig& cfg);

/// E^0 = N(N^2-1)/12.
Rational ground_constant(int N);

/// True if s_ij f = sign * f for all i < j.
bool has_symmetry(const LaurentPoly& f, int sign);

}  // namespace hsjack

#endif
