#pragma once
// Interpolation on the root-of-unity lattice: derivatives expressed through
// replacements z_i -> omega^j, and the M-particle difference equation.

#include "hsjack/laurent.hpp"
#include "hsjack/rational.hpp"

#include <complex>
#include <vector>

namespace hsjack {

/// A lattice quantity computed along two independent paths.
struct DualValue {
    std::complex<double> onshell;
    std::complex<double> direct;
    double difference() const { return std::abs(onshell - direct); }
};

/// z_i d/dz_i f at z_m = omega^{sites[m]}, once via the replacement formula
/// and once by differentiating. `var` is 1-based. With `strict` set, a degree
/// in z_var outside [0, N) raises InvalidInput.
DualValue onshell_derivative(const LaurentPoly& f, int var, const std::vector<int>& sites, int N,
                             bool strict = true);
DualValue onshell_second_derivative(const LaurentPoly& f, int var, const std::vector<int>& sites, int N,
                                    bool strict = true);

/// Max-norm residual of the M-particle difference equation over all
/// increasing site tuples, relative to max(|ev psi|_inf, 1).
double difference_equation_residual(const LaurentPoly& psi, const Rational& E, int N);

/// Energy read off the difference equation by projecting onto ev psi.
double difference_equation_energy(const LaurentPoly& psi, int N);

struct CsReport {
    bool eigenfunction = false;  ///< exact polynomial eigenfunction of the M-body operator
    Rational energy;             ///< minus its eigenvalue
    double lattice_residual = 0;
    double difference_energy = 0;
    double difference_residual = 0;
    double energy_gap() const;  ///< |energy - difference_energy|
};

/// Applies 1/2 sum (z d)^2 - 2 sum_{m<m'} z_m z_m'/(z_m - z_m')^2 - (N/2) sum z d
/// to psi (M variables) and compares with the difference-equation route.
CsReport cs_connection_check(const LaurentPoly& psi, int N);

/// |sum_{j=1}^{N-1} V(j) - (N^2-1)/12|.
double sum_rule_residual(int N);

}  // namespace hsjack
