#ifndef HSJACK_FREEZING_HPP
#define HSJACK_FREEZING_HPP

#include "hsjack/combinatorics.hpp"
#include "hsjack/laurent.hpp"
#include "hsjack/spinchain.hpp"
#include "hsjack/wedge.hpp"

#include <string>
#include <vector>

namespace hsjack {

/// All increasing M-subsets of {1..N}, lexicographic.
std::vector<std::vector<int>> subsets(int N, int M);

/// Spin-down positions -> SpinVector index (rank 2).
std::size_t subset_index(const std::vector<int>& sites, int N);

/// nu_m = mu_{M-m+1} - 2(M-m) and its inverse.
Partition nu_from_motif(const Motif& mu);
Motif motif_from_nu(const Partition& nu, int N);

struct HSEigenvector {
    Motif motif;
    int N = 0;
    Partition nu;
    LaurentPoly wavefn;  // Delta(z_1..z_M)^2 P_nu at alpha = 1/2
    SpinVector vector;
    Rational energy_plus;
    Rational energy_minus;
    int momentum = 0;
};

/// Highest-weight eigenvector of the rank-2 chain labelled by mu. Components
/// are evaluated at `precision_bits` (53 = double) and stored in double.
HSEigenvector hs_eigenvector(const Motif& mu, unsigned precision_bits = 53);

struct EigenvectorReport {
    double hamiltonian = 0;   // |H+ v - E+ v| / |v|
    double s_plus = 0;        // |S+ v| / |v|
    double q_plus = 0;        // |Q+ v| / |v|
    double translation = 0;   // |T v - omega^q v| / |v| with q = |mu| mod N
    int momentum = -1;        // measured, -1 if not an eigenvector
    bool vanishes_at_zero = false;  // exact check on the wave function
    bool degree_below_N = false;
    double max_residual() const;
};

/// Throws std::runtime_error on a zero vector.
EigenvectorReport verify_eigenvector(const HSEigenvector& ev);

/// Evaluates a coordinate-space table at z_j = omega^j.
SpinVector evaluate_table(const SpinTable& t, int N, int r);

/// M-variable polynomial Delta^2 e_M s_{lambda_down} s_{lambda_up'} whose
/// evaluations give the frozen wedge up to one global constant (rank 2).
/// Throws InvalidInput for negative momenta, and when the spin-up partition
/// has a first part above M, where the conjugation under evaluation fails.
LaurentPoly frozen_wedge_polynomial(const Wedge& w);
SpinVector frozen_wedge(const Wedge& w);

/// Best constant c with a ~ c b and the relative residual |a - c b| / |a|.
std::pair<std::complex<double>, double> proportionality(const SpinVector& a, const SpinVector& b);

struct CheckResult {
    std::string name;
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
};

/// Numeric evaluation identities at the N-th roots of unity.
std::vector<CheckResult> evaluation_identity_suite(int N, std::uint64_t seed, int samples = 8);

/// ev Delta(z_1..z_N) as the closed form (-1)^{(N+2)(N-1)/4} N^{N/2}, with
/// the half-integer power of -1 read as exp(i pi x).
std::complex<double> ev_vandermonde_closed(int N);

struct ReducedReport {
    int N = 0, M = 0, r = 2;
    std::size_t instances = 0;
    Rational constant;      // the shift solved from the first instance
    bool consistent = false;
    std::string failure;    // first mismatch, if any
};

/// Rank 2: linearised wedge action on u_{k_down} ^ u_{2 delta_{N-M}} against
/// the scalar fermionic operator at N* = M, beta* = 1 minus (N-M-1)/2 times
/// the momentum, for every kbar_down with parts below N - M.
ReducedReport reduced_hamiltonian_check(int N, int M);

/// Rank r with a tightly packed colour-0 block of size M0; the reduced side
/// is the rank r-1 coordinate oracle at beta* = 1 on N - M0 particles.
ReducedReport reduced_hamiltonian_check_rank(int N, int r, int M0);

struct DescendantReport {
    Partition lambda_up_new;
    Partition lambda_down_new;
    int d_max = 0;
    int n = 0;
    bool formula_matches = false;  // piecewise rule agrees with kbar -> lambda
    bool claim_holds = false;      // n = 1: d_max = N, n > 1: d_max > N
};

/// Flip of the colour-0 entry kbar = N-M-j into the down block of a wedge
/// with kbar_down = lambda_down_old + delta_M. n must be the insertion
/// position. Throws InvalidInput for an invalid flip.
DescendantReport descendant_degree_probe(int N, int M, const Partition& lambda_down_old, int j, int n);

}  // namespace hsjack

#endif
