#ifndef HSJACK_SPINCHAIN_HPP
#define HSJACK_SPINCHAIN_HPP

#include "hsjack/rational.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace hsjack {

/// V(n) = 1/(4 sin^2(pi n / N)) for n = 1..N-1 (index 0 unused).
class CouplingTable {
public:
    explicit CouplingTable(int N);
    int N() const { return n_; }
    /// V of the site distance i - j, any sign, i != j mod N.
    double operator()(int d) const;
    const std::vector<double>& values() const { return v_; }

private:
    int n_;
    std::vector<double> v_;
};

/// Dense state vector over colour words of length N in r colours. The word
/// (a_1, ..., a_N) has index sum_i a_i r^(N-i): site 1 is the most
/// significant digit. For rank 2 colour 0 is spin up, colour 1 spin down.
struct SpinVector {
    int N = 0;
    int r = 2;
    Eigen::VectorXcd entries;

    SpinVector() = default;
    SpinVector(int n, int rank);

    std::size_t dim() const { return static_cast<std::size_t>(entries.size()); }
    double norm() const { return entries.norm(); }
};

std::size_t basis_size(int N, int r);
std::vector<int> word_of(std::size_t index, int N, int r);
std::size_t index_of(const std::vector<int>& word, int r);

/// All-up state |0...0>.
SpinVector ferromagnet(int N, int r = 2);
SpinVector random_vector(int N, int r, std::uint64_t seed);

/// sum_{i<j} V(i-j)(1 - P_ij) v for sign = +1 and sum V (1 + P_ij) v for
/// sign = -1, applied without forming a matrix.
SpinVector hs_apply(const SpinVector& v, int sign, const CouplingTable& V);
SpinVector hs_apply(const SpinVector& v, int sign);

/// Translation |a_1 a_2 ... a_N> -> |a_2 ... a_N a_1>, i.e. P_{N-1,N} ... P_12.
SpinVector translation(const SpinVector& v);

/// q with T v = omega^q v, omega = exp(2 pi i / N). Throws InvalidInput if v is
/// not a translation eigenvector within tol (relative).
int momentum_of(const SpinVector& v, double tol = 1e-8);

struct Level {
    double value;
    int multiplicity;
};

struct SectorLevel {
    std::vector<int> weight;  // number of sites of each colour
    double value;
    int multiplicity;
};

/// Dense diagonalisation of hs_apply per weight sector. Eigenvalues within
/// `cluster_tol` of their neighbour are merged. Throws InvalidInput if
/// r^N exceeds `limit`.
std::vector<Level> exact_spectrum(int N, int r, int sign, double cluster_tol = 1e-8, std::size_t limit = 4096);
std::vector<SectorLevel> exact_spectrum_by_sector(int N, int r, int sign, double cluster_tol = 1e-8,
                                                  std::size_t limit = 4096);

enum class Generator { Splus, Sminus, Sz, Qplus, Qminus, Qz };

Generator parse_generator(const std::string& name);
const char* to_string(Generator g);

/// Global spin and frozen affine Yangian generators (rank 2 only).
SpinVector yangian_apply(Generator which, const SpinVector& v);

}  // namespace hsjack

#endif
