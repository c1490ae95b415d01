#ifndef HSJACK_COMBINATORICS_HPP
#define HSJACK_COMBINATORICS_HPP

#include "hsjack/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hsjack {

// Integer tuples. A Partition is a Composition whose parts weakly decrease.
using Composition = std::vector<int>;
using Partition = std::vector<int>;

enum class Order { Less, Greater, Equal, Incomparable };

const char* to_string(Order o);

/// Refined dominance order: compare the sorted parts by partial sums first,
/// and only when those coincide compare the compositions themselves.
Order dominance_compare(const Composition& a, const Composition& b);

/// sigma^lambda(i) for 1-based i: the position of lambda_i when the parts are
/// sorted decreasingly with ties broken left to right.
int sigma_rank(const Composition& lambda, int i);

/// delta_i(lambda) = alpha*lambda_i + (N - 2 sigma + 1)/2.
Rational dunkl_eigenvalue(const Composition& lambda, int i, const Rational& alpha);

Partition sorted_decreasing(const Composition& c);
Composition reversed(const Composition& c);
Partition conjugate(const Partition& p);
Partition staircase(int n);
Composition boost(const Composition& c, int l);
long weight(const Composition& c);
bool is_partition(const Composition& c);
bool is_strict_partition(const Composition& c);
Partition strip_zeros(const Partition& p);

/// All compositions of `total` into n nonnegative parts, lexicographically decreasing.
std::vector<Composition> compositions(int total, int n);

/// Partitions of `total` with at most `max_len` parts and parts at most
/// `max_part` (negative bound means unbounded), padded with zeros to max_len.
std::vector<Partition> partitions(int total, int max_len, int max_part = -1);

/// E^0 = N(N^2-1)/12.
Rational ground_energy(int N);

struct Motif {
    std::vector<int> entries;  // strictly increasing
    int N = 0;
    int r = 2;

    int size() const { return static_cast<int>(entries.size()); }
    bool operator==(const Motif& o) const = default;
};

std::string to_string(const Motif& m);

/// Checks 0 < mu < N, strict increase and the rank-r gap rule.
bool is_valid_motif(const std::vector<int>& entries, int N, int r);

/// Validates and wraps; throws InvalidInput on violation.
Motif make_motif(const std::vector<int>& entries, int N, int r = 2);

/// Subsets of {1..N-1} with no r consecutive integers, lexicographic order.
std::vector<Motif> enumerate_motifs(int N, int r);

/// Rank-2 multiplicity of the eigenspace labelled by mu.
std::uint64_t degeneracy(const Motif& mu);

/// E^HS(mu) = 1/2 sum mu_m (N - mu_m).
Rational hs_motif_energy(const Motif& mu);

/// E^0 - E^HS(mu), the antiferromagnetic normalisation.
Rational hs_motif_energy_minus(const Motif& mu);

/// |mu| mod N.
int motif_momentum(const Motif& mu);

/// Conversion from weakly decreasing coordinate momenta to a motif. The
/// colour-0 block is taken tightly packed; kbar is first boosted to min 0.
Motif motif_from_kbar(const Composition& kbar, int N, int r);

/// kbar_j = N - j - #{m : mu_m <= N - j}.
Composition kbar_from_motif(const Motif& mu);

}  // namespace hsjack

#endif
