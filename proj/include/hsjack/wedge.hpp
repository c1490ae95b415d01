#ifndef HSJACK_WEDGE_HPP
#define HSJACK_WEDGE_HPP

#include "hsjack/combinatorics.hpp"
#include "hsjack/laurent.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hsjack {

/// floor(k / r) and k mod r in [0, r), also for negative k.
int kbar_of(int k, int r);
int colour_of(int k, int r);

/// u_{k_1} ^ ... ^ u_{k_N} with k strictly decreasing. For rank 2 colour 0
/// is spin up and colour 1 spin down.
struct Wedge {
    std::vector<int> k;
    int r = 2;

    int size() const { return static_cast<int>(k.size()); }
    Composition kbar() const;
    std::vector<int> colours() const;
    bool operator==(const Wedge& o) const = default;
};

/// Sorts decreasingly; the sign is the parity of the sorting permutation and
/// is 0 when an entry repeats (the wedge vanishes).
std::pair<int, Wedge> normalize(const std::vector<int>& k, int r);

class WedgeVector {
public:
    using TermMap = std::map<std::vector<int>, Rational, LexDesc>;

    WedgeVector() = default;
    WedgeVector(int n, int r) : n_(n), r_(r) {}
    static WedgeVector single(const Wedge& w, const Rational& c = Rational(1));

    int num_particles() const { return n_; }
    int rank() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const std::vector<int>& k) const;

    /// Adds c * normalize(k); unsorted or repeating k is handled here.
    void add(const std::vector<int>& k, const Rational& c);

    WedgeVector& operator+=(const WedgeVector& o);
    WedgeVector& operator-=(const WedgeVector& o);
    WedgeVector& operator*=(const Rational& c);
    friend WedgeVector operator+(WedgeVector a, const WedgeVector& b) { return a += b; }
    friend WedgeVector operator-(WedgeVector a, const WedgeVector& b) { return a -= b; }
    friend WedgeVector operator*(WedgeVector a, const Rational& c) { return a *= c; }
    bool operator==(const WedgeVector& o) const { return n_ == o.n_ && r_ == o.r_ && terms_ == o.terms_; }

    std::string to_string() const;

private:
    int n_ = 0;
    int r_ = 2;
    TermMap terms_;
};

/// Per colour a = 0..r-1, the strictly decreasing kbar values of that colour.
std::vector<std::vector<int>> split_colours(const Wedge& w);

/// h_ij w for 1-based i < j.
WedgeVector squeeze(int i, int j, const Wedge& w);

/// E'(kbar) = 1/2 sum kbar_i^2 + (beta/2) sum (N - 2i + 1) kbar_i on the
/// weakly decreasing kbar; also valid at beta = 0.
Rational wedge_energy(const Composition& kbar, const Rational& beta);

/// Prefactor c(r) of the squeezing part, H w = E'(kbar) w + c beta sum h_ij w.
Rational offdiag_prefactor(int r);

WedgeVector apply_spin_eff_hamiltonian(const WedgeVector& v, const Rational& beta);

/// The eigenvector w + lower wedges, by closure under squeezing and a
/// triangular solve. Throws SingularSystem on an eigenvalue collision.
WedgeVector uglov_eigenvector(const Wedge& w, const Rational& beta, std::size_t cap = 200000);

/// Spin components: colour word (site 1 first) -> Laurent polynomial.
using SpinTable = std::map<std::vector<int>, LaurentPoly>;

SpinTable wedge_to_coordinate(const WedgeVector& v);

/// Direct coordinate-space action of the fermionic spin effective Hamiltonian
/// (1/2 sum (z d)^2 + beta/2 sum (z_i+z_j)/(z_i-z_j) D_ij
///  + beta sum z_i z_j/(z_ij z_ji) (1 + P_ij)). Throws std::domain_error if a
/// pair quotient is not exact (input outside the fermionic space).
SpinTable spin_eff_hamiltonian_coordinate(const SpinTable& F, int N, const Rational& beta);

/// Drops zero entries so tables compare structurally.
SpinTable prune(const SpinTable& t);
SpinTable scaled(const SpinTable& t, const Rational& c);
SpinTable add_tables(const SpinTable& a, const SpinTable& b);

}  // namespace hsjack

#endif
