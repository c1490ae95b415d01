#ifndef HSJACK_SYMFUN_HPP
#define HSJACK_SYMFUN_HPP

#include "hsjack/combinatorics.hpp"
#include "hsjack/laurent.hpp"

#include <vector>

namespace hsjack {

// The `vars` arguments below are 1-based variable indices into a ring with N
// variables; an empty list means all N variables.

std::vector<int> all_vars(int N);

/// prod_{a<b} (z_{vars[a]} - z_{vars[b]}); the constant 1 for fewer than two variables.
LaurentPoly vandermonde(int N, const std::vector<int>& vars = {});

/// sum_sigma sgn(sigma) prod_a z_{vars[a]}^{k[sigma(a)]}.
LaurentPoly alternant(const std::vector<int>& k, int N, const std::vector<int>& vars = {});

/// Bialternant quotient a_{lambda+delta} / Delta.
LaurentPoly schur(const Partition& lambda, int N, const std::vector<int>& vars = {});

LaurentPoly elementary(int n, int N, const std::vector<int>& vars = {});
LaurentPoly powersum(int n, int N, const std::vector<int>& vars = {});
LaurentPoly complete(int n, int N, const std::vector<int>& vars = {});

/// Sum over the distinct rearrangements of lambda (padded with zeros).
LaurentPoly monomial_sym(const Partition& lambda, int N, const std::vector<int>& vars = {});

/// sum over sigma in S_{b1} x S_{b2} x ... (consecutive blocks) of
/// (sign)^{l(sigma)} s_sigma f. Empty `blocks` means the full group S_N.
LaurentPoly symmetrize(const LaurentPoly& f, int sign, const std::vector<int>& blocks = {});

/// Sign of the permutation sorting `v` into decreasing order (0 on repeats).
int sort_sign(const std::vector<int>& v);

/// Calls fn(perm, sign) for every permutation of {0..n-1}.
template <class Fn>
void for_each_permutation(int n, Fn&& fn);

}  // namespace hsjack

#include <algorithm>

namespace hsjack {

template <class Fn>
void for_each_permutation(int n, Fn&& fn)
{
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    // Heap's algorithm: every step is a single transposition, so the sign alternates.
    std::vector<int> c(n, 0);
    int sign = 1;
    fn(static_cast<const std::vector<int>&>(p), sign);
    int i = 0;
    while (i < n) {
        if (c[i] < i) {
            if (i % 2 == 0)
                std::swap(p[0], p[i]);
            else
                std::swap(p[c[i]], p[i]);
            sign = -sign;
            fn(static_cast<const std::vector<int>&>(p), sign);
            ++c[i];
            i = 0;
        } else {
            c[i] = 0;
            ++i;
        }
    }
}

}  // namespace hsjack

#endif
