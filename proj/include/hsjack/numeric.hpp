#ifndef HSJACK_NUMERIC_HPP
#define HSJACK_NUMERIC_HPP

#include "hsjack/combinatorics.hpp"
#include "hsjack/laurent.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <vector>

namespace hsjack {

using Cplx = std::complex<double>;
using MpReal = boost::multiprecision::mpfr_float;
using MpCplx = std::complex<MpReal>;

/// Sets the mantissa size (bits) used by MpReal values created afterwards.
void set_working_precision(unsigned bits);
unsigned working_precision();

template <class R>
R real_from_rational(const Rational& q);

template <>
inline double real_from_rational<double>(const Rational& q)
{
    return q.get_d();
}

template <>
inline MpReal real_from_rational<MpReal>(const Rational& q)
{
    MpReal x;
    mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return x;
}

template <class R>
R pi_value()
{
    return boost::math::constants::pi<R>();
}

/// Table w[k] = omega^k for k = 0..N-1, omega = exp(2 pi i / N).
template <class R>
std::vector<std::complex<R>> root_table(int N)
{
    std::vector<std::complex<R>> w(N);
    const R two_pi = 2 * pi_value<R>();
    for (int k = 0; k < N; ++k) {
        const R t = two_pi * k / N;
        using std::cos;
        using std::sin;
        w[k] = std::complex<R>(cos(t), sin(t));
    }
    return w;
}

/// Evaluates f at z_m = omega^{sites[m]} (sites 1-based or any integers).
/// Exponents are reduced mod N, so the result is a table lookup per term.
template <class R>
std::complex<R> eval_at_sites(const LaurentPoly& f, int N, const std::vector<int>& sites,
                              const std::vector<std::complex<R>>& table)
{
    std::complex<R> acc(0);
    const int n = f.num_vars();
    for (const auto& [e, c] : f.terms()) {
        long s = 0;
        for (int m = 0; m < n; ++m) s += static_cast<long>(e[m]) * sites[m];
        s %= N;
        if (s < 0) s += N;
        acc += table[s] * real_from_rational<R>(c);
    }
    return acc;
}

/// ev_omega: z_j -> omega^j for j = 1..num_vars.
template <class R = double>
std::complex<R> eval_roots(const LaurentPoly& f, int N)
{
    std::vector<int> sites(f.num_vars());
    for (int j = 0; j < f.num_vars(); ++j) sites[j] = j + 1;
    return eval_at_sites<R>(f, N, sites, root_table<R>(N));
}

/// Evaluation at arbitrary complex points (one per variable).
template <class R>
std::complex<R> eval_points(const LaurentPoly& f, const std::vector<std::complex<R>>& pts)
{
    const int n = f.num_vars();
    const Exponent lo = f.min_exponents(), hi = f.max_exponents();
    std::vector<std::vector<std::complex<R>>> pw(n);
    std::vector<std::complex<R>> inv(n);
    for (int k = 0; k < n; ++k) {
        inv[k] = std::complex<R>(1) / pts[k];
        pw[k].resize(hi[k] - lo[k] + 1);
        std::complex<R> base(1);
        const int steps = lo[k] < 0 ? -lo[k] : lo[k];
        for (int t = 0; t < steps; ++t) base *= (lo[k] < 0 ? inv[k] : pts[k]);
        for (std::size_t t = 0; t < pw[k].size(); ++t) {
            pw[k][t] = base;
            base *= pts[k];
        }
    }
    std::complex<R> acc(0);
    for (const auto& [e, c] : f.terms()) {
        std::complex<R> term(real_from_rational<R>(c));
        for (int k = 0; k < n; ++k) term *= pw[k][e[k] - lo[k]];
        acc += term;
    }
    return acc;
}

/// Schur function value at the given points via the Jacobi-Trudi determinant
/// with complete homogeneous functions obtained from Newton's identities.
template <class R>
std::complex<R> schur_numeric(const Partition& lambda, const std::vector<std::complex<R>>& pts)
{
    using C = std::complex<R>;
    const Partition lam = strip_zeros(lambda);
    const int l = static_cast<int>(lam.size());
    if (l == 0) return C(1);
    if (l > static_cast<int>(pts.size())) return C(0);
    const int top = lam.front() + l;
    std::vector<C> p(top + 1, C(0)), h(top + 1, C(0));
    for (int n = 1; n <= top; ++n) {
        for (const C& x : pts) {
            C xn(1);
            for (int t = 0; t < n; ++t) xn *= x;
            p[n] += xn;
        }
    }
    h[0] = C(1);
    for (int n = 1; n <= top; ++n) {
        C s(0);
        for (int k = 1; k <= n; ++k) s += p[k] * h[n - k];
        h[n] = s / R(n);
    }
    std::vector<std::vector<C>> a(l, std::vector<C>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            const int idx = lam[i] - i + j;
            a[i][j] = (idx < 0 || idx > top) ? C(0) : h[idx];
        }
    // Gaussian elimination with partial pivoting.
    C det(1);
    for (int c = 0; c < l; ++c) {
        int piv = c;
        for (int r = c + 1; r < l; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (std::abs(a[piv][c]) == R(0)) return C(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < l; ++r) {
            const C f = a[r][c] / a[c][c];
            for (int k = c; k < l; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

}  // namespace hsjack

#endif
