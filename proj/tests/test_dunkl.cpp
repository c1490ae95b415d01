#include <doctest.h>

#include "oracles.hpp"

#include "hsjack/dunkl.hpp"
#include "hsjack/symfun.hpp"

#include <random>

using namespace hsjack;

namespace {

LaurentPoly z(int n, int j) { return LaurentPoly::variable(n, j); }

const std::vector<Rational> kAlphas{make_rational(1, 2), Rational(1), Rational(2), make_rational(3, 7)};

}  // namespace

TEST_CASE("Dunkl operators on small inputs")
{
    const Rational a = make_rational(5, 3);
    const DunklConfig cfg(2, a);
    CHECK(apply_dunkl(1, LaurentPoly::constant(2, 1), cfg) == LaurentPoly::constant(2, make_rational(1, 2)));
    CHECK(apply_dunkl(1, z(2, 2), cfg) == z(2, 2) * make_rational(-1, 2));
    CHECK(apply_dunkl(1, z(2, 1), cfg) == z(2, 1) * (a + make_rational(1, 2)) + z(2, 2));
    CHECK_THROWS_AS(DunklConfig(0, 1), InvalidInput);
    CHECK_THROWS_AS(DunklConfig(2, 0), InvalidInput);
}

TEST_CASE("divided differences match explicit division")
{
    std::mt19937_64 g(3);
    for (int t = 0; t < 30; ++t) {
        Exponent e{int(g() % 5) - 1, int(g() % 5), int(g() % 4)};
        const LaurentPoly m = LaurentPoly::monomial(e);
        const LaurentPoly num = m - m.swapped(1, 3);
        if (num.is_zero()) {
            CHECK(monomial_divided_difference(e, 1, 3).is_zero());
            continue;
        }
        const LaurentPoly dd = monomial_divided_difference(e, 1, 3);
        CHECK(dd * (z(3, 1) - z(3, 3)) == num);
    }
}

TEST_CASE("Dunkl operators commute")
{
    std::mt19937_64 g(11);
    for (const Rational& a : kAlphas) {
        const DunklConfig cfg(3, a);
        for (int t = 0; t < 4; ++t) {
            LaurentPoly f(3);
            for (int s = 0; s < 5; ++s)
                f.add_term({int(g() % 4), int(g() % 4), int(g() % 4)}, make_rational(long(g() % 7) - 3, 1 + g() % 2));
            for (int i = 1; i <= 3; ++i)
                for (int j = i + 1; j <= 3; ++j)
                    CHECK(apply_dunkl(i, apply_dunkl(j, f, cfg), cfg) == apply_dunkl(j, apply_dunkl(i, f, cfg), cfg));
        }
    }
}

TEST_CASE("Hecke-type relation between Dunkl operators and transpositions")
{
    // s_i d_i = d_{i+1} s_i + 1
    std::mt19937_64 g(5);
    for (const Rational& a : kAlphas)
        for (int N = 2; N <= 4; ++N) {
            const DunklConfig cfg(N, a);
            LaurentPoly f(N);
            for (int s = 0; s < 6; ++s) {
                Exponent e(N);
                for (int& x : e) x = int(g() % 4);
                f.add_term(e, make_rational(long(g() % 7) - 3, 1 + g() % 2));
            }
            for (int i = 1; i < N; ++i)
                CHECK(apply_dunkl(i, f, cfg).swapped(i, i + 1) == apply_dunkl(i + 1, f.swapped(i, i + 1), cfg) + f);
        }
}

TEST_CASE("nonsymmetric Jacks: examples and eigenrelations")
{
    const Rational a = make_rational(2, 9);
    const DunklConfig cfg(2, a);
    CHECK(nonsym_jack({0, 0}, cfg) == LaurentPoly::constant(2, 1));
    CHECK(nonsym_jack({0, 1}, cfg) == z(2, 2));
    CHECK(nonsym_jack({1, 0}, cfg) == z(2, 1) + z(2, 2) * Rational(1 / (1 + a)));
    CHECK(nonsym_jack({1, 0}, DunklConfig(2, make_rational(1, 2))).to_string() == "z1 + (2/3) z2");
    // negative parts via the boost
    CHECK(nonsym_jack({0, -1}, cfg) == nonsym_jack({1, 0}, cfg).shifted({-1, -1}));
    CHECK_THROWS_AS(nonsym_jack({1, 0}, DunklConfig(2, -1)), InvalidInput);
    for (const Rational& al : kAlphas)
        for (int N = 1; N <= 3; ++N) {
            const DunklConfig c(N, al);
            for (int w = 0; w <= 4; ++w)
                for (const auto& lam : compositions(w, N)) {
                    const LaurentPoly E = nonsym_jack(lam, c);
                    CHECK(E.coeff(lam) == 1);
                    CHECK(total_momentum(E) == E * Rational(w));
                    for (int i = 1; i <= N; ++i) CHECK(apply_dunkl(i, E, c) == E * dunkl_eigenvalue(lam, i, al));
                    // every other monomial lies strictly below lam
                    for (const auto& [e, q] : E.terms())
                        if (e != lam) CHECK(dominance_compare(e, lam) == Order::Less);
                }
        }
    CHECK(jack_cache_size() > 0);
    clear_jack_cache();
    CHECK(jack_cache_size() == 0);
}

TEST_CASE("exchange coefficients")
{
    const Rational a = make_rational(3, 7);
    const DunklConfig cfg(2, a);
    CHECK(exchange_action(1, {1, 0}, cfg).first == 1 / (a + 1));
    CHECK(exchange_action(1, {1, 1}, cfg).second == 0);
    CHECK(exchange_action(1, {0, 1}, cfg).second == 1);
}

TEST_CASE("symmetric Jacks")
{
    const Rational a = make_rational(4, 5);
    CHECK(sym_jack({1}, DunklConfig(3, a)) == elementary(1, 3));
    CHECK(sym_jack({2}, DunklConfig(2, a)) == monomial_sym({2}, 2) + monomial_sym({1, 1}, 2) * Rational(2 / (a + 1)));
    CHECK(sym_jack({2}, DunklConfig(2, 1)) == schur({2}, 2));
    for (int N = 1; N <= 3; ++N)
        for (int w = 0; w <= 4; ++w)
            for (const auto& lam : partitions(w, N)) {
                // alpha -> infinity limit is not reachable; alpha = 1 is Schur and
                // symmetric Jacks are eigenfunctions of H'_+
                const DunklConfig c(N, a);
                const LaurentPoly P = sym_jack(lam, c);
                CHECK(has_symmetry(P, +1));
                CHECK(scalar_eff_hamiltonian(P, c, +1) == P * scalar_energy(lam, c));
                CHECK(sym_normalisation(lam, c) != 0);
            }
}

TEST_CASE("antisymmetric Jacks")
{
    const Rational a = make_rational(3, 7);
    const DunklConfig cfg(2, a);
    CHECK(antisym_jack({1, 0}, cfg) == z(2, 1) - z(2, 2));
    CHECK(antisym_jack({2, 0}, cfg) == (z(2, 1) - z(2, 2)) * (z(2, 1) + z(2, 2)));
    CHECK_THROWS_AS(antisym_jack({1, 1}, cfg), InvalidInput);
    CHECK(antisym_normalisation({1, 0}, cfg) == a / (1 + a));
    for (const Rational& al : kAlphas)
        for (int N = 2; N <= 3; ++N) {
            const DunklConfig c(N, al);
            for (int w = 0; w <= 4; ++w)
                for (const auto& lam : partitions(w, N)) {
                    Composition k(lam);
                    for (int i = 0; i < N; ++i) k[i] += N - 1 - i;
                    const LaurentPoly A = antisym_jack(k, c);
                    CHECK(has_symmetry(A, -1));
                    CHECK(scalar_eff_hamiltonian(A, c, -1) == A * scalar_energy(k, c));
                    CHECK(divide_exact(A, vandermonde(N)) == sym_jack(lam, DunklConfig(N, al / (1 + al))));
                }
        }
}

TEST_CASE("effective Hamiltonians")
{
    const Rational a = make_rational(2, 3);
    const DunklConfig cfg(2, a);
    const Rational b = cfg.beta();
    CHECK(scalar_eff_hamiltonian(LaurentPoly::constant(2, 1), cfg, +1).is_zero());
    const LaurentPoly P2 = sym_jack({2, 0}, cfg);
    CHECK(scalar_eff_hamiltonian(P2, cfg, +1) == P2 * Rational(2 + b));
    const LaurentPoly D = vandermonde(2);
    CHECK(scalar_eff_hamiltonian(D, cfg, -1) == D * scalar_energy({1, 0}, cfg));
    CHECK_THROWS_AS(scalar_eff_hamiltonian(z(2, 1), cfg, +1), InvalidInput);
    CHECK_THROWS_AS(scalar_eff_hamiltonian(elementary(1, 2), cfg, -1), InvalidInput);
    CHECK(ground_constant(4) == 5);
}

TEST_CASE("stability under adding a variable")
{
    for (const Rational& a : kAlphas)
        for (int N = 1; N <= 3; ++N)
            for (int w = 0; w <= 4; ++w)
                for (const auto& lam : compositions(w, N)) {
                    Composition ext(lam);
                    ext.push_back(0);
                    CHECK(oracle::restrict_last_to_zero(nonsym_jack(ext, DunklConfig(N + 1, a))) ==
                          nonsym_jack(lam, DunklConfig(N, a)));
                }
}
