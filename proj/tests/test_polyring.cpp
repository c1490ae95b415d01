#include <doctest.h>

#include "oracles.hpp"

#include "hsjack/laurent.hpp"
#include "hsjack/numeric.hpp"
#include "hsjack/symfun.hpp"

#include <random>

using namespace hsjack;

namespace {

LaurentPoly z(int n, int j) { return LaurentPoly::variable(n, j); }

LaurentPoly random_poly(int n, int deg, std::mt19937_64& g)
{
    LaurentPoly f(n);
    for (int t = 0; t < 6; ++t) {
        Exponent e(n);
        for (int& x : e) x = static_cast<int>(g() % (deg + 1));
        f.add_term(e, make_rational(long(g() % 9) - 4, 1 + g() % 3));
    }
    return f;
}

}  // namespace

TEST_CASE("ring arithmetic")
{
    const LaurentPoly a = z(2, 1) + z(2, 2);
    const LaurentPoly b = z(2, 1) - z(2, 2);
    CHECK(a * b == z(2, 1).pow(2) - z(2, 2).pow(2));
    CHECK((a - a).is_zero());
    CHECK(a.to_string() == "z1 + z2");
    CHECK((z(2, 1) * make_rational(2, 3)).to_string() == "(2/3) z1");
    CHECK(LaurentPoly::monomial({-1, 2}).shifted({1, 1}) == LaurentPoly::monomial({0, 3}));
    CHECK(a.is_homogeneous());
    CHECK((a + LaurentPoly::constant(2, 1)).is_homogeneous() == false);
    std::mt19937_64 g(7);
    for (int t = 0; t < 20; ++t) {
        const LaurentPoly f = random_poly(3, 3, g), h = random_poly(3, 3, g), k = random_poly(3, 2, g);
        CHECK(f * (h + k) == f * h + f * k);
        CHECK((f * h) * k == f * (h * k));
        CHECK(f.swapped(1, 3).swapped(1, 3) == f);
    }
}

TEST_CASE("Euler operators")
{
    const LaurentPoly f = LaurentPoly::monomial({2, 1});
    CHECK(total_momentum(f) == f * Rational(3));
    CHECK(total_momentum(LaurentPoly::constant(3, 5)).is_zero());
    CHECK(euler(f, 1) == f * Rational(2));
}

TEST_CASE("exact division")
{
    CHECK(divide_exact(z(2, 1).pow(2) - z(2, 2).pow(2), z(2, 1) - z(2, 2)) == z(2, 1) + z(2, 2));
    const LaurentPoly f = z(3, 1) * z(3, 2) + z(3, 3);
    CHECK(divide_exact(f, LaurentPoly::constant(3, 1)) == f);
    CHECK_THROWS_AS(divide_exact(z(2, 1) + LaurentPoly::constant(2, 1), z(2, 1) - z(2, 2)), std::domain_error);
    CHECK(divide_by_difference(z(2, 1).pow(3) - z(2, 2).pow(3), 1, 2) ==
          z(2, 1).pow(2) + z(2, 1) * z(2, 2) + z(2, 2).pow(2));
}

TEST_CASE("symmetric function constructors")
{
    CHECK(vandermonde(2) == z(2, 1) - z(2, 2));
    CHECK(vandermonde(1) == LaurentPoly::constant(1, 1));
    CHECK(schur({1}, 2) == z(2, 1) + z(2, 2));
    CHECK(schur({2}, 2) == z(2, 1).pow(2) + z(2, 1) * z(2, 2) + z(2, 2).pow(2));
    CHECK(alternant({3, 2, 1, 0}, 4) == vandermonde(4));
    CHECK(alternant({1, 1}, 2).is_zero());
    CHECK(elementary(2, 2) == z(2, 1) * z(2, 2));
    CHECK(powersum(2, 2) == z(2, 1).pow(2) + z(2, 2).pow(2));
    CHECK(monomial_sym({2, 1}, 2) == z(2, 1).pow(2) * z(2, 2) + z(2, 1) * z(2, 2).pow(2));
    CHECK(symmetrize(z(2, 1), -1) == z(2, 1) - z(2, 2));
    CHECK(symmetrize(LaurentPoly::monomial({2, 2}), -1).is_zero());
    // bialternant against Jacobi-Trudi
    for (int N = 1; N <= 4; ++N)
        for (int w = 0; w <= 6; ++w)
            for (const auto& lam : partitions(w, N)) CHECK(schur(lam, N) == oracle::schur_jacobi_trudi(lam, N));
    // e_n = s_(1^n), h_n = s_(n)
    for (int n = 0; n <= 3; ++n) {
        CHECK(elementary(n, 3) == schur(Partition(n, 1), 3));
        CHECK(complete(n, 3) == schur(n ? Partition{n} : Partition{}, 3));
    }
    // sub-ring of variables
    CHECK(vandermonde(3, {1, 3}) == z(3, 1) - z(3, 3));
}

TEST_CASE("evaluation at roots of unity")
{
    for (int N = 2; N <= 9; ++N) {
        for (int n = 1; n < N; ++n) {
            CHECK(std::abs(eval_roots<double>(powersum(n, N), N)) < 1e-12);
            CHECK(std::abs(eval_roots<double>(elementary(n, N), N)) < 1e-12);
        }
        const double eN = (N % 2 == 1) ? 1.0 : -1.0;
        CHECK(std::abs(eval_roots<double>(elementary(N, N), N) - eN) < 1e-12);
    }
    const auto d4 = eval_roots<double>(vandermonde(4), 4);
    CHECK(std::abs(d4 - std::complex<double>(0, 16)) < 1e-12);
    set_working_precision(200);
    const auto d4mp = eval_roots<MpReal>(vandermonde(4), 4);
    CHECK(abs(d4mp.imag() - 16) < MpReal("1e-50"));
    set_working_precision(53);
    // Laurent input through eval_points
    const std::vector<std::complex<double>> pts{{0, 1}, {2, 0}};
    CHECK(std::abs(eval_points<double>(LaurentPoly::monomial({-1, 1}), pts) - std::complex<double>(0, -2)) < 1e-14);
}

TEST_CASE("numeric Schur polynomials")
{
    const std::vector<std::complex<double>> pts{{0.3, 0.1}, {-0.7, 0.2}, {1.1, -0.4}};
    for (int w = 0; w <= 5; ++w)
        for (const auto& lam : partitions(w, 3)) {
            const auto exact = eval_points<double>(schur(lam, 3), pts);
            CHECK(std::abs(schur_numeric<double>(lam, pts) - exact) < 1e-12);
        }
    CHECK(std::abs(schur_numeric<double>({1, 1, 1, 1}, pts)) == 0);
}
