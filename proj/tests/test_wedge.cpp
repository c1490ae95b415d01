#include <doctest.h>

#include "hsjack/dunkl.hpp"
#include "hsjack/symfun.hpp"
#include "hsjack/wedge.hpp"

#include <functional>

using namespace hsjack;

namespace {

LaurentPoly z(int n, int j) { return LaurentPoly::variable(n, j); }

WedgeVector W(std::vector<int> k, int r = 2) { return WedgeVector::single(Wedge{std::move(k), r}); }

// All strictly decreasing k of length N with entries in [0, top].
std::vector<std::vector<int>> all_wedges(int N, int top)
{
    std::vector<std::vector<int>> out;
    std::vector<int> k;
    std::function<void(int)> rec = [&](int hi) {
        if (static_cast<int>(k.size()) == N) {
            out.push_back(k);
            return;
        }
        for (int x = hi; x >= 0; --x) {
            k.push_back(x);
            rec(x - 1);
            k.pop_back();
        }
    };
    rec(top);
    return out;
}

}  // namespace

TEST_CASE("normalisation and colours")
{
    auto [s1, w1] = normalize({0, 1}, 2);
    CHECK(s1 == -1);
    CHECK(w1.k == std::vector<int>{1, 0});
    CHECK(normalize({3, 3, 0}, 2).first == 0);
    CHECK(normalize({6, 4, 2, 0}, 2).first == 1);
    CHECK(kbar_of(-1, 2) == -1);
    CHECK(colour_of(-1, 2) == 1);
    auto sp = split_colours(Wedge{{3, 2, 1, 0}, 2});
    CHECK(sp[0] == std::vector<int>{1, 0});
    CHECK(sp[1] == std::vector<int>{1, 0});
    sp = split_colours(Wedge{{6, 4, 2, 0}, 2});
    CHECK(sp[0] == std::vector<int>{3, 2, 1, 0});
    CHECK(sp[1].empty());
    sp = split_colours(Wedge{{2, 1, 0}, 3});
    for (const auto& c : sp) CHECK(c == std::vector<int>{0});
}

TEST_CASE("squeezing examples")
{
    const Wedge w{{6, 1, 0}, 2};
    CHECK(squeeze(1, 2, w) == W({4, 3, 0}) * Rational(2) - W({5, 2, 0}));
    CHECK(squeeze(1, 3, w) == W({4, 2, 1}) * Rational(-1));
    CHECK(squeeze(2, 3, w).is_zero());
    // squeezing lowers the sorted kbar in dominance
    for (const auto& k : all_wedges(3, 9)) {
        const Wedge in{k, 2};
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) {
                const WedgeVector out = squeeze(i, j, in);
                for (const auto& [k2, c] : out.terms())
                    CHECK(dominance_compare(sorted_decreasing(Wedge{k2, 2}.kbar()), sorted_decreasing(in.kbar())) ==
                          Order::Less);
            }
    }
}

TEST_CASE("Hamiltonian on wedges")
{
    const Rational b = make_rational(2, 3);
    // free fermions
    for (const auto& k : all_wedges(3, 8))
        CHECK(apply_spin_eff_hamiltonian(W(k), 0) == W(k) * wedge_energy(Wedge{k, 2}.kbar(), 0));
    // no room to squeeze
    CHECK(apply_spin_eff_hamiltonian(W({3, 2, 1, 0}), b) == W({3, 2, 1, 0}) * wedge_energy({1, 1, 0, 0}, b));
    // the coordinate oracle at N = 2 and 3 for rank 2 and rank 3
    for (int r = 2; r <= 3; ++r)
        for (int N = 1; N <= 3; ++N)
            for (const auto& k : all_wedges(N, 3 * r - 1))
                for (const Rational& beta : {Rational(1), b}) {
                    const WedgeVector v = W(k, r);
                    CHECK(prune(wedge_to_coordinate(apply_spin_eff_hamiltonian(v, beta))) ==
                          prune(spin_eff_hamiltonian_coordinate(wedge_to_coordinate(v), N, beta)));
                }
}

TEST_CASE("coordinate expansion")
{
    SpinTable t = wedge_to_coordinate(W({1, 0}));
    CHECK(t.size() == 2);
    CHECK(t.at({1, 0}) == LaurentPoly::constant(2, 1));
    CHECK(t.at({0, 1}) == LaurentPoly::constant(2, -1));
    t = wedge_to_coordinate(W({2, 0}));
    CHECK(t.size() == 1);
    CHECK(t.at({0, 0}) == z(2, 1) - z(2, 2));
    // the N = 4 antiferromagnetic wedge
    t = wedge_to_coordinate(W({3, 2, 1, 0}));
    CHECK(t.size() == 6);
    CHECK(t.at({1, 1, 0, 0}) == (z(4, 1) - z(4, 2)) * (z(4, 3) - z(4, 4)) * Rational(-1));
    CHECK(t.at({1, 0, 1, 0}) == (z(4, 1) - z(4, 3)) * (z(4, 2) - z(4, 4)));
    CHECK(t.at({1, 0, 0, 1}) == (z(4, 1) - z(4, 4)) * (z(4, 2) - z(4, 3)) * Rational(-1));
    CHECK(t.at({0, 0, 1, 1}) == t.at({1, 1, 0, 0}));
}

TEST_CASE("fermionic structure of coordinate expansions")
{
    for (const auto& k : all_wedges(4, 7)) {
        const SpinTable t = wedge_to_coordinate(W(k));
        // P_{i,i+1} s_{i,i+1} = -1
        for (int i = 1; i < 4; ++i) {
            SpinTable moved;
            for (const auto& [word, p] : t) {
                std::vector<int> w2(word);
                std::swap(w2[i - 1], w2[i]);
                moved.emplace(w2, p.swapped(i, i + 1) * Rational(-1));
            }
            CHECK(prune(moved) == t);
        }
        // simple component: two Vandermonde factors
        const int M = static_cast<int>(split_colours(Wedge{k, 2})[1].size());
        std::vector<int> simple(4, 0);
        for (int m = 0; m < M; ++m) simple[m] = 1;
        auto it = t.find(simple);
        if (it == t.end()) continue;
        std::vector<int> down, up;
        for (int m = 1; m <= 4; ++m) (m <= M ? down : up).push_back(m);
        // an empty variable list means "all variables" to vandermonde()
        auto delta = [](const std::vector<int>& vars) {
            return vars.size() < 2 ? LaurentPoly::constant(4, 1) : vandermonde(4, vars);
        };
        const LaurentPoly q = divide_exact(divide_exact(it->second, delta(down)), delta(up));
        CHECK(symmetrize(q, +1, {M, 4 - M}) == q * Rational(M == 0 || M == 4 ? 24 : (M == 2 ? 4 : 6)));
        // boost
        std::vector<int> kb(k);
        for (int& x : kb) x += 2;
        SpinTable shifted;
        for (const auto& [word, p] : t) shifted.emplace(word, p.shifted({1, 1, 1, 1}));
        CHECK(wedge_to_coordinate(W(kb)) == shifted);
    }
}

TEST_CASE("Uglov eigenvectors")
{
    const Rational b = make_rational(2, 3);
    CHECK(uglov_eigenvector(Wedge{{3, 2}, 2}, b) == W({3, 2}));
    const WedgeVector u = uglov_eigenvector(Wedge{{4, 1}, 2}, b);
    CHECK(u.size() == 2);
    CHECK(u.coeff({4, 1}) == 1);
    CHECK(apply_spin_eff_hamiltonian(u, b) == u * wedge_energy({2, 0}, b));
    for (int r = 2; r <= 3; ++r)
        for (const auto& k : all_wedges(3, 3 * r)) {
            const Wedge w{k, r};
            const WedgeVector e = uglov_eigenvector(w, b);
            CHECK(apply_spin_eff_hamiltonian(e, b) == e * wedge_energy(w.kbar(), b));
        }
    // boost covariance
    const WedgeVector e1 = uglov_eigenvector(Wedge{{7, 2, 1}, 2}, b);
    const WedgeVector e2 = uglov_eigenvector(Wedge{{9, 4, 3}, 2}, b);
    SpinTable t1 = wedge_to_coordinate(e1), shifted;
    for (const auto& [word, p] : t1) shifted.emplace(word, p.shifted({1, 1, 1}));
    CHECK(wedge_to_coordinate(e2) == shifted);
    CHECK_THROWS_AS(uglov_eigenvector(Wedge{{1, 1}, 2}, b), InvalidInput);
    CHECK_THROWS_AS(uglov_eigenvector(Wedge{{40, 20, 0}, 2}, b, 5), std::length_error);
}
