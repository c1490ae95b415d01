#include <doctest.h>

#include "oracles.hpp"

#include "hsjack/combinatorics.hpp"

using namespace hsjack;

TEST_CASE("dominance order on compositions")
{
    CHECK(dominance_compare({3, 0, 0}, {0, 3, 0}) == Order::Greater);
    CHECK(dominance_compare({0, 3, 0}, {3, 0, 0}) == Order::Less);
    CHECK(dominance_compare({2, 0, 1}, {1, 2, 0}) == Order::Incomparable);
    CHECK(dominance_compare({1, 1}, {1, 1}) == Order::Equal);
    CHECK(dominance_compare({2, 0}, {1, 1}) == Order::Greater);
    CHECK_THROWS_AS(dominance_compare({1, 0}, {1, 0, 0}), InvalidInput);
}

TEST_CASE("sigma rank and Dunkl eigenvalues")
{
    CHECK(sigma_rank({0, 3, 0}, 1) == 2);
    CHECK(sigma_rank({0, 3, 0}, 2) == 1);
    CHECK(sigma_rank({0, 3, 0}, 3) == 3);
    for (int i = 1; i <= 4; ++i) CHECK(sigma_rank({2, 2, 2, 2}, i) == i);
    CHECK_THROWS_AS(sigma_rank({1, 0}, 3), InvalidInput);

    const Rational a = make_rational(2, 5);
    CHECK(dunkl_eigenvalue({1, 0}, 1, a) == a + make_rational(1, 2));
    CHECK(dunkl_eigenvalue({0, 1}, 1, a) == make_rational(-1, 2));
    for (int i = 1; i <= 5; ++i) CHECK(dunkl_eigenvalue({0, 0, 0, 0, 0}, i, a) == make_rational(5 - 2 * i + 1, 2));
}

TEST_CASE("partition helpers")
{
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate({}) == Partition{});
    CHECK(staircase(4) == Partition{3, 2, 1, 0});
    CHECK(boost({1, 0, 2}, 2) == Composition{3, 2, 4});
    CHECK(weight({1, 0, 2}) == 3);
    CHECK(sorted_decreasing({0, 2, 1}) == Partition{2, 1, 0});
    CHECK(reversed({0, 2, 1}) == Composition{1, 2, 0});
    // conjugation is an involution
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions(n, n)) CHECK(conjugate(conjugate(strip_zeros(p))) == strip_zeros(p));
}

TEST_CASE("composition and partition enumeration counts")
{
    CHECK(compositions(3, 3).size() == 10);
    CHECK(compositions(3, 3).front() == Composition{3, 0, 0});
    CHECK(partitions(5, 5).size() == 7);
    CHECK(partitions(5, 2).size() == 3);
    CHECK(partitions(6, 3, 2).size() == 1);
    CHECK(partitions(4, 3, 2).size() == 2);
}

TEST_CASE("motif enumeration agrees with the bitmask filter")
{
    for (int r = 2; r <= 4; ++r)
        for (int N = 1; N <= 10; ++N) {
            std::vector<std::vector<int>> lib;
            for (const auto& mu : enumerate_motifs(N, r)) lib.push_back(mu.entries);
            std::sort(lib.begin(), lib.end());
            CHECK(lib == oracle::motif_sets(N, r));
        }
    CHECK(enumerate_motifs(4, 2).size() == 5);
    CHECK(enumerate_motifs(2, 2).size() == 2);
    CHECK(enumerate_motifs(4, 3).size() == 7);
    CHECK_FALSE(is_valid_motif({1, 2}, 4, 2));
    CHECK(is_valid_motif({1, 2}, 4, 3));
    CHECK_THROWS_AS(make_motif({1, 2}, 4, 2), InvalidInput);
    CHECK_THROWS_AS(make_motif({0}, 4, 2), InvalidInput);
    CHECK_THROWS_AS(make_motif({4}, 4, 2), InvalidInput);
}

TEST_CASE("degeneracies and energies")
{
    CHECK(degeneracy(make_motif({}, 4)) == 5);
    CHECK(degeneracy(make_motif({2}, 4)) == 4);
    CHECK(degeneracy(make_motif({1, 3}, 4)) == 1);
    for (int N = 1; N <= 14; ++N) {
        std::uint64_t total = 0;
        for (const auto& mu : enumerate_motifs(N, 2)) total += degeneracy(mu);
        CHECK(total == (std::uint64_t(1) << N));
    }
    CHECK(hs_motif_energy(make_motif({2}, 4)) == 2);
    CHECK(hs_motif_energy(make_motif({}, 4)) == 0);
    CHECK(hs_motif_energy(make_motif({1, 3}, 4)) == 3);
    CHECK(hs_motif_energy_minus(make_motif({1, 3}, 4)) == 2);
    CHECK(ground_energy(4) == 5);
    CHECK(motif_momentum(make_motif({1, 3}, 4)) == 0);
    CHECK(motif_momentum(make_motif({3}, 5)) == 3);
}

TEST_CASE("kbar and motif conversions")
{
    CHECK(motif_from_kbar({2, 1, 1, 0}, 4, 2).entries == std::vector<int>{2});
    CHECK(motif_from_kbar({1, 1, 0, 0}, 4, 2).entries == std::vector<int>{1, 3});
    CHECK(motif_from_kbar({3, 2, 1, 0}, 4, 2).entries.empty());
    CHECK(motif_from_kbar({4, 3, 2, 1}, 4, 2).entries.empty());  // boosted
    CHECK_THROWS_AS(motif_from_kbar({1, 1, 1, 0}, 4, 2), InvalidInput);
    for (int r = 2; r <= 3; ++r)
        for (int N = 1; N <= 9; ++N)
            for (const auto& mu : enumerate_motifs(N, r)) {
                const Composition kb = kbar_from_motif(mu);
                CHECK(motif_from_kbar(kb, N, r) == mu);
            }
}
