#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "glat/error.hpp"
#include "glat/finlat.hpp"

using namespace glat;
using namespace glat::finlat;

namespace {

// Intersection-closed families of subsets (with the full set) form lattices.
Lattice random_closure_lattice(std::mt19937& rng, int ground, int gens) {
    std::set<unsigned> fam{(1u << ground) - 1};
    std::uniform_int_distribution<unsigned> pick(0, (1u << ground) - 1);
    for (int i = 0; i < gens; ++i) fam.insert(pick(rng));
    bool grown = true;
    while (grown) {
        grown = false;
        std::vector<unsigned> cur(fam.begin(), fam.end());
        for (unsigned a : cur)
            for (unsigned b : cur) grown |= fam.insert(a & b).second;
    }
    std::vector<unsigned> els(fam.begin(), fam.end());
    return Lattice::from_order(int(els.size()),
                               [&](int a, int b) { return (els[a] & ~els[b]) == 0; });
}

// Modularity through the diamond isomorphisms [a, a v b] <-> [a ^ b, b].
bool diamond_oracle(const Lattice& L) {
    for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b) {
            int j = L.join(a, b), m = L.meet(a, b);
            for (int x : L.interval(a, j))
                if (L.join(L.meet(x, b), a) != x) return false;
            for (int y : L.interval(m, b))
                if (L.meet(L.join(y, a), b) != y) return false;
        }
    return true;
}

bool witness_is_bijection(const Lattice& L, const Decomposition& D) {
    std::set<std::vector<int>> seen;
    std::size_t expected = 1;
    for (const auto& f : D.factors) expected *= f.size();
    for (int x = 0; x < L.size(); ++x) {
        for (std::size_t i = 0; i < D.factors.size(); ++i)
            if (!std::binary_search(D.factors[i].begin(), D.factors[i].end(), D.witness[x][i]))
                return false;
        if (L.meet_all(D.witness[x]) != x) return false;
        seen.insert(D.witness[x]);
    }
    return seen.size() == std::size_t(L.size()) && expected == std::size_t(L.size());
}

}  // namespace

TEST(Classify, ThreeChain) {
    auto c = classify(chain(3));
    EXPECT_TRUE(c.modular);
    EXPECT_TRUE(c.distributive);
    EXPECT_FALSE(c.geometric);
    EXPECT_EQ(c.length, 2);
}

TEST(Classify, M3AndN5) {
    auto c = classify(m3());
    EXPECT_TRUE(c.modular);
    EXPECT_FALSE(c.distributive);
    EXPECT_TRUE(c.geometric);
    EXPECT_EQ(c.length, 2);
    EXPECT_FALSE(classify(n5()).modular);
    EXPECT_FALSE(classify(n5()).geometric);
}

TEST(Classify, Irreducibles) {
    auto c = classify(boolean(2));
    EXPECT_EQ(c.meet_irreducibles, (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(c.join_irreducibles, (std::vector<int>{0, 1, 2}));
}

TEST(Classify, ModularityMatchesDiamondOracle) {
    std::mt19937 rng(7);
    int modular = 0;
    for (int t = 0; t < 150; ++t) {
        auto L = random_closure_lattice(rng, 4, 3 + t % 5);
        bool m = is_modular(L);
        modular += m;
        ASSERT_EQ(m, diamond_oracle(L)) << "trial " << t;
        if (is_distributive(L)) ASSERT_TRUE(m);
    }
    EXPECT_GT(modular, 0);
    EXPECT_TRUE(diamond_oracle(m3()));
    EXPECT_FALSE(diamond_oracle(n5()));
}

TEST(Center, Examples) {
    EXPECT_EQ(center(m3()), (std::vector<int>{0, 4}));
    EXPECT_EQ(center(boolean(2)).size(), 4u);
    EXPECT_EQ(center(product(m3(), chain(2))).size(), 4u);
    EXPECT_EQ(center(chain(3)), (std::vector<int>{0, 2}));
}

TEST(Center, IsBooleanSublatticeAndMultiplies) {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        auto A = random_closure_lattice(rng, 3, 2 + t % 3);
        auto B = random_closure_lattice(rng, 3, 2 + (t / 3) % 3);
        auto P = product(A, B);
        auto cA = center(A), cB = center(B), cP = center(P);
        std::vector<int> expect;
        for (int a : cA)
            for (int b : cB) expect.push_back(a * B.size() + b);
        std::sort(expect.begin(), expect.end());
        ASSERT_EQ(cP, expect);
        for (int a : cP)
            for (int b : cP) {
                ASSERT_TRUE(std::binary_search(cP.begin(), cP.end(), P.meet(a, b)));
                ASSERT_TRUE(std::binary_search(cP.begin(), cP.end(), P.join(a, b)));
            }
    }
}

TEST(Decompose, Examples) {
    auto d = decompose(boolean(3));
    ASSERT_EQ(d.factors.size(), 3u);
    for (const auto& f : d.factors) EXPECT_EQ(f.size(), 2u);
    EXPECT_TRUE(witness_is_bijection(boolean(3), d));

    EXPECT_EQ(decompose(m3()).factors.size(), 1u);
    auto mm = product(m3(), m3());
    auto d2 = decompose(mm);
    ASSERT_EQ(d2.factors.size(), 2u);
    EXPECT_TRUE(witness_is_bijection(mm, d2));
    for (const auto& f : d2.factors) EXPECT_EQ(f.size(), 5u);

    Lattice one = chain(1);
    auto d3 = decompose(one);
    EXPECT_EQ(d3.factors.size(), 1u);
}

TEST(Decompose, WitnessAlwaysBijective) {
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        auto L = product(random_closure_lattice(rng, 3, 3), random_closure_lattice(rng, 3, 2));
        ASSERT_TRUE(witness_is_bijection(L, decompose(L))) << t;
    }
}

TEST(DualFrame, Examples) {
    auto B = boolean(2);
    auto r = dual_frame_check(B, {1, 2});
    EXPECT_TRUE(r.independent);
    EXPECT_TRUE(r.spanning);
    EXPECT_EQ(r.reflected, (std::vector<int>{2, 1}));

    auto M = m3();
    auto two = dual_frame_check(M, {1, 2});
    EXPECT_TRUE(two.independent);
    EXPECT_TRUE(two.spanning);
    EXPECT_FALSE(dual_frame_check(M, {1, 2, 3}).independent);

    auto single = dual_frame_check(B, {B.top()});
    EXPECT_TRUE(single.independent);
    EXPECT_FALSE(single.spanning);
    auto trivial = dual_frame_check(chain(1), {0});
    EXPECT_TRUE(trivial.independent && trivial.spanning);
}

TEST(DualFrame, ReflectionGivesIsomorphicIntervals) {
    auto L = product(product(m3(), chain(3)), chain(2));
    auto id = [](int m, int c, int d) { return (m * 3 + c) * 2 + d; };
    std::vector<int> frame{id(1, 2, 1), id(2, 2, 1), id(4, 0, 1), id(4, 2, 0)};
    auto r = dual_frame_check(L, frame);
    ASSERT_TRUE(r.independent && r.spanning);
    for (std::size_t i = 0; i < frame.size(); ++i) {
        int x = frame[i], xr = r.reflected[i];
        auto up = L.interval(x, L.top());
        auto down = L.interval(L.bottom(), xr);
        ASSERT_EQ(up.size(), down.size());
        std::set<int> img;
        for (int u : up) {
            int v = L.meet(u, xr);
            img.insert(v);
            ASSERT_EQ(L.join(v, x), u);
        }
        ASSERT_EQ(img.size(), down.size());
    }
    auto frameCheck = dual_frame_check(L.dual(), r.reflected);
    EXPECT_TRUE(frameCheck.independent && frameCheck.spanning);
}

TEST(Primary, Examples) {
    EXPECT_TRUE(is_primary(chain(4)));
    EXPECT_TRUE(is_primary(m3()));
    EXPECT_FALSE(is_primary(boolean(2)));
    EXPECT_THROW(is_primary(n5()), NotModular);
}

TEST(Extend, ChainOfOneKeepsBase) {
    auto B = boolean(2);
    auto base = decompose(B);
    auto out = extend_factorization({B}, {}, base);
    EXPECT_EQ(out.factors, base.factors);
}

TEST(Extend, ChainIntoLongerChain) {
    auto out = extend_factorization({chain(2), chain(3)}, {{0, 1}}, decompose(chain(2)));
    ASSERT_EQ(out.factors.size(), 1u);
    EXPECT_EQ(out.factors[0], (std::vector<int>{0, 1, 2}));
}

TEST(Extend, SquareIntoGrid) {
    auto sq = product(chain(2), chain(2));
    auto grid = product(chain(3), chain(3));
    // (a, b) -> 3a + b in the grid; the square is the downset of (1, 1).
    std::vector<int> f{0, 1, 3, 4};
    auto out = extend_factorization({sq, grid}, {f}, decompose(sq));
    ASSERT_EQ(out.factors.size(), 2u);
    std::set<std::vector<int>> got(out.factors.begin(), out.factors.end());
    std::set<std::vector<int>> want{{1, 4, 7}, {3, 4, 5}};
    EXPECT_EQ(got, want);
    EXPECT_FALSE(out.upward_closed);
}

TEST(Extend, RejectsNonDownset) {
    std::vector<int> f{4, 5, 7, 8};
    auto sq = product(chain(2), chain(2));
    auto grid = product(chain(3), chain(3));
    EXPECT_THROW(extend_factorization({sq, grid}, {f}, decompose(sq)), NotADownset);
}

TEST(Extend, ThreeStepChain) {
    auto a = product(chain(2), chain(2));
    auto b = product(chain(3), chain(2));
    auto c = product(chain(3), chain(4));
    std::vector<int> ab{0, 1, 2, 3};             // (x,y) -> 2x+y
    std::vector<int> bc{0, 1, 4, 5, 8, 9};       // (x,y) -> 4x+y
    auto out = extend_factorization({a, b, c}, {ab, bc}, decompose(a));
    ASSERT_EQ(out.factors.size(), 2u);
    for (const auto& f : out.factors) EXPECT_TRUE(f.size() == 3u || f.size() == 4u);
}

TEST(Build, Errors) {
    EXPECT_THROW(Lattice::from_covers(2, {{0, 1}, {1, 0}}), CyclicCovers);
    EXPECT_THROW(Lattice::from_covers(3, {{0, 1}, {0, 2}}), NotALattice);
    // Two incomparable upper bounds of {1, 2}: no join.
    EXPECT_THROW(Lattice::from_covers(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}),
                 NotALattice);
}

TEST(Build, TransitiveCoverIsReduced) {
    auto L = Lattice::from_covers(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(L.covers().size(), 2u);
    EXPECT_EQ(L.length(), 2);
}

TEST(Io, JsonRoundTripAndDot) {
    auto L = m3();
    auto back = lattice_from_json(to_json(L));
    EXPECT_EQ(back.covers(), L.covers());
    auto dot = to_dot(L);
    EXPECT_NE(dot.find("n0 -> n1"), std::string::npos);
    EXPECT_NE(dot.find("rank=same"), std::string::npos);
    EXPECT_THROW(lattice_from_json(nlohmann::json::object()), BadInput);
}
