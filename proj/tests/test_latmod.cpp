#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "glat/error.hpp"
#include "glat/latmod.hpp"

using namespace glat;
using namespace glat::latmod;

namespace {

using Vec = std::vector<i64>;

i64 ipow(i64 b, int e) {
    i64 r = 1;
    while (e--) r *= b;
    return r;
}

// Subgroup of (Z/q)^d generated by integer columns, by additive closure.
std::vector<bool> span_oracle(const Matrix& cols, int d, i64 q) {
    i64 total = ipow(q, d);
    auto index = [&](const Vec& v) {
        i64 idx = 0;
        for (int r = 0; r < d; ++r) idx = idx * q + ((v[r] % q) + q) % q;
        return idx;
    };
    auto vec = [&](i64 idx) {
        Vec v(d);
        for (int r = d - 1; r >= 0; --r) {
            v[r] = idx % q;
            idx /= q;
        }
        return v;
    };
    std::vector<bool> in(total, false);
    std::vector<i64> stack{0};
    in[0] = true;
    while (!stack.empty()) {
        Vec v = vec(stack.back());
        stack.pop_back();
        for (std::size_t j = 0; j < cols[0].size(); ++j) {
            Vec w = v;
            for (int r = 0; r < d; ++r) w[r] += cols[r][j];
            i64 k = index(w);
            if (!in[k]) {
                in[k] = true;
                stack.push_back(k);
            }
        }
    }
    return in;
}

// Exponents of R^d / A from the orders of its p^i-torsion subgroups.
std::vector<int> quotient_oracle(const PLattice& A, int N) {
    const int d = A.delta();
    const i64 p = A.params.p, q = ipow(p, N);
    auto mem = truncation(A, N);
    i64 sizeA = std::count(mem.begin(), mem.end(), true);
    std::vector<int> logTorsion{0};
    for (int i = 1; i <= N; ++i) {
        i64 cnt = 0;
        for (i64 idx = 0; idx < ipow(q, d); ++idx) {
            i64 t = idx, pi = ipow(p, i), scaled = 0;
            Vec v(d);
            for (int r = d - 1; r >= 0; --r) {
                v[r] = t % q;
                t /= q;
            }
            for (int r = 0; r < d; ++r) scaled = scaled * q + (v[r] * pi) % q;
            cnt += mem[scaled];
        }
        i64 ratio = cnt / sizeA;
        int l = 0;
        while (ratio > 1) {
            ratio /= p;
            ++l;
        }
        logTorsion.push_back(l);
    }
    // log_p |T_i| = sum_j min(a_j, i); successive differences count a_j >= i.
    std::vector<int> ge;
    for (int i = 1; i <= N; ++i) ge.push_back(logTorsion[i] - logTorsion[i - 1]);
    std::vector<int> ex(d, 0);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < N; ++i)
            if (ge[i] > j) ex[j]++;
    return ex;
}

PLattice random_cone_lattice(std::mt19937& rng, const BeamParams& bp, int N) {
    std::uniform_int_distribution<int> e(-6, 6), extra(0, 2);
    const int d = bp.delta;
    int n = d + extra(rng);
    Matrix G(d, std::vector<i64>());
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < d; ++r) G[r].push_back(e(rng) * ipow(bp.p, extra(rng)));
    for (int j = 0; j < d; ++j)
        for (int r = 0; r < d; ++r) G[r].push_back(r == j ? ipow(bp.p, N) : 0);
    return canonicalize(bp, G, 0);
}

Matrix integral(const PLattice& A) {
    Matrix G = A.H;
    for (auto& row : G)
        for (auto& x : row) x *= ipow(A.params.p, -A.scale);
    return G;
}

}  // namespace

TEST(Canonicalize, Examples) {
    BeamParams bp{2, 2};
    auto A = canonicalize(bp, {{2, 0, 1}, {0, 2, 1}}, 0);
    EXPECT_EQ(A.H, (Matrix{{1, 0}, {1, 2}}));
    EXPECT_EQ(A.scale, 0);
    EXPECT_EQ(degree(A), 1);

    auto I = canonicalize(bp, {{1, 0}, {0, 1}}, 0);
    EXPECT_EQ(I, unit(bp));

    auto half = from_rational_generators(bp, {{{1, 2}, {0, 1}}, {{0, 1}, {1, 2}}});
    EXPECT_EQ(half.scale, 1);
    EXPECT_EQ(half.H, (Matrix{{1, 0}, {0, 1}}));
    EXPECT_EQ(degree(half), -2);

    // Denominators prime to p are units and vanish.
    auto third = from_rational_generators(bp, {{{1, 3}, {0, 1}}, {{0, 1}, {5, 7}}});
    EXPECT_EQ(third, unit(bp));
}

TEST(Canonicalize, FromJsonExample) {
    auto A = plattice_from_json(nlohmann::json::parse(R"({"p":2,"delta":2,"scale":0,"H":[[1,0],[1,2]]})"));
    EXPECT_EQ(A.H, (Matrix{{1, 0}, {1, 2}}));
    EXPECT_EQ(plattice_from_json(to_json(A)), A);
}

TEST(Canonicalize, MembershipMatchesSpanOracle) {
    std::mt19937 rng(1);
    for (BeamParams bp : {BeamParams{2, 2}, BeamParams{2, 3}, BeamParams{3, 2}, BeamParams{5, 2}}) {
        const int N = bp.p == 2 ? 3 : 2;
        const i64 q = ipow(bp.p, N);
        for (int t = 0; t < 40; ++t) {
            std::uniform_int_distribution<int> e(-9, 9);
            Matrix G(bp.delta);
            for (int j = 0; j < bp.delta + 2; ++j)
                for (int r = 0; r < bp.delta; ++r) G[r].push_back(e(rng));
            for (int j = 0; j < bp.delta; ++j)
                for (int r = 0; r < bp.delta; ++r) G[r].push_back(r == j ? q : 0);
            auto A = canonicalize(bp, G, 0);
            ASSERT_EQ(truncation(A, N), span_oracle(G, bp.delta, q));
            // Canonical form is independent of the generating set.
            Matrix G2 = G;
            for (auto& row : G2) std::reverse(row.begin(), row.end());
            for (int r = 0; r < bp.delta; ++r) G2[r].push_back(G[r][0] * 3 + G[r][1]);
            ASSERT_EQ(canonicalize(bp, G2, 0), A);
        }
    }
}

TEST(LatticeOps, Example) {
    BeamParams bp{2, 2};
    auto A = canonicalize(bp, {{4, 0}, {0, 1}}, 0);
    auto B = canonicalize(bp, {{1, 0}, {0, 4}}, 0);
    EXPECT_EQ(join(A, B), unit(bp));
    EXPECT_EQ(meet(A, B), canonicalize(bp, {{4, 0}, {0, 4}}, 0));
    EXPECT_EQ(degree(A) + degree(B), 4);
    EXPECT_EQ(degree(join(A, B)) + degree(meet(A, B)), 4);
}

TEST(LatticeOps, MeetJoinMatchMembershipOracle) {
    std::mt19937 rng(2);
    for (BeamParams bp : {BeamParams{2, 2}, BeamParams{2, 3}, BeamParams{3, 2}}) {
        const int N = bp.p == 2 ? 3 : 2;
        const i64 q = ipow(bp.p, N);
        for (int t = 0; t < 60; ++t) {
            auto A = random_cone_lattice(rng, bp, N), B = random_cone_lattice(rng, bp, N);
            auto ta = truncation(A, N), tb = truncation(B, N);
            std::vector<bool> inter(ta.size());
            for (std::size_t k = 0; k < ta.size(); ++k) inter[k] = ta[k] && tb[k];
            ASSERT_EQ(truncation(meet(A, B), N), inter);
            Matrix both = integral(A);
            Matrix gb = integral(B);
            for (int r = 0; r < bp.delta; ++r) both[r].insert(both[r].end(), gb[r].begin(), gb[r].end());
            ASSERT_EQ(truncation(join(A, B), N), span_oracle(both, bp.delta, q));
            bool subset = true;
            for (std::size_t k = 0; k < ta.size(); ++k) subset = subset && (!ta[k] || tb[k]);
            ASSERT_EQ(leq(A, B), subset);
            ASSERT_EQ(degree(A) + degree(B), degree(join(A, B)) + degree(meet(A, B)));
        }
    }
}

TEST(LatticeOps, DualIsInvolutiveAndAntitone) {
    std::mt19937 rng(3);
    BeamParams bp{3, 3};
    for (int t = 0; t < 40; ++t) {
        auto A = random_cone_lattice(rng, bp, 2), B = random_cone_lattice(rng, bp, 2);
        ASSERT_EQ(dual(dual(A)), A);
        ASSERT_EQ(degree(dual(A)), -degree(A));
        ASSERT_EQ(leq(A, B), leq(dual(B), dual(A)));
    }
}

TEST(LatticeOps, RadSocAndBounds) {
    std::mt19937 rng(4);
    BeamParams bp{2, 3};
    for (int t = 0; t < 30; ++t) {
        auto A = random_cone_lattice(rng, bp, 3);
        ASSERT_EQ(rad(soc(A)), A);
        ASSERT_EQ(degree(rad(A)), degree(A) + bp.delta);
        auto ex = snf_exponents(A);
        int n = std::abs(A.scale) + ex.front();
        ASSERT_TRUE(leq(frozen(bp, n), A));
        ASSERT_TRUE(leq(A, frozen(bp, -n)));
    }
}

TEST(LatticeOps, ParamMismatchAndRank) {
    EXPECT_THROW(join(unit({2, 2}), unit({3, 2})), ParamMismatch);
    EXPECT_THROW(canonicalize({2, 2}, {{1, 2}, {2, 4}}, 0), NotFullRank);
    EXPECT_THROW(snf_profile(soc(unit({2, 2}))), NotInNegativeCone);
    EXPECT_THROW(canonicalize({4, 2}, {{1, 0}, {0, 1}}, 0), BadInput);
    EXPECT_THROW(canonicalize({2, 2}, {{i64(1) << 62, 3}, {3, i64(1) << 62}}, 0), Overflow);
}

TEST(Profile, Examples) {
    BeamParams bp{2, 2};
    auto s = snf_profile(canonicalize(bp, {{4, 0}, {0, 2}}, 0));
    EXPECT_EQ(s.exponents, (std::vector<int>{2, 1}));
    EXPECT_EQ(s.degree, 3);
    EXPECT_EQ(s.lambda, 2);
    EXPECT_EQ(s.iota, (std::vector<int>{2, 1}));
    EXPECT_FALSE(s.meet_irreducible);
    EXPECT_FALSE(s.dual_chain);

    auto t = snf_profile(canonicalize(bp, {{4, 0}, {0, 1}}, 0));
    EXPECT_EQ(t.exponents, (std::vector<int>{2, 0}));
    EXPECT_EQ(t.iota, (std::vector<int>{1, 1}));
    EXPECT_TRUE(t.meet_irreducible);
    EXPECT_TRUE(t.one_homogeneous);
    EXPECT_TRUE(t.dual_chain);

    auto u = snf_profile(unit(bp));
    EXPECT_EQ(u.exponents, (std::vector<int>{0, 0}));
    EXPECT_EQ(u.degree, 0);
    EXPECT_EQ(u.lambda, 0);
    EXPECT_TRUE(u.iota.empty());
    EXPECT_TRUE(u.meet_irreducible && u.one_homogeneous && u.dual_chain);
}

TEST(Profile, ExponentsMatchQuotientOracle) {
    for (BeamParams bp : {BeamParams{2, 2}, BeamParams{2, 3}, BeamParams{3, 2}}) {
        for (const auto& A : enumerate_cone(bp, 3)) {
            ASSERT_EQ(snf_exponents(A), quotient_oracle(A, 3)) << describe(A);
        }
    }
}

TEST(Profile, IotaFromJoinsIsConjugatePartition) {
    for (BeamParams bp : {BeamParams{2, 2}, BeamParams{2, 3}, BeamParams{3, 2}, BeamParams{3, 3}}) {
        for (const auto& A : enumerate_cone(bp, 4)) {
            auto s = snf_profile(A);
            auto iota = iota_by_joins(A);
            ASSERT_EQ(iota, s.iota) << describe(A);
            ASSERT_TRUE(std::is_sorted(iota.rbegin(), iota.rend()));
            ASSERT_EQ(s.meet_irreducible, s.one_homogeneous);
            ASSERT_EQ(s.meet_irreducible, s.dual_chain) << describe(A);
        }
    }
}

TEST(Enumerate, ConeCountsAreIndexCounts) {
    // Sublattices of index p^k in Z_p^2 number 1 + p + ... + p^k.
    for (int p : {2, 3}) {
        auto all = enumerate_cone({p, 2}, 4);
        std::map<int, int> byDeg;
        for (const auto& A : all) byDeg[degree(A)]++;
        for (int k = 0; k <= 4; ++k) {
            int expect = 0;
            for (int i = 0; i <= k; ++i) expect += int(ipow(p, i));
            EXPECT_EQ(byDeg[k], expect);
        }
        EXPECT_EQ(count_cone({p, 2}, 4), all.size());
    }
}

TEST(Covers, CountMatchesProjectiveSpace) {
    std::mt19937 rng(5);
    for (BeamParams bp : {BeamParams{2, 3}, BeamParams{3, 2}}) {
        for (int t = 0; t < 20; ++t) {
            auto A = random_cone_lattice(rng, bp, 2);
            auto ex = snf_exponents(A);
            int r = int(std::count_if(ex.begin(), ex.end(), [](int a) { return a > 0; }));
            i64 expect = (ipow(bp.p, r) - 1) / (bp.p - 1);
            ASSERT_EQ(i64(upper_covers_in_cone(A).size()), expect);
        }
    }
}

TEST(StrongInterval, SmallCases) {
    for (int n = 0; n <= 4; ++n) {
        auto si = strong_interval({2, 1}, n);
        EXPECT_EQ(si.lattice.size(), n + 1);
        EXPECT_TRUE(finlat::is_chain(si.lattice));
    }
    EXPECT_EQ(strong_interval({2, 2}, 1).lattice.size(), 5);
    EXPECT_EQ(strong_interval({3, 2}, 1).lattice.size(), 6);
    EXPECT_EQ(strong_interval({2, 3}, 1).lattice.size(), 16);
    EXPECT_EQ(strong_interval({2, 4}, 1).lattice.size(), 67);
    // Subgroups of (Z/4)^2 and (Z/8)^2.
    EXPECT_EQ(strong_interval({2, 2}, 2).lattice.size(), 15);
}

TEST(StrongInterval, GuardTrips) {
    set_max_enum(50);
    EXPECT_THROW(strong_interval({2, 4}, 1), TooLarge);
    set_max_enum(0);
}

TEST(Frozen, DegreeAndBasis) {
    EXPECT_EQ(degree(frozen({2, 4}, 2)), 8);
    auto ys = dual_basis({2, 4}, 2);
    PLattice m = unit({2, 4});
    for (const auto& y : ys) {
        EXPECT_TRUE(snf_profile(y).meet_irreducible);
        EXPECT_EQ(upper_covers_in_cone(y).size(), 1u);
        m = meet(m, y);
    }
    EXPECT_EQ(m, frozen({2, 4}, 2));
}

TEST(Product, DecomposeExample) {
    std::vector<BeamParams> ps{{2, 2}, {3, 1}};
    ProductElement x{{frozen({2, 2}, 1), frozen({3, 1}, 1)}};
    auto d = product_decompose(x);
    ASSERT_EQ(d.components.size(), 2u);
    EXPECT_EQ(d.components[0], (ProductElement{{frozen({2, 2}, 1), unit({3, 1})}}));
    EXPECT_EQ(d.components[1], (ProductElement{{unit({2, 2}), frozen({3, 1}, 1)}}));
    EXPECT_TRUE(d.dual_frame_ok);
    EXPECT_EQ(product_degree(x), 3);
}
