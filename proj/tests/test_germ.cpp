#include <gtest/gtest.h>

#include <map>
#include <random>

#include "glat/cone.hpp"
#include "glat/error.hpp"
#include "glat/germ.hpp"
#include "monoid_oracle.hpp"

using namespace glat;
using namespace glat::germ;

namespace {

std::vector<std::pair<std::string, GermTable>> corpus() {
    return {{"free_abelian", free_abelian_germ()},
            {"klein", klein_germ()},
            {"braid3", braid3_germ()},
            {"integer", integer_germ()}};
}

Word W(const Germ& G, std::initializer_list<const char*> names) {
    Word w;
    for (auto s : names) w.push_back(G.id(s));
    return w;
}

// All words over the non-identity letters of length at most `len`.
std::vector<Word> all_words(const Germ& G, int len) {
    std::vector<Word> out{{}};
    std::vector<Word> layer{{}};
    for (int l = 0; l < len; ++l) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int a = 0; a < G.size(); ++a) {
                if (a == G.e()) continue;
                Word v = w;
                v.push_back(a);
                next.push_back(v);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

Word random_word(const Germ& G, std::mt19937_64& rng, int maxLen) {
    std::uniform_int_distribution<int> len(0, maxLen), letter(0, G.size() - 1);
    Word w(len(rng));
    for (int& a : w) a = letter(rng);
    return right_normal_form(G, w);
}

}  // namespace

TEST(Germ, ValidateExamples) {
    for (auto& [name, t] : corpus()) EXPECT_TRUE(validate_germ(t).ok) << name;
    EXPECT_TRUE(validate_germ(product_table(klein_germ(), braid3_germ())).ok);
    EXPECT_TRUE(validate_germ(opposite_table(braid3_germ())).ok);
}

TEST(Germ, InvalidTablesCarryWitness) {
    // a*b, b*c and (ab)*c defined while a*(bc) is not.
    GermTable t;
    t.names = {"e", "a", "b", "c", "ab", "bc", "abc"};
    t.degree = {0, 1, 1, 1, 2, 2, 3};
    int n = t.size();
    t.identity = 0;
    t.delta = 6;
    t.product.assign(n * n, -1);
    for (int a = 0; a < n; ++a) t.product[a] = t.product[a * n] = a;
    t.product[1 * n + 2] = 4;
    t.product[2 * n + 3] = 5;
    t.product[4 * n + 3] = 6;
    auto rep = validate_germ(t);
    EXPECT_FALSE(rep.ok);
    EXPECT_EQ(rep.witness, "partial associativity fails at (a, b, c)");
    EXPECT_THROW(Germ{t}, InvalidGerm);

    GermTable u = klein_germ();
    u.product[1 * 4 + 2] = 3;  // x*y = D breaks right cancellativity
    rep = validate_germ(u);
    EXPECT_FALSE(rep.ok);
    EXPECT_NE(rep.witness.find("cancellativity"), std::string::npos);

    GermTable v = free_abelian_germ();
    v.degree[3] = 3;
    EXPECT_FALSE(validate_germ(v).ok);

    // No complement of x below Delta.
    GermTable w = free_abelian_germ();
    w.product[1 * 4 + 2] = -1;
    w.product[2 * 4 + 1] = -1;
    rep = validate_germ(w);
    EXPECT_FALSE(rep.ok);
}

TEST(Germ, JsonRoundTrip) {
    for (auto& [name, t] : corpus()) {
        auto j = to_json(t);
        GermTable back = germ_from_json(j);
        EXPECT_EQ(back.names, t.names);
        EXPECT_EQ(back.product, t.product);
        EXPECT_EQ(back.degree, t.degree);
        j.erase("degree");
        EXPECT_EQ(germ_from_json(j).degree, t.degree) << name;
    }
    EXPECT_THROW(germ_from_json(nlohmann::json::parse(R"({"elements":["e"]})")), BadInput);
}

TEST(Germ, DerivedTables) {
    Germ K(klein_germ());
    int x = K.id("x"), y = K.id("y"), D = K.delta();
    EXPECT_EQ(K.comp(x), x);
    EXPECT_EQ(K.rcomp(y), y);
    EXPECT_EQ(K.conj(x), x);
    EXPECT_EQ(K.meet(x, y), D);
    EXPECT_EQ(K.join(x, y), K.e());
    EXPECT_EQ(K.arrow(x, y), x);
    EXPECT_EQ(K.atoms().size(), 2u);

    Germ B(braid3_germ());
    EXPECT_FALSE(finlat::is_distributive(B.lattice()));
    EXPECT_TRUE(finlat::is_modular(B.lattice()));
    // Delta x Delta^{-1} cycles the three atoms.
    int a = B.id("x");
    EXPECT_NE(B.conj(a), a);
    EXPECT_EQ(B.conj(B.conj(B.conj(a))), a);
    EXPECT_EQ(B.conj_inv(B.conj(a)), a);
}

TEST(NormalForm, Examples) {
    Germ F(free_abelian_germ()), K(klein_germ());
    EXPECT_EQ(right_normal_form(F, W(F, {"x", "y"})), W(F, {"D"}));
    EXPECT_EQ(right_normal_form(F, W(F, {"x"})), W(F, {"x"}));
    EXPECT_EQ(right_normal_form(F, W(F, {"D", "x"})), W(F, {"x", "D"}));
    EXPECT_EQ(right_normal_form(K, W(K, {"x", "x"})), W(K, {"D"}));
    EXPECT_EQ(right_normal_form(K, W(K, {"y", "x"})), W(K, {"y", "x"}));
    EXPECT_EQ(right_normal_form(K, W(K, {"e", "e"})), Word{});
    EXPECT_THROW(right_normal_form(K, Word{7}), ProductUndefined);
}

TEST(NormalForm, UniqueAndMatchesRewritingOracle) {
    for (auto& [name, t] : corpus()) {
        Germ G(t);
        int maxLetter = 0;
        for (int a = 0; a < G.size(); ++a) maxLetter = std::max(maxLetter, G.degree(a));
        oracle::MonoidOracle M(t, 4 * maxLetter);
        std::map<Word, Word> nfOfClass, classOfNf;
        for (const Word& w : all_words(G, 4)) {
            Word nf = right_normal_form(G, w);
            EXPECT_TRUE(is_right_normal(G, nf)) << name;
            EXPECT_EQ(right_normal_form(G, w, Sweep::LeftToRight), nf) << name;
            for (std::uint64_t s = 0; s < 3; ++s)
                EXPECT_EQ(right_normal_form(G, w, Sweep::Shuffled, s), nf) << name;
            EXPECT_EQ(degree(G, nf), M.degree(w));
            Word cls = *M.canonical(w);
            ASSERT_TRUE(M.same(w, nf)) << name;
            auto [it, fresh] = nfOfClass.emplace(cls, nf);
            EXPECT_EQ(it->second, nf) << name;
            auto [jt, fresh2] = classOfNf.emplace(nf, cls);
            EXPECT_EQ(jt->second, cls) << name;
        }
    }
}

TEST(NormalForm, ClosedFormulaAndIndexSequence) {
    for (auto& [name, t] : corpus()) {
        Germ G(t);
        for (const Word& w : all_words(G, 4)) {
            Word nf = right_normal_form(G, w);
            EXPECT_EQ(closed_form_factors(G, nf), nf) << name;
            auto iota = index_sequence(G, nf);
            EXPECT_TRUE(std::is_sorted(iota.rbegin(), iota.rend())) << name;
        }
    }
    Germ P(product_table(klein_germ(), braid3_germ()));
    std::mt19937_64 rng(1);
    for (int i = 0; i < 300; ++i) {
        Word nf = random_word(P, rng, 4);
        EXPECT_EQ(closed_form_factors(P, nf), nf);
    }
}

TEST(NormalForm, LeftNormalForm) {
    Germ F(free_abelian_germ()), K(klein_germ());
    EXPECT_EQ(left_normal_form(F, W(F, {"y", "x"})), W(F, {"D"}));
    EXPECT_EQ(left_normal_form(K, W(K, {"x", "x"})), W(K, {"D"}));
    EXPECT_EQ(left_normal_form(F, W(F, {"x", "D"})), W(F, {"D", "x"}));
    EXPECT_EQ(left_normal_form(K, W(K, {"y"})), W(K, {"y"}));
    EXPECT_FALSE(is_left_normal(F, W(F, {"x", "D"})));

    std::vector<GermTable> ts{free_abelian_germ(), klein_germ(), braid3_germ(),
                              product_table(klein_germ(), free_abelian_germ())};
    for (const auto& t : ts) {
        Germ G(t);
        for (const Word& w : all_words(G, 3)) {
            Word r = right_normal_form(G, w), l = left_normal_form(G, w);
            EXPECT_TRUE(is_left_normal(G, l));
            EXPECT_TRUE(equal(G, l, r));
            ASSERT_EQ(l.size(), r.size());
            // h_i read from the left, g_i read from the right
            for (std::size_t i = 0; i < l.size(); ++i)
                EXPECT_EQ(G.degree(l[i]), G.degree(r[r.size() - 1 - i]));
            EXPECT_EQ(left_normal_form(G, r), l);
        }
    }
}

TEST(Cone, Examples) {
    Germ F(free_abelian_germ()), K(klein_germ());
    Word x = W(F, {"x"}), y = W(F, {"y"}), D = W(F, {"D"});
    EXPECT_EQ(arrow(F, x, y), y);
    EXPECT_EQ(meet(F, x, y), D);
    EXPECT_EQ(join(F, x, y), Word{});
    EXPECT_EQ(arrow(F, D, x), Word{});
    EXPECT_TRUE(leq(F, D, x));
    EXPECT_FALSE(leq(F, x, D));

    Word g = W(K, {"y", "x"});
    EXPECT_EQ(arrow(K, g, g), Word{});
    EXPECT_EQ(meet(K, g, g), g);
    EXPECT_EQ(join(K, g, g), g);

    Word kx = W(K, {"x"}), ky = W(K, {"y"});
    EXPECT_EQ(arrow(K, kx, ky), kx);
    EXPECT_EQ(multiply(K, arrow(K, kx, ky), kx), W(K, {"D"}));
    EXPECT_EQ(meet(K, kx, ky), W(K, {"D"}));
    EXPECT_EQ(join(K, kx, ky), Word{});
}

TEST(Cone, MatchesRewritingOracle) {
    for (auto& [name, t] : corpus()) {
        Germ G(t);
        int dmax = 2 * G.degree(G.delta());
        oracle::MonoidOracle M(t, 2 * dmax);
        std::vector<Word> elems;
        for (const Word& w : M.elements())
            if (M.degree(w) <= dmax) elems.push_back(w);
        for (const Word& g : elems)
            for (const Word& h : elems) {
                EXPECT_EQ(leq(G, g, h), M.leq(g, h)) << name;
                EXPECT_TRUE(M.same(meet(G, g, h), *M.meet(g, h))) << name;
                EXPECT_TRUE(M.same(join(G, g, h), *M.join(g, h))) << name;
            }
    }
}

TEST(Cone, ArrowIdentities) {
    std::vector<GermTable> ts{free_abelian_germ(), klein_germ(), braid3_germ(),
                              product_table(klein_germ(), braid3_germ())};
    std::mt19937_64 rng(0);
    for (const auto& t : ts) {
        Germ G(t);
        Word e;
        for (int i = 0; i < 200; ++i) {
            Word x = random_word(G, rng, 3), y = random_word(G, rng, 3), z = random_word(G, rng, 3);
            EXPECT_EQ(arrow(G, x, x), e);
            EXPECT_EQ(arrow(G, x, e), e);
            EXPECT_EQ(arrow(G, e, x), x);
            EXPECT_EQ(multiply(G, arrow(G, x, y), x), meet(G, x, y));
            EXPECT_EQ(arrow(G, meet(G, x, y), z), arrow(G, arrow(G, x, y), arrow(G, x, z)));
            EXPECT_EQ(arrow(G, x, meet(G, y, z)), meet(G, arrow(G, x, y), arrow(G, x, z)));
            EXPECT_EQ(arrow(G, multiply(G, x, y), z), arrow(G, x, arrow(G, y, z)));
            EXPECT_EQ(arrow(G, x, multiply(G, y, z)),
                      multiply(G, arrow(G, arrow(G, z, x), y), arrow(G, x, z)));
            EXPECT_EQ(arrow(G, x, y).empty(), leq(G, x, y));
            // lattice laws on the cone
            EXPECT_EQ(meet(G, x, join(G, x, y)), x);
            EXPECT_EQ(join(G, x, meet(G, x, y)), x);
            EXPECT_EQ(degree(G, x) + degree(G, y),
                      degree(G, meet(G, x, y)) + degree(G, join(G, x, y)));
        }
    }
}

TEST(Fraction, Examples) {
    Germ F(free_abelian_germ()), K(klein_germ());
    Fraction f = make_fraction(F, W(F, {"x"}), W(F, {"y"}));
    EXPECT_EQ(fdeg(F, f), 0);
    Fraction g = make_fraction(F, W(F, {"y"}), W(F, {"x"}));
    EXPECT_EQ(fmul(F, f, g), (Fraction{}));
    EXPECT_EQ(finv(f), g);

    Fraction h = make_fraction(K, W(K, {"x"}), W(K, {"D"}));
    EXPECT_EQ(h, from_word(K, W(K, {"x"})));
    EXPECT_EQ(fdeg(K, h), 1);
    EXPECT_TRUE(fleq(K, from_word(K, W(K, {"D"})), from_word(K, W(K, {"x"}))));
    EXPECT_FALSE(fleq(K, from_word(K, W(K, {"x"})), from_word(K, W(K, {"D"}))));
    EXPECT_EQ(s_power(K, 1), (Fraction{W(K, {"D"}), {}}));
    EXPECT_THROW(left_quotient(K, W(K, {"x"}), W(K, {"y"})), ProductUndefined);
}

TEST(Fraction, GroupLaws) {
    std::vector<GermTable> ts{free_abelian_germ(), klein_germ(), braid3_germ()};
    std::mt19937_64 rng(7);
    for (const auto& t : ts) {
        Germ G(t);
        auto rf = [&] {
            return make_fraction(G, random_word(G, rng, 3), random_word(G, rng, 3));
        };
        for (int i = 0; i < 150; ++i) {
            Fraction a = rf(), b = rf(), c = rf();
            EXPECT_EQ(fdeg(G, fmul(G, a, b)), fdeg(G, a) + fdeg(G, b));
            EXPECT_EQ(fmul(G, fmul(G, a, b), c), fmul(G, a, fmul(G, b, c)));
            EXPECT_EQ(fmul(G, a, finv(a)), Fraction{});
            EXPECT_EQ(fmul(G, Fraction{}, a), a);
            // the representative is canonical
            Word d = random_word(G, rng, 2);
            EXPECT_EQ(make_fraction(G, multiply(G, d, a.den), multiply(G, d, a.num)), a);
            EXPECT_TRUE(gcld(G, a.den, a.num).empty());
            // order is right-invariant
            if (fleq(G, a, b)) EXPECT_TRUE(fleq(G, fmul(G, a, c), fmul(G, b, c)));
            Word u = random_word(G, rng, 3), v = random_word(G, rng, 3);
            EXPECT_EQ(fleq(G, from_word(G, u), from_word(G, v)), leq(G, u, v));
            EXPECT_EQ(fmul(G, from_word(G, u), from_word(G, v)), from_word(G, multiply(G, u, v)));
        }
    }
}
