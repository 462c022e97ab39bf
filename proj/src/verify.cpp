#include "glat/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "glat/beams.hpp"
#include "glat/cone.hpp"
#include "glat/error.hpp"
#include "glat/finlat.hpp"
#include "glat/guard.hpp"
#include "glat/latmod.hpp"
#include "glat/ybe.hpp"

namespace glat::verify {

namespace lm = glat::latmod;
namespace gm = glat::germ;
using gm::Word;
using nlohmann::json;

namespace {

constexpr std::size_t kListedFailures = 20;

// ---- small helpers ----

std::string seq(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string lat(const lm::PLattice& A) { return lm::to_json(A).dump(); }

std::vector<int> conjugate_partition(const std::vector<int>& a) {
    std::vector<int> out;
    for (int i = 1;; ++i) {
        int c = int(std::count_if(a.begin(), a.end(), [&](int x) { return x >= i; }));
        if (!c) return out;
        out.push_back(c);
    }
}

lm::i64 ipow(lm::i64 b, int e) {
    lm::i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

class Recorder {
public:
    explicit Recorder(SuiteReport& r) : r_(r) {}

    void pass() { ++r_.cases; }
    void fail(std::string id, std::string expected, std::string got) {
        ++r_.cases;
        ++r_.failed;
        if (r_.failures.size() < kListedFailures)
            r_.failures.push_back({std::move(id), std::move(expected), std::move(got)});
    }
    // describe() runs only on failure.
    template <class F>
    void expect(bool ok, F&& describe) {
        if (ok) {
            pass();
            return;
        }
        Failure f = describe();
        fail(std::move(f.case_id), std::move(f.expected), std::move(f.got));
    }

private:
    SuiteReport& r_;
};

// Restores the process-wide guard when a suite overrides it.
class GuardScope {
public:
    explicit GuardScope(std::optional<std::size_t> v) : active_(v.has_value()), saved_(max_enum()) {
        if (active_) set_max_enum(*v);
    }
    ~GuardScope() {
        if (active_) set_max_enum(saved_);
    }

private:
    bool active_;
    std::size_t saved_;
};

// ---- corpora ----

const std::vector<ybe::RMap>& solutions(int n) {
    static std::map<int, std::vector<ybe::RMap>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, ybe::enumerate(n).solutions).first;
    return it->second;
}

struct NamedGerm {
    std::string name;
    gm::Germ G;
};

std::vector<NamedGerm> load(const std::vector<std::string>& names) {
    std::vector<NamedGerm> out;
    for (const auto& n : names) out.push_back({n, gm::Germ(*named_germ(n))});
    return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Elements of the negative cone of degree at most d, by degree.
std::vector<Word> cone_ball(const gm::Germ& G, int d) {
    std::set<Word> seen{Word{}};
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (int k = 1; k <= d; ++k) {
        std::set<Word> next;
        for (const Word& w : layer)
            for (int a : G.atoms()) {
                Word c = gm::multiply(G, {a}, w);
                if (!seen.count(c)) next.insert(c);
            }
        layer.assign(next.begin(), next.end());
        for (const Word& w : layer) {
            seen.insert(w);
            out.push_back(w);
        }
        if (out.size() > max_enum()) throw TooLarge("cone ball exceeds the enumeration guard");
    }
    return out;
}

// All words over the non-identity letters of length at most len.
std::vector<Word> all_words(const gm::Germ& G, int len) {
    std::vector<Word> out{{}}, layer{{}};
    for (int l = 0; l < len; ++l) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int a = 0; a < G.size(); ++a) {
                if (a == G.e()) continue;
                Word v = w;
                v.push_back(a);
                next.push_back(std::move(v));
            }
        out.insert(out.end(), next.begin(), next.end());
        if (out.size() > max_enum()) throw TooLarge("word enumeration exceeds the enumeration guard");
        layer = std::move(next);
    }
    return out;
}

Word random_word(const gm::Germ& G, std::mt19937_64& rng, int maxLen) {
    std::uniform_int_distribution<int> len(0, maxLen), letter(0, G.size() - 1);
    Word w(len(rng));
    for (int& a : w) a = letter(rng);
    return gm::right_normal_form(G, w);
}

lm::PLattice random_cone_lattice(std::mt19937_64& rng, const lm::BeamParams& bp, int N) {
    std::uniform_int_distribution<int> e(-6, 6), extra(0, 2);
    const int d = bp.delta;
    int n = d + extra(rng);
    lm::Matrix M(d);
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < d; ++r) M[r].push_back(e(rng) * ipow(bp.p, extra(rng)));
    for (int j = 0; j < d; ++j)
        for (int r = 0; r < d; ++r) M[r].push_back(r == j ? ipow(bp.p, N) : 0);
    return lm::canonicalize(bp, M, 0);
}

std::string id(const std::string& germ, const gm::Germ& G, const Word& w) {
    return germ + " " + gm::show(G, w);
}

std::string params_str(const lm::BeamParams& bp) {
    return "p=" + std::to_string(bp.p) + " delta=" + std::to_string(bp.delta);
}

std::vector<lm::BeamParams> beam_grid(const Config& c, std::vector<lm::BeamParams> fallback) {
    if (c.p || c.delta) return {{c.p.value_or(2), c.delta.value_or(2)}};
    return fallback;
}

// ---- Lat model suites ----

void iota_nonincreasing(const Config& c, SuiteReport& r, Recorder& rec) {
    const bool explicitRange = c.p || c.delta || c.max_degree;
    const int D = c.max_degree.value_or(6);
    for (const auto& bp : beam_grid(c, {{2, 2}, {2, 3}, {3, 2}, {3, 3}})) {
        int d = D;
        while (d > 0 && lm::count_cone(bp, d) > max_enum()) {
            if (explicitRange)
                throw TooLarge(params_str(bp) + " degree <= " + std::to_string(D) +
                               " exceeds the enumeration guard");
            --d;
        }
        r.range += params_str(bp) + " deg<=" + std::to_string(d) + "; ";
        lm::for_each_in_cone(bp, d, [&](const lm::PLattice& A) {
            auto io = lm::iota_by_joins(A);
            auto cp = conjugate_partition(lm::snf_exponents(A));
            rec.expect(io == cp && std::is_sorted(io.rbegin(), io.rend()), [&] {
                return Failure{lat(A), "iota " + seq(cp) + " nonincreasing", "iota " + seq(io)};
            });
        });
    }
    r.params["max_degree"] = D;
}

void meet_irred_equiv(const Config& c, SuiteReport& r, Recorder& rec) {
    std::vector<std::pair<lm::BeamParams, int>> grid{{{2, 2}, 3}, {{2, 3}, 2}};
    if (c.p || c.delta || c.level) grid = {{{c.p.value_or(2), c.delta.value_or(2)}, c.level.value_or(2)}};
    for (const auto& [bp, n] : grid) {
        r.range += "[p^" + std::to_string(n) + "R^delta, R^delta] " + params_str(bp) + "; ";
        auto si = lm::strong_interval(bp, n);
        const auto& L = si.lattice;
        for (int i = 0; i < L.size(); ++i) {
            const auto& A = si.elements[i];
            auto s = lm::snf_profile(A);
            bool byCovers = L.upper_covers(i).size() <= 1;
            auto above = L.interval(i, L.top());
            bool chain = true;
            for (int a : above)
                for (int b : above) chain &= L.leq(a, b) || L.leq(b, a);
            bool walk = lm::dual_chain_by_covers(A);
            rec.expect(s.meet_irreducible == byCovers && s.one_homogeneous == byCovers &&
                           walk == byCovers && chain == byCovers,
                       [&] {
                           return Failure{lat(A), "all equal to cover count test " + yes(byCovers),
                                          "meetIrreducible " + yes(s.meet_irreducible) +
                                              " oneHomogeneous " + yes(s.one_homogeneous) +
                                              " coverWalk " + yes(walk) + " chain " + yes(chain)};
                       });
        }
    }
    const int d = c.max_degree.value_or(4);
    r.range += "germs deg<=" + std::to_string(d);
    for (const auto& [name, G] : load(builtin_germ_names()))
        for (const Word& g : cone_ball(G, d)) {
            auto dd = gm::degree_data(G, g);
            rec.expect(dd.meet_irreducible == dd.one_homogeneous &&
                           dd.meet_irreducible == dd.dual_chain &&
                           std::is_sorted(dd.iota.rbegin(), dd.iota.rend()),
                       [&] {
                           return Failure{id(name, G, g), "equivalent, iota nonincreasing",
                                          "meetIrreducible " + yes(dd.meet_irreducible) +
                                              " oneHomogeneous " + yes(dd.one_homogeneous) +
                                              " dualChain " + yes(dd.dual_chain) + " iota " +
                                              seq(dd.iota)};
                       });
        }
}

void parallelogram(const Config& c, SuiteReport& r, Recorder& rec) {
    const int samples = c.samples.value_or(1000);
    auto grid = beam_grid(c, {{2, 2}, {2, 3}, {3, 2}, {3, 3}});
    std::mt19937_64 rng(c.seed);
    for (int t = 0; t < samples; ++t) {
        const auto& bp = grid[t % grid.size()];
        auto A = random_cone_lattice(rng, bp, 3), B = random_cone_lattice(rng, bp, 3);
        auto m = lm::meet(A, B), j = lm::join(A, B);
        int lhs = lm::degree(A) + lm::degree(B), rhs = lm::degree(m) + lm::degree(j);
        bool order = lm::leq(m, A) && lm::leq(m, B) && lm::leq(A, j) && lm::leq(B, j);
        rec.expect(lhs == rhs && order, [&] {
            return Failure{lat(A) + " " + lat(B), std::to_string(lhs) + " ordered",
                           std::to_string(rhs) + (order ? " ordered" : " unordered")};
        });
    }
    r.range = std::to_string(samples) + " random lattice pairs and word pairs per germ";
    for (const auto& [name, G] : load(builtin_germ_names()))
        for (int t = 0; t < samples / 4; ++t) {
            Word x = random_word(G, rng, 3), y = random_word(G, rng, 3);
            int lhs = gm::degree(G, x) + gm::degree(G, y);
            int rhs = gm::degree(G, gm::meet(G, x, y)) + gm::degree(G, gm::join(G, x, y));
            rec.expect(lhs == rhs, [&] {
                return Failure{name + " " + gm::show(G, x) + " , " + gm::show(G, y),
                               std::to_string(lhs), std::to_string(rhs)};
            });
        }
}

void frozen_frame(const Config& c, SuiteReport& r, Recorder& rec) {
    const int N = c.level.value_or(4);
    std::vector<std::vector<lm::BeamParams>> products{{{2, 2}, {3, 1}},
                                                      {{2, 1}, {3, 2}},
                                                      {{2, 1}, {3, 1}, {2, 2}},
                                                      {{3, 2}, {2, 1}, {3, 1}}};
    for (const auto& ps : products) {
        const int k = int(ps.size());
        std::string pname;
        for (const auto& bp : ps) pname += "(" + params_str(bp) + ")";
        for (int n = 1; n <= N; ++n) {
            std::vector<lm::ProductElement> phi;
            for (int i = 0; i < k; ++i) phi.push_back(lm::product_frozen(ps, n, i));
            for (int S = 1; S < (1 << k); ++S) {
                lm::ProductElement m = lm::product_unit(ps);
                int sum = 0;
                for (int i = 0; i < k; ++i)
                    if (S >> i & 1) {
                        m = lm::product_meet(m, phi[i]);
                        sum += lm::product_degree(phi[i]);
                    }
                int got = lm::product_degree(m);
                rec.expect(got == sum, [&] {
                    return Failure{pname + " n=" + std::to_string(n) + " subset " + std::to_string(S),
                                   "degree " + std::to_string(sum), "degree " + std::to_string(got)};
                });
                if (S == (1 << k) - 1)
                    rec.expect(m == lm::product_shift(ps, n), [&] {
                        return Failure{pname + " n=" + std::to_string(n), "meet = s^-n", "differs"};
                    });
            }
        }
        // every element with slot degrees <= 2 is the meet of its frame joins
        std::vector<std::vector<lm::PLattice>> slots;
        for (const auto& bp : ps) slots.push_back(lm::enumerate_cone(bp, 2));
        std::vector<std::size_t> idx(k, 0);
        while (true) {
            lm::ProductElement x;
            for (int i = 0; i < k; ++i) x.slots.push_back(slots[i][idx[i]]);
            for (int n = std::max(1, lm::product_lambda(x)); n <= N; ++n) {
                lm::ProductElement m = lm::product_unit(ps);
                for (int i = 0; i < k; ++i)
                    m = lm::product_meet(m, lm::product_join(x, lm::product_frozen(ps, n, i)));
                rec.expect(m == x, [&] {
                    std::string s;
                    for (const auto& A : x.slots) s += lat(A) + " ";
                    return Failure{pname + " " + s + "n=" + std::to_string(n), "meet of joins = x",
                                   "differs"};
                });
            }
            auto dec = lm::product_decompose(x);
            rec.expect(dec.dual_frame_ok, [&] {
                return Failure{pname + " decompose", "dualFrameOK true", "false"};
            });
            int i = 0;
            while (i < k && ++idx[i] == slots[i].size()) idx[i++] = 0;
            if (i == k) break;
        }
    }
    const int d = c.max_degree.value_or(4);
    r.range = "products of 2 and 3 beams, n<=" + std::to_string(N) + ", slot deg<=2; germs deg<=" +
              std::to_string(d);
    for (const auto& [name, G] : load(builtin_germ_names())) {
        gm::BeamStructure B(G);
        const auto& X = B.analysis().center_atoms;
        const int k = B.rank();
        for (int n = 1; n <= N; ++n) {
            for (int S = 1; S < (1 << k); ++S) {
                Word m;
                int sum = 0;
                for (int i = 0; i < k; ++i)
                    if (S >> i & 1) {
                        Word f = B.frozen(X[i], n);
                        m = gm::meet(G, m, f);
                        sum += gm::degree(G, f);
                    }
                int got = gm::degree(G, m);
                bool full = S == (1 << k) - 1;
                bool ok = got == sum && (!full || m == gm::delta_power(G, n));
                rec.expect(ok, [&] {
                    return Failure{name + " n=" + std::to_string(n) + " subset " + std::to_string(S),
                                   "degree " + std::to_string(sum) + (full ? ", meet Delta^n" : ""),
                                   "degree " + std::to_string(got) + " meet " + gm::show(G, m)};
                });
            }
        }
        for (const Word& g : cone_ball(G, d))
            for (int n = int(g.size()); n <= std::max(N, int(g.size())); ++n) {
                auto s = B.semibeams(g, n);
                rec.expect(s.meet_ok, [&] {
                    return Failure{id(name, G, g) + " n=" + std::to_string(n), "meet of joins = g",
                                   "differs"};
                });
            }
    }
}

void soc_rad(const Config& c, SuiteReport& r, Recorder& rec) {
    const int samples = c.samples.value_or(200);
    const int D = c.max_degree.value_or(3);
    auto grid = beam_grid(c, {{2, 2}, {3, 2}, {2, 3}});
    std::mt19937_64 rng(c.seed);
    struct Pool {
        lm::BeamParams bp;
        std::vector<lm::PLattice> elems;
        std::map<int, std::vector<lm::PLattice>> byDegree;
    };
    std::vector<Pool> pools;
    for (const auto& bp : grid) {
        Pool p{bp, {}, {}};
        for (auto& A : lm::enumerate_cone(bp, D + 1)) {
            if (lm::degree(A) <= D) p.elems.push_back(A);
            p.byDegree[lm::degree(A)].push_back(A);
        }
        std::shuffle(p.elems.begin(), p.elems.end(), rng);
        pools.push_back(std::move(p));
    }
    for (int t = 0; t < samples; ++t) {
        const auto& P = pools[t % pools.size()];
        const auto& A = P.elems[(t / pools.size()) % P.elems.size()];
        // maximal sublattices of A, found among the enumerated lattices
        lm::PLattice m = A;
        for (const auto& B : P.byDegree.at(lm::degree(A) + 1))
            if (lm::leq(B, A)) m = lm::meet(m, B);
        auto rad = lm::rad(A);
        lm::PLattice s = rad;
        for (const auto& B : lm::upper_covers_in_cone(rad)) s = lm::join(s, B);
        rec.expect(m == rad && s == A && lm::soc(rad) == A, [&] {
            return Failure{lat(A), "cover meet " + lat(rad) + ", socle of pA = A",
                           "cover meet " + lat(m) + ", socle " + lat(s)};
        });
    }
    for (const auto& bp : grid)
        for (int n = 1; n <= 5; ++n) {
            auto f = lm::frozen(bp, n), g = lm::frozen(bp, n - 1);
            lm::PLattice s = f;
            for (const auto& B : lm::upper_covers_in_cone(f)) s = lm::join(s, B);
            rec.expect(lm::soc(f) == g && s == g, [&] {
                return Failure{params_str(bp) + " n=" + std::to_string(n), lat(g), lat(s)};
            });
        }
    const int N = c.level.value_or(4);
    r.range = std::to_string(samples) + " cone lattices of degree <= " + std::to_string(D) +
              "; Phi_n for n <= 5 (lattices) and n <= " + std::to_string(N) + " (germs)";
    for (const auto& [name, G] : load(concat(builtin_germ_names(), solution_germ_names(3)))) {
        gm::BeamStructure B(G);
        for (int z : B.analysis().center_atoms)
            for (int n = 1; n <= N; ++n) {
                Word f = B.frozen(z, n), expect = B.frozen(z, n - 1), got = gm::socle(G, f);
                rec.expect(got == expect, [&] {
                    return Failure{id(name, G, f), gm::show(G, expect), gm::show(G, got)};
                });
            }
        for (const Word& g : cone_ball(G, 3)) {
            if (g.empty()) continue;
            Word got = gm::radical_of_top(G, g);
            rec.expect(got == Word{g.back()}, [&] {
                return Failure{id(name, G, g), gm::show(G, {g.back()}), gm::show(G, got)};
            });
        }
    }
}

void dual_basis(const Config& c, SuiteReport& r, Recorder& rec) {
    lm::BeamParams bp{c.p.value_or(2), c.delta.value_or(4)};
    const int n = c.level.value_or(2);
    r.range = params_str(bp) + " n=" + std::to_string(n);
    auto ys = lm::dual_basis(bp, n);
    for (std::size_t i = 0; i < ys.size(); ++i) {
        auto s = lm::snf_profile(ys[i]);
        auto ups = lm::upper_covers_in_cone(ys[i]).size();
        rec.expect(s.meet_irreducible && ups == 1 && s.degree == n, [&] {
            return Failure{lat(ys[i]), "meet-irreducible of degree " + std::to_string(n),
                           "covers " + std::to_string(ups) + " degree " + std::to_string(s.degree)};
        });
    }
    const int d = bp.delta;
    for (int S = 1; S < (1 << d); ++S) {
        lm::PLattice m = lm::unit(bp);
        int sum = 0;
        for (int i = 0; i < d; ++i)
            if (S >> i & 1) {
                m = lm::meet(m, ys[i]);
                sum += n;
            }
        rec.expect(lm::degree(m) == sum, [&] {
            return Failure{"subset " + std::to_string(S), std::to_string(sum),
                           std::to_string(lm::degree(m))};
        });
        if (S == (1 << d) - 1)
            rec.expect(m == lm::frozen(bp, n), [&] {
                return Failure{"meet of the basis", lat(lm::frozen(bp, n)), lat(m)};
            });
    }
}

std::vector<int> decode(lm::i64 idx, int d, lm::i64 q) {
    std::vector<int> v(d);
    for (int r = d - 1; r >= 0; --r) {
        v[r] = int(idx % q);
        idx /= q;
    }
    return v;
}

lm::i64 encode(const std::vector<int>& v, lm::i64 q) {
    lm::i64 idx = 0;
    for (int x : v) idx = idx * q + ((x % q) + q) % q;
    return idx;
}

// Subgroups of (Z/q)^d, grown one cyclic summand at a time: S + <v>.
std::set<std::vector<bool>> subgroups(int d, lm::i64 q) {
    const lm::i64 total = ipow(q, d);
    std::vector<bool> zero(total, false);
    zero[0] = true;
    std::set<std::vector<bool>> seen{zero};
    std::deque<std::vector<bool>> todo{zero};
    while (!todo.empty()) {
        auto S = todo.front();
        todo.pop_front();
        for (lm::i64 v = 1; v < total; ++v) {
            if (S[v]) continue;
            auto vv = decode(v, d, q);
            std::vector<bool> T(total, false);
            for (lm::i64 s = 0; s < total; ++s) {
                if (!S[s]) continue;
                auto w = decode(s, d, q);
                for (lm::i64 k = 0; k < q; ++k) {
                    T[encode(w, q)] = true;
                    for (int r = 0; r < d; ++r) w[r] += vv[r];
                }
            }
            if (seen.insert(T).second) todo.push_back(std::move(T));
        }
    }
    return seen;
}

void direct_limit(const Config& c, SuiteReport& r, Recorder& rec) {
    std::vector<std::pair<lm::BeamParams, int>> grid{{{2, 2}, 3}, {{3, 2}, 2}, {{2, 3}, 2}};
    if (c.p || c.delta || c.level) grid = {{{c.p.value_or(2), c.delta.value_or(2)}, c.level.value_or(2)}};
    for (const auto& [bp, N] : grid) {
        r.range += "[p^" + std::to_string(N) + "R^delta, R^delta] " + params_str(bp) + "; ";
        const int d = bp.delta;
        const lm::i64 q = ipow(bp.p, N), q1 = q * bp.p;
        auto oracle = subgroups(d, q);
        auto si = lm::strong_interval(bp, N);
        std::set<std::vector<bool>> truncs;
        for (const auto& A : si.elements) {
            auto T = lm::truncation(A, N);
            truncs.insert(T);
            lm::Matrix M(d);
            for (lm::i64 i = 0; i < lm::i64(T.size()); ++i)
                if (T[i]) {
                    auto v = decode(i, d, q);
                    for (int row = 0; row < d; ++row) M[row].push_back(v[row]);
                }
            for (int j = 0; j < d; ++j)
                for (int row = 0; row < d; ++row) M[row].push_back(row == j ? q : 0);
            auto lifted = lm::canonicalize(bp, M, 0);
            rec.expect(lifted == A, [&] { return Failure{lat(A), "lift of truncation", lat(lifted)}; });
            auto T1 = lm::truncation(A, N + 1);
            bool commute = true;
            for (lm::i64 i = 0; i < lm::i64(T1.size()); ++i) commute &= T1[i] == T[encode(decode(i, d, q1), q)];
            rec.expect(commute, [&] {
                return Failure{lat(A), "truncations at levels N and N+1 agree", "differ"};
            });
        }
        rec.expect(truncs == oracle, [&] {
            return Failure{params_str(bp) + " N=" + std::to_string(N),
                           std::to_string(oracle.size()) + " submodules",
                           std::to_string(truncs.size()) + " distinct truncations"};
        });
    }
}

void strong_geometric(const Config& c, SuiteReport& r, Recorder& rec) {
    auto grid = beam_grid(c, {{2, 2}, {2, 3}, {2, 4}});
    for (const auto& bp : grid) {
        r.range += params_str(bp) + " n=1; ";
        auto si = lm::strong_interval(bp, 1);
        auto cl = finlat::classify(si.lattice);
        bool primary = cl.modular && finlat::is_primary(si.lattice);
        auto center = finlat::center(si.lattice);
        auto oracle = subgroups(bp.delta, bp.p).size();
        rec.expect(cl.modular && cl.geometric && primary && center.size() == 2 &&
                       std::size_t(si.lattice.size()) == oracle,
                   [&] {
                       return Failure{params_str(bp),
                                      "modular geometric primary, center 2, " +
                                          std::to_string(oracle) + " elements",
                                      "modular " + yes(cl.modular) + " geometric " +
                                          yes(cl.geometric) + " primary " + yes(primary) +
                                          " center " + std::to_string(center.size()) + ", " +
                                          std::to_string(si.lattice.size()) + " elements"};
                   });
    }
    r.range += "germ intervals";
    for (const auto& [name, G] : load(concat(builtin_germ_names(), solution_germ_names(3)))) {
        auto cl = finlat::classify(G.lattice());
        rec.expect(cl.modular && cl.geometric, [&] {
            return Failure{name, "modular geometric",
                           "modular " + yes(cl.modular) + " geometric " + yes(cl.geometric)};
        });
    }
}

void s_join_atoms(const Config& c, SuiteReport& r, Recorder& rec) {
    auto grid = beam_grid(c, {{2, 2}, {3, 2}, {2, 3}, {2, 4}});
    for (const auto& bp : grid) {
        r.range += params_str(bp) + "; ";
        auto si = lm::strong_interval(bp, 1);
        lm::PLattice j = lm::unit(bp);
        lm::i64 count = 0;
        for (const auto& B : si.elements) {
            if (lm::degree(B) != bp.delta - 1) continue;
            auto C = lm::soc(B);  // a cover of R^delta
            ++count;
            j = lm::join(j, C);
        }
        lm::i64 expect = (ipow(bp.p, bp.delta) - 1) / (bp.p - 1);
        rec.expect(j == lm::soc(lm::unit(bp)) && count == expect, [&] {
            return Failure{params_str(bp), lat(lm::soc(lm::unit(bp))) + " from " + std::to_string(expect) + " covers",
                           lat(j) + " from " + std::to_string(count) + " covers"};
        });
    }
    r.range += "germs";
    for (const auto& [name, G] : load(concat(builtin_germ_names(), solution_germ_names(3)))) {
        int m = G.e();
        for (int a : G.atoms()) m = G.meet(m, a);
        rec.expect(m == G.delta(), [&] { return Failure{name, "meet of dual atoms = D", G.name(m)}; });
    }
}

void conj_auto(const Config& c, SuiteReport& r, Recorder& rec) {
    const int samples = c.samples.value_or(200);
    auto grid = beam_grid(c, {{2, 2}, {2, 3}, {3, 2}});
    std::mt19937_64 rng(c.seed);
    for (int t = 0; t < samples; ++t) {
        const auto& bp = grid[t % grid.size()];
        auto A = random_cone_lattice(rng, bp, 3), B = random_cone_lattice(rng, bp, 3);
        bool ok = lm::rad(lm::soc(A)) == A &&
                  lm::soc(lm::meet(A, B)) == lm::meet(lm::soc(A), lm::soc(B)) &&
                  lm::soc(lm::join(A, B)) == lm::join(lm::soc(A), lm::soc(B)) &&
                  lm::leq(A, B) == lm::leq(lm::soc(A), lm::soc(B));
        rec.expect(ok, [&] {
            return Failure{lat(A) + " " + lat(B), "scalar shift is a lattice automorphism", "fails"};
        });
    }
    r.range = std::to_string(samples) + " random lattice pairs; germ intervals";
    for (const auto& [name, G] : load(concat(builtin_germ_names(), solution_germ_names(3)))) {
        const int n = G.size();
        std::vector<int> img(n);
        for (int a = 0; a < n; ++a) img[a] = G.conj_inv(a);
        std::vector<int> sorted = img;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> ids(n);
        std::iota(ids.begin(), ids.end(), 0);
        rec.expect(sorted == ids, [&] { return Failure{name, "bijection", "not injective"}; });
        Word D{G.delta()};
        for (int a = 0; a < n; ++a) {
            Word lhs = gm::multiply(G, D, a == G.e() ? Word{} : Word{img[a]});
            Word rhs = gm::multiply(G, a == G.e() ? Word{} : Word{a}, D);
            rec.expect(lhs == rhs, [&] {
                return Failure{name + " " + G.name(a), "D a'' = a D", gm::show(G, lhs) + " vs " + gm::show(G, rhs)};
            });
            for (int b = 0; b < n; ++b)
                rec.expect(img[G.meet(a, b)] == G.meet(img[a], img[b]) &&
                               img[G.join(a, b)] == G.join(img[a], img[b]),
                           [&] {
                               return Failure{name + " " + G.name(a) + " " + G.name(b),
                                              "meet and join preserved", "not preserved"};
                           });
        }
    }
}

// ---- germ suites ----

void center_arrow(const Config& c, SuiteReport& r, Recorder& rec) {
    const int n = c.level.value_or(3);
    r.range = "builtin germs and structure germs of solutions with n <= " + std::to_string(n);
    for (const auto& [name, G] : load(concat(builtin_germ_names(), solution_germ_names(n)))) {
        auto A = gm::interval_analysis(G);
        for (int a : A.center)
            for (int b : A.center) {
                int x = G.arrow(a, b);
                rec.expect(std::binary_search(A.center.begin(), A.center.end(), x), [&] {
                    return Failure{name + " " + G.name(a) + " -> " + G.name(b), "central",
                                   G.name(x) + " not central"};
                });
            }
    }
}

void ulm(const Config& c, SuiteReport& r, Recorder& rec) {
    const int n = c.level.value_or(3);
    r.range = "builtin germs and structure germs of solutions with n <= " + std::to_string(n);
    for (const auto& [name, G] : load(concat(builtin_germ_names(), solution_germ_names(n)))) {
        auto A = gm::interval_analysis(G);
        for (int a = 0; a < G.size(); ++a) {
            bool central = std::binary_search(A.center.begin(), A.center.end(), a);
            int U = A.ulm[G.comp(a)][0], L = A.ulm[a][1];
            rec.expect(U == L && (A.ulm[a][2] == 0) == central, [&] {
                return Failure{name + " " + G.name(a),
                               "U(comp) = L = " + std::to_string(L) + ", M = 0 iff central",
                               "U(comp) = " + std::to_string(U) + ", M = " +
                                   std::to_string(A.ulm[a][2]) + " central " + yes(central)};
            });
        }
    }
}

void duality(const Config& c, SuiteReport& r, Recorder& rec) {
    const int maxN = c.level.value_or(3);
    r.range = "builtin germs and structure germs of solutions with n <= " + std::to_string(maxN);
    for (const auto& [name, G] : load(concat(builtin_germ_names(), solution_germ_names(maxN)))) {
        auto A = gm::interval_analysis(G);
        const auto& X = A.center_atoms;
        rec.expect(A.d_bijective, [&] { return Failure{name, "D bijective on X", "not bijective"}; });
        if (!A.d_bijective) continue;
        for (int x : X)
            for (int y : X) {
                if (x == y) continue;
                int xy = G.arrow(x, y);
                bool inX = std::find(X.begin(), X.end(), xy) != X.end();
                int lhs = inX ? A.D[xy] : -1, rhs = G.arrow(G.arrow(y, x), A.D[y]);
                rec.expect(inX && lhs == rhs, [&] {
                    return Failure{name + " " + G.name(x) + " " + G.name(y),
                                   "D(x->y) = " + G.name(rhs),
                                   inX ? G.name(lhs) : "x->y outside X"};
                });
            }
    }
    for (int n = 1; n <= maxN; ++n) {
        const auto& sols = solutions(n);
        for (std::size_t i = 0; i < sols.size(); ++i) {
            const auto& R = sols[i];
            std::string name = "solution:" + std::to_string(n) + ":" + std::to_string(i);
            gm::Germ G(ybe::structure_germ(R));
            auto L = ybe::lalgebra_from_germ(G);
            bool ok = L == ybe::to_lalgebra(R) && ybe::to_rmap(L) == R && ybe::validate(L).ok();
            rec.expect(ok, [&] {
                return Failure{name, "extracted L-algebra round-trips to the solution", "differs"};
            });
        }
    }
}

void scaffold(const Config& c, SuiteReport& r, Recorder& rec) {
    const int n = c.level.value_or(2);
    r.range = "degree bound 2 deg(D) capped at " + std::to_string(c.max_degree.value_or(6)) +
              "; structure germs n <= " + std::to_string(n);
    for (const auto& [name, G] : load(concat(builtin_germ_names(), solution_germ_names(n)))) {
        gm::BeamStructure B(G);
        int bound = std::min(2 * G.degree(G.delta()), c.max_degree.value_or(6));
        auto s = B.scaffold(bound);
        bool frozenInside = true;
        for (int z : B.analysis().center_atoms)
            for (int k = 1; k * G.degree(z) <= bound; ++k)
                frozenInside &= std::binary_search(s.elements.begin(), s.elements.end(), B.frozen(z, k),
                                                   [&](const Word& a, const Word& b) {
                                                       int da = gm::degree(G, a), db = gm::degree(G, b);
                                                       return da != db ? da < db : a < b;
                                                   });
        rec.expect(s.distributive && frozenInside, [&] {
            return Failure{name + " bound " + std::to_string(bound), "distributive, holds Phi_k",
                           "distributive " + yes(s.distributive) + " frozen " + yes(frozenInside)};
        });
    }
}

void semibeam_product(const Config& c, SuiteReport& r, Recorder& rec) {
    const int d = c.max_degree.value_or(4), maxN = c.level.value_or(3);
    r.range = "elements of degree <= " + std::to_string(d) + ", structure germs n <= " +
              std::to_string(maxN);
    for (const auto& [name, G] : load(concat(builtin_germ_names(), solution_germ_names(maxN)))) {
        gm::BeamStructure S(G);
        const int k = S.rank();
        for (const Word& g : cone_ball(G, d)) {
            auto s = S.semibeams(g);
            bool stable = S.semibeams(g, s.n + 1).components == s.components;
            bool inBeams = true;
            for (int i = 0; i < k; ++i) inBeams &= S.in_semibeam(s.components[i], i);
            auto I = gm::interval_above(G, g);
            std::vector<std::vector<Word>> cand(k);
            for (int i = 0; i < k; ++i) {
                Word phi = S.frozen(S.analysis().center_atoms[i], s.n);
                for (const Word& y : I.elements)
                    if (gm::leq(G, phi, y)) cand[i].push_back(y);
            }
            int found = 0;
            bool same = true;
            std::vector<std::size_t> idx(k, 0);
            while (true) {
                Word m;
                for (int i = 0; i < k; ++i) m = gm::meet(G, m, cand[i][idx[i]]);
                if (m == g) {
                    ++found;
                    for (int i = 0; i < k; ++i) same &= cand[i][idx[i]] == s.components[i];
                }
                int i = 0;
                while (i < k && ++idx[i] == cand[i].size()) idx[i++] = 0;
                if (i == k) break;
            }
            rec.expect(s.meet_ok && stable && inBeams && found == 1 && same, [&] {
                return Failure{id(name, G, g), "one meet representation, the semibeam components",
                               std::to_string(found) + " representations, meet " + yes(s.meet_ok) +
                                   " stable " + yes(stable) + " inBeams " + yes(inBeams)};
            });
        }
    }
}

void rigidity(const Config& c, SuiteReport& r, Recorder& rec) {
    const int d = c.max_degree.value_or(3), maxN = c.level.value_or(2);
    r.range = "elements of degree <= " + std::to_string(d) + ", frozen depth 3, structure germs n <= " +
              std::to_string(maxN);
    for (const auto& [name, G] : load(concat(builtin_germ_names(), solution_germ_names(maxN)))) {
        gm::BeamStructure S(G);
        for (const Word& g : cone_ball(G, d)) {
            std::string err;
            std::vector<int> pi;
            try {
                pi = S.rigidity(g, 3);
            } catch (const FactorizationMismatch& e) {
                err = e.what();
            }
            rec.expect(err.empty() && int(pi.size()) == S.rank(), [&] {
                return Failure{id(name, G, g), "a permutation of the semibeams", err};
            });
        }
    }
}

void beam_shift(const Config& c, SuiteReport& r, Recorder& rec) {
    const int samples = c.samples.value_or(100);
    std::mt19937_64 rng(c.seed);
    r.range = std::to_string(samples) + " random fractions per germ, shifts n, n+1, n+2";
    for (const auto& [name, G] : load(builtin_germ_names())) {
        gm::BeamStructure S(G);
        auto elems = cone_ball(G, 3);
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        for (int t = 0; t < samples; ++t) {
            auto f = gm::make_fraction(G, elems[pick(rng)], elems[pick(rng)]);
            auto b = S.beams(f);
            bool ok = S.beams(f, b.n + 1).components == b.components &&
                      S.beams(f, b.n + 2).components == b.components && S.recompose(b.components) == f;
            rec.expect(ok, [&] {
                return Failure{name + " " + gm::show(G, f), "shift independent, recomposes", "differs"};
            });
        }
    }
}

void primary(const Config& c, SuiteReport& r, Recorder& rec) {
    std::vector<std::pair<lm::BeamParams, int>> grid{
        {{2, 2}, 1}, {{2, 2}, 2}, {{3, 2}, 1}, {{2, 3}, 1}, {{2, 1}, 3}};
    if (c.p || c.delta || c.level) grid = {{{c.p.value_or(2), c.delta.value_or(2)}, c.level.value_or(1)}};
    for (const auto& [bp, n] : grid) {
        r.range += params_str(bp) + " n=" + std::to_string(n) + "; ";
        auto si = lm::strong_interval(bp, n);
        rec.expect(finlat::is_primary(si.lattice), [&] {
            return Failure{params_str(bp) + " n=" + std::to_string(n), "primary", "not primary"};
        });
    }
    r.range += "beams [Phi_n(z), e] in germs for n <= 2";
    for (const auto& [name, G] : load(concat(builtin_germ_names(), solution_germ_names(3)))) {
        gm::BeamStructure S(G);
        for (int z : S.analysis().center_atoms)
            for (int n = 1; n <= 2; ++n) {
                Word f = S.frozen(z, n);
                auto I = gm::interval_above(G, f);
                rec.expect(finlat::is_primary(I.lattice), [&] {
                    return Failure{id(name, G, f), "primary", "not primary"};
                });
            }
    }
}

std::vector<int> factor_degrees(const gm::Germ& G, const Word& w) {
    std::vector<int> out;
    for (int a : w) out.push_back(G.degree(a));
    return out;
}

void word_suite(const Config& c, SuiteReport& r, const std::function<void(const std::string&, const gm::Germ&, const Word&)>& f) {
    const int len = c.max_length.value_or(4), maxN = c.level.value_or(3);
    r.range = "all words of length <= " + std::to_string(len) +
              " in builtin germs and structure germs of solutions with n <= " + std::to_string(maxN);
    for (const auto& [name, G] : load(concat(builtin_germ_names(), solution_germ_names(maxN))))
        for (const Word& w : all_words(G, len)) f(name, G, w);
}

std::string word_id(const std::string& name, const gm::Germ& G, const Word& w) {
    std::string s = name + " [";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + G.name(w[i]);
    return s + "]";
}

void normal_form(const Config& c, SuiteReport& r, Recorder& rec) {
    word_suite(c, r, [&](const std::string& name, const gm::Germ& G, const Word& w) {
        Word nf = gm::right_normal_form(G, w);
        bool unique = gm::right_normal_form(G, w, gm::Sweep::LeftToRight) == nf;
        for (std::uint64_t k = 0; k < 3; ++k)
            unique &= gm::right_normal_form(G, w, gm::Sweep::Shuffled, c.seed + k) == nf;
        Word closed = gm::closed_form_factors(G, nf);
        bool rm = gm::is_right_normal(G, nf);
        rec.expect(rm && unique && closed == nf, [&] {
            return Failure{word_id(name, G, w), gm::show(G, nf) + " normal, unique, closed formula",
                           "RM " + yes(rm) + " unique " + yes(unique) + " closed " + gm::show(G, closed)};
        });
    });
}

void left_right(const Config& c, SuiteReport& r, Recorder& rec) {
    word_suite(c, r, [&](const std::string& name, const gm::Germ& G, const Word& w) {
        Word nf = gm::right_normal_form(G, w), lf = gm::left_normal_form(G, w);
        auto rd = factor_degrees(G, nf), ld = factor_degrees(G, lf);
        std::reverse(rd.begin(), rd.end());
        bool ok = gm::is_left_normal(G, lf) && gm::right_normal_form(G, lf) == nf && ld == rd;
        rec.expect(ok, [&] {
            return Failure{word_id(name, G, w), "left degrees " + seq(rd), "left degrees " + seq(ld)};
        });
    });
}

void homog_left(const Config& c, SuiteReport& r, Recorder& rec) {
    word_suite(c, r, [&](const std::string& name, const gm::Germ& G, const Word& w) {
        Word nf = gm::right_normal_form(G, w);
        auto deg = factor_degrees(G, nf);
        if (deg.empty() || std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end())
            return;
        Word lf = gm::left_normal_form(G, nf);
        rec.expect(gm::is_left_normal(G, nf) && lf == nf, [&] {
            return Failure{word_id(name, G, w), gm::show(G, nf), gm::show(G, lf)};
        });
    });
}

void fractions(const Config& c, SuiteReport& r, Recorder& rec) {
    const int samples = c.samples.value_or(500);
    std::mt19937_64 rng(c.seed);
    r.range = std::to_string(samples) + " random fraction pairs per builtin germ";
    for (const auto& [name, G] : load(builtin_germ_names())) {
        auto rf = [&] { return gm::make_fraction(G, random_word(G, rng, 3), random_word(G, rng, 3)); };
        for (int t = 0; t < samples; ++t) {
            auto a = rf(), b = rf(), x = rf();
            int dab = gm::fdeg(G, gm::fmul(G, a, b)), sum = gm::fdeg(G, a) + gm::fdeg(G, b);
            rec.expect(dab == sum, [&] {
                return Failure{name + " " + gm::show(G, a) + " * " + gm::show(G, b),
                               "deg " + std::to_string(sum), "deg " + std::to_string(dab)};
            });
            bool group = gm::fmul(G, gm::fmul(G, a, b), x) == gm::fmul(G, a, gm::fmul(G, b, x)) &&
                         gm::fmul(G, a, gm::finv(a)) == gm::Fraction{} &&
                         gm::fmul(G, gm::finv(a), a) == gm::Fraction{} &&
                         gm::fmul(G, gm::Fraction{}, a) == a && gm::gcld(G, a.den, a.num).empty();
            Word u = random_word(G, rng, 3), v = random_word(G, rng, 3);
            bool embeds = gm::fmul(G, gm::from_word(G, u), gm::from_word(G, v)) ==
                              gm::from_word(G, gm::multiply(G, u, v)) &&
                          gm::fleq(G, gm::from_word(G, u), gm::from_word(G, v)) == gm::leq(G, u, v);
            rec.expect(group && embeds, [&] {
                return Failure{name + " " + gm::show(G, a) + " , " + gm::show(G, b) + " , " + gm::show(G, x),
                               "group laws and cone embedding",
                               "group " + yes(group) + " embedding " + yes(embeds)};
            });
        }
    }
}

void arrow_identities(const Config& c, SuiteReport& r, Recorder& rec) {
    const int samples = c.samples.value_or(1000);
    std::mt19937_64 rng(c.seed);
    r.range = std::to_string(samples) + " random triples per builtin germ";
    for (const auto& [name, G] : load(builtin_germ_names())) {
        const Word e;
        auto A = [&](const Word& x, const Word& y) { return gm::arrow(G, x, y); };
        auto M = [&](const Word& x, const Word& y) { return gm::meet(G, x, y); };
        auto P = [&](const Word& x, const Word& y) { return gm::multiply(G, x, y); };
        for (int t = 0; t < samples; ++t) {
            Word x = random_word(G, rng, 3), y = random_word(G, rng, 3), z = random_word(G, rng, 3);
            std::vector<std::pair<const char*, bool>> laws{
                {"S1a", A(x, x) == e && A(x, e) == e},
                {"S1b", A(e, x) == x},
                {"S2", P(A(x, y), x) == M(x, y)},
                {"S3", A(M(x, y), z) == A(A(x, y), A(x, z))},
                {"S4", A(x, M(y, z)) == M(A(x, y), A(x, z))},
                {"S5", A(P(x, y), z) == A(x, A(y, z))},
                {"S6", A(x, P(y, z)) == P(A(A(z, x), y), A(x, z))},
                {"S7", A(x, y).empty() == gm::leq(G, x, y)}};
            for (const auto& [law, ok] : laws)
                rec.expect(ok, [&] {
                    return Failure{name + " x=" + gm::show(G, x) + " y=" + gm::show(G, y) +
                                       " z=" + gm::show(G, z),
                                   law, "violated"};
                });
        }
    }
}

void ybe_braid(const Config& c, SuiteReport& r, Recorder& rec) {
    const int maxN = c.level.value_or(3);
    r.range = "every solution with n <= " + std::to_string(maxN) + "; double enumeration n = 2.." +
              std::to_string(maxN);
    for (int n = 1; n <= maxN; ++n) {
        const auto& sols = solutions(n);
        for (std::size_t i = 0; i < sols.size(); ++i) {
            const auto& R = sols[i];
            int bad = 0;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z) {
                        // R12 R23 R12 versus R23 R12 R23 on (x, y, z)
                        auto r12 = [&](std::array<int, 3> t) {
                            auto [a, b] = R(t[0], t[1]);
                            return std::array<int, 3>{a, b, t[2]};
                        };
                        auto r23 = [&](std::array<int, 3> t) {
                            auto [a, b] = R(t[1], t[2]);
                            return std::array<int, 3>{t[0], a, b};
                        };
                        std::array<int, 3> t{x, y, z};
                        bool ok = r12(r23(r12(t))) == r23(r12(r23(t)));
                        bad += !ok;
                        rec.expect(ok, [&] {
                            return Failure{"solution:" + std::to_string(n) + ":" + std::to_string(i) +
                                               " (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                               std::to_string(z) + ")",
                                           "braid relation", "violated"};
                        });
                    }
            bool report = ybe::validate(R).ok();
            rec.expect(report == (bad == 0), [&] {
                return Failure{"solution:" + std::to_string(n) + ":" + std::to_string(i),
                               "validate agrees with the triple check", yes(report)};
            });
        }
    }
    for (int n = 2; n <= std::min(maxN, 3); ++n) {
        auto a = solutions(n);
        auto b = ybe::enumerate_by_families(n);
        std::sort(b.begin(), b.end());
        rec.expect(a == b, [&] {
            return Failure{"enumerate " + std::to_string(n), std::to_string(a.size()) + " solutions",
                           std::to_string(b.size()) + " solutions by families"};
        });
    }
}

using SuiteFn = void (*)(const Config&, SuiteReport&, Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"iota_nonincreasing", iota_nonincreasing},
        {"meet_irred_equiv", meet_irred_equiv},
        {"parallelogram", parallelogram},
        {"frozen_frame", frozen_frame},
        {"center_arrow", center_arrow},
        {"ULM", ulm},
        {"duality", duality},
        {"scaffold", scaffold},
        {"semibeam_product", semibeam_product},
        {"rigidity", rigidity},
        {"soc_rad", soc_rad},
        {"primary", primary},
        {"normal_form", normal_form},
        {"left_right", left_right},
        {"homog_left", homog_left},
        {"dual_basis", dual_basis},
        {"direct_limit", direct_limit},
        {"fractions", fractions},
        {"strong_geometric", strong_geometric},
        {"s_join_atoms", s_join_atoms},
        {"conj_auto", conj_auto},
        {"arrow_identities", arrow_identities},
        {"beam_shift", beam_shift},
        {"ybe_braid", ybe_braid},
    };
    return r;
}

}  // namespace

Config config_from_json(const json& j) {
    if (!j.is_object()) throw BadInput("config must be a JSON object");
    static const std::set<std::string> known{"max_enum", "max_degree", "max_length", "level",
                                             "p",        "delta",      "seed",       "samples",
                                             "format",   "input",      "output"};
    Config c;
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) throw BadInput("unknown config key '" + key + "'");
        if (key == "format" || key == "input" || key == "output") {
            if (!value.is_string()) throw BadInput("config key '" + key + "' must be a string");
            continue;
        }
        if (!value.is_number_integer()) throw BadInput("config key '" + key + "' must be an integer");
        if (key != "seed" && value.get<long long>() <= 0)
            throw BadInput("config key '" + key + "' must be positive");
    }
    auto opt = [&](const char* k, std::optional<int>& out) {
        if (j.contains(k)) out = j[k].get<int>();
    };
    if (j.contains("max_enum")) c.max_enum = j["max_enum"].get<std::size_t>();
    opt("max_degree", c.max_degree);
    opt("max_length", c.max_length);
    opt("level", c.level);
    opt("p", c.p);
    opt("delta", c.delta);
    opt("samples", c.samples);
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("format")) c.format = j["format"].get<std::string>();
    if (j.contains("input")) c.input = j["input"].get<std::string>();
    if (j.contains("output")) c.output = j["output"].get<std::string>();
    if (c.format != "text" && c.format != "json" && c.format != "dot")
        throw BadInput("format must be json, text or dot");
    return c;
}

json to_json(const Config& c) {
    json j = json::object();
    if (c.max_enum) j["max_enum"] = *c.max_enum;
    if (c.max_degree) j["max_degree"] = *c.max_degree;
    if (c.max_length) j["max_length"] = *c.max_length;
    if (c.level) j["level"] = *c.level;
    if (c.p) j["p"] = *c.p;
    if (c.delta) j["delta"] = *c.delta;
    if (c.samples) j["samples"] = *c.samples;
    j["seed"] = c.seed;
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [n, f] : registry()) out.push_back(n);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const Config& cfg) {
    auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& e) { return e.first == name; });
    if (it == registry().end()) throw UnknownSuite("no suite named '" + name + "'");
    GuardScope guard(cfg.max_enum);
    SuiteReport r;
    r.name = name;
    r.params = to_json(cfg);
    r.params["max_enum"] = max_enum();
    Recorder rec(r);
    auto t0 = std::chrono::steady_clock::now();
    it->second(cfg, r, rec);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    while (!r.range.empty() && (r.range.back() == ' ' || r.range.back() == ';')) r.range.pop_back();
    return r;
}

std::vector<SuiteReport> run_suites(const std::string& name, const Config& cfg) {
    if (name != "all") return {run_suite(name, cfg)};
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, cfg));
    return out;
}

json to_json(const SuiteReport& r) {
    json f = json::array();
    for (const auto& x : r.failures) f.push_back({{"case", x.case_id}, {"expected", x.expected}, {"got", x.got}});
    return {{"suite", r.name},   {"params", r.params},        {"range", r.range},
            {"cases", r.cases},  {"failed", r.failed},        {"failures", f},
            {"pass", r.passed()}, {"seconds", r.seconds}};
}

std::string to_text(const SuiteReport& r) {
    std::ostringstream os;
    os << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failed
       << " failed, " << std::fixed;
    os.precision(2);
    os << r.seconds << " s\n  range: " << r.range << "\n";
    for (const auto& f : r.failures)
        os << "  case " << f.case_id << "\n    expected: " << f.expected << "\n    got:      " << f.got << "\n";
    return os.str();
}

std::vector<std::string> builtin_germ_names() {
    return {"free_abelian", "klein", "braid3", "integer", "integer*klein", "integer*braid3"};
}

std::vector<std::string> solution_germ_names(int maxN) {
    std::vector<std::string> out;
    for (int n = 1; n <= maxN; ++n)
        for (std::size_t i = 0; i < solutions(n).size(); ++i)
            out.push_back("solution:" + std::to_string(n) + ":" + std::to_string(i));
    return out;
}

std::optional<gm::GermTable> named_germ(const std::string& name) {
    static const std::map<std::string, gm::GermTable (*)()> builtin{
        {"free_abelian", gm::free_abelian_germ},
        {"klein", gm::klein_germ},
        {"braid3", gm::braid3_germ},
        {"integer", gm::integer_germ}};
    if (name.rfind("solution:", 0) == 0) {
        int n = 0;
        std::size_t i = 0;
        char sep = 0;
        std::istringstream is(name.substr(9));
        if (!(is >> n >> sep >> i) || sep != ':' || n < 1 || n > 4) return std::nullopt;
        const auto& sols = solutions(n);
        if (i >= sols.size()) return std::nullopt;
        return ybe::structure_germ(sols[i]);
    }
    std::optional<gm::GermTable> out;
    std::size_t start = 0;
    while (start <= name.size()) {
        std::size_t end = name.find('*', start);
        std::string part = name.substr(start, end == std::string::npos ? std::string::npos : end - start);
        auto it = builtin.find(part);
        if (it == builtin.end()) return std::nullopt;
        out = out ? gm::product_table(*out, it->second()) : it->second();
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

}  // namespace glat::verify
