#include "glat/finlat.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "glat/error.hpp"

namespace glat::finlat {

namespace {

constexpr int kMaxLattice = 6000;

std::string pair_text(int a, int b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

Lattice Lattice::from_covers(int n, const std::vector<Cover>& covers,
                             std::vector<std::string> labels) {
    if (n <= 0) throw NotALattice("a lattice needs at least one element");
    if (n > kMaxLattice) throw TooLarge("lattice with " + std::to_string(n) + " elements");
    if (!labels.empty() && int(labels.size()) != n)
        throw BadInput("label count does not match element count");

    std::vector<std::vector<int>> up(n), down(n);
    std::set<Cover> seen;
    for (auto [lo, hi] : covers) {
        if (lo < 0 || hi < 0 || lo >= n || hi >= n)
            throw BadInput("cover " + pair_text(lo, hi) + " out of range");
        if (lo == hi) throw CyclicCovers("self cover at " + std::to_string(lo));
        if (!seen.insert({lo, hi}).second) continue;
        up[lo].push_back(hi);
        down[hi].push_back(lo);
    }

    // Kahn's algorithm from the minimal elements upward.
    std::vector<int> indeg(n), order;
    order.reserve(n);
    std::queue<int> q;
    for (int v = 0; v < n; ++v) {
        indeg[v] = int(down[v].size());
        if (!indeg[v]) q.push(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (int w : up[v])
            if (--indeg[w] == 0) q.push(w);
    }
    if (int(order.size()) != n) throw CyclicCovers("cover relation contains a cycle");

    Lattice L;
    L.n_ = n;
    L.labels_ = std::move(labels);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    L.words_ = (std::size_t(n) + 63) / 64;
    const std::size_t W = L.words_;

    // below_ rows are indexed by element id; bits by topological position.
    L.below_.assign(std::size_t(n) * W, 0);
    for (int v : order) {
        std::uint64_t* row = &L.below_[std::size_t(v) * W];
        row[pos[v] / 64] |= std::uint64_t(1) << (pos[v] % 64);
        for (int w : down[v]) {
            const std::uint64_t* src = &L.below_[std::size_t(w) * W];
            for (std::size_t k = 0; k < W; ++k) row[k] |= src[k];
        }
    }
    std::vector<std::uint64_t> above(std::size_t(n) * W, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::uint64_t* row = &above[std::size_t(v) * W];
        row[pos[v] / 64] |= std::uint64_t(1) << (pos[v] % 64);
        for (int w : up[v]) {
            const std::uint64_t* src = &above[std::size_t(w) * W];
            for (std::size_t k = 0; k < W; ++k) row[k] |= src[k];
        }
    }

    std::vector<int> minimal, maximal;
    for (int v = 0; v < n; ++v) {
        if (down[v].empty()) minimal.push_back(v);
        if (up[v].empty()) maximal.push_back(v);
    }
    if (minimal.size() != 1) throw NotALattice("no unique least element");
    if (maximal.size() != 1) throw NotALattice("no unique greatest element");
    L.bottom_ = minimal[0];
    L.top_ = maximal[0];

    // Hasse reduction: drop covers implied through another path.
    L.up_.assign(n, {});
    L.down_.assign(n, {});
    for (int hi = 0; hi < n; ++hi) {
        for (int lo : down[hi]) {
            bool direct = true;
            for (int mid : down[hi]) {
                if (mid == lo) continue;
                const std::uint64_t* row = &L.below_[std::size_t(mid) * W];
                if (row[pos[lo] / 64] >> (pos[lo] % 64) & 1) {
                    direct = false;
                    break;
                }
            }
            if (direct) {
                L.up_[lo].push_back(hi);
                L.down_[hi].push_back(lo);
                L.covers_.push_back({lo, hi});
            }
        }
    }
    for (auto& v : L.up_) std::sort(v.begin(), v.end());
    for (auto& v : L.down_) std::sort(v.begin(), v.end());
    std::sort(L.covers_.begin(), L.covers_.end());

    L.height_.assign(n, 0);
    for (int v : order)
        for (int w : L.down_[v]) L.height_[v] = std::max(L.height_[v], L.height_[w] + 1);

    auto extreme = [&](const std::vector<std::uint64_t>& sets, int a, int b, bool highest,
                       std::vector<std::uint64_t>& tmp) -> int {
        const std::uint64_t* ra = &sets[std::size_t(a) * W];
        const std::uint64_t* rb = &sets[std::size_t(b) * W];
        int best = -1;
        for (std::size_t k = 0; k < W; ++k) tmp[k] = ra[k] & rb[k];
        if (highest) {
            for (std::size_t k = W; k-- > 0;)
                if (tmp[k]) {
                    best = int(k * 64 + 63 - std::countl_zero(tmp[k]));
                    break;
                }
        } else {
            for (std::size_t k = 0; k < W; ++k)
                if (tmp[k]) {
                    best = int(k * 64 + std::countr_zero(tmp[k]));
                    break;
                }
        }
        if (best < 0) return -1;
        int c = order[best];
        const std::uint64_t* rc = &sets[std::size_t(c) * W];
        for (std::size_t k = 0; k < W; ++k)
            if (rc[k] != tmp[k]) return -1;
        return c;
    };

    L.meet_.assign(std::size_t(n) * n, -1);
    L.join_.assign(std::size_t(n) * n, -1);
    std::vector<std::uint64_t> tmp(W);
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            int m = extreme(L.below_, a, b, true, tmp);
            if (m < 0) throw NotALattice("elements " + pair_text(a, b) + " have no meet");
            int j = extreme(above, a, b, false, tmp);
            if (j < 0) throw NotALattice("elements " + pair_text(a, b) + " have no join");
            L.meet_[L.idx(a, b)] = L.meet_[L.idx(b, a)] = m;
            L.join_[L.idx(a, b)] = L.join_[L.idx(b, a)] = j;
        }
    }
    L.below_.clear();
    L.below_.shrink_to_fit();
    return L;
}

bool Lattice::leq(int a, int b) const { return meet_[idx(a, b)] == a; }

Lattice Lattice::from_order(int n, const std::function<bool(int, int)>& leq,
                            std::vector<std::string> labels) {
    if (n <= 0) throw NotALattice("a lattice needs at least one element");
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) rel[a][b] = a == b || leq(a, b);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rel[a][b] && rel[b][a])
                throw CyclicCovers("distinct elements " + pair_text(a, b) + " are equivalent");
    std::vector<Cover> covers;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !rel[a][b]) continue;
            bool direct = true;
            for (int c = 0; c < n && direct; ++c)
                if (c != a && c != b && rel[a][c] && rel[c][b]) direct = false;
            if (direct) covers.push_back({a, b});
        }
    return from_covers(n, covers, std::move(labels));
}

int Lattice::meet_all(const std::vector<int>& xs) const {
    int m = top_;
    for (int x : xs) m = meet(m, x);
    return m;
}

int Lattice::join_all(const std::vector<int>& xs) const {
    int j = bottom_;
    for (int x : xs) j = join(j, x);
    return j;
}

std::vector<int> Lattice::interval(int lo, int hi) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (leq(lo, v) && leq(v, hi)) out.push_back(v);
    return out;
}

std::string Lattice::label(int a) const {
    return labels_.empty() ? std::to_string(a) : labels_[a];
}

Lattice Lattice::sublattice(const std::vector<int>& ids) const {
    std::vector<std::string> labs;
    for (int v : ids) labs.push_back(label(v));
    return from_order(
        int(ids.size()), [&](int a, int b) { return leq(ids[a], ids[b]); }, labs);
}

Lattice Lattice::dual() const {
    std::vector<Cover> cv;
    for (auto [lo, hi] : covers_) cv.push_back({hi, lo});
    return from_covers(n_, cv, labels_);
}

bool is_modular(const Lattice& L) {
    const int n = L.size();
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            if (!L.leq(a, c)) continue;
            for (int b = 0; b < n; ++b)
                if (L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c)) return false;
        }
    return true;
}

bool is_distributive(const Lattice& L) {
    const int n = L.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = b; c < n; ++c)
                if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
    return true;
}

Classification classify(const Lattice& L) {
    Classification c;
    c.modular = is_modular(L);
    c.distributive = c.modular && is_distributive(L);
    c.length = L.length();
    if (c.modular) {
        auto atoms = L.atoms();
        c.geometric = true;
        for (int x = 0; x < L.size() && c.geometric; ++x) {
            int j = L.bottom();
            for (int a : atoms)
                if (L.leq(a, x)) j = L.join(j, a);
            c.geometric = j == x;
        }
    }
    for (int x = 0; x < L.size(); ++x) {
        if (L.upper_covers(x).size() <= 1) c.meet_irreducibles.push_back(x);
        if (L.lower_covers(x).size() <= 1) c.join_irreducibles.push_back(x);
    }
    return c;
}

int central_complement(const Lattice& L, int z) {
    const int n = L.size();
    for (int w = 0; w < n; ++w) {
        if (L.meet(z, w) != L.bottom() || L.join(z, w) != L.top()) continue;
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = L.meet(L.join(x, z), L.join(x, w)) == x;
        for (int u = 0; u < n && ok; ++u) {
            if (!L.leq(z, u)) continue;
            for (int v = 0; v < n && ok; ++v) {
                if (!L.leq(w, v)) continue;
                int m = L.meet(u, v);
                ok = L.join(m, z) == u && L.join(m, w) == v;
            }
        }
        if (ok) return w;
    }
    return -1;
}

std::vector<int> center(const Lattice& L) {
    std::vector<int> out;
    for (int z = 0; z < L.size(); ++z)
        if (central_complement(L, z) >= 0) out.push_back(z);
    return out;
}

Decomposition decompose(const Lattice& L) {
    auto C = center(L);
    std::vector<int> gens;
    for (int c : C) {
        if (c == L.top()) continue;
        bool maximal = true;
        for (int d : C)
            if (d != L.top() && L.lt(c, d)) maximal = false;
        if (maximal) gens.push_back(c);
    }
    if (gens.empty()) gens.push_back(L.bottom());
    Decomposition D;
    D.generators = gens;
    for (int z : gens) D.factors.push_back(L.interval(z, L.top()));
    D.witness.assign(L.size(), {});
    for (int x = 0; x < L.size(); ++x)
        for (int z : gens) D.witness[x].push_back(L.join(x, z));
    return D;
}

DualFrameReport dual_frame_check(const Lattice& L, const std::vector<int>& xs_in) {
    std::vector<int> xs = xs_in;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const int k = int(xs.size());
    if (k > 16) throw TooLarge("dual frame candidate with more than 16 elements");
    const std::uint32_t full = (std::uint32_t(1) << k) - 1;
    std::vector<int> meets(full + 1);
    for (std::uint32_t A = 0; A <= full; ++A) {
        int m = L.top();
        for (int i = 0; i < k; ++i)
            if (A >> i & 1) m = L.meet(m, xs[i]);
        meets[A] = m;
    }
    DualFrameReport r;
    r.independent = true;
    for (std::uint32_t A = 0; A <= full && r.independent; ++A)
        for (std::uint32_t B = 0; B <= full; ++B)
            if (L.join(meets[A], meets[B]) != meets[A & B]) {
                r.independent = false;
                break;
            }
    r.spanning = meets[full] == L.bottom();
    if (r.independent && r.spanning)
        for (int i = 0; i < k; ++i) r.reflected.push_back(meets[full & ~(std::uint32_t(1) << i)]);
    return r;
}

bool is_primary(const Lattice& L) {
    if (!is_modular(L)) throw NotModular("primary test needs a modular lattice");
    const int n = L.size();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (!L.leq(x, y)) continue;
            std::vector<int> atoms;
            for (int a : L.upper_covers(x))
                if (L.leq(a, y)) atoms.push_back(a);
            if (atoms.size() < 2) continue;
            auto iv = L.interval(x, y);
            for (std::size_t i = 0; i < atoms.size(); ++i)
                for (std::size_t j = i + 1; j < atoms.size(); ++j) {
                    int a = atoms[i], b = atoms[j];
                    bool found = false;
                    for (int z : iv)
                        if (L.meet(a, z) == x && L.meet(b, z) == x && L.join(a, z) == L.join(b, z)) {
                            found = true;
                            break;
                        }
                    if (!found) return false;
                }
        }
    }
    return true;
}

bool is_chain(const Lattice& L) {
    for (int x = 0; x < L.size(); ++x)
        if (L.upper_covers(x).size() > 1) return false;
    return true;
}

namespace {

void check_embedding(const Lattice& A, const Lattice& B, const std::vector<int>& f) {
    if (int(f.size()) != A.size()) throw BadInput("embedding size does not match lattice");
    for (int v : f)
        if (v < 0 || v >= B.size()) throw BadInput("embedding target out of range");
    for (int a = 0; a < A.size(); ++a)
        for (int b = 0; b < A.size(); ++b) {
            if (A.leq(a, b) != B.leq(f[a], f[b]))
                throw BadInput("map is not an order embedding at " + pair_text(a, b));
            if (f[A.meet(a, b)] != B.meet(f[a], f[b]) || f[A.join(a, b)] != B.join(f[a], f[b]))
                throw BadInput("map is not a lattice embedding at " + pair_text(a, b));
        }
    auto ideal = B.interval(B.bottom(), f[A.top()]);
    std::vector<int> image = f;
    std::sort(image.begin(), image.end());
    if (image != ideal) throw NotADownset("image is not the principal downset of its top");
}

// Components of x in L_j's own internal decomposition, shifted into K's cut.
std::vector<int> psi(const Lattice& L, const Decomposition& D, int kTop, int x) {
    std::vector<int> eps, out;
    for (int z : D.generators) eps.push_back(L.join(kTop, z));
    for (std::size_t i = 0; i < eps.size(); ++i) {
        int bar = L.top();
        for (std::size_t j = 0; j < eps.size(); ++j)
            if (j != i) bar = L.meet(bar, eps[j]);
        out.push_back(L.meet(L.join(x, D.generators[i]), bar));
    }
    return out;
}

}  // namespace

Decomposition extend_factorization(const std::vector<Lattice>& chain,
                                   const std::vector<std::vector<int>>& maps,
                                   const Decomposition& base) {
    if (chain.empty()) throw BadInput("empty chain");
    if (maps.size() + 1 != chain.size()) throw BadInput("need one embedding per consecutive pair");
    if (chain.size() == 1) return base;
    for (std::size_t j = 0; j < maps.size(); ++j) check_embedding(chain[j], chain[j + 1], maps[j]);

    const Lattice& M = chain.back();
    const int m = int(chain.size());
    // emb[j]: ids of chain[j] -> ids of M.
    std::vector<std::vector<int>> emb(m);
    emb[m - 1].resize(M.size());
    for (int v = 0; v < M.size(); ++v) emb[m - 1][v] = v;
    for (int j = m - 2; j >= 0; --j) {
        emb[j].resize(chain[j].size());
        for (int v = 0; v < chain[j].size(); ++v) emb[j][v] = emb[j + 1][maps[j][v]];
    }

    const Decomposition DM = decompose(M);
    const int k = int(DM.generators.size());
    const int kTop = emb[0][chain[0].top()];
    std::vector<int> K = emb[0];
    std::sort(K.begin(), K.end());

    Decomposition out;
    out.upward_closed = false;
    out.generators.clear();
    std::vector<int> epsBar(k);
    {
        std::vector<int> eps;
        for (int z : DM.generators) eps.push_back(M.join(kTop, z));
        for (int i = 0; i < k; ++i) {
            int bar = M.top();
            for (int j = 0; j < k; ++j)
                if (j != i) bar = M.meet(bar, eps[j]);
            epsBar[i] = bar;
        }
    }
    for (int i = 0; i < k; ++i) {
        std::set<int> f;
        for (int y : DM.factors[i]) f.insert(M.meet(epsBar[i], y));
        out.factors.push_back({f.begin(), f.end()});
        out.generators.push_back(epsBar[i]);
    }

    // Match the nontrivial base factors with the extended ones.
    std::vector<int> used(k, 0);
    for (const auto& bf : base.factors) {
        std::vector<int> mapped;
        for (int v : bf) mapped.push_back(emb[0][v]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped.size() <= 1) continue;
        bool hit = false;
        for (int i = 0; i < k && !hit; ++i) {
            if (used[i]) continue;
            std::vector<int> cut;
            std::set_intersection(out.factors[i].begin(), out.factors[i].end(), K.begin(), K.end(),
                                  std::back_inserter(cut));
            if (cut == mapped) used[i] = hit = true;
        }
        if (!hit) throw FactorizationMismatch("base factor is not induced by the largest lattice");
    }
    for (int i = 0; i < k; ++i) {
        if (used[i]) continue;
        std::vector<int> cut;
        std::set_intersection(out.factors[i].begin(), out.factors[i].end(), K.begin(), K.end(),
                              std::back_inserter(cut));
        if (cut.size() > 1) throw FactorizationMismatch("base misses a factor of the largest lattice");
    }

    out.witness.assign(M.size(), {});
    for (int x = 0; x < M.size(); ++x) out.witness[x] = psi(M, DM, kTop, x);

    // Each intermediate lattice, decomposed on its own, must yield the same components.
    for (int j = 0; j + 1 < m; ++j) {
        const Lattice& Lj = chain[j];
        Decomposition Dj = decompose(Lj);
        int kTopJ = -1;
        for (int v = 0; v < Lj.size(); ++v)
            if (emb[j][v] == kTop) kTopJ = v;
        if (kTopJ < 0) throw BadInput("chain is not nested");
        std::vector<int> match(Dj.generators.size(), -1);
        for (std::size_t l = 0; l < Dj.generators.size(); ++l) {
            if (Dj.factors[l].size() <= 1) continue;
            int topJ = emb[j][Lj.top()];
            for (int i = 0; i < k; ++i) {
                std::vector<int> eps;
                for (int z : DM.generators) eps.push_back(M.join(topJ, z));
                int bar = M.top();
                for (int t = 0; t < k; ++t)
                    if (t != i) bar = M.meet(bar, eps[t]);
                std::set<int> ext;
                for (int y : DM.factors[i]) ext.insert(M.meet(bar, y));
                bool inside = true;
                for (int v : Dj.factors[l]) inside = inside && ext.count(emb[j][v]);
                if (inside) {
                    match[l] = i;
                    break;
                }
            }
            if (match[l] < 0) throw FactorizationMismatch("intermediate factor has no counterpart");
        }
        for (int v = 0; v < chain[0].size(); ++v) {
            int xj = -1;
            for (int w = 0; w < Lj.size(); ++w)
                if (emb[j][w] == emb[0][v]) xj = w;
            auto pj = psi(Lj, Dj, kTopJ, xj);
            const auto& pm = out.witness[emb[0][v]];
            std::vector<char> covered(k, 0);
            for (std::size_t l = 0; l < pj.size(); ++l) {
                if (match[l] < 0) continue;
                covered[match[l]] = 1;
                if (emb[j][pj[l]] != pm[match[l]])
                    throw FactorizationMismatch("components disagree along the chain");
            }
            for (int i = 0; i < k; ++i)
                if (!covered[i] && pm[i] != kTop)
                    throw FactorizationMismatch("components disagree along the chain");
        }
    }
    return out;
}

nlohmann::json to_json(const Lattice& L) {
    nlohmann::json j;
    j["n"] = L.size();
    j["covers"] = nlohmann::json::array();
    for (auto [lo, hi] : L.covers()) j["covers"].push_back({lo, hi});
    if (!L.labels().empty()) j["labels"] = L.labels();
    return j;
}

Lattice lattice_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
        throw BadInput("lattice JSON needs \"n\" and \"covers\"");
    int n = j.at("n").get<int>();
    std::vector<Cover> covers;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw BadInput("each cover is a [lower, upper] pair");
        covers.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Lattice::from_covers(n, covers, labels);
}

std::string to_dot(const Lattice& L, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=BT;\n";
    std::map<int, std::vector<int>> ranks;
    for (int v = 0; v < L.size(); ++v) {
        os << "  n" << v << " [label=\"" << L.label(v) << "\"];\n";
        ranks[L.height(v)].push_back(v);
    }
    for (const auto& [h, vs] : ranks) {
        os << "  { rank=same;";
        for (int v : vs) os << " n" << v << ";";
        os << " }\n";
    }
    for (auto [lo, hi] : L.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

Lattice chain(int n) {
    std::vector<Cover> cv;
    for (int i = 0; i + 1 < n; ++i) cv.push_back({i, i + 1});
    return Lattice::from_covers(n, cv);
}

Lattice boolean(int k) {
    const int n = 1 << k;
    std::vector<Cover> cv;
    for (int s = 0; s < n; ++s)
        for (int i = 0; i < k; ++i)
            if (!(s >> i & 1)) cv.push_back({s, s | (1 << i)});
    return Lattice::from_covers(n, cv);
}

Lattice m3() { return Lattice::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}); }

Lattice n5() { return Lattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }

Lattice product(const Lattice& A, const Lattice& B) {
    const int nb = B.size();
    std::vector<Cover> cv;
    for (auto [lo, hi] : A.covers())
        for (int b = 0; b < nb; ++b) cv.push_back({lo * nb + b, hi * nb + b});
    for (int a = 0; a < A.size(); ++a)
        for (auto [lo, hi] : B.covers()) cv.push_back({a * nb + lo, a * nb + hi});
    return Lattice::from_covers(A.size() * nb, cv);
}

}  // namespace glat::finlat
