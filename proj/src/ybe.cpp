#include "glat/ybe.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "glat/beams.hpp"
#include "glat/error.hpp"
#include "glat/guard.hpp"

namespace glat::ybe {

namespace {

bool is_perm(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= int(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<int> inverse(const std::vector<int>& p) {
    std::vector<int> q(p.size());
    for (int i = 0; i < int(p.size()); ++i) q[p[i]] = i;
    return q;
}

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void check_rmap(const RMap& R) {
    if (R.n <= 0 || int(R.table.size()) != R.n * R.n)
        throw InvalidSolution("table must have n*n entries");
    for (auto [a, b] : R.table)
        if (a < 0 || a >= R.n || b < 0 || b >= R.n) throw InvalidSolution("value out of range");
}

bool braid(const RMap& R) {
    const int n = R.n;
    using T = std::array<int, 3>;
    auto r12 = [&](T t) {
        auto [a, b] = R(t[0], t[1]);
        return T{a, b, t[2]};
    };
    auto r23 = [&](T t) {
        auto [a, b] = R(t[1], t[2]);
        return T{t[0], a, b};
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                T t{x, y, z};
                if (r12(r23(r12(t))) != r23(r12(r23(t)))) return false;
            }
    return true;
}

}  // namespace

int LAlgebra::operator()(int a, int b) const {
    if (a < 0) return b;
    if (b < 0 || a == b) return -1;
    return arrow[a * n + b];
}

SolutionReport validate(const RMap& R) {
    check_rmap(R);
    const int n = R.n;
    SolutionReport r;
    std::set<std::pair<int, int>> image(R.table.begin(), R.table.end());
    r.bijective = int(image.size()) == n * n;
    r.nondegenerate = true;
    for (int x = 0; x < n; ++x) {
        std::vector<int> lam(n), rho(n);
        for (int y = 0; y < n; ++y) {
            lam[y] = R.lambda(x, y);
            rho[y] = R.rho(x, y);
        }
        r.nondegenerate &= is_perm(lam) && is_perm(rho);
    }
    r.involutive = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [a, b] = R(x, y);
            r.involutive &= R(a, b) == std::make_pair(x, y);
        }
    r.braid = braid(R);
    return r;
}

bool is_cycle_set(const CycleSet& C) {
    const int n = C.n;
    if (n <= 0 || int(C.op.size()) != n * n) return false;
    for (int x = 0; x < n; ++x)
        if (!is_perm(std::vector<int>(C.op.begin() + x * n, C.op.begin() + (x + 1) * n)))
            return false;
    std::vector<int> sq(n);
    for (int x = 0; x < n; ++x) sq[x] = C(x, x);
    if (!is_perm(sq)) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (C(C(x, y), C(x, z)) != C(C(y, x), C(y, z))) return false;
    return true;
}

LAlgebraReport validate(const LAlgebra& L) {
    LAlgebraReport r;
    const int n = L.n;
    if (n <= 0 || int(L.arrow.size()) != n * n || int(L.D.size()) != n) return r;
    r.discrete = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int v = L.arrow[x * n + y];
            r.discrete &= x == y ? v == -1 : (v >= 0 && v < n);
        }
    if (!r.discrete) return r;
    r.l_algebra = true;
    for (int a = -1; a < n; ++a)
        for (int b = -1; b < n; ++b)
            for (int c = -1; c < n; ++c)
                r.l_algebra &= L(L(a, b), L(a, c)) == L(L(b, a), L(b, c));
    r.duality = is_perm(L.D);
    if (r.duality)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y) r.duality &= L.D[L(x, y)] == L(L(y, x), L.D[y]);
    return r;
}

CycleSet to_cycle_set(const RMap& R) {
    check_rmap(R);
    CycleSet C{R.n, std::vector<int>(R.n * R.n)};
    for (int x = 0; x < R.n; ++x) {
        std::vector<int> lam(R.n);
        for (int y = 0; y < R.n; ++y) lam[y] = R.lambda(x, y);
        if (!is_perm(lam)) throw InvalidSolution("lambda_x is not bijective");
        auto inv = inverse(lam);
        for (int y = 0; y < R.n; ++y) C.op[x * R.n + y] = inv[y];
    }
    return C;
}

RMap to_rmap(const CycleSet& C) {
    if (!is_cycle_set(C)) throw InvalidSolution("not a non-degenerate cycle set");
    const int n = C.n;
    RMap R{n, std::vector<std::pair<int, int>>(n * n)};
    for (int x = 0; x < n; ++x) {
        auto inv = inverse(std::vector<int>(C.op.begin() + x * n, C.op.begin() + (x + 1) * n));
        for (int y = 0; y < n; ++y) R.table[x * n + y] = {inv[y], C(inv[y], x)};
    }
    return R;
}

LAlgebra to_lalgebra(const RMap& R) {
    check_rmap(R);
    const int n = R.n;
    LAlgebra L{n, std::vector<int>(n * n, -1), std::vector<int>(n)};
    for (int x = 0; x < n; ++x) {
        std::vector<int> rho(n);
        for (int y = 0; y < n; ++y) rho[y] = R.rho(x, y);
        if (!is_perm(rho)) throw InvalidSolution("rho_x is not bijective");
        auto inv = inverse(rho);
        for (int y = 0; y < n; ++y) {
            if (y == x) L.D[x] = inv[x];
            else L.arrow[x * n + y] = inv[y];
        }
    }
    return L;
}

RMap to_rmap(const LAlgebra& L) {
    const int n = L.n;
    if (n <= 0 || int(L.arrow.size()) != n * n || int(L.D.size()) != n)
        throw InvalidSolution("malformed L-algebra");
    std::vector<std::vector<int>> rho(n), rhoInv(n);
    for (int x = 0; x < n; ++x) {
        rhoInv[x].resize(n);
        for (int y = 0; y < n; ++y) rhoInv[x][y] = y == x ? L.D[x] : L.arrow[x * n + y];
        if (!is_perm(rhoInv[x])) throw InvalidSolution("x -> . together with D is not bijective");
        rho[x] = inverse(rhoInv[x]);
    }
    RMap R{n, std::vector<std::pair<int, int>>(n * n)};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int v = rho[y][x];
            R.table[x * n + y] = {rhoInv[v][y], v};
        }
    return R;
}

RMap trivial_solution(int n) {
    RMap R{n, std::vector<std::pair<int, int>>(n * n)};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) R.table[x * n + y] = {y, x};
    return R;
}

RMap permutation_solution(const std::vector<int>& s) {
    if (!is_perm(s)) throw InvalidSolution("not a permutation");
    int n = int(s.size());
    auto t = inverse(s);
    RMap R{n, std::vector<std::pair<int, int>>(n * n)};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) R.table[x * n + y] = {s[y], t[x]};
    return R;
}

germ::GermTable structure_germ(const RMap& R, int maxN) {
    check_rmap(R);
    const int n = R.n;
    if (n > maxN) throw TooLarge("structure germ limited to " + std::to_string(maxN) + " generators");
    using Word = std::vector<int>;
    std::vector<Word> words{{}};
    std::map<Word, int> index{{Word{}, 0}};
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (int(words[i].size()) == n) continue;
        for (int a = 0; a < n; ++a) {
            Word w = words[i];
            w.push_back(a);
            index[w] = int(words.size());
            words.push_back(w);
        }
        if (words.size() > max_enum()) throw TooLarge("structure germ word closure");
    }
    std::vector<int> parent(words.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t k = 0; k + 1 < words[i].size(); ++k) {
            Word v = words[i];
            auto [y, z] = R(v[k], v[k + 1]);
            v[k] = y;
            v[k + 1] = z;
            int a = find(int(i)), b = find(index.at(v));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    // members of each class, in word order
    std::map<int, std::vector<int>> members;
    for (std::size_t i = 0; i < words.size(); ++i) members[find(int(i))].push_back(int(i));

    int delta = -1;
    for (auto& [root, ms] : members) {
        if (int(words[root].size()) != n) continue;
        std::set<int> last;
        for (int m : ms) last.insert(words[m].back());
        if (int(last.size()) == n) {
            if (delta >= 0) throw InvalidSolution("no unique Garside class");
            delta = root;
        }
    }
    if (delta < 0) throw InvalidSolution("no class is divisible by every generator");

    std::set<int> interval;
    for (int m : members[delta])
        for (std::size_t k = 0; k <= words[m].size(); ++k)
            interval.insert(find(index.at(Word(words[m].begin() + k, words[m].end()))));
    // ids ordered by length, then by least word
    std::vector<int> roots(interval.begin(), interval.end());
    std::sort(roots.begin(), roots.end(), [&](int a, int b) {
        return std::make_pair(words[a].size(), words[a]) < std::make_pair(words[b].size(), words[b]);
    });
    std::map<int, int> id;
    for (int i = 0; i < int(roots.size()); ++i) id[roots[i]] = i;

    germ::GermTable t;
    const int m = int(roots.size());
    for (int r : roots) {
        std::string name;
        if (r == delta) name = "D";
        else if (words[r].empty()) name = "e";
        else
            for (int a : words[r]) name += "x" + std::to_string(a);
        t.names.push_back(name);
        t.degree.push_back(int(words[r].size()));
    }
    t.identity = id.at(find(0));
    t.delta = id.at(delta);
    t.product.assign(m * m, -1);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Word w = words[roots[a]];
            const Word& v = words[roots[b]];
            if (int(w.size() + v.size()) > n) continue;
            w.insert(w.end(), v.begin(), v.end());
            auto it = id.find(find(index.at(w)));
            if (it != id.end()) t.product[a * m + b] = it->second;
        }
    return t;
}

LAlgebra lalgebra_from_germ(const germ::Germ& G) {
    auto A = germ::interval_analysis(G);
    const auto& X = A.center_atoms;
    const int n = int(X.size());
    auto slot = [&](int z) {
        auto it = std::find(X.begin(), X.end(), z);
        if (it == X.end()) throw InvalidSolution("arrow leaves the center dual atoms");
        return int(it - X.begin());
    };
    LAlgebra L{n, std::vector<int>(n * n, -1), std::vector<int>(n)};
    for (int i = 0; i < n; ++i) {
        if (A.D[X[i]] < 0) throw InvalidSolution("duality undefined");
        L.D[i] = slot(A.D[X[i]]);
        for (int j = 0; j < n; ++j)
            if (i != j) L.arrow[i * n + j] = slot(G.arrow(X[i], X[j]));
    }
    return L;
}

RMap canonical_relabeling(const RMap& R) {
    const int n = R.n;
    RMap best = R;
    for (const auto& p : all_perms(n)) {
        RMap S{n, std::vector<std::pair<int, int>>(n * n)};
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                auto [a, b] = R(x, y);
                S.table[p[x] * n + p[y]] = {p[a], p[b]};
            }
        best = std::min(best, S);
    }
    return best;
}

Enumeration enumerate(int n) {
    if (n < 1 || n > 4) throw TooLarge("enumeration supports 1 <= n <= 4");
    Enumeration E;
    E.n = n;
    auto perms = all_perms(n);
    const int P = int(perms.size());
    std::vector<int> choice(n, 0);
    while (true) {
        CycleSet C{n, std::vector<int>(n * n)};
        for (int x = 0; x < n; ++x)
            std::copy(perms[choice[x]].begin(), perms[choice[x]].end(), C.op.begin() + x * n);
        if (is_cycle_set(C)) {
            RMap R = to_rmap(C);
            if (!validate(R).ok()) throw InvalidSolution("cycle set without a solution");
            E.solutions.push_back(R);
        }
        int i = 0;
        while (i < n && ++choice[i] == P) choice[i++] = 0;
        if (i == n) break;
    }
    std::sort(E.solutions.begin(), E.solutions.end());
    std::set<RMap> reps;
    for (const auto& R : E.solutions) reps.insert(canonical_relabeling(R));
    E.representatives.assign(reps.begin(), reps.end());
    return E;
}

std::vector<RMap> enumerate_by_families(int n, bool requireInvolutive) {
    if (n < 1 || n > 3) throw TooLarge("family search supports 1 <= n <= 3");
    auto perms = all_perms(n);
    const int P = int(perms.size());
    std::vector<RMap> out;
    // choice[0..n) picks lambda_x, choice[n..2n) picks rho_y
    std::vector<int> choice(2 * n, 0);
    while (true) {
        RMap R{n, std::vector<std::pair<int, int>>(n * n)};
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                R.table[x * n + y] = {perms[choice[x]][y], perms[choice[n + y]][x]};
        auto rep = validate(R);
        if (rep.bijective && rep.braid && (rep.involutive || !requireInvolutive))
            out.push_back(R);
        int i = 0;
        while (i < 2 * n && ++choice[i] == P) choice[i++] = 0;
        if (i == 2 * n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

nlohmann::json to_json(const RMap& R) {
    nlohmann::json rows = nlohmann::json::array();
    for (int x = 0; x < R.n; ++x)
        for (int y = 0; y < R.n; ++y) {
            auto [a, b] = R(x, y);
            rows.push_back({{x, y}, {a, b}});
        }
    return {{"n", R.n}, {"R", rows}};
}

RMap rmap_from_json(const nlohmann::json& j) {
    try {
        RMap R;
        R.n = j.at("n").get<int>();
        if (R.n <= 0) throw InvalidSolution("n must be positive");
        R.table.assign(R.n * R.n, {-1, -1});
        for (const auto& row : j.at("R")) {
            auto in = row.at(0).get<std::pair<int, int>>();
            auto outv = row.at(1).get<std::pair<int, int>>();
            if (in.first < 0 || in.first >= R.n || in.second < 0 || in.second >= R.n)
                throw InvalidSolution("argument out of range");
            R.table[in.first * R.n + in.second] = outv;
        }
        check_rmap(R);
        return R;
    } catch (const nlohmann::json::exception& ex) {
        throw BadInput(std::string("solution JSON: ") + ex.what());
    }
}

nlohmann::json to_json(const CycleSet& C) {
    nlohmann::json rows = nlohmann::json::array();
    for (int x = 0; x < C.n; ++x)
        rows.push_back(std::vector<int>(C.op.begin() + x * C.n, C.op.begin() + (x + 1) * C.n));
    return {{"n", C.n}, {"op", rows}};
}

CycleSet cycle_set_from_json(const nlohmann::json& j) {
    try {
        CycleSet C;
        C.n = j.at("n").get<int>();
        for (const auto& row : j.at("op"))
            for (int v : row.get<std::vector<int>>()) C.op.push_back(v);
        if (!is_cycle_set(C)) throw InvalidSolution("not a non-degenerate cycle set");
        return C;
    } catch (const nlohmann::json::exception& ex) {
        throw BadInput(std::string("cycle set JSON: ") + ex.what());
    }
}

nlohmann::json to_json(const LAlgebra& L) {
    nlohmann::json rows = nlohmann::json::array();
    for (int x = 0; x < L.n; ++x) {
        nlohmann::json row = nlohmann::json::array();
        for (int y = 0; y < L.n; ++y) {
            int v = L.arrow[x * L.n + y];
            if (v < 0) row.push_back(nullptr);
            else row.push_back(v);
        }
        rows.push_back(row);
    }
    return {{"n", L.n}, {"arrow", rows}, {"D", L.D}};
}

LAlgebra lalgebra_from_json(const nlohmann::json& j) {
    try {
        LAlgebra L;
        L.n = j.at("n").get<int>();
        for (const auto& row : j.at("arrow"))
            for (const auto& v : row) L.arrow.push_back(v.is_null() ? -1 : v.get<int>());
        L.D = j.at("D").get<std::vector<int>>();
        if (!validate(L).ok()) throw InvalidSolution("not a discrete L-algebra with duality");
        return L;
    } catch (const nlohmann::json::exception& ex) {
        throw BadInput(std::string("L-algebra JSON: ") + ex.what());
    }
}

}  // namespace glat::ybe
