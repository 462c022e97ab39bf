#include "glat/latmod.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "glat/checked.hpp"
#include "glat/error.hpp"

namespace glat::latmod {

using namespace glat::checked;

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void same_params(const PLattice& A, const PLattice& B) {
    if (!(A.params == B.params)) throw ParamMismatch("lattices live in different beams");
}

// Divide out the largest power of p dividing every entry.
PLattice normalized(const BeamParams& bp, Matrix H, int scale) {
    const i64 p = bp.p;
    int t = kInfValuation;
    for (const auto& row : H)
        for (i64 x : row) t = std::min(t, valuation(x, p));
    if (t > 0 && t < kInfValuation) {
        i64 pt = pow(p, t);
        for (auto& row : H)
            for (i64& x : row) x /= pt;
        scale -= t;
    }
    return PLattice{bp, scale, std::move(H)};
}

// p^S H^{-1}, integral because H is triangular with p-power diagonal.
Matrix scaled_inverse(const PLattice& A, int& S) {
    const int d = A.delta();
    const i64 p = A.params.p;
    auto a = A.diagonal_exponents();
    S = std::accumulate(a.begin(), a.end(), 0);
    const i64 pS = pow(p, S);
    Matrix X(d, std::vector<i64>(d, 0));
    for (int c = 0; c < d; ++c)
        for (int r = c; r < d; ++r) {
            i64 acc = r == c ? pS : 0;
            for (int k = c; k < r; ++k) acc = sub(acc, mul(A.H[r][k], X[k][c]));
            X[r][c] = acc / A.H[r][r];
        }
    return X;
}

Matrix integral_columns(const PLattice& A) {
    // Only valid inside the cone, where scale <= 0.
    Matrix G = A.H;
    i64 f = pow(A.params.p, -A.scale);
    for (auto& row : G)
        for (i64& x : row) x = mul(x, f);
    return G;
}

}  // namespace

void check_params(const BeamParams& bp) {
    if (!is_prime(bp.p)) throw BadInput("p = " + std::to_string(bp.p) + " is not prime");
    if (bp.delta < 1 || bp.delta > 12) throw BadInput("delta must lie in [1, 12]");
}

std::vector<int> PLattice::diagonal_exponents() const {
    std::vector<int> a;
    for (int i = 0; i < delta(); ++i) a.push_back(valuation(H[i][i], params.p));
    return a;
}

PLattice canonicalize(const BeamParams& bp, const Matrix& gens, int scale) {
    check_params(bp);
    const int d = bp.delta;
    const i64 p = bp.p;
    if (int(gens.size()) != d) throw ParamMismatch("generator vectors must have delta entries");
    const std::size_t N = gens[0].size();
    for (const auto& row : gens)
        if (row.size() != N) throw BadInput("ragged generator matrix");

    std::vector<std::vector<i64>> cols(N, std::vector<i64>(d));
    for (std::size_t j = 0; j < N; ++j)
        for (int r = 0; r < d; ++r) cols[j][r] = gens[r][j];

    auto drop_unit_content = [&](std::vector<i64>& c) {
        i64 g = 0;
        for (i64 x : c) g = checked::gcd(g, x);
        i64 u = strip(g, p);
        if (u > 1)
            for (i64& x : c) x /= u;
    };
    for (auto& c : cols) drop_unit_content(c);

    std::vector<int> v(d);
    for (int i = 0; i < d; ++i) {
        std::size_t best = N;
        int bestv = kInfValuation;
        for (std::size_t j = i; j < N; ++j) {
            if (cols[j][i] == 0) continue;
            int vj = valuation(cols[j][i], p);
            if (best == N || vj < bestv || (vj == bestv && std::llabs(cols[j][i]) < std::llabs(cols[best][i]))) {
                bestv = vj;
                best = j;
            }
        }
        if (best == N) throw NotFullRank("generators do not span a full-rank lattice");
        std::swap(cols[i], cols[best]);
        v[i] = bestv;
        const i64 pv = pow(p, bestv);
        const i64 u = cols[i][i] / pv;
        for (std::size_t j = i + 1; j < N; ++j) {
            if (cols[j][i] == 0) continue;
            const i64 q = cols[j][i] / pv;
            for (int r = i; r < d; ++r) cols[j][r] = sub(mul(u, cols[j][r]), mul(q, cols[i][r]));
            drop_unit_content(cols[j]);
        }
    }

    // The lattice now contains p^B R^delta, so entries may be reduced mod p^B.
    const int B = std::accumulate(v.begin(), v.end(), 0);
    const i64 P = pow(p, B);
    Matrix H(d, std::vector<i64>(d, 0));
    for (int c = 0; c < d; ++c) {
        const i64 pv = pow(p, v[c]);
        const i64 uinv = inverse(cols[c][c] / pv, P);
        for (int r = c + 1; r < d; ++r) H[r][c] = mulmod(cols[c][r], uinv, P);
        H[c][c] = pv;
    }
    for (int c = 0; c < d; ++c)
        for (int r = c + 1; r < d; ++r) {
            const i64 pr = H[r][r];
            const i64 q = floordiv(H[r][c], pr);
            if (q == 0) continue;
            H[r][c] = sub(H[r][c], mul(q, pr));
            for (int k = r + 1; k < d; ++k) H[k][c] = mod(sub(H[k][c], mulmod(q, H[k][r], P)), P);
        }
    return normalized(bp, std::move(H), scale);
}

PLattice from_rational_generators(const BeamParams& bp,
                                  const std::vector<std::vector<Rational>>& gens) {
    check_params(bp);
    const int d = bp.delta;
    const i64 p = bp.p;
    if (gens.empty()) throw NotFullRank("no generators");
    std::vector<std::vector<i64>> cols;
    std::vector<int> ks;
    for (const auto& g : gens) {
        if (int(g.size()) != d) throw ParamMismatch("generator vectors must have delta entries");
        i64 W = 1;
        int K = 0;
        for (const auto& q : g) {
            if (q.den == 0) throw BadInput("zero denominator");
            i64 w = strip(q.den, p);
            W = mul(W / checked::gcd(W, w), w < 0 ? -w : w);
            K = std::max(K, valuation(q.den, p));
        }
        std::vector<i64> col;
        for (const auto& q : g) {
            i64 w = strip(q.den, p);
            int k = valuation(q.den, p);
            col.push_back(mul(mul(q.num, W / w), pow(p, K - k)));
        }
        cols.push_back(col);
        ks.push_back(K);
    }
    const int K = *std::max_element(ks.begin(), ks.end());
    Matrix G(d, std::vector<i64>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        i64 f = pow(p, K - ks[j]);
        for (int r = 0; r < d; ++r) G[r][j] = mul(cols[j][r], f);
    }
    return canonicalize(bp, G, K);
}

PLattice unit(const BeamParams& bp) { return frozen(bp, 0); }

PLattice frozen(const BeamParams& bp, int n) {
    check_params(bp);
    Matrix H(bp.delta, std::vector<i64>(bp.delta, 0));
    for (int i = 0; i < bp.delta; ++i) H[i][i] = 1;
    return PLattice{bp, -n, H};
}

PLattice dual(const PLattice& A) {
    int S = 0;
    Matrix X = scaled_inverse(A, S);
    const int d = A.delta();
    Matrix XT(d, std::vector<i64>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) XT[r][c] = X[c][r];
    return canonicalize(A.params, XT, S - A.scale);
}

PLattice join(const PLattice& A, const PLattice& B) {
    same_params(A, B);
    const int d = A.delta();
    const int M = std::max(A.scale, B.scale);
    const i64 fa = pow(A.params.p, M - A.scale), fb = pow(A.params.p, M - B.scale);
    Matrix G(d, std::vector<i64>(2 * d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            G[r][c] = mul(A.H[r][c], fa);
            G[r][d + c] = mul(B.H[r][c], fb);
        }
    return canonicalize(A.params, G, M);
}

PLattice meet(const PLattice& A, const PLattice& B) {
    same_params(A, B);
    return dual(join(dual(A), dual(B)));
}

bool leq(const PLattice& A, const PLattice& B) {
    same_params(A, B);
    int S = 0;
    Matrix X = scaled_inverse(B, S);
    const int d = A.delta();
    const i64 p = A.params.p;
    const int shift = B.scale - A.scale - S;
    for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r) {
            i64 y = 0;
            for (int k = 0; k < d; ++k) y = add(y, mul(X[r][k], A.H[k][c]));
            if (y != 0 && valuation(y, p) + shift < 0) return false;
        }
    return true;
}

bool contains(const PLattice& A, const std::vector<i64>& v) {
    int S = 0;
    Matrix X = scaled_inverse(A, S);
    const int d = A.delta();
    if (int(v.size()) != d) throw ParamMismatch("vector length differs from delta");
    for (int r = 0; r < d; ++r) {
        i64 y = 0;
        for (int k = 0; k < d; ++k) y = add(y, mul(X[r][k], v[k]));
        if (y != 0 && valuation(y, A.params.p) + A.scale - S < 0) return false;
    }
    return true;
}

PLattice rad(const PLattice& A) { return PLattice{A.params, A.scale - 1, A.H}; }
PLattice soc(const PLattice& A) { return PLattice{A.params, A.scale + 1, A.H}; }

int degree(const PLattice& A) {
    auto a = A.diagonal_exponents();
    return std::accumulate(a.begin(), a.end(), 0) - A.scale * A.delta();
}

bool in_cone(const PLattice& A) { return A.scale <= 0; }

std::vector<int> snf_exponents(const PLattice& A) {
    if (!in_cone(A)) throw NotInNegativeCone("lattice is not contained in R^delta");
    const int d = A.delta();
    const i64 p = A.params.p;
    auto a = A.diagonal_exponents();
    const int S = std::accumulate(a.begin(), a.end(), 0);
    const i64 P = pow(p, S + 1);
    Matrix M = A.H;
    for (auto& row : M)
        for (i64& x : row) x = mod(x, P);
    std::vector<int> ex;
    for (int k = 0; k < d; ++k) {
        int bi = -1, bj = -1, bv = kInfValuation;
        for (int i = k; i < d; ++i)
            for (int j = k; j < d; ++j)
                if (M[i][j] != 0 && valuation(M[i][j], p) < bv) {
                    bv = valuation(M[i][j], p);
                    bi = i;
                    bj = j;
                }
        if (bi < 0) throw NotFullRank("singular matrix in Smith reduction");
        std::swap(M[k], M[bi]);
        for (auto& row : M) std::swap(row[k], row[bj]);
        const i64 pv = pow(p, bv);
        const i64 u = M[k][k] / pv;
        for (int i = k + 1; i < d; ++i) {
            if (M[i][k] == 0) continue;
            const i64 q = M[i][k] / pv;
            for (int j = k; j < d; ++j)
                M[i][j] = mod(sub(mulmod(u, M[i][j], P), mulmod(q, M[k][j], P)), P);
        }
        for (int j = k + 1; j < d; ++j) {
            if (M[k][j] == 0) continue;
            const i64 q = M[k][j] / pv;
            for (int i = k; i < d; ++i)
                M[i][j] = mod(sub(mulmod(u, M[i][j], P), mulmod(q, M[i][k], P)), P);
        }
        ex.push_back(bv - A.scale);
    }
    std::sort(ex.rbegin(), ex.rend());
    return ex;
}

std::vector<int> iota_by_joins(const PLattice& A) {
    if (!in_cone(A)) throw NotInNegativeCone("lattice is not contained in R^delta");
    std::vector<int> degs{degree(join(A, unit(A.params)))};
    int i = 0;
    while (!leq(frozen(A.params, i), A)) {
        ++i;
        degs.push_back(degree(join(A, frozen(A.params, i))));
    }
    std::vector<int> iota;
    for (std::size_t k = 1; k < degs.size(); ++k) iota.push_back(degs[k] - degs[k - 1]);
    return iota;
}

SnfProfile snf_profile(const PLattice& A) {
    SnfProfile s;
    s.exponents = snf_exponents(A);
    s.degree = std::accumulate(s.exponents.begin(), s.exponents.end(), 0);
    s.lambda = s.exponents.empty() ? 0 : s.exponents.front();
    for (int i = 1; i <= s.lambda; ++i)
        s.iota.push_back(int(std::count_if(s.exponents.begin(), s.exponents.end(),
                                           [i](int a) { return a >= i; })));
    s.meet_irreducible =
        std::count_if(s.exponents.begin(), s.exponents.end(), [](int a) { return a > 0; }) <= 1;
    s.one_homogeneous = std::all_of(s.iota.begin(), s.iota.end(), [](int x) { return x <= 1; });
    s.dual_chain = dual_chain_by_covers(A);
    return s;
}

std::vector<PLattice> upper_covers_in_cone(const PLattice& A) {
    if (!in_cone(A)) throw NotInNegativeCone("lattice is not contained in R^delta");
    const int d = A.delta();
    const i64 p = A.params.p;
    PLattice W = meet(soc(A), unit(A.params));
    Matrix wcols = integral_columns(W);
    Matrix acols = integral_columns(A);
    std::vector<PLattice> out;
    std::vector<int> c(d, 0);
    while (true) {
        std::vector<i64> v(d, 0);
        for (int j = 0; j < d; ++j)
            for (int r = 0; r < d; ++r) v[r] = add(v[r], mul(c[j], wcols[r][j]));
        if (!contains(A, v)) {
            Matrix G = acols;
            for (int r = 0; r < d; ++r) G[r].push_back(v[r]);
            PLattice B = canonicalize(A.params, G, 0);
            if (std::find(out.begin(), out.end(), B) == out.end()) out.push_back(B);
        }
        int j = 0;
        while (j < d && ++c[j] == p) c[j++] = 0;
        if (j == d) break;
    }
    return out;
}

bool dual_chain_by_covers(const PLattice& A) {
    const PLattice top = unit(A.params);
    PLattice cur = A;
    while (!(cur == top)) {
        auto up = upper_covers_in_cone(cur);
        if (up.size() != 1) return false;
        cur = up[0];
    }
    return true;
}


namespace {

// Calls f(H) for every reduced lower-triangular H with diagonal exponents
// accepted by `admit`.
template <class Admit, class F>
void for_each_hnf(const BeamParams& bp, int cap, Admit admit, F f) {
    const int d = bp.delta;
    const i64 p = bp.p;
    std::vector<int> a(d, 0);
    while (true) {
        if (admit(a)) {
            Matrix H(d, std::vector<i64>(d, 0));
            std::vector<i64> limit;
            std::vector<std::pair<int, int>> slots;
            for (int r = 0; r < d; ++r) {
                H[r][r] = pow(p, a[r]);
                for (int c = 0; c < r; ++c) slots.push_back({r, c});
            }
            std::vector<i64> val(slots.size(), 0);
            while (true) {
                for (std::size_t s = 0; s < slots.size(); ++s) H[slots[s].first][slots[s].second] = val[s];
                f(H);
                std::size_t s = 0;
                while (s < slots.size() && ++val[s] == H[slots[s].first][slots[s].first]) val[s++] = 0;
                if (s == slots.size()) break;
            }
        }
        int i = 0;
        while (i < d && ++a[i] > cap) a[i++] = 0;
        if (i == d) break;
    }
}

std::size_t count_hnf(const BeamParams& bp, int cap, const std::function<bool(const std::vector<int>&)>& admit) {
    const int d = bp.delta;
    std::vector<int> a(d, 0);
    std::size_t total = 0;
    while (true) {
        if (admit(a)) {
            long double c = 1;
            for (int r = 0; r < d; ++r) c *= std::pow((long double)bp.p, (long double)(r * a[r]));
            total += std::size_t(std::min<long double>(c, 1e18L));
            if (total > std::size_t(1e17)) return total;
        }
        int i = 0;
        while (i < d && ++a[i] > cap) a[i++] = 0;
        if (i == d) break;
    }
    return total;
}

}  // namespace

std::vector<bool> truncation(const PLattice& A, int n) {
    const int d = A.delta();
    const i64 q = pow(A.params.p, n);
    const i64 total = pow(q, d);
    if (std::size_t(total) > max_enum()) throw TooLarge("truncation table too large");
    std::vector<bool> in(total);
    std::vector<i64> v(d, 0);
    for (i64 idx = 0; idx < total; ++idx) {
        i64 t = idx;
        for (int r = d - 1; r >= 0; --r) {
            v[r] = t % q;
            t /= q;
        }
        in[idx] = contains(A, v);
    }
    return in;
}

StrongInterval strong_interval(const BeamParams& bp, int n) {
    check_params(bp);
    if (n < 0) throw BadInput("n must be nonnegative");
    std::size_t candidates = count_hnf(bp, n, [](const std::vector<int>&) { return true; });
    if (candidates > max_enum()) throw TooLarge(std::to_string(candidates) + " candidate lattices");
    const PLattice floor = frozen(bp, n);
    StrongInterval si;
    si.params = bp;
    si.n = n;
    for_each_hnf(bp, n, [](const std::vector<int>&) { return true; }, [&](const Matrix& H) {
        PLattice A = normalized(bp, H, 0);
        if (leq(floor, A)) si.elements.push_back(A);
    });
    std::vector<std::vector<bool>> mem;
    std::vector<std::size_t> size;
    for (const auto& A : si.elements) {
        mem.push_back(truncation(A, n));
        size.push_back(std::size_t(std::count(mem.back().begin(), mem.back().end(), true)));
    }
    const int N = int(si.elements.size());
    std::vector<finlat::Cover> covers;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            if (size[b] != size[a] * std::size_t(bp.p)) continue;
            bool sub = true;
            for (std::size_t k = 0; k < mem[a].size() && sub; ++k) sub = !mem[a][k] || mem[b][k];
            if (sub) covers.push_back({a, b});
        }
    std::vector<std::string> labels;
    for (const auto& A : si.elements) labels.push_back(describe(A));
    si.lattice = finlat::Lattice::from_covers(N, covers, labels);
    return si;
}

std::size_t count_cone(const BeamParams& bp, int max_degree) {
    return count_hnf(bp, max_degree, [&](const std::vector<int>& a) {
        return std::accumulate(a.begin(), a.end(), 0) <= max_degree;
    });
}

std::vector<PLattice> enumerate_cone(const BeamParams& bp, int max_degree) {
    check_params(bp);
    std::size_t total = count_cone(bp, max_degree);
    if (total > max_enum()) throw TooLarge(std::to_string(total) + " lattices requested");
    std::vector<PLattice> out;
    out.reserve(total);
    for_each_hnf(
        bp, max_degree,
        [&](const std::vector<int>& a) { return std::accumulate(a.begin(), a.end(), 0) <= max_degree; },
        [&](const Matrix& H) { out.push_back(normalized(bp, H, 0)); });
    return out;
}

void for_each_in_cone(const BeamParams& bp, int max_degree,
                      const std::function<void(const PLattice&)>& f) {
    check_params(bp);
    for_each_hnf(
        bp, max_degree,
        [&](const std::vector<int>& a) { return std::accumulate(a.begin(), a.end(), 0) <= max_degree; },
        [&](const Matrix& H) { f(normalized(bp, H, 0)); });
}

std::vector<PLattice> dual_basis(const BeamParams& bp, int n) {
    check_params(bp);
    std::vector<PLattice> ys;
    for (int i = 0; i < bp.delta; ++i) {
        Matrix H(bp.delta, std::vector<i64>(bp.delta, 0));
        for (int r = 0; r < bp.delta; ++r) H[r][r] = r == i ? pow(bp.p, n) : 1;
        ys.push_back(normalized(bp, H, 0));
    }
    return ys;
}

ProductElement product_unit(const std::vector<BeamParams>& ps) { return product_shift(ps, 0); }

ProductElement product_shift(const std::vector<BeamParams>& ps, int n) {
    ProductElement x;
    for (const auto& bp : ps) x.slots.push_back(frozen(bp, n));
    return x;
}

ProductElement product_frozen(const std::vector<BeamParams>& ps, int n, int slot) {
    ProductElement x = product_unit(ps);
    x.slots.at(slot) = frozen(ps[slot], n);
    return x;
}

namespace {

void same_shape(const ProductElement& a, const ProductElement& b) {
    if (a.slots.size() != b.slots.size()) throw ParamMismatch("products with different slot counts");
}

}  // namespace

ProductElement product_meet(const ProductElement& a, const ProductElement& b) {
    same_shape(a, b);
    ProductElement x;
    for (std::size_t i = 0; i < a.slots.size(); ++i) x.slots.push_back(meet(a.slots[i], b.slots[i]));
    return x;
}

ProductElement product_join(const ProductElement& a, const ProductElement& b) {
    same_shape(a, b);
    ProductElement x;
    for (std::size_t i = 0; i < a.slots.size(); ++i) x.slots.push_back(join(a.slots[i], b.slots[i]));
    return x;
}

bool product_leq(const ProductElement& a, const ProductElement& b) {
    same_shape(a, b);
    for (std::size_t i = 0; i < a.slots.size(); ++i)
        if (!leq(a.slots[i], b.slots[i])) return false;
    return true;
}

int product_degree(const ProductElement& a) {
    int d = 0;
    for (const auto& s : a.slots) d += degree(s);
    return d;
}

int product_lambda(const ProductElement& a) {
    int l = 0;
    for (const auto& s : a.slots) {
        auto ex = snf_exponents(s);
        if (!ex.empty()) l = std::max(l, ex.front());
    }
    return l;
}

ProductDecomposition product_decompose(const ProductElement& x) {
    std::vector<BeamParams> ps;
    for (const auto& s : x.slots) ps.push_back(s.params);
    ProductDecomposition out;
    out.n = product_lambda(x);
    const int k = int(ps.size());
    std::vector<ProductElement> phi;
    for (int i = 0; i < k; ++i) {
        phi.push_back(product_frozen(ps, out.n, i));
        out.components.push_back(product_join(x, phi.back()));
    }
    auto meet_of = [&](unsigned mask) {
        ProductElement m = product_unit(ps);
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) m = product_meet(m, phi[i]);
        return m;
    };
    bool ok = meet_of((1u << k) - 1) == product_shift(ps, out.n);
    for (unsigned A = 0; A < (1u << k) && ok; ++A)
        for (unsigned B = 0; B < (1u << k) && ok; ++B)
            ok = product_join(meet_of(A), meet_of(B)) == meet_of(A & B);
    ProductElement back = product_unit(ps);
    for (const auto& c : out.components) back = product_meet(back, c);
    out.dual_frame_ok = ok && back == x;
    return out;
}

nlohmann::json to_json(const PLattice& A) {
    return {{"p", A.params.p}, {"delta", A.params.delta}, {"scale", A.scale}, {"H", A.H}};
}

PLattice plattice_from_json(const nlohmann::json& j) {
    for (const char* k : {"p", "delta", "H"})
        if (!j.contains(k)) throw BadInput(std::string("lattice JSON lacks \"") + k + "\"");
    BeamParams bp{j.at("p").get<int>(), j.at("delta").get<int>()};
    int scale = j.value("scale", 0);
    return canonicalize(bp, j.at("H").get<Matrix>(), scale);
}

nlohmann::json to_json(const SnfProfile& s) {
    return {{"exponents", s.exponents},
            {"degree", s.degree},
            {"lambda", s.lambda},
            {"iota", s.iota},
            {"meetIrreducible", s.meet_irreducible},
            {"oneHomogeneous", s.one_homogeneous},
            {"dualChain", s.dual_chain}};
}

std::string describe(const PLattice& A) {
    std::ostringstream os;
    if (A.scale != 0) os << A.params.p << "^" << -A.scale << "*";
    os << "<";
    for (int c = 0; c < A.delta(); ++c) {
        os << (c ? " " : "") << "(";
        for (int r = 0; r < A.delta(); ++r) os << (r ? "," : "") << A.H[r][c];
        os << ")";
    }
    os << ">";
    return os.str();
}

}  // namespace glat::latmod
