#include "glat/beams.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "glat/error.hpp"
#include "glat/guard.hpp"

namespace glat::germ {

bool left_divides(const Germ& G, const Word& d, const Word& a) {
    return gcld(G, d, a) == right_normal_form(G, d);
}

std::vector<Word> upper_covers(const Germ& G, const Word& g0) {
    Word g = right_normal_form(G, g0);
    std::vector<Word> out;
    for (int a : G.atoms()) {
        if (!left_divides(G, {a}, g)) continue;
        Word h = left_quotient(G, g, {a});
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ConeInterval interval_above(const Germ& G, const Word& g0) {
    Word g = right_normal_form(G, g0);
    std::set<Word> seen{Word{}};
    std::deque<Word> todo{Word{}};
    while (!todo.empty()) {
        Word y = todo.front();
        todo.pop_front();
        for (int a : G.atoms()) {
            Word c = multiply(G, {a}, y);
            if (seen.count(c) || !leq(G, g, c)) continue;
            seen.insert(c);
            if (seen.size() > max_enum())
                throw TooLarge("interval above " + show(G, g) + " exceeds the enumeration guard");
            todo.push_back(c);
        }
    }
    ConeInterval out;
    out.elements.assign(seen.begin(), seen.end());
    std::stable_sort(out.elements.begin(), out.elements.end(), [&](const Word& a, const Word& b) {
        return degree(G, a) < degree(G, b);
    });
    std::vector<std::string> labels;
    for (const Word& w : out.elements) labels.push_back(show(G, w));
    out.lattice = finlat::Lattice::from_order(
        int(out.elements.size()),
        [&](int i, int j) { return leq(G, out.elements[i], out.elements[j]); }, labels);
    return out;
}

DegreeData degree_data(const Germ& G, const Word& g0) {
    Word g = right_normal_form(G, g0);
    DegreeData d;
    d.deg = degree(G, g);
    d.lambda = int(g.size());
    d.iota = index_sequence(G, g);
    d.one_homogeneous = std::all_of(d.iota.begin(), d.iota.end(), [](int i) { return i == 1; });
    d.meet_irreducible = upper_covers(G, g).size() <= 1;
    d.dual_chain = true;
    for (Word cur = g; !cur.empty();) {
        auto up = upper_covers(G, cur);
        if (up.size() != 1) {
            d.dual_chain = false;
            break;
        }
        cur = up[0];
    }
    return d;
}

Word socle(const Germ& G, const Word& g) {
    auto up = upper_covers(G, g);
    if (up.empty()) return {};
    Word s = up[0];
    for (const Word& h : up) s = join(G, s, h);
    return s;
}

Word radical_of_top(const Germ& G, const Word& g) {
    Word r;
    for (int a : G.atoms())
        if (leq(G, g, {a})) r = meet(G, r, {a});
    return r;
}

IntervalAnalysis interval_analysis(const Germ& G) {
    const auto& L = G.lattice();
    const int n = G.size(), e = G.e();
    IntervalAnalysis A;
    A.center = finlat::center(L);
    std::sort(A.center.begin(), A.center.end());
    auto central = [&](int a) {
        return std::binary_search(A.center.begin(), A.center.end(), a);
    };
    for (int c : A.center) {
        if (c == e) continue;
        bool maximal = std::none_of(A.center.begin(), A.center.end(),
                                    [&](int d) { return d != e && L.lt(c, d); });
        if (maximal) A.center_atoms.push_back(c);
    }
    const auto& X = A.center_atoms;
    const int k = int(X.size());

    A.ulm.resize(n);
    for (int a = 0; a < n; ++a) {
        int U = 0, Lo = 0;
        for (int z : X) {
            U += G.join(a, z) == e;
            Lo += G.join(a, z) == z;
        }
        A.ulm[a] = {U, Lo, k - U - Lo};
    }

    A.center_closed = true;
    for (int a : A.center)
        for (int b : A.center) A.center_closed &= central(G.arrow(a, b));
    A.m_zero_iff_central = true;
    A.u_of_complement_is_l = true;
    for (int a = 0; a < n; ++a) {
        A.m_zero_iff_central &= (A.ulm[a][2] == 0) == central(a);
        A.u_of_complement_is_l &= A.ulm[G.comp(a)][0] == A.ulm[a][1];
    }

    auto inX = [&](int a) { return std::find(X.begin(), X.end(), a) != X.end(); };
    A.D.assign(n, -1);
    A.d_bijective = true;
    for (int z : X) {
        int c = G.comp(z);
        int d = central(c) ? finlat::central_complement(L, c) : -1;
        if (d < 0 || !inX(d)) {
            A.d_bijective = false;
            continue;
        }
        A.D[z] = d;
    }
    if (A.d_bijective) {
        std::set<int> image;
        for (int z : X) {
            image.insert(A.D[z]);
            A.d_bijective &= G.degree(A.D[z]) == G.degree(z);
            A.d_bijective &= A.ulm[A.D[z]][0] == A.ulm[z][0];
        }
        A.d_bijective &= int(image.size()) == k;
    }
    A.duality_axiom = A.d_bijective;
    if (A.duality_axiom)
        for (int x : X)
            for (int y : X) {
                if (x == y) continue;
                int xy = G.arrow(x, y);
                if (!inX(xy)) {
                    A.duality_axiom = false;
                    continue;
                }
                A.duality_axiom &= A.D[xy] == G.arrow(G.arrow(y, x), A.D[y]);
            }
    return A;
}

nlohmann::json to_json(const Germ& G, const IntervalAnalysis& a) {
    nlohmann::json j;
    std::vector<std::string> center, atoms;
    for (int c : a.center) center.push_back(G.name(c));
    for (int z : a.center_atoms) atoms.push_back(G.name(z));
    j["center"] = center;
    j["centerDualAtoms"] = atoms;
    nlohmann::json ulm = nlohmann::json::object();
    for (int x = 0; x < G.size(); ++x) ulm[G.name(x)] = {a.ulm[x][0], a.ulm[x][1], a.ulm[x][2]};
    j["ULM"] = ulm;
    nlohmann::json D = nlohmann::json::object();
    for (int z : a.center_atoms)
        if (a.D[z] >= 0) D[G.name(z)] = G.name(a.D[z]);
    j["D"] = D;
    j["centerClosed"] = a.center_closed;
    j["mZeroIffCentral"] = a.m_zero_iff_central;
    j["uOfComplementIsL"] = a.u_of_complement_is_l;
    j["dBijective"] = a.d_bijective;
    j["dualityOK"] = a.duality_axiom;
    return j;
}

BeamStructure::BeamStructure(Germ G) : G_(std::move(G)), A_(interval_analysis(G_)) {}

int BeamStructure::slot_of(int z) const {
    const auto& X = A_.center_atoms;
    auto it = std::find(X.begin(), X.end(), z);
    if (it == X.end())
        throw NotCentralDualAtom((z >= 0 && z < G_.size() ? G_.name(z) : std::to_string(z)) +
                                 " is not a dual atom of the center");
    return int(it - X.begin());
}

Word BeamStructure::frozen(int z, int n) const {
    slot_of(z);
    Word w(std::max(n, 0));
    int cur = z;
    for (int i = n - 1; i >= 0; --i) {
        if (cur < 0) throw InvalidGerm("duality is undefined on the center dual atoms");
        w[i] = cur;
        cur = A_.D[cur];
    }
    return w;
}

SemibeamDecomposition BeamStructure::semibeams(const Word& g0, int n) const {
    Word g = right_normal_form(G_, g0);
    if (n < 0) n = int(g.size());
    if (n < int(g.size())) throw BadInput("frame level below the length of the element");
    SemibeamDecomposition s;
    s.n = n;
    Word m;
    for (int z : A_.center_atoms) {
        s.components.push_back(join(G_, g, frozen(z, n)));
        m = meet(G_, m, s.components.back());
    }
    s.meet_ok = m == g;
    return s;
}

bool BeamStructure::in_semibeam(const Word& y0, int slot) const {
    Word y = right_normal_form(G_, y0);
    return leq(G_, frozen(A_.center_atoms.at(slot), int(y.size())), y);
}

std::vector<int> BeamStructure::rigidity(const Word& g0, int depth) const {
    Word g = right_normal_form(G_, g0);
    const int k = rank();
    std::vector<int> pi(k, -1);
    for (int i = 0; i < k; ++i) {
        for (int m = 1; m <= depth; ++m) {
            Word xg = multiply(G_, frozen(A_.center_atoms[i], m), g);
            int N = int(std::max(xg.size(), g.size()));
            auto a = semibeams(xg, N).components, b = semibeams(g, N).components;
            std::vector<int> moved;
            for (int j = 0; j < k; ++j)
                if (a[j] != b[j]) moved.push_back(j);
            if (moved.size() != 1 || (pi[i] >= 0 && pi[i] != moved[0]))
                throw FactorizationMismatch("right multiplication by " + show(G_, g) +
                                            " does not permute the semibeams");
            pi[i] = moved[0];
        }
    }
    std::vector<int> sorted = pi;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < k; ++i)
        if (depth > 0 && sorted[i] != i)
            throw FactorizationMismatch("semibeam images of " + show(G_, g) + " collide");
    return pi;
}

int BeamStructure::minimal_shift(const Fraction& f) const {
    for (int n = 0;; ++n)
        if (in_cone(fmul(G_, f, s_power(G_, -n)))) return n;
}

BeamDecomposition BeamStructure::beams(const Fraction& f, int n) const {
    if (n < 0) n = minimal_shift(f);
    Fraction shifted = fmul(G_, f, s_power(G_, -n));
    if (!in_cone(shifted))
        throw NotInNegativeCone(show(G_, f) + " is not below s^" + std::to_string(n));
    auto sb = semibeams(shifted.num);
    BeamDecomposition out;
    out.n = n;
    const int k = rank();
    for (int i = 0; i < k; ++i) {
        Word w = sb.components[i];
        for (int j = 0; j < k; ++j)
            if (j != i) w = meet(G_, w, frozen(A_.center_atoms[j], n));
        out.components.push_back(fmul(G_, from_word(G_, w), s_power(G_, n)));
    }
    return out;
}

Fraction BeamStructure::recompose(const std::vector<Fraction>& comps) const {
    if (int(comps.size()) != rank()) throw BadInput("one component per beam is required");
    int n = 0;
    for (const auto& c : comps) n = std::max(n, minimal_shift(c));
    Word g;
    for (int i = 0; i < rank(); ++i) {
        Word y = fmul(G_, comps[i], s_power(G_, -n)).num;
        g = meet(G_, g, semibeams(y).components[i]);
    }
    return fmul(G_, from_word(G_, g), s_power(G_, n));
}

ScaffoldReport BeamStructure::scaffold(int bound) const {
    ScaffoldReport r;
    std::set<Word> S{Word{}};
    for (int z : A_.center_atoms)
        if (G_.degree(z) <= bound) S.insert(Word{z});
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Word> cur(S.begin(), S.end());
        for (const Word& a : cur)
            for (const Word& b : cur)
                for (Word c : {multiply(G_, a, b), meet(G_, a, b), join(G_, a, b)}) {
                    if (degree(G_, c) > bound || S.count(c)) continue;
                    S.insert(c);
                    grew = true;
                    if (S.size() > max_enum()) throw TooLarge("scaffold exceeds the enumeration guard");
                }
    }
    r.elements.assign(S.begin(), S.end());
    std::stable_sort(r.elements.begin(), r.elements.end(), [&](const Word& a, const Word& b) {
        return degree(G_, a) < degree(G_, b);
    });
    r.distributive = true;
    for (const Word& a : r.elements)
        for (const Word& b : r.elements)
            for (const Word& c : r.elements)
                if (meet(G_, a, join(G_, b, c)) != join(G_, meet(G_, a, b), meet(G_, a, c))) {
                    r.distributive = false;
                    return r;
                }
    return r;
}

}  // namespace glat::germ
