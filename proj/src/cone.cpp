#include "glat/cone.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "glat/error.hpp"

namespace glat::germ {

namespace {

void check_letters(const Germ& G, const Word& w) {
    for (int a : w)
        if (a < 0 || a >= G.size())
            throw ProductUndefined("word letter " + std::to_string(a) + " is not a germ element");
}

Word strip(const Germ& G, Word w) {
    std::erase(w, G.e());
    return w;
}

Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

// Moves the largest possible right divisor of w[i] into w[i+1].
bool fix_pair(const Germ& G, Word& w, std::size_t i) {
    int j = G.join(G.comp(w[i + 1]), w[i]);
    if (j == G.e()) return false;
    w[i + 1] = G.mul(j, w[i + 1]);
    w[i] = G.rdiv(w[i], j);
    return true;
}

// x -> H for a single germ element x and an arbitrary word H.
Word arrow_simple(const Germ& G, int x, const Word& H) {
    Word out;
    for (std::size_t k = H.size(); k-- > 0;) {
        int h = H[k];
        out.push_back(G.arrow(x, h));
        x = G.arrow(h, x);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

Word right_normal_form(const Germ& G, const Word& input, Sweep sweep, std::uint64_t seed) {
    check_letters(G, input);
    Word w = strip(G, input);
    std::mt19937_64 rng(seed);
    for (bool changed = true; changed;) {
        changed = false;
        if (w.size() < 2) break;
        std::vector<std::size_t> order(w.size() - 1);
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        if (sweep == Sweep::RightToLeft) std::reverse(order.begin(), order.end());
        if (sweep == Sweep::Shuffled) std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t i : order) changed |= fix_pair(G, w, i);
        w = strip(G, std::move(w));
    }
    return w;
}

bool is_right_normal(const Germ& G, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0 || w[i] >= G.size() || w[i] == G.e()) return false;
        if (i + 1 < w.size() && G.join(G.comp(w[i + 1]), w[i]) != G.e()) return false;
    }
    return true;
}

Word left_normal_form(const Germ& G, const Word& w) {
    check_letters(G, w);
    return reversed(right_normal_form(G.opposite(), reversed(w)));
}

bool is_left_normal(const Germ& G, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0 || w[i] >= G.size() || w[i] == G.e()) return false;
        if (i + 1 < w.size() && G.meet(w[i], G.comp(w[i + 1])) != G.delta()) return false;
    }
    return true;
}

int degree(const Germ& G, const Word& w) {
    check_letters(G, w);
    int d = 0;
    for (int a : w) d += G.degree(a);
    return d;
}

std::vector<int> index_sequence(const Germ& G, const Word& w) {
    Word nf = right_normal_form(G, w);
    std::vector<int> iota;
    for (auto it = nf.rbegin(); it != nf.rend(); ++it) iota.push_back(G.degree(*it));
    return iota;
}

Word multiply(const Germ& G, const Word& g, const Word& h) {
    Word w = g;
    w.insert(w.end(), h.begin(), h.end());
    return right_normal_form(G, w);
}

Word arrow(const Germ& G, const Word& g, const Word& h) {
    check_letters(G, g);
    check_letters(G, h);
    // (g' g_1) -> h = g' -> (g_1 -> h)
    Word cur = right_normal_form(G, h);
    for (std::size_t k = g.size(); k-- > 0;)
        cur = right_normal_form(G, arrow_simple(G, g[k], cur));
    return cur;
}

Word meet(const Germ& G, const Word& g, const Word& h) {
    return multiply(G, arrow(G, g, h), g);
}

Word join(const Germ& G, const Word& g0, const Word& h0) {
    Word g = right_normal_form(G, g0), h = right_normal_form(G, h0);
    Word tail;
    while (!g.empty() && !h.empty()) {
        int d = G.join(g.back(), h.back());
        if (d == G.e()) break;
        tail.push_back(d);
        g.back() = G.rdiv(g.back(), d);
        h.back() = G.rdiv(h.back(), d);
        g = right_normal_form(G, g);
        h = right_normal_form(G, h);
    }
    return right_normal_form(G, reversed(tail));
}

bool leq(const Germ& G, const Word& g, const Word& h) { return arrow(G, g, h).empty(); }

bool equal(const Germ& G, const Word& g, const Word& h) {
    return right_normal_form(G, g) == right_normal_form(G, h);
}

Word left_quotient(const Germ& G, const Word& a, const Word& d) {
    const Germ& O = G.opposite();
    Word q = reversed(arrow(O, reversed(d), reversed(a)));
    q = right_normal_form(G, q);
    if (multiply(G, d, q) != right_normal_form(G, a))
        throw ProductUndefined(show(G, d) + " does not left-divide " + show(G, a));
    return q;
}

Word gcld(const Germ& G, const Word& a, const Word& b) {
    const Germ& O = G.opposite();
    return right_normal_form(G, reversed(join(O, reversed(a), reversed(b))));
}

Word closed_form_factors(const Germ& G, const Word& g0) {
    Word g = right_normal_form(G, g0);
    Word out, prev;
    for (int i = 1; degree(G, prev) < degree(G, g); ++i) {
        Word cur = join(G, g, delta_power(G, i));
        Word f = arrow(G, prev, cur);
        if (f.size() != 1) throw ProductUndefined("closed-form factor is not simple");
        out.push_back(f[0]);
        prev = std::move(cur);
    }
    return reversed(out);
}

Word delta_power(const Germ& G, int n) { return Word(std::max(n, 0), G.delta()); }

Word conjugate(const Germ& G, const Word& w, int k) {
    Word out = w;
    for (int& a : out) {
        for (int i = 0; i < k; ++i) a = G.conj(a);
        for (int i = 0; i < -k; ++i) a = G.conj_inv(a);
    }
    return right_normal_form(G, out);
}

Fraction make_fraction(const Germ& G, const Word& den, const Word& num) {
    Word d = gcld(G, den, num);
    return {left_quotient(G, den, d), left_quotient(G, num, d)};
}

Fraction from_word(const Germ& G, const Word& w) { return {{}, right_normal_form(G, w)}; }

Fraction s_power(const Germ& G, int n) {
    if (n >= 0) return {delta_power(G, n), {}};
    return {{}, delta_power(G, -n)};
}

Fraction fmul(const Germ& G, const Fraction& x, const Fraction& y) {
    // b c^{-1} = (b -> c)^{-1} (c -> b)
    Word bc = arrow(G, x.num, y.den);
    Word cb = arrow(G, y.den, x.num);
    return make_fraction(G, multiply(G, bc, x.den), multiply(G, cb, y.num));
}

Fraction finv(const Fraction& a) { return {a.num, a.den}; }

int fdeg(const Germ& G, const Fraction& a) { return degree(G, a.num) - degree(G, a.den); }

bool fleq(const Germ& G, const Fraction& a, const Fraction& b) {
    return in_cone(fmul(G, a, finv(b)));
}

bool in_cone(const Fraction& a) { return a.den.empty(); }

Word parse_word(const Germ& G, const std::vector<std::string>& names) {
    Word w;
    for (const auto& s : names) w.push_back(G.id(s));
    return w;
}

std::vector<std::string> word_names(const Germ& G, const Word& w) {
    std::vector<std::string> out;
    for (int a : w) out.push_back(G.name(a));
    return out;
}

std::string show(const Germ& G, const Word& w) {
    if (w.empty()) return "e";
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + G.name(w[i]);
    return s + "]";
}

std::string show(const Germ& G, const Fraction& f) {
    return show(G, f.den) + "^-1 " + show(G, f.num);
}

nlohmann::json to_json(const Germ& G, const Fraction& f) {
    return {{"den", word_names(G, f.den)}, {"num", word_names(G, f.num)}};
}

}  // namespace glat::germ
