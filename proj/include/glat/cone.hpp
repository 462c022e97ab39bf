#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "glat/germ.hpp"

namespace glat::germ {

// Factors in product order: {g_k, ..., g_1} stands for g_k * ... * g_1.
// Normal words carry no identity factors; the empty word is e.
using Word = std::vector<int>;

enum class Sweep { RightToLeft, LeftToRight, Shuffled };

Word right_normal_form(const Germ& G, const Word& w, Sweep sweep = Sweep::RightToLeft,
                       std::uint64_t seed = 0);
bool is_right_normal(const Germ& G, const Word& w);
Word left_normal_form(const Germ& G, const Word& w);
bool is_left_normal(const Germ& G, const Word& w);

int degree(const Germ& G, const Word& w);
// Degrees of g_1, g_2, ... of the right-normal form.
std::vector<int> index_sequence(const Germ& G, const Word& w);

Word multiply(const Germ& G, const Word& g, const Word& h);
Word arrow(const Germ& G, const Word& g, const Word& h);  // (g ^ h) g^{-1}
Word meet(const Germ& G, const Word& g, const Word& h);
Word join(const Germ& G, const Word& g, const Word& h);
bool leq(const Germ& G, const Word& g, const Word& h);
bool equal(const Germ& G, const Word& g, const Word& h);

// d^{-1} a, defined when d is a left divisor of a.
Word left_quotient(const Germ& G, const Word& a, const Word& d);
// Greatest common left divisor.
Word gcld(const Germ& G, const Word& a, const Word& b);

// g_i = (g v Delta^i)(g v Delta^{i-1})^{-1}, listed as g_k, ..., g_1.
Word closed_form_factors(const Germ& G, const Word& g);

Word delta_power(const Germ& G, int n);
// Delta^k w Delta^{-k}, letterwise.
Word conjugate(const Germ& G, const Word& w, int k);

// den^{-1} * num with gcld(den, num) = e.
struct Fraction {
    Word den, num;
    bool operator==(const Fraction&) const = default;
};

Fraction make_fraction(const Germ& G, const Word& den, const Word& num);
Fraction from_word(const Germ& G, const Word& w);
// The n-th power of the order unit s = Delta^{-1}.
Fraction s_power(const Germ& G, int n);
Fraction fmul(const Germ& G, const Fraction& a, const Fraction& b);
Fraction finv(const Fraction& a);
int fdeg(const Germ& G, const Fraction& a);
bool fleq(const Germ& G, const Fraction& a, const Fraction& b);
bool in_cone(const Fraction& a);

Word parse_word(const Germ& G, const std::vector<std::string>& names);
std::vector<std::string> word_names(const Germ& G, const Word& w);
std::string show(const Germ& G, const Word& w);
std::string show(const Germ& G, const Fraction& f);
nlohmann::json to_json(const Germ& G, const Fraction& f);

}  // namespace glat::germ
