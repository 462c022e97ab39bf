#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "glat/finlat.hpp"
#include "glat/guard.hpp"

namespace glat::latmod {

using i64 = std::int64_t;
using Matrix = std::vector<std::vector<i64>>;  // row-major, H[row][col]

struct BeamParams {
    int p = 2;
    int delta = 1;
    bool operator==(const BeamParams&) const = default;
};

struct Rational {
    i64 num = 0;
    i64 den = 1;
};

// A = p^{-scale} * (column span of H) over the p-local integers. H is lower
// triangular with diagonal p^{a_i}; entries below the diagonal in row r lie
// in [0, p^{a_r}); not every entry of H is divisible by p.
struct PLattice {
    BeamParams params;
    int scale = 0;
    Matrix H;

    int delta() const { return params.delta; }
    std::vector<int> diagonal_exponents() const;
    bool operator==(const PLattice&) const = default;
};

void check_params(const BeamParams& bp);

// Columns of `gens` are the generators.
PLattice canonicalize(const BeamParams& bp, const Matrix& gens, int scale);
// Each inner vector is one generator.
PLattice from_rational_generators(const BeamParams& bp,
                                  const std::vector<std::vector<Rational>>& gens);

PLattice unit(const BeamParams& bp);              // R^delta, the identity
PLattice frozen(const BeamParams& bp, int n);     // p^n R^delta
PLattice dual(const PLattice& A);
PLattice join(const PLattice& A, const PLattice& B);
PLattice meet(const PLattice& A, const PLattice& B);
bool leq(const PLattice& A, const PLattice& B);  // containment
PLattice rad(const PLattice& A);                  // p A
PLattice soc(const PLattice& A);                  // p^{-1} A
int degree(const PLattice& A);
bool in_cone(const PLattice& A);
bool contains(const PLattice& A, const std::vector<i64>& v);

struct SnfProfile {
    std::vector<int> exponents;  // nonincreasing
    int degree = 0;
    int lambda = 0;
    std::vector<int> iota;
    bool meet_irreducible = false;
    bool one_homogeneous = false;
    bool dual_chain = false;
};

std::vector<int> snf_exponents(const PLattice& A);
std::vector<int> iota_by_joins(const PLattice& A);
SnfProfile snf_profile(const PLattice& A);

// Lattices B with A < B <= R^delta and [B : A] = p.
std::vector<PLattice> upper_covers_in_cone(const PLattice& A);
bool dual_chain_by_covers(const PLattice& A);

using glat::max_enum;
using glat::set_max_enum;

struct StrongInterval {
    BeamParams params;
    int n = 0;
    std::vector<PLattice> elements;
    finlat::Lattice lattice;
};

// The interval [p^n R^delta, R^delta].
StrongInterval strong_interval(const BeamParams& bp, int n);
// Every A inside R^delta of degree at most d.
std::vector<PLattice> enumerate_cone(const BeamParams& bp, int max_degree);
std::size_t count_cone(const BeamParams& bp, int max_degree);
// Streams the same lattices without materializing them; no guard applies.
void for_each_in_cone(const BeamParams& bp, int max_degree,
                      const std::function<void(const PLattice&)>& f);

// {x : x_i = 0 mod p^n} for each coordinate i.
std::vector<PLattice> dual_basis(const BeamParams& bp, int n);

// Membership table of A / p^n R^delta inside (Z/p^n)^delta, lexicographic vectors.
std::vector<bool> truncation(const PLattice& A, int n);

struct ProductElement {
    std::vector<PLattice> slots;
    bool operator==(const ProductElement&) const = default;
};

ProductElement product_unit(const std::vector<BeamParams>& ps);
ProductElement product_shift(const std::vector<BeamParams>& ps, int n);  // s^{-n}
ProductElement product_frozen(const std::vector<BeamParams>& ps, int n, int slot);
ProductElement product_meet(const ProductElement& a, const ProductElement& b);
ProductElement product_join(const ProductElement& a, const ProductElement& b);
bool product_leq(const ProductElement& a, const ProductElement& b);
int product_degree(const ProductElement& a);
int product_lambda(const ProductElement& a);

struct ProductDecomposition {
    int n = 0;
    std::vector<ProductElement> components;
    bool dual_frame_ok = false;
};
ProductDecomposition product_decompose(const ProductElement& x);

nlohmann::json to_json(const PLattice& A);
PLattice plattice_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SnfProfile& s);
std::string describe(const PLattice& A);

}  // namespace glat::latmod
