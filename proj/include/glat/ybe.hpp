#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "glat/germ.hpp"

namespace glat::ybe {

// R(x, y) = (lambda_x(y), rho_y(x)) on {0, ..., n-1}.
struct RMap {
    int n = 0;
    std::vector<std::pair<int, int>> table;  // index x*n + y

    std::pair<int, int> operator()(int x, int y) const { return table[x * n + y]; }
    int lambda(int x, int y) const { return table[x * n + y].first; }
    int rho(int y, int x) const { return table[x * n + y].second; }
    bool operator==(const RMap&) const = default;
    auto operator<=>(const RMap&) const = default;
};

// Every left translation y -> x.y is a bijection.
struct CycleSet {
    int n = 0;
    std::vector<int> op;  // index x*n + y

    int operator()(int x, int y) const { return op[x * n + y]; }
    bool operator==(const CycleSet&) const = default;
};

// Carrier {e} + {0..n-1}; e is encoded as -1.
struct LAlgebra {
    int n = 0;
    std::vector<int> arrow;  // x -> y for generators, -1 on the diagonal
    std::vector<int> D;

    int operator()(int a, int b) const;  // total arrow on the carrier
    bool operator==(const LAlgebra&) const = default;
};

struct SolutionReport {
    bool bijective = false;
    bool nondegenerate = false;
    bool involutive = false;
    bool braid = false;
    bool ok() const { return bijective && nondegenerate && involutive && braid; }
};

SolutionReport validate(const RMap& R);
bool is_cycle_set(const CycleSet& C);
struct LAlgebraReport {
    bool l_algebra = false;
    bool discrete = false;
    bool duality = false;
    bool ok() const { return l_algebra && discrete && duality; }
};
LAlgebraReport validate(const LAlgebra& L);

CycleSet to_cycle_set(const RMap& R);
RMap to_rmap(const CycleSet& C);
LAlgebra to_lalgebra(const RMap& R);
RMap to_rmap(const LAlgebra& L);

RMap trivial_solution(int n);
// R(x, y) = (s(y), s^{-1}(x)) for a permutation s; s = swap gives the two-element twist.
RMap permutation_solution(const std::vector<int>& s);

// The interval [Delta, e] of the structure monoid with relations wx = yz, R(w, x) = (y, z).
germ::GermTable structure_germ(const RMap& R, int maxN = 6);
// L-algebra with duality read off the generators of a structure germ.
LAlgebra lalgebra_from_germ(const germ::Germ& G);

struct Enumeration {
    int n = 0;
    std::vector<RMap> solutions;        // sorted
    std::vector<RMap> representatives;  // lexicographically least per isomorphism class
};

// Non-degenerate involutive solutions through cycle sets.
Enumeration enumerate(int n);
// The same solutions from an independent search over (lambda, rho) families; n <= 3.
std::vector<RMap> enumerate_by_families(int n, bool requireInvolutive = true);
RMap canonical_relabeling(const RMap& R);

nlohmann::json to_json(const RMap& R);
RMap rmap_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CycleSet& C);
CycleSet cycle_set_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LAlgebra& L);
LAlgebra lalgebra_from_json(const nlohmann::json& j);

}  // namespace glat::ybe
