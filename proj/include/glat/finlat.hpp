#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace glat::finlat {

using Cover = std::pair<int, int>;  // (lower, upper)

// A finite lattice with precomputed order, meet and join tables.
class Lattice {
public:
    Lattice() = default;

    static Lattice from_covers(int n, const std::vector<Cover>& covers,
                               std::vector<std::string> labels = {});
    // Builds the Hasse diagram of a partial order given by `leq`.
    static Lattice from_order(int n, const std::function<bool(int, int)>& leq,
                              std::vector<std::string> labels = {});

    int size() const { return n_; }
    int top() const { return top_; }
    int bottom() const { return bottom_; }
    bool leq(int a, int b) const;
    bool lt(int a, int b) const { return a != b && leq(a, b); }
    int meet(int a, int b) const { return meet_[idx(a, b)]; }
    int join(int a, int b) const { return join_[idx(a, b)]; }
    int meet_all(const std::vector<int>& xs) const;
    int join_all(const std::vector<int>& xs) const;

    const std::vector<int>& upper_covers(int a) const { return up_[a]; }
    const std::vector<int>& lower_covers(int a) const { return down_[a]; }
    const std::vector<Cover>& covers() const { return covers_; }
    // Longest chain from the bottom to `a`, counted in covers.
    int height(int a) const { return height_[a]; }
    int length() const { return n_ ? height_[top_] : 0; }

    std::vector<int> interval(int lo, int hi) const;
    std::vector<int> atoms() const { return up_[bottom_]; }
    std::vector<int> dual_atoms() const { return down_[top_]; }

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int a) const;

    // The induced sublattice on `ids`; the caller guarantees closure.
    Lattice sublattice(const std::vector<int>& ids) const;
    Lattice dual() const;

private:
    std::size_t idx(int a, int b) const { return std::size_t(a) * n_ + b; }

    int n_ = 0;
    int top_ = -1;
    int bottom_ = -1;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> below_;  // scratch while building
    std::vector<int> meet_, join_;
    std::vector<std::vector<int>> up_, down_;
    std::vector<Cover> covers_;
    std::vector<int> height_;
    std::vector<std::string> labels_;
};

struct Classification {
    bool modular = false;
    bool distributive = false;
    bool geometric = false;
    int length = 0;
    std::vector<int> meet_irreducibles;
    std::vector<int> join_irreducibles;
};

struct Decomposition {
    std::vector<std::vector<int>> factors;  // each sorted
    std::vector<int> generators;            // least element of each upward-closed factor
    bool upward_closed = true;
    std::vector<std::vector<int>> witness;  // witness[x][i] = component of x in factor i
};

struct DualFrameReport {
    bool independent = false;
    bool spanning = false;
    std::vector<int> reflected;  // empty unless independent and spanning
};

bool is_modular(const Lattice& L);
bool is_distributive(const Lattice& L);
Classification classify(const Lattice& L);

// Complement realising a direct decomposition at z, or -1.
int central_complement(const Lattice& L, int z);
std::vector<int> center(const Lattice& L);
Decomposition decompose(const Lattice& L);

DualFrameReport dual_frame_check(const Lattice& L, const std::vector<int>& xs);
bool is_primary(const Lattice& L);

// chain[j] embeds into chain[j+1] through maps[j] as a principal downset.
Decomposition extend_factorization(const std::vector<Lattice>& chain,
                                   const std::vector<std::vector<int>>& maps,
                                   const Decomposition& base);

bool is_chain(const Lattice& L);

nlohmann::json to_json(const Lattice& L);
Lattice lattice_from_json(const nlohmann::json& j);
std::string to_dot(const Lattice& L, const std::string& name = "L");

// Small standard lattices used throughout tests and examples.
Lattice chain(int n);
Lattice boolean(int k);
Lattice m3();
Lattice n5();
Lattice product(const Lattice& A, const Lattice& B);

}  // namespace glat::finlat
