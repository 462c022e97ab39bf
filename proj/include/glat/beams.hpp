#pragma once

#include <array>
#include <vector>

#include <json.hpp>

#include "glat/cone.hpp"
#include "glat/finlat.hpp"
#include "glat/germ.hpp"

namespace glat::germ {

// ---- local structure of the negative cone ----

// Elements h with g < h and deg h = deg g - 1.
std::vector<Word> upper_covers(const Germ& G, const Word& g);
bool left_divides(const Germ& G, const Word& d, const Word& a);

struct ConeInterval {
    std::vector<Word> elements;  // sorted by degree, then lexicographically
    finlat::Lattice lattice;
};
// The interval [g, e]; TooLarge beyond the enumeration guard.
ConeInterval interval_above(const Germ& G, const Word& g);

struct DegreeData {
    int deg = 0;
    int lambda = 0;
    std::vector<int> iota;
    bool one_homogeneous = false;
    bool meet_irreducible = false;  // at most one upper cover
    bool dual_chain = false;        // [g, e] is a chain
};
DegreeData degree_data(const Germ& G, const Word& g);

// Join of the upper covers of g.
Word socle(const Germ& G, const Word& g);
// Meet of the lower covers of e inside [g, e].
Word radical_of_top(const Germ& G, const Word& g);

// ---- center, U/L/M counts and the duality D ----

struct IntervalAnalysis {
    std::vector<int> center;        // germ ids, ascending
    std::vector<int> center_atoms;  // X(center), ascending
    std::vector<std::array<int, 3>> ulm;  // (U, L, M) per germ element
    std::vector<int> D;             // D[z] for z in X(center), -1 elsewhere
    bool center_closed = false;     // under the germ arrow
    bool m_zero_iff_central = false;
    bool u_of_complement_is_l = false;
    bool d_bijective = false;       // on X(center), preserving degree and U
    bool duality_axiom = false;
    bool ok() const {
        return center_closed && m_zero_iff_central && u_of_complement_is_l && d_bijective &&
               duality_axiom;
    }
};
IntervalAnalysis interval_analysis(const Germ& G);
nlohmann::json to_json(const Germ& G, const IntervalAnalysis& a);

// ---- frozen powers, semibeams and beams ----

struct SemibeamDecomposition {
    int n = 0;                     // frame level, lambda(g) by default
    std::vector<Word> components;  // one per center dual atom
    bool meet_ok = false;
};

struct BeamDecomposition {
    int n = 0;  // shift level, f <= s^n
    std::vector<Fraction> components;
};

struct ScaffoldReport {
    std::vector<Word> elements;
    bool distributive = false;
};

class BeamStructure {
public:
    explicit BeamStructure(Germ G);

    const Germ& germ() const { return G_; }
    const IntervalAnalysis& analysis() const { return A_; }
    int rank() const { return int(A_.center_atoms.size()); }
    int slot_of(int z) const;

    // [D^{n-1} z, ..., D z, z]
    Word frozen(int z, int n) const;

    SemibeamDecomposition semibeams(const Word& g, int n = -1) const;
    // Elements of [g, e] lying in the semibeam of slot i.
    bool in_semibeam(const Word& y, int slot) const;
    // pi[i] = slot receiving semibeam i under right multiplication by g.
    std::vector<int> rigidity(const Word& g, int depth = 2) const;

    int minimal_shift(const Fraction& f) const;
    BeamDecomposition beams(const Fraction& f, int n = -1) const;
    Fraction recompose(const std::vector<Fraction>& components) const;

    ScaffoldReport scaffold(int degreeBound) const;

private:
    Germ G_;
    IntervalAnalysis A_;
};

}  // namespace glat::germ
