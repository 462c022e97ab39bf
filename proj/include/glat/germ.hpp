#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "glat/finlat.hpp"

namespace glat::germ {

// The interval [Delta, e] of a right l-group with its partial product.
struct GermTable {
    std::vector<std::string> names;
    int identity = 0;
    int delta = 0;
    std::vector<int> degree;
    std::vector<int> product;  // size n*n, product[a*n+b] = a*b or -1

    int size() const { return int(names.size()); }
};

struct GermReport {
    bool ok = true;
    std::string witness;
};

GermReport validate_germ(const GermTable& t);

class Germ {
public:
    Germ() = default;
    explicit Germ(GermTable t);

    int size() const { return n_; }
    int e() const { return t_.identity; }
    int delta() const { return t_.delta; }
    int degree(int a) const { return t_.degree[a]; }
    const std::string& name(int a) const { return t_.names[a]; }
    int id(const std::string& name) const;
    const GermTable& table() const { return t_; }

    int mul(int a, int b) const { return t_.product[a * n_ + b]; }
    int rdiv(int a, int b) const { return rdiv_[a * n_ + b]; }  // c with c*b = a
    int ldiv(int a, int b) const { return ldiv_[a * n_ + b]; }  // c with b*c = a
    int comp(int a) const { return rdiv(delta(), a); }          // c with c*a = Delta
    int rcomp(int a) const { return ldiv(delta(), a); }         // c with a*c = Delta
    int conj(int a) const { return comp(comp(a)); }             // Delta a Delta^{-1}
    int conj_inv(int a) const { return rcomp(rcomp(a)); }       // Delta^{-1} a Delta

    bool leq(int a, int b) const { return rdiv(a, b) >= 0; }
    int meet(int a, int b) const { return lat_.meet(a, b); }
    int join(int a, int b) const { return lat_.join(a, b); }
    int arrow(int a, int b) const { return rdiv(meet(a, b), a); }
    const finlat::Lattice& lattice() const { return lat_; }
    const std::vector<int>& atoms() const { return atoms_; }  // degree-one elements

    const Germ& opposite() const { return *op_; }

private:
    Germ(GermTable t, bool withOpposite);
    void build(bool withOpposite);

    GermTable t_;
    int n_ = 0;
    std::vector<int> rdiv_, ldiv_;
    finlat::Lattice lat_;
    std::vector<int> atoms_;
    std::shared_ptr<const Germ> op_;
};

GermTable opposite_table(const GermTable& t);
GermTable product_table(const GermTable& a, const GermTable& b);

GermTable germ_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GermTable& t);

// Reference germs.
GermTable free_abelian_germ();  // Z^2: xy = yx = Delta
GermTable klein_germ();         // x^2 = y^2 = Delta
GermTable braid3_germ();        // xy = yz = zx = Delta, interval M3
GermTable integer_germ();       // Z: a single step Delta

}  // namespace glat::germ
