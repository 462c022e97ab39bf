#include "glat/germ.hpp"

#include <array>
#include <map>
#include <sstream>

#include "glat/error.hpp"

namespace glat::germ {

namespace {

std::string fmt3(const GermTable& t, const char* what, int a, int b, int c) {
    std::ostringstream os;
    os << what << " at (" << t.names[a] << ", " << t.names[b];
    if (c >= 0) os << ", " << t.names[c];
    os << ")";
    return os.str();
}

// Partial order by divisibility; `right` selects a <= b iff a = b*c.
bool divides(const GermTable& t, int a, int b, bool right) {
    int n = t.size();
    for (int c = 0; c < n; ++c) {
        int p = right ? t.product[b * n + c] : t.product[c * n + b];
        if (p == a) return true;
    }
    return false;
}

std::string check_order_lattice(const GermTable& t, bool right) {
    int n = t.size();
    auto leq = [&](int a, int b) { return divides(t, a, b, right); };
    const char* side = right ? "right" : "left";
    for (int a = 0; a < n; ++a) {
        if (!leq(a, t.identity) || !leq(t.delta, a))
            return std::string(side) + "-divisibility order: " + t.names[a] +
                   " not between Delta and e";
    }
    try {
        finlat::Lattice::from_order(n, leq);
    } catch (const Error& ex) {
        return std::string(side) + "-divisibility order is not a lattice: " + ex.what();
    }
    return {};
}

}  // namespace

GermReport validate_germ(const GermTable& t) {
    GermReport r;
    auto fail = [&](std::string w) {
        r.ok = false;
        r.witness = std::move(w);
        return r;
    };
    int n = t.size();
    if (n == 0) return fail("empty germ");
    if (int(t.degree.size()) != n || int(t.product.size()) != n * n)
        return fail("table sizes do not match the element count");
    if (t.identity < 0 || t.identity >= n || t.delta < 0 || t.delta >= n)
        return fail("identity or Delta out of range");
    {
        std::map<std::string, int> seen;
        for (int a = 0; a < n; ++a)
            if (!seen.emplace(t.names[a], a).second)
                return fail("duplicate element name " + t.names[a]);
    }
    auto mul = [&](int a, int b) { return t.product[a * n + b]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul(a, b) < -1 || mul(a, b) >= n)
                return fail(fmt3(t, "product entry out of range", a, b, -1));
    const int e = t.identity;
    for (int a = 0; a < n; ++a) {
        if (mul(e, a) != a || mul(a, e) != a)
            return fail(fmt3(t, "identity is not neutral", e, a, -1));
        if (a != e && t.degree[a] <= 0)
            return fail("non-identity element " + t.names[a] + " has degree <= 0");
    }
    if (t.degree[e] != 0) return fail("identity has nonzero degree");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = mul(a, b);
            if (ab >= 0 && t.degree[ab] != t.degree[a] + t.degree[b])
                return fail(fmt3(t, "degree is not additive", a, b, -1));
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int ab = mul(a, b), bc = mul(b, c);
                int l = ab >= 0 ? mul(ab, c) : -1;
                int rr = bc >= 0 ? mul(a, bc) : -1;
                if (l != rr)
                    return fail(fmt3(t, "partial associativity fails", a, b, c));
            }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (mul(a, b) >= 0 && mul(a, b) == mul(a, c))
                    return fail(fmt3(t, "left cancellativity fails", a, b, c));
                if (mul(b, a) >= 0 && mul(b, a) == mul(c, a))
                    return fail(fmt3(t, "right cancellativity fails", b, c, a));
            }
    for (int a = 0; a < n; ++a) {
        bool left = false, right = false;
        for (int c = 0; c < n; ++c) {
            left |= mul(c, a) == t.delta;
            right |= mul(a, c) == t.delta;
        }
        if (!left || !right)
            return fail("Delta has no complement of " + t.names[a]);
    }
    if (auto w = check_order_lattice(t, false); !w.empty()) return fail(w);
    if (auto w = check_order_lattice(t, true); !w.empty()) return fail(w);
    return r;
}

Germ::Germ(GermTable t) : Germ(std::move(t), true) {}

Germ::Germ(GermTable t, bool withOpposite) : t_(std::move(t)) {
    auto rep = validate_germ(t_);
    if (!rep.ok) throw InvalidGerm(rep.witness);
    build(withOpposite);
}

void Germ::build(bool withOpposite) {
    n_ = t_.size();
    rdiv_.assign(n_ * n_, -1);
    ldiv_.assign(n_ * n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (int c = mul(a, b); c >= 0) {
                rdiv_[c * n_ + b] = a;
                ldiv_[c * n_ + a] = b;
            }
    lat_ = finlat::Lattice::from_order(
        n_, [&](int a, int b) { return rdiv(a, b) >= 0; }, t_.names);
    atoms_ = lat_.dual_atoms();
    if (withOpposite)
        op_ = std::shared_ptr<const Germ>(new Germ(opposite_table(t_), false));
}

int Germ::id(const std::string& name) const {
    for (int a = 0; a < n_; ++a)
        if (t_.names[a] == name) return a;
    throw BadInput("unknown germ element '" + name + "'");
}

GermTable opposite_table(const GermTable& t) {
    GermTable o = t;
    int n = t.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) o.product[a * n + b] = t.product[b * n + a];
    return o;
}

GermTable product_table(const GermTable& a, const GermTable& b) {
    GermTable t;
    int na = a.size(), nb = b.size(), n = na * nb;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            bool id = i == a.identity && j == b.identity;
            bool dl = i == a.delta && j == b.delta;
            t.names.push_back(id   ? std::string("e")
                              : dl ? std::string("D")
                                   : "(" + a.names[i] + "," + b.names[j] + ")");
            t.degree.push_back(a.degree[i] + b.degree[j]);
        }
    t.identity = a.identity * nb + b.identity;
    t.delta = a.delta * nb + b.delta;
    t.product.assign(n * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int pa = a.product[(x / nb) * na + y / nb];
            int pb = b.product[(x % nb) * nb + y % nb];
            if (pa >= 0 && pb >= 0) t.product[x * n + y] = pa * nb + pb;
        }
    return t;
}

namespace {

GermTable from_relations(std::vector<std::string> names, std::vector<int> degree,
                         const std::vector<std::array<int, 3>>& rel) {
    GermTable t;
    t.names = std::move(names);
    t.degree = std::move(degree);
    int n = t.size();
    t.identity = 0;
    t.delta = n - 1;
    t.product.assign(n * n, -1);
    for (int a = 0; a < n; ++a) {
        t.product[a] = a;
        t.product[a * n] = a;
    }
    for (auto [a, b, c] : rel) t.product[a * n + b] = c;
    return t;
}

}  // namespace

GermTable free_abelian_germ() {
    return from_relations({"e", "x", "y", "D"}, {0, 1, 1, 2}, {{1, 2, 3}, {2, 1, 3}});
}

GermTable klein_germ() {
    return from_relations({"e", "x", "y", "D"}, {0, 1, 1, 2}, {{1, 1, 3}, {2, 2, 3}});
}

GermTable braid3_germ() {
    return from_relations({"e", "x", "y", "z", "D"}, {0, 1, 1, 1, 2},
                          {{1, 2, 4}, {2, 3, 4}, {3, 1, 4}});
}

GermTable integer_germ() { return from_relations({"e", "D"}, {0, 1}, {}); }

GermTable germ_from_json(const nlohmann::json& j) {
    try {
        GermTable t;
        t.names = j.at("elements").get<std::vector<std::string>>();
        int n = t.size();
        std::map<std::string, int> ids;
        for (int a = 0; a < n; ++a) ids[t.names[a]] = a;
        auto id = [&](const std::string& s) {
            auto it = ids.find(s);
            if (it == ids.end()) throw BadInput("unknown germ element '" + s + "'");
            return it->second;
        };
        t.identity = id(j.at("identity").get<std::string>());
        t.delta = id(j.at("delta").get<std::string>());
        t.product.assign(n * n, -1);
        for (int a = 0; a < n; ++a) {
            t.product[t.identity * n + a] = a;
            t.product[a * n + t.identity] = a;
        }
        for (const auto& row : j.at("product")) {
            auto v = row.get<std::vector<std::string>>();
            if (v.size() != 3) throw BadInput("product rows are [a, b, a*b]");
            t.product[id(v[0]) * n + id(v[1])] = id(v[2]);
        }
        t.degree.assign(n, 0);
        if (j.contains("degree")) {
            for (auto& [k, v] : j.at("degree").items()) t.degree[id(k)] = v.get<int>();
        } else {
            // Grade by the left-divisibility order: deg(a) is the rank below e.
            auto L = finlat::Lattice::from_order(n, [&](int a, int b) {
                return divides(t, a, b, false);
            });
            for (int a = 0; a < n; ++a)
                t.degree[a] = L.height(L.top()) - L.height(a);
        }
        return t;
    } catch (const nlohmann::json::exception& ex) {
        throw BadInput(std::string("germ JSON: ") + ex.what());
    } catch (const NotALattice&) {
        throw InvalidGerm("left-divisibility order is not a lattice");
    } catch (const CyclicCovers&) {
        throw InvalidGerm("left-divisibility order has a cycle");
    }
}

nlohmann::json to_json(const GermTable& t) {
    nlohmann::json j;
    j["elements"] = t.names;
    j["identity"] = t.names[t.identity];
    j["delta"] = t.names[t.delta];
    nlohmann::json deg = nlohmann::json::object();
    for (int a = 0; a < t.size(); ++a) deg[t.names[a]] = t.degree[a];
    j["degree"] = deg;
    nlohmann::json prod = nlohmann::json::array();
    int n = t.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = t.product[a * n + b];
            if (c >= 0 && a != t.identity && b != t.identity)
                prod.push_back({t.names[a], t.names[b], t.names[c]});
        }
    j["product"] = prod;
    return j;
}

}  // namespace glat::germ
