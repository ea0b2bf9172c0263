#include "stralg/quiver.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace stralg {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Lexicographic order on letter sequences by arrow name.
struct NameLess {
    const Quiver* q;
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        const size_t n = std::min(a.size(), b.size());
        for (size_t i = 0; i < n; ++i) {
            const std::string& x = q->arrows[a[i]].name;
            const std::string& y = q->arrows[b[i]].name;
            if (x != y) return x < y;
        }
        return a.size() < b.size();
    }
};

bool contains_contiguous(const std::vector<int>& hay, const std::vector<int>& needle) {
    if (needle.empty() || needle.size() > hay.size()) return false;
    for (size_t i = 0; i + needle.size() <= hay.size(); ++i) {
        bool hit = true;
        for (size_t j = 0; j < needle.size(); ++j)
            if (hay[i + j] != needle[j]) { hit = false; break; }
        if (hit) return true;
    }
    return false;
}

} // namespace

int Quiver::vertex_index(const std::string& nm) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices[i] == nm) return i;
    return -1;
}

int Quiver::arrow_index(const std::string& nm) const {
    for (int i = 0; i < num_arrows(); ++i)
        if (arrows[i].name == nm) return i;
    return -1;
}

void Quiver::validate() const {
    std::set<std::string> names(vertices.begin(), vertices.end());
    if (names.size() != vertices.size())
        throw std::invalid_argument("quiver: duplicate vertex name");
    for (const Arrow& a : arrows) {
        if (names.count(a.name))
            throw std::invalid_argument("quiver: arrow name '" + a.name +
                                        "' clashes with another name");
        if (!names.insert(a.name).second)
            throw std::invalid_argument("quiver: duplicate arrow name '" + a.name + "'");
        if (a.source < 0 || a.source >= num_vertices() || a.target < 0 ||
            a.target >= num_vertices())
            throw std::invalid_argument("quiver: arrow '" + a.name +
                                        "' has an undeclared endpoint");
    }
}

int path_source(const Quiver& q, const PathExpr& p) {
    if (p.stationary()) return p.vertex;
    return q.arrows[p.letters.back()].source;
}

int path_target(const Quiver& q, const PathExpr& p) {
    if (p.stationary()) return p.vertex;
    return q.arrows[p.letters.front()].target;
}

bool path_composes(const Quiver& q, const PathExpr& p) {
    if (p.stationary()) return p.vertex >= 0 && p.vertex < q.num_vertices();
    for (int a : p.letters)
        if (a < 0 || a >= q.num_arrows()) return false;
    for (size_t i = 0; i + 1 < p.letters.size(); ++i)
        if (q.arrows[p.letters[i]].source != q.arrows[p.letters[i + 1]].target)
            return false;
    return true;
}

std::string path_to_string(const Quiver& q, const PathExpr& p) {
    if (p.stationary()) return "e_" + q.vertices[p.vertex];
    std::string s;
    for (size_t i = 0; i < p.letters.size(); ++i) {
        if (i) s += ' ';
        s += q.arrows[p.letters[i]].name;
    }
    return s;
}

namespace {

struct IdealOracle {
    const Quiver& q;
    const RelationSet& r;

    // Per-length ideal span over the rationals, rows reduced; plus the pivot
    // columns (path indices that die) and the per-length path list.
    struct DegreeData {
        std::vector<std::vector<int>> paths; // letter sequences, name-lex order
        std::vector<std::vector<Rational>> rref_rows;
        std::vector<int> pivot_cols;
    };
    std::map<int, DegreeData> degrees;

    bool monomial_only() const { return r.general.empty(); }

    bool in_ideal_monomial(const std::vector<int>& letters) const {
        for (const PathExpr& g : r.monomial)
            if (contains_contiguous(letters, g.letters)) return true;
        return false;
    }

    // Enumerate composable letter sequences of the given length in
    // name-lex order. When `prune` is set, sequences containing a monomial
    // generator are cut off early (their extensions stay in the ideal).
    std::vector<std::vector<int>> paths_of_length(int len, bool prune,
                                                  size_t guard = 1000000) const {
        std::vector<int> order(q.num_arrows());
        for (int i = 0; i < q.num_arrows(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return q.arrows[a].name < q.arrows[b].name;
        });

        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        std::function<void()> rec = [&]() {
            if (static_cast<int>(cur.size()) == len) {
                out.push_back(cur);
                if (out.size() > guard)
                    throw std::runtime_error("path enumeration exploded");
                return;
            }
            for (int a : order) {
                if (!cur.empty() && q.arrows[cur.back()].source != q.arrows[a].target)
                    continue;
                cur.push_back(a);
                bool dead = false;
                if (prune)
                    for (const PathExpr& g : r.monomial)
                        if (g.length() <= static_cast<int>(cur.size()) &&
                            std::equal(g.letters.begin(), g.letters.end(),
                                       cur.end() - g.length())) {
                            dead = true;
                            break;
                        }
                if (!dead) rec();
                cur.pop_back();
            }
        };
        rec();
        return out;
    }

    const DegreeData& degree(int len) {
        auto it = degrees.find(len);
        if (it != degrees.end()) return it->second;
        DegreeData d;
        d.paths = paths_of_length(len, false, 200000);
        std::map<std::vector<int>, int> index;
        for (int i = 0; i < static_cast<int>(d.paths.size()); ++i)
            index[d.paths[i]] = i;

        // Rows u * g * w for every generator g and composable decorations.
        std::vector<std::vector<Rational>> rows;
        auto add_products = [&](const std::vector<GeneralRelationTerm>& terms, int glen) {
            for (int ulen = 0; ulen + glen <= len; ++ulen) {
                const int wlen = len - glen - ulen;
                auto us = paths_of_length(ulen, false, 200000);
                auto ws = paths_of_length(wlen, false, 200000);
                std::vector<PathExpr> uexp, wexp;
                if (ulen == 0) {
                    us.clear();
                    for (int v = 0; v < q.num_vertices(); ++v) us.push_back({});
                }
                if (wlen == 0) {
                    ws.clear();
                    for (int v = 0; v < q.num_vertices(); ++v) ws.push_back({});
                }
                for (size_t ui = 0; ui < us.size(); ++ui)
                    for (size_t wi = 0; wi < ws.size(); ++wi) {
                        std::vector<Rational> row(d.paths.size(), 0);
                        bool any = false;
                        bool bad = false;
                        for (const auto& t : terms) {
                            // compose u * t.path * w
                            const auto& gp = t.path.letters;
                            int gsrc = q.arrows[gp.back()].source;
                            int gtgt = q.arrows[gp.front()].target;
                            if (ulen == 0) {
                                if (static_cast<int>(ui) != gtgt) { bad = true; break; }
                            } else if (q.arrows[us[ui].back()].source != gtgt) {
                                bad = true;
                                break;
                            }
                            if (wlen == 0) {
                                if (static_cast<int>(wi) != gsrc) { bad = true; break; }
                            } else if (gsrc != q.arrows[ws[wi].front()].target) {
                                bad = true;
                                break;
                            }
                            std::vector<int> prod;
                            if (ulen) prod.insert(prod.end(), us[ui].begin(), us[ui].end());
                            prod.insert(prod.end(), gp.begin(), gp.end());
                            if (wlen) prod.insert(prod.end(), ws[wi].begin(), ws[wi].end());
                            auto pit = index.find(prod);
                            if (pit == index.end()) { bad = true; break; }
                            row[pit->second] += Rational(t.coeff);
                            any = true;
                        }
                        if (!bad && any) rows.push_back(std::move(row));
                    }
            }
        };

        for (const PathExpr& g : r.monomial)
            if (g.length() <= len)
                add_products({GeneralRelationTerm{1, g}}, g.length());
        for (const GeneralRelation& g : r.general)
            if (!g.empty() && g.front().path.length() <= len)
                add_products(g, g.front().path.length());

        // Row reduce over Q.
        const int cols = static_cast<int>(d.paths.size());
        int rrow = 0;
        for (int col = 0; col < cols; ++col) {
            int pr = -1;
            for (int i = rrow; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][col] != 0) { pr = i; break; }
            if (pr < 0) continue;
            std::swap(rows[rrow], rows[pr]);
            Rational inv = rows[rrow][col];
            for (int j = col; j < cols; ++j) rows[rrow][j] /= inv;
            for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
                if (i == rrow) continue;
                Rational c = rows[i][col];
                if (c == 0) continue;
                for (int j = col; j < cols; ++j) rows[i][j] -= c * rows[rrow][j];
            }
            d.pivot_cols.push_back(col);
            ++rrow;
        }
        rows.resize(rrow);
        d.rref_rows = std::move(rows);
        return degrees.emplace(len, std::move(d)).first->second;
    }

    bool in_ideal(const std::vector<int>& letters) {
        if (letters.empty()) return false;
        if (monomial_only()) return in_ideal_monomial(letters);
        const DegreeData& d = degree(static_cast<int>(letters.size()));
        auto it = std::find(d.paths.begin(), d.paths.end(), letters);
        if (it == d.paths.end()) return false;
        const int col = static_cast<int>(it - d.paths.begin());
        // Reduce the unit vector by the rref rows; in the span iff it
        // reduces to zero, which for a unit vector means col is a pivot and
        // the pivot row is exactly the unit vector.
        std::vector<Rational> v(d.paths.size(), 0);
        v[col] = 1;
        for (size_t i = 0; i < d.rref_rows.size(); ++i) {
            Rational c = v[d.pivot_cols[i]];
            if (c == 0) continue;
            for (size_t j = 0; j < v.size(); ++j) v[j] -= c * d.rref_rows[i][j];
        }
        for (const Rational& x : v)
            if (x != 0) return false;
        return true;
    }
};

void validate_relations(const Quiver& q, const RelationSet& r) {
    for (const PathExpr& g : r.monomial) {
        if (g.length() < 2)
            throw MalformedPath("relation path '" + path_to_string(q, g) +
                                "' has length < 2");
        if (!path_composes(q, g))
            throw MalformedPath("relation path '" + path_to_string(q, g) +
                                "' does not compose");
    }
    for (const GeneralRelation& g : r.general) {
        if (g.empty()) throw MalformedPath("empty general relation");
        int src = -1, tgt = -1, len = -1;
        for (const auto& t : g) {
            if (t.path.length() < 2)
                throw MalformedPath("general relation term '" +
                                    path_to_string(q, t.path) + "' has length < 2");
            if (!path_composes(q, t.path))
                throw MalformedPath("general relation term '" +
                                    path_to_string(q, t.path) + "' does not compose");
            if (src < 0) {
                src = path_source(q, t.path);
                tgt = path_target(q, t.path);
                len = t.path.length();
            } else if (src != path_source(q, t.path) || tgt != path_target(q, t.path)) {
                throw MalformedPath("general relation terms are not parallel");
            } else if (len != t.path.length()) {
                throw MalformedPath("general relation mixes path lengths");
            }
        }
    }
}

AdmissibilityReport compute_admissibility(const Quiver& q, const RelationSet& r, int cap) {
    AdmissibilityReport rep;
    try {
        validate_relations(q, r);
    } catch (const MalformedPath& e) {
        rep.ok = false;
        rep.error = e.what();
        return rep;
    }

    IdealOracle oracle{q, r, {}};
    for (int n = 2; n <= cap; ++n) {
        bool all_in = true;
        if (oracle.monomial_only()) {
            // Surviving (pruned) enumeration: any path of length n that the
            // pruning lets through is not in the ideal.
            auto alive = oracle.paths_of_length(n, true);
            all_in = alive.empty();
        } else {
            for (const auto& p : oracle.paths_of_length(n, false, 200000))
                if (!oracle.in_ideal(p)) { all_in = false; break; }
        }
        if (all_in) {
            rep.ok = true;
            rep.nilpotency_bound = n;
            return rep;
        }
    }
    rep.ok = false;
    rep.error = "no nilpotency bound <= cap " + std::to_string(cap);
    return rep;
}

} // namespace

AdmissibilityReport validate_admissible(const Quiver& q, const RelationSet& r, int cap) {
    return compute_admissibility(q, r, cap);
}

BoundQuiverAlgebra::BoundQuiverAlgebra(Quiver q, RelationSet r, int cap)
    : quiver_(std::move(q)), relations_(std::move(r)), cap_(cap) {
    quiver_.validate();
    adm_ = compute_admissibility(quiver_, relations_, cap_);
    if (!adm_.ok) {
        if (adm_.error.rfind("no nilpotency bound", 0) == 0) throw CapExceeded(adm_.error);
        throw MalformedPath(adm_.error);
    }

    IdealOracle oracle{quiver_, relations_, {}};
    stationary_index_.resize(quiver_.num_vertices());
    for (int v = 0; v < quiver_.num_vertices(); ++v) {
        stationary_index_[v] = static_cast<int>(basis_.size());
        PathExpr e;
        e.vertex = v;
        basis_.push_back(e);
    }
    for (int len = 1; len < adm_.nilpotency_bound; ++len) {
        std::vector<std::vector<int>> survivors;
        if (oracle.monomial_only()) {
            survivors = oracle.paths_of_length(len, true);
        } else {
            // Basis of the degree-len quotient: non-pivot paths.
            const auto& d = oracle.degree(len);
            std::vector<bool> dead(d.paths.size(), false);
            for (int c : d.pivot_cols) dead[c] = true;
            for (size_t i = 0; i < d.paths.size(); ++i)
                if (!dead[i]) survivors.push_back(d.paths[i]);
        }
        std::sort(survivors.begin(), survivors.end(), NameLess{&quiver_});
        for (auto& letters : survivors) {
            PathExpr p;
            p.letters = std::move(letters);
            basis_lookup_[p.letters] = static_cast<int>(basis_.size());
            basis_.push_back(std::move(p));
        }
    }
}

int BoundQuiverAlgebra::basis_index(const PathExpr& p) const {
    if (p.stationary()) return stationary_index_[p.vertex];
    auto it = basis_lookup_.find(p.letters);
    return it == basis_lookup_.end() ? -1 : it->second;
}

bool BoundQuiverAlgebra::in_ideal_monomial(const PathExpr& p) const {
    for (const PathExpr& g : relations_.monomial)
        if (contains_contiguous(p.letters, g.letters)) return true;
    return false;
}

bool BoundQuiverAlgebra::in_ideal(const PathExpr& p) const {
    if (p.stationary()) return false;
    if (!path_composes(quiver_, p))
        throw MalformedPath("path '" + path_to_string(quiver_, p) + "' does not compose");
    if (p.length() >= adm_.nilpotency_bound) return true;
    if (monomial_relations_only()) return in_ideal_monomial(p);
    // General case: membership means the path's class dies, i.e. it is not a
    // basis element and reduces into the span. Basis construction already
    // classified every path of this length.
    IdealOracle oracle{quiver_, relations_, {}};
    return oracle.in_ideal(p.letters);
}

int BoundQuiverAlgebra::mul_basis(int i, int j) const {
    if (!monomial_relations_only())
        throw std::logic_error("mul_basis requires a monomial relation ideal");
    const PathExpr& x = basis_[i];
    const PathExpr& y = basis_[j];
    if (path_source(quiver_, x) != path_target(quiver_, y)) return -1;
    if (x.stationary()) return j;
    if (y.stationary()) return i;
    PathExpr p;
    p.letters = x.letters;
    p.letters.insert(p.letters.end(), y.letters.begin(), y.letters.end());
    if (p.length() >= adm_.nilpotency_bound || in_ideal_monomial(p)) return -1;
    return basis_index(p);
}

BiserialCheck BoundQuiverAlgebra::special_biserial() const {
    BiserialCheck out;
    const Quiver& q = quiver_;
    for (int v = 0; v < q.num_vertices(); ++v) {
        int outdeg = 0, indeg = 0;
        for (const Arrow& a : q.arrows) {
            if (a.source == v) ++outdeg;
            if (a.target == v) ++indeg;
        }
        if (outdeg > 2 || indeg > 2) {
            out.ok = false;
            out.violation = "vertex " + q.vertices[v] + " has " + std::to_string(outdeg) +
                            " outgoing and " + std::to_string(indeg) + " incoming arrows";
            return out;
        }
    }
    for (int b = 0; b < q.num_arrows(); ++b) {
        std::vector<int> succ, pred;
        for (int a = 0; a < q.num_arrows(); ++a) {
            // b after a: path "b a"
            if (q.arrows[b].source == q.arrows[a].target) {
                PathExpr p;
                p.letters = {b, a};
                if (!in_ideal(p)) pred.push_back(a);
            }
            // a after b: path "a b"
            if (q.arrows[a].source == q.arrows[b].target) {
                PathExpr p;
                p.letters = {a, b};
                if (!in_ideal(p)) succ.push_back(a);
            }
        }
        if (pred.size() > 1) {
            out.ok = false;
            out.violation = "arrow " + q.arrows[b].name + " composes with both " +
                            q.arrows[pred[0]].name + " and " + q.arrows[pred[1]].name +
                            " outside the ideal";
            return out;
        }
        if (succ.size() > 1) {
            out.ok = false;
            out.violation = "arrows " + q.arrows[succ[0]].name + " and " +
                            q.arrows[succ[1]].name + " both follow " + q.arrows[b].name +
                            " outside the ideal";
            return out;
        }
    }
    return out;
}

bool BoundQuiverAlgebra::string_algebra() const {
    return relations_.general.empty() && special_biserial().ok;
}

} // namespace stralg
