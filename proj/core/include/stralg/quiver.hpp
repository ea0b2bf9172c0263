#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace stralg {

struct Arrow {
    std::string name;
    int source = 0; // vertex index
    int target = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& name) const;
    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }

    // Throws std::invalid_argument on duplicate or clashing names and on
    // arrows with undeclared endpoints.
    void validate() const;
};

// A path in composition order: letters[0] is applied last, so for a word
// written "ab" the walk runs through b first. A stationary path has empty
// letters and carries its vertex.
struct PathExpr {
    std::vector<int> letters; // arrow indices
    int vertex = -1;          // only meaningful when letters is empty

    bool stationary() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }
};

int path_source(const Quiver& q, const PathExpr& p);
int path_target(const Quiver& q, const PathExpr& p);
bool path_composes(const Quiver& q, const PathExpr& p);

// General relation: a k-linear combination of parallel paths of equal
// length, coefficients given as integers of the prime field / rationals.
struct GeneralRelationTerm {
    long long coeff = 0;
    PathExpr path;
};
using GeneralRelation = std::vector<GeneralRelationTerm>;

struct RelationSet {
    std::vector<PathExpr> monomial;
    std::vector<GeneralRelation> general;

    bool empty() const { return monomial.empty() && general.empty(); }
};

struct AdmissibilityReport {
    bool ok = false;
    int nilpotency_bound = 0; // smallest n with all length-n paths in the ideal
    std::string error;        // set when ok is false
};

struct BiserialCheck {
    bool ok = true;
    std::string violation; // offending vertex or arrow pair, human readable
};

class MalformedPath : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bound quiver algebra kQ/I with its surviving-path basis. Construction
// validates admissibility (searching the nilpotency bound up to `cap`) and
// enumerates the basis in length-then-lexicographic order (stationary paths
// first, in vertex declaration order; longer paths compared letterwise by
// arrow name).
class BoundQuiverAlgebra {
public:
    BoundQuiverAlgebra(Quiver q, RelationSet r, int cap = 64);

    const Quiver& quiver() const { return quiver_; }
    const RelationSet& relations() const { return relations_; }
    const AdmissibilityReport& admissibility() const { return adm_; }

    const std::vector<PathExpr>& basis() const { return basis_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    int basis_index(const PathExpr& p) const; // -1 when the path dies in I

    // For monomial ideals only: product of two basis paths, as a basis index
    // (-1 when the product is zero in the algebra or does not compose).
    int mul_basis(int i, int j) const;

    bool in_ideal(const PathExpr& p) const;
    bool monomial_relations_only() const { return relations_.general.empty(); }

    BiserialCheck special_biserial() const;
    bool string_algebra() const;

    std::string name; // optional display name, set by the file loader

private:
    Quiver quiver_;
    RelationSet relations_;
    AdmissibilityReport adm_;
    int cap_;
    std::vector<PathExpr> basis_;
    std::map<std::vector<int>, int> basis_lookup_; // letters -> basis index
    std::vector<int> stationary_index_;            // per vertex

    bool in_ideal_monomial(const PathExpr& p) const;
};

// Standalone admissibility check per the contract: smallest n <= cap with
// every length-n path inside the ideal; relations must compose.
AdmissibilityReport validate_admissible(const Quiver& q, const RelationSet& r, int cap = 64);

std::string path_to_string(const Quiver& q, const PathExpr& p);

} // namespace stralg
