#pragma once

#include "stralg/quiver.hpp"
#include "stralg/words.hpp"

#include <memory>
#include <string>
#include <vector>

namespace stralg {

// Input error with a position inside the offending file.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line(line), col(col) {}
    int line = 0;
    int col = 0;
};

// Algebra documents: a JSON object with vertices, arrows and relations.
// See README for the exact schema.
std::shared_ptr<const BoundQuiverAlgebra> load_algebra(const std::string& path,
                                                       int admissibility_cap = 64);
std::shared_ptr<const BoundQuiverAlgebra> parse_algebra(const std::string& text,
                                                        const std::string& origin,
                                                        int admissibility_cap = 64);
std::string algebra_to_json(const BoundQuiverAlgebra& alg);

// Field-independent functor data; coefficients are integers that embed
// into the working field.
struct AlgElemTermData {
    long long coeff = 0;
    PathExpr path; // stationary paths carry their vertex
};
using AlgElemData = std::vector<AlgElemTermData>;

struct LamMatData {
    int n = 0;
    std::vector<AlgElemData> entries; // row-major n*n
};

struct FunctorData {
    std::string name;
    std::string source_path; // resolved relative to the functor file
    std::string target_path;
    int rank = 0;
    std::vector<LamMatData> vertex_maps; // aligned with target vertex order
    std::vector<LamMatData> arrow_maps;  // aligned with target arrow order
};

FunctorData load_functor_data(const std::string& path,
                              const std::shared_ptr<const BoundQuiverAlgebra>& source,
                              const std::shared_ptr<const BoundQuiverAlgebra>& target);

// The source/target algebra paths recorded in a functor file.
struct FunctorPaths {
    std::string source;
    std::string target;
};
FunctorPaths functor_paths(const std::string& path);

// Bundled chain instance: algebra path, band pair, decorations, pointing.
struct InstanceData {
    std::string algebra_path;
    std::string u, v;
    std::string s, t;
    std::string theta_vertex;
};
InstanceData load_instance(const std::string& path);

// Module documents: vertex dims and row-major matrices with integer
// entries (prime-field elements print as their canonical representatives).
struct ModuleData {
    std::string algebra_name;
    std::vector<int> vertex_dims;                       // per vertex order
    std::vector<std::vector<std::vector<long long>>> arrows; // per arrow, rows
};
ModuleData load_module_data(const std::string& path,
                            const std::shared_ptr<const BoundQuiverAlgebra>& alg);

std::string resolve_input_path(const std::string& value, const std::string& data_dir);

} // namespace stralg
