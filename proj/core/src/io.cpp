#include "stralg/io.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace stralg {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void offset_to_line_col(const std::string& text, size_t offset, int& line, int& col) {
    line = 1;
    col = 1;
    for (size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
}

// Best-effort position of a token for semantic errors: first occurrence of
// the quoted literal.
void locate(const std::string& text, const std::string& token, int& line, int& col) {
    size_t pos = text.find("\"" + token + "\"");
    if (pos == std::string::npos) pos = text.find(token);
    if (pos == std::string::npos) pos = 0;
    offset_to_line_col(text, pos, line, col);
}

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        int line, col;
        offset_to_line_col(text, e.byte > 0 ? e.byte - 1 : 0, line, col);
        throw ParseError("invalid JSON in " + origin + ": " + e.what(), line, col);
    }
}

[[noreturn]] void semantic_error(const std::string& text, const std::string& origin,
                                 const std::string& msg, const std::string& token) {
    int line, col;
    locate(text, token, line, col);
    throw ParseError(origin + ": " + msg, line, col);
}

PathExpr parse_path_array(const std::string& text, const std::string& origin, const Quiver& q,
                          const json& arr) {
    PathExpr p;
    for (const auto& tok : arr) {
        const std::string name = tok.get<std::string>();
        int idx = q.arrow_index(name);
        if (idx < 0) semantic_error(text, origin, "unknown arrow '" + name + "'", name);
        p.letters.push_back(idx);
    }
    return p;
}

AlgElemData parse_elem(const std::string& text, const std::string& origin, const Quiver& q,
                       const json& arr) {
    AlgElemData out;
    for (const auto& term : arr) {
        AlgElemTermData t;
        t.coeff = term.at("coeff").get<long long>();
        if (term.contains("vertex")) {
            const std::string name = term["vertex"].get<std::string>();
            int v = q.vertex_index(name);
            if (v < 0) semantic_error(text, origin, "unknown vertex '" + name + "'", name);
            t.path.vertex = v;
        } else {
            t.path = parse_path_array(text, origin, q, term.at("path"));
        }
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

std::shared_ptr<const BoundQuiverAlgebra> parse_algebra(const std::string& text,
                                                        const std::string& origin,
                                                        int admissibility_cap) {
    json j = parse_json(text, origin);
    Quiver q;
    try {
        for (const auto& v : j.at("vertices")) q.vertices.push_back(v.get<std::string>());
        for (const auto& a : j.at("arrows")) {
            Arrow ar;
            ar.name = a.at("name").get<std::string>();
            const std::string src = a.at("source").get<std::string>();
            const std::string tgt = a.at("target").get<std::string>();
            ar.source = q.vertex_index(src);
            ar.target = q.vertex_index(tgt);
            if (ar.source < 0)
                semantic_error(text, origin,
                               "arrow '" + ar.name + "' uses unknown vertex '" + src + "'", src);
            if (ar.target < 0)
                semantic_error(text, origin,
                               "arrow '" + ar.name + "' uses unknown vertex '" + tgt + "'", tgt);
            q.arrows.push_back(std::move(ar));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(origin + ": " + e.what(), 1, 1);
    }

    RelationSet r;
    if (j.contains("relations")) {
        const json& rel = j["relations"];
        if (rel.contains("monomial"))
            for (const auto& arr : rel["monomial"])
                r.monomial.push_back(parse_path_array(text, origin, q, arr));
        if (rel.contains("general"))
            for (const auto& gen : rel["general"]) {
                GeneralRelation g;
                for (const auto& term : parse_elem(text, origin, q, gen))
                    g.push_back({term.coeff, term.path});
                r.general.push_back(std::move(g));
            }
    }

    std::shared_ptr<BoundQuiverAlgebra> alg;
    try {
        alg = std::make_shared<BoundQuiverAlgebra>(std::move(q), std::move(r),
                                                   admissibility_cap);
    } catch (const std::invalid_argument& e) {
        throw ParseError(origin + ": " + e.what(), 1, 1);
    }
    if (j.contains("name")) alg->name = j["name"].get<std::string>();
    return alg;
}

std::shared_ptr<const BoundQuiverAlgebra> load_algebra(const std::string& path,
                                                       int admissibility_cap) {
    auto alg = parse_algebra(read_file(path), path, admissibility_cap);
    if (alg->name.empty())
        const_cast<BoundQuiverAlgebra&>(*alg).name =
            std::filesystem::path(path).stem().string();
    return alg;
}

std::string algebra_to_json(const BoundQuiverAlgebra& alg) {
    const Quiver& q = alg.quiver();
    json j;
    j["name"] = alg.name;
    j["vertices"] = q.vertices;
    j["arrows"] = json::array();
    for (const Arrow& a : q.arrows)
        j["arrows"].push_back({{"name", a.name},
                               {"source", q.vertices[a.source]},
                               {"target", q.vertices[a.target]}});
    json mono = json::array();
    for (const PathExpr& p : alg.relations().monomial) {
        json arr = json::array();
        for (int letter : p.letters) arr.push_back(q.arrows[letter].name);
        mono.push_back(arr);
    }
    json general = json::array();
    for (const GeneralRelation& g : alg.relations().general) {
        json terms = json::array();
        for (const auto& t : g) {
            json term;
            term["coeff"] = t.coeff;
            if (t.path.stationary()) {
                term["vertex"] = q.vertices[t.path.vertex];
            } else {
                json arr = json::array();
                for (int letter : t.path.letters) arr.push_back(q.arrows[letter].name);
                term["path"] = arr;
            }
            terms.push_back(term);
        }
        general.push_back(terms);
    }
    j["relations"] = {{"monomial", mono}, {"general", general}};
    return j.dump(2) + "\n";
}

FunctorPaths functor_paths(const std::string& path) {
    const std::string text = read_file(path);
    json j = parse_json(text, path);
    FunctorPaths out;
    const auto base = std::filesystem::path(path).parent_path();
    out.source = (base / j.at("source").get<std::string>()).string();
    out.target = (base / j.at("target").get<std::string>()).string();
    return out;
}

FunctorData load_functor_data(const std::string& path,
                              const std::shared_ptr<const BoundQuiverAlgebra>& source,
                              const std::shared_ptr<const BoundQuiverAlgebra>& target) {
    const std::string text = read_file(path);
    json j = parse_json(text, path);
    FunctorData out;
    out.name = j.value("name", std::filesystem::path(path).stem().string());
    out.rank = j.at("rank").get<int>();
    if (out.rank <= 0) semantic_error(text, path, "rank must be positive", "rank");

    const Quiver& sq = source->quiver();
    const Quiver& tq = target->quiver();

    auto parse_lam = [&](const json& m, const std::string& what) {
        LamMatData lm;
        lm.n = out.rank;
        if (static_cast<int>(m.size()) != out.rank)
            semantic_error(text, path,
                           what + " must have " + std::to_string(out.rank) + " rows", what);
        for (const auto& row : m) {
            if (static_cast<int>(row.size()) != out.rank)
                semantic_error(text, path,
                               what + " must have " + std::to_string(out.rank) +
                                   " columns per row", what);
            for (const auto& entry : row)
                lm.entries.push_back(parse_elem(text, path, sq, entry));
        }
        return lm;
    };

    const json& vm = j.at("vertex_maps");
    for (const std::string& vname : tq.vertices) {
        if (!vm.contains(vname))
            semantic_error(text, path, "missing vertex map for '" + vname + "'", vname);
        out.vertex_maps.push_back(parse_lam(vm[vname], "vertex map " + vname));
    }
    const json& am = j.at("arrow_maps");
    for (const Arrow& a : tq.arrows) {
        if (!am.contains(a.name))
            semantic_error(text, path, "missing arrow map for '" + a.name + "'", a.name);
        out.arrow_maps.push_back(parse_lam(am[a.name], "arrow map " + a.name));
    }
    return out;
}

InstanceData load_instance(const std::string& path) {
    const std::string text = read_file(path);
    json j = parse_json(text, path);
    InstanceData out;
    const auto base = std::filesystem::path(path).parent_path();
    out.algebra_path = (base / j.at("algebra").get<std::string>()).string();
    out.u = j.at("u").get<std::string>();
    out.v = j.at("v").get<std::string>();
    out.s = j.value("s", "");
    out.t = j.value("t", "");
    out.theta_vertex = j.at("theta_vertex").get<std::string>();
    return out;
}

ModuleData load_module_data(const std::string& path,
                            const std::shared_ptr<const BoundQuiverAlgebra>& alg) {
    const std::string text = read_file(path);
    json j = parse_json(text, path);
    const Quiver& q = alg->quiver();
    ModuleData out;
    out.algebra_name = j.value("algebra", "");
    const json& dims = j.at("vertex_dims");
    for (const std::string& v : q.vertices) {
        if (!dims.contains(v))
            semantic_error(text, path, "missing dimension for vertex '" + v + "'", v);
        out.vertex_dims.push_back(dims[v].get<int>());
    }
    const json& arrows = j.at("arrows");
    for (const Arrow& a : q.arrows) {
        if (!arrows.contains(a.name))
            semantic_error(text, path, "missing matrix for arrow '" + a.name + "'", a.name);
        std::vector<std::vector<long long>> rows;
        for (const auto& row : arrows[a.name]) {
            std::vector<long long> r;
            for (const auto& e : row) r.push_back(e.get<long long>());
            rows.push_back(std::move(r));
        }
        const int er = out.vertex_dims[a.target], ec = out.vertex_dims[a.source];
        if (static_cast<int>(rows.size()) != er)
            semantic_error(text, path,
                           "matrix for '" + a.name + "' needs " + std::to_string(er) + " rows",
                           a.name);
        for (const auto& r : rows)
            if (static_cast<int>(r.size()) != ec)
                semantic_error(text, path,
                               "matrix for '" + a.name + "' needs " + std::to_string(ec) +
                                   " columns", a.name);
        out.arrows.push_back(std::move(rows));
    }
    return out;
}

std::string resolve_input_path(const std::string& value, const std::string& data_dir) {
    namespace fs = std::filesystem;
    if (fs::exists(value)) return value;
    if (!data_dir.empty()) {
        fs::path p = fs::path(data_dir) / value;
        if (fs::exists(p)) return p.string();
        p = fs::path(data_dir) / (value + ".json");
        if (fs::exists(p)) return p.string();
    }
    return value; // let the open fail with a clear message
}

} // namespace stralg
