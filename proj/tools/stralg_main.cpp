// Command line driver: parses inputs, runs checks, emits reports and
// diagrams. Reports are byte-stable for a fixed (input, config, seed);
// timing only ever goes to stderr.

#include "CLI11.hpp"
#include "json.hpp"

#include "stralg/chainverify.hpp"
#include "stralg/dot.hpp"
#include "stralg/functor.hpp"
#include "stralg/io.hpp"
#include "stralg/io_json.hpp"
#include "stralg/pointed.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace stralg;

namespace {

struct Common {
    std::string data_dir;
    std::uint32_t modulus = 32003;
    bool rational = false;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string format = "text";
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--data-dir", c.data_dir, "directory with bundled inputs");
    cmd->add_option("--modulus", c.modulus, "prime modulus of the working field");
    cmd->add_flag("--rational", c.rational, "work over the rationals (audit mode)");
    cmd->add_option("--seed", c.seed, "seed for all randomized subroutines");
    cmd->add_option("--jobs", c.jobs, "worker threads for verification grids");
    cmd->add_option("--format", c.format, "output format: text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
}

std::string data_dir_of(const Common& c) {
    if (!c.data_dir.empty()) return c.data_dir;
    if (const char* env = std::getenv("STRALG_DATA_DIR")) return env;
    return "data";
}

std::string g_replay; // the invocation, for failure reports

void emit(const std::string& text) { std::cout << text; }

void emit_file_or_stdout(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        emit(text);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

template <class Fn>
int with_field(const Common& c, Fn&& fn) {
    if (c.rational) return fn(RationalField{});
    if (!is_prime(c.modulus))
        throw std::invalid_argument("--modulus must be prime, got " +
                                    std::to_string(c.modulus));
    return fn(PrimeField{c.modulus});
}

std::shared_ptr<const BoundQuiverAlgebra> load_algebra_arg(const Common& c,
                                                           const std::string& value) {
    return load_algebra(resolve_input_path(value, data_dir_of(c)));
}

int report_simple(const Common& c, const std::string& kind, bool ok,
                  std::vector<std::pair<std::string, std::string>> fields) {
    if (!ok) fields.emplace_back("replay", g_replay);
    if (c.format == "structured") {
        nlohmann::ordered_json j;
        j["kind"] = kind;
        for (const auto& [k, v] : fields) j[k] = v;
        j["result"] = ok ? "pass" : "fail";
        emit(j.dump(2) + "\n");
    } else {
        std::string out = kind + ": " + (ok ? "yes" : "no") + "\n";
        for (const auto& [k, v] : fields) out += "  " + k + " = " + v + "\n";
        emit(out);
    }
    return ok ? 0 : 1;
}

int emit_verdict(const Common& c, Verdict v) {
    if (!v.pass()) v.config.emplace_back("replay", g_replay);
    emit(c.format == "structured" ? render_json(v) : render_text(v));
    return v.pass() ? 0 : 1;
}

struct LoadedInstance {
    std::shared_ptr<const BoundQuiverAlgebra> alg;
    std::string u, v, s, t;
    int theta_vertex = -1;
};

LoadedInstance load_instance_arg(const Common& c, const std::string& instance_path) {
    std::string path = instance_path.empty()
                           ? data_dir_of(c) + "/lambda_instance.json"
                           : resolve_input_path(instance_path, data_dir_of(c));
    InstanceData data = load_instance(path);
    LoadedInstance out;
    out.alg = load_algebra(data.algebra_path);
    out.u = data.u;
    out.v = data.v;
    out.s = data.s;
    out.t = data.t;
    out.theta_vertex = out.alg->quiver().vertex_index(data.theta_vertex);
    if (out.theta_vertex < 0)
        throw std::invalid_argument("instance pointing vertex '" + data.theta_vertex +
                                    "' is not a vertex of the algebra");
    return out;
}

template <class F>
VerifyOptions<F> make_options(F, const Common& c) {
    VerifyOptions<F> opt;
    opt.seed = c.seed;
    opt.jobs = c.jobs;
    return opt;
}

template <class F>
TensorFunctor<F> load_functor_arg(F f, const Common& c, const std::string& value) {
    const std::string path = resolve_input_path(value, data_dir_of(c));
    auto paths = functor_paths(path);
    auto source = load_algebra(paths.source);
    auto target = load_algebra(paths.target);
    auto data = load_functor_data(path, source, target);
    return instantiate_functor(f, data, source, target);
}

std::string module_text(const Quiver& q, const std::vector<int>& dims, int total) {
    std::string s = "vertex dims:";
    for (size_t x = 0; x < dims.size(); ++x)
        s += " " + q.vertices[x] + "=" + std::to_string(dims[x]);
    s += " (total " + std::to_string(total) + ")";
    return s;
}

} // namespace

int main(int argc, char** argv) {
    g_replay = "stralg";
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        g_replay += a.find(' ') == std::string::npos ? " " + a : " \"" + a + "\"";
    }

    CLI::App app{"string algebra workbench"};
    app.require_subcommand(1);
    int rc = 0;

    // ---- check-algebra ----------------------------------------------------
    struct {
        Common c;
        std::string algebra;
    } ca;
    {
        auto* cmd = app.add_subcommand("check-algebra", "validate an algebra file");
        add_common(cmd, ca.c);
        cmd->add_option("--algebra", ca.algebra, "algebra file or bundled name")->required();
        cmd->callback([&]() {
            auto alg = load_algebra_arg(ca.c, ca.algebra);
            auto bis = alg->special_biserial();
            std::vector<std::pair<std::string, std::string>> fields = {
                {"name", alg->name},
                {"vertices", std::to_string(alg->quiver().num_vertices())},
                {"arrows", std::to_string(alg->quiver().num_arrows())},
                {"dimension", std::to_string(alg->dimension())},
                {"nilpotency_bound", std::to_string(alg->admissibility().nilpotency_bound)},
                {"special_biserial", bis.ok ? "yes" : "no"},
                {"string_algebra", alg->string_algebra() ? "yes" : "no"},
            };
            if (!bis.ok) fields.emplace_back("violation", bis.violation);
            rc = report_simple(ca.c, "algebra admissible", true, fields);
        });
    }

    // ---- string -----------------------------------------------------------
    struct {
        Common c;
        std::string algebra, word;
    } st;
    {
        auto* cmd = app.add_subcommand("string", "check the string condition for a word");
        add_common(cmd, st.c);
        cmd->add_option("--algebra", st.algebra)->required();
        cmd->add_option("--word", st.word, "letters like \"g a b^-1 d^-1\"")->required();
        cmd->callback([&]() {
            auto alg = load_algebra_arg(st.c, st.algebra);
            auto res = is_string(*alg, parse_word(*alg, st.word));
            std::vector<std::pair<std::string, std::string>> fields = {{"word", st.word}};
            if (!res.ok) {
                fields.emplace_back("reason", res.reason);
                if (res.from > 0)
                    fields.emplace_back("window", std::to_string(res.from) + ".." +
                                                      std::to_string(res.to));
            }
            rc = report_simple(st.c, "string", res.ok, fields);
        });
    }

    // ---- band ---------------------------------------------------------
    struct {
        Common c;
        std::string algebra, word;
        int power_bound = 3;
    } bd;
    {
        auto* cmd = app.add_subcommand("band", "check the band condition for a word");
        add_common(cmd, bd.c);
        cmd->add_option("--algebra", bd.algebra)->required();
        cmd->add_option("--word", bd.word)->required();
        cmd->add_option("--power-bound", bd.power_bound, "largest power rechecked");
        cmd->callback([&]() {
            auto alg = load_algebra_arg(bd.c, bd.algebra);
            auto res = is_band(*alg, parse_word(*alg, bd.word), bd.power_bound);
            std::vector<std::pair<std::string, std::string>> fields = {{"word", bd.word}};
            if (!res.ok) fields.emplace_back("reason", res.reason);
            rc = report_simple(bd.c, "band", res.ok, fields);
        });
    }

    // ---- qgen ---------------------------------------------------------
    struct {
        Common c;
        std::string algebra, u, v;
    } qg;
    {
        auto* cmd = app.add_subcommand("qgen", "check a generating pair of bands");
        add_common(cmd, qg.c);
        cmd->add_option("--algebra", qg.algebra)->required();
        cmd->add_option("--u", qg.u)->required();
        cmd->add_option("--v", qg.v)->required();
        cmd->callback([&]() {
            auto alg = load_algebra_arg(qg.c, qg.algebra);
            auto res = is_qgen_pair(*alg, parse_word(*alg, qg.u), parse_word(*alg, qg.v));
            std::vector<std::pair<std::string, std::string>> fields = {{"u", qg.u},
                                                                       {"v", qg.v}};
            if (!res.ok) fields.emplace_back("reason", res.reason);
            rc = report_simple(qg.c, "generating pair", res.ok, fields);
        });
    }

    // ---- chain --------------------------------------------------------
    struct {
        Common c;
        std::string algebra, u, v, s, t;
        int truncation = 1;
    } ch;
    {
        auto* cmd = app.add_subcommand("chain", "enumerate a chain truncation, sorted");
        add_common(cmd, ch.c);
        cmd->add_option("--algebra", ch.algebra)->required();
        cmd->add_option("--u", ch.u)->required();
        cmd->add_option("--v", ch.v)->required();
        cmd->add_option("--s", ch.s, "left decoration as a band word");
        cmd->add_option("--t", ch.t, "right decoration as a band word");
        cmd->add_option("--truncation", ch.truncation, "max symbols of the middle word");
        cmd->callback([&]() {
            auto alg = load_algebra_arg(ch.c, ch.algebra);
            BandPair pair{parse_word(*alg, ch.u), parse_word(*alg, ch.v)};
            auto elems = enumerate_chain(*alg, pair, parse_band_word(ch.s),
                                         parse_band_word(ch.t), ch.truncation);
            if (ch.c.format == "structured") {
                nlohmann::ordered_json j;
                j["kind"] = "chain";
                j["truncation"] = ch.truncation;
                j["elements"] = nlohmann::ordered_json::array();
                for (const auto& e : elems) {
                    nlohmann::ordered_json el;
                    el["x"] = band_word_to_string(e.x);
                    el["word"] = word_to_string(*alg, e.word);
                    j["elements"].push_back(el);
                }
                emit(j.dump(2) + "\n");
            } else {
                for (const auto& e : elems) {
                    std::string x = band_word_to_string(e.x);
                    emit((x.empty() ? std::string("(empty)") : x) + "  ->  " +
                         word_to_string(*alg, e.word) + "\n");
                }
            }
            rc = 0;
        });
    }

    // ---- module -------------------------------------------------------
    struct {
        Common c;
        std::string algebra, word, out;
    } mo;
    {
        auto* cmd = app.add_subcommand("module", "build the string module of a word");
        add_common(cmd, mo.c);
        cmd->add_option("--algebra", mo.algebra)->required();
        cmd->add_option("--word", mo.word)->required();
        cmd->add_option("--out", mo.out, "write the module document to a file");
        cmd->callback([&]() {
            rc = with_field(mo.c, [&](auto f) {
                auto alg = load_algebra_arg(mo.c, mo.algebra);
                auto m = string_module(f, alg, parse_word(*alg, mo.word));
                if (mo.c.format == "structured" || !mo.out.empty())
                    emit_file_or_stdout(module_to_json(m), mo.out);
                else
                    emit(module_text(alg->quiver(), m.dims, m.total_dim()) + "\n");
                return 0;
            });
        });
    }

    // ---- hom ----------------------------------------------------------
    struct {
        Common c;
        std::string algebra, word_a, word_b;
    } ho;
    {
        auto* cmd = app.add_subcommand("hom", "dimension of a hom space between string modules");
        add_common(cmd, ho.c);
        cmd->add_option("--algebra", ho.algebra)->required();
        cmd->add_option("--word-a", ho.word_a)->required();
        cmd->add_option("--word-b", ho.word_b)->required();
        cmd->callback([&]() {
            rc = with_field(ho.c, [&](auto f) {
                auto alg = load_algebra_arg(ho.c, ho.algebra);
                auto m = string_module(f, alg, parse_word(*alg, ho.word_a));
                auto n = string_module(f, alg, parse_word(*alg, ho.word_b));
                auto basis = hom_space(m, n);
                if (ho.c.format == "structured") {
                    nlohmann::ordered_json j;
                    j["kind"] = "hom";
                    j["from"] = ho.word_a;
                    j["to"] = ho.word_b;
                    j["dimension"] = basis.size();
                    emit(j.dump(2) + "\n");
                } else {
                    emit("dim Hom = " + std::to_string(basis.size()) + "\n");
                }
                return 0;
            });
        });
    }

    // ---- indec --------------------------------------------------------
    struct {
        Common c;
        std::string algebra, word, module_file;
    } ind;
    {
        auto* cmd = app.add_subcommand("indec", "indecomposability via the endomorphism ring");
        add_common(cmd, ind.c);
        cmd->add_option("--algebra", ind.algebra)->required();
        cmd->add_option("--word", ind.word);
        cmd->add_option("--module", ind.module_file, "module document instead of a word");
        cmd->callback([&]() {
            rc = with_field(ind.c, [&](auto f) {
                using Field = decltype(f);
                auto alg = load_algebra_arg(ind.c, ind.algebra);
                Representation<Field> m;
                if (!ind.word.empty()) {
                    m = string_module(f, alg, parse_word(*alg, ind.word));
                } else if (!ind.module_file.empty()) {
                    auto data = load_module_data(
                        resolve_input_path(ind.module_file, data_dir_of(ind.c)), alg);
                    m = instantiate_module(f, alg, data);
                } else {
                    throw std::invalid_argument("indec needs --word or --module");
                }
                auto res = is_indecomposable(m, ind.c.seed);
                std::vector<std::pair<std::string, std::string>> fields = {
                    {"end_dim", std::to_string(res.end_dim)},
                    {"radical_dim", std::to_string(res.radical_dim)},
                };
                if (res.idempotent) fields.emplace_back("certificate", "splitting idempotent");
                if (!res.note.empty()) fields.emplace_back("note", res.note);
                return report_simple(ind.c, "indecomposable", res.indecomposable, fields);
            });
        });
    }

    // ---- iso ----------------------------------------------------------
    struct {
        Common c;
        std::string algebra, word_a, word_b;
        int trials = 20;
    } iso_cmd;
    {
        auto* cmd = app.add_subcommand("iso", "isomorphism test for two string modules");
        add_common(cmd, iso_cmd.c);
        cmd->add_option("--algebra", iso_cmd.algebra)->required();
        cmd->add_option("--word-a", iso_cmd.word_a)->required();
        cmd->add_option("--word-b", iso_cmd.word_b)->required();
        cmd->add_option("--trials", iso_cmd.trials, "randomized trials in the general path");
        cmd->callback([&]() {
            rc = with_field(iso_cmd.c, [&](auto f) {
                auto alg = load_algebra_arg(iso_cmd.c, iso_cmd.algebra);
                auto m = string_module(f, alg, parse_word(*alg, iso_cmd.word_a));
                auto n = string_module(f, alg, parse_word(*alg, iso_cmd.word_b));
                auto res = is_isomorphic(m, n, iso_cmd.trials, iso_cmd.c.seed);
                const bool yes = res.verdict == IsoVerdict::YesByWord ||
                                 res.verdict == IsoVerdict::YesCertified;
                std::vector<std::pair<std::string, std::string>> fields = {
                    {"verdict", res.verdict == IsoVerdict::YesByWord      ? "yes-by-word"
                                : res.verdict == IsoVerdict::YesCertified ? "yes-certified"
                                : res.verdict == IsoVerdict::No           ? "no"
                                                                          : "no-probabilistic"},
                    {"reason", res.reason},
                };
                return report_simple(iso_cmd.c, "isomorphic", yes, fields);
            });
        });
    }

    // ---- pushout ------------------------------------------------------
    struct {
        Common c;
        std::string algebra, word_a, word_b;
    } po;
    {
        auto* cmd = app.add_subcommand(
            "pushout", "pointed pushout of two canonical pointed string modules");
        add_common(cmd, po.c);
        cmd->add_option("--algebra", po.algebra)->required();
        cmd->add_option("--word-a", po.word_a)->required();
        cmd->add_option("--word-b", po.word_b)->required();
        cmd->callback([&]() {
            rc = with_field(po.c, [&](auto f) {
                auto alg = load_algebra_arg(po.c, po.algebra);
                Word wa = parse_word(*alg, po.word_a);
                Word wb = parse_word(*alg, po.word_b);
                const int va = letter_target(alg->quiver(), wa.letters.front());
                const int vb = letter_target(alg->quiver(), wb.letters.front());
                if (va != vb)
                    throw std::invalid_argument(
                        "the first basis vectors sit at different vertices");
                auto pointing = projective_pointing(f, alg, va);
                auto pa = canonical_pointed(pointing, alg, wa);
                auto pb = canonical_pointed(pointing, alg, wb);
                auto push = pointed_pushout(pa, pb);

                std::vector<std::pair<std::string, std::string>> fields = {
                    {"dims",
                     module_text(alg->quiver(), push.pm.mod.dims, push.pm.mod.total_dim())},
                };
                bool ok = true;
                Word cat = concat(invert(wa), wb);
                if (is_string(*alg, cat).ok) {
                    auto canon = canonical_pointed(pointing, alg, cat, wa.length() + 1);
                    auto found = pointed_isomorphism(push.pm, canon, 24, po.c.seed);
                    fields.emplace_back("concatenated_word", word_to_string(*alg, cat));
                    fields.emplace_back("matches_concatenated_word", found ? "yes" : "no");
                    ok = found.has_value();
                }
                return report_simple(po.c, "pushout", ok, fields);
            });
        });
    }

    // ---- verify-pair ----------------------------------------------------
    struct {
        Common c;
        std::string algebra, u, v, s, t, theta;
        int truncation = 1;
        int density_max_len = 4;
        int grid_budget = 100;
        int sample = 100;
    } vp;
    {
        auto* cmd = app.add_subcommand("verify-pair",
                                       "full chain-pair verification for supplied data");
        add_common(cmd, vp.c);
        cmd->add_option("--algebra", vp.algebra)->required();
        cmd->add_option("--u", vp.u)->required();
        cmd->add_option("--v", vp.v)->required();
        cmd->add_option("--s", vp.s);
        cmd->add_option("--t", vp.t);
        cmd->add_option("--theta-vertex", vp.theta, "support of the pointing source")
            ->required();
        cmd->add_option("--truncation", vp.truncation);
        cmd->add_option("--density-max-len", vp.density_max_len);
        cmd->add_option("--grid-budget", vp.grid_budget, "full grid up to this many cells");
        cmd->add_option("--sample", vp.sample, "sampled cells beyond the budget");
        cmd->callback([&]() {
            rc = with_field(vp.c, [&](auto f) {
                auto alg = load_algebra_arg(vp.c, vp.algebra);
                const int tv = alg->quiver().vertex_index(vp.theta);
                if (tv < 0) throw std::invalid_argument("unknown vertex '" + vp.theta + "'");
                BandPair pair{parse_word(*alg, vp.u), parse_word(*alg, vp.v)};
                auto opt = make_options(f, vp.c);
                opt.grid_budget = vp.grid_budget;
                opt.sample = vp.sample;
                Verdict v = verify_chain_pair_pipeline(f, alg, pair, parse_band_word(vp.s),
                                                       parse_band_word(vp.t), tv,
                                                       vp.truncation, vp.density_max_len, opt);
                return emit_verdict(vp.c, v);
            });
        });
    }

    // ---- verify-thm34 ---------------------------------------------------
    struct {
        Common c;
        std::string instance;
        int truncation = 2;
        int density_max_len = 4;
        int grid_budget = 100;
        int sample = 100;
    } v34;
    {
        auto* cmd =
            app.add_subcommand("verify-thm34", "run the bundled chain-pair verification");
        add_common(cmd, v34.c);
        cmd->add_option("--instance", v34.instance, "chain instance file");
        cmd->add_option("--truncation", v34.truncation);
        cmd->add_option("--density-max-len", v34.density_max_len);
        cmd->add_option("--grid-budget", v34.grid_budget, "full grid up to this many cells");
        cmd->add_option("--sample", v34.sample, "sampled cells beyond the budget");
        cmd->callback([&]() {
            rc = with_field(v34.c, [&](auto f) {
                auto inst = load_instance_arg(v34.c, v34.instance);
                BandPair pair{parse_word(*inst.alg, inst.u), parse_word(*inst.alg, inst.v)};
                auto opt = make_options(f, v34.c);
                opt.grid_budget = v34.grid_budget;
                opt.sample = v34.sample;
                Verdict v = verify_chain_pair_pipeline(
                    f, inst.alg, pair, parse_band_word(inst.s), parse_band_word(inst.t),
                    inst.theta_vertex, v34.truncation, v34.density_max_len, opt);
                return emit_verdict(v34.c, v);
            });
        });
    }

    // ---- functor-validate ------------------------------------------------
    struct {
        Common c;
        std::string functor;
    } fv;
    {
        auto* cmd = app.add_subcommand("functor-validate", "validate a functor file");
        add_common(cmd, fv.c);
        cmd->add_option("--functor", fv.functor)->required();
        cmd->callback([&]() {
            rc = with_field(fv.c, [&](auto f) {
                auto t = load_functor_arg(f, fv.c, fv.functor);
                auto rep = validate_functor(t);
                std::vector<std::pair<std::string, std::string>> fields = {
                    {"name", t.name},
                    {"rank", std::to_string(t.rank)},
                    {"source", t.source->name},
                    {"target", t.target->name},
                };
                for (size_t i = 0; i < rep.issues.size(); ++i)
                    fields.emplace_back("issue" + std::to_string(i + 1), rep.issues[i]);
                return report_simple(fv.c, "functor valid", rep.ok, fields);
            });
        });
    }

    // ---- functor-apply -----------------------------------------------------
    struct {
        Common c;
        std::string functor, word, out;
    } fa;
    {
        auto* cmd =
            app.add_subcommand("functor-apply", "apply a functor to a source string module");
        add_common(cmd, fa.c);
        cmd->add_option("--functor", fa.functor)->required();
        cmd->add_option("--word", fa.word, "string over the source algebra")->required();
        cmd->add_option("--out", fa.out);
        cmd->callback([&]() {
            rc = with_field(fa.c, [&](auto f) {
                auto t = load_functor_arg(f, fa.c, fa.functor);
                auto m = string_module(f, t.source, parse_word(*t.source, fa.word));
                auto fm = apply_to_module(t, m);
                if (fa.c.format == "structured" || !fa.out.empty())
                    emit_file_or_stdout(module_to_json(fm.rep), fa.out);
                else
                    emit("raw dim = " + std::to_string(t.rank * m.total_dim()) + "\n" +
                         module_text(t.target->quiver(), fm.rep.dims, fm.rep.total_dim()) +
                         "\n");
                return 0;
            });
        });
    }

    // ---- verify-thm41 ----------------------------------------------------
    struct {
        Common c;
        std::string instance;
        std::string functor;
        int truncation = 1;
        int grid_budget = 100;
        int sample = 100;
    } v41;
    {
        auto* cmd =
            app.add_subcommand("verify-thm41", "verify image chains through a functor");
        add_common(cmd, v41.c);
        cmd->add_option("--functor", v41.functor)->required();
        cmd->add_option("--instance", v41.instance);
        cmd->add_option("--truncation", v41.truncation);
        cmd->add_option("--grid-budget", v41.grid_budget, "full grid up to this many cells");
        cmd->add_option("--sample", v41.sample, "sampled cells beyond the budget");
        cmd->callback([&]() {
            rc = with_field(v41.c, [&](auto f) {
                auto t = load_functor_arg(f, v41.c, v41.functor);
                auto inst = load_instance_arg(v41.c, v41.instance);
                // chains must live over the functor source; re-parse the
                // instance words against it
                BandPair pair{parse_word(*t.source, inst.u), parse_word(*t.source, inst.v)};
                auto opt = make_options(f, v41.c);
                opt.grid_budget = v41.grid_budget;
                opt.sample = v41.sample;
                Verdict v = verify_functor_image_chains(t, t.source, pair, parse_band_word(inst.s),
                                               parse_band_word(inst.t), inst.theta_vertex,
                                               v41.truncation, opt);
                return emit_verdict(v41.c, v);
            });
        });
    }

    // ---- wideness --------------------------------------------------------
    struct {
        Common c;
        std::string instance;
        int seed_truncation = 1;
        int depth = 2;
        int cap = 200;
        int samples = 40;
        int require_witnessed = 1;
        std::string dot_out;
    } wd;
    {
        auto* cmd = app.add_subcommand(
            "wideness", "sampled wideness witnesses on a generated lattice fragment");
        add_common(cmd, wd.c);
        cmd->add_option("--instance", wd.instance);
        cmd->add_option("--seed-truncation", wd.seed_truncation,
                        "chain truncation supplying the fragment seeds");
        cmd->add_option("--depth", wd.depth, "closure depth under sum and pushout");
        cmd->add_option("--cap", wd.cap, "fragment node budget");
        cmd->add_option("--samples", wd.samples, "comparable pairs sampled");
        cmd->add_option("--require-witnessed", wd.require_witnessed,
                        "minimum witnessed pairs for a pass");
        cmd->add_option("--dot", wd.dot_out, "write the fragment Hasse diagram");
        cmd->callback([&]() {
            rc = with_field(wd.c, [&](auto f) {
                using Field = decltype(f);
                auto inst = load_instance_arg(wd.c, wd.instance);
                BandPair pair{parse_word(*inst.alg, inst.u), parse_word(*inst.alg, inst.v)};
                auto pointing = projective_pointing(f, inst.alg, inst.theta_vertex);
                std::vector<PointedModule<Field>> seeds;
                std::vector<std::string> labels;
                for (const BandPair& pr : {pair, BandPair{invert(pair.u), invert(pair.v)}}) {
                    for (const auto& el :
                         enumerate_chain(*inst.alg, pr, parse_band_word(inst.s),
                                         parse_band_word(inst.t), wd.seed_truncation)) {
                        seeds.push_back(canonical_pointed(pointing, inst.alg, el.word));
                        labels.push_back(word_to_string(*inst.alg, el.word));
                    }
                }
                auto fr = generate_fragment<Field>(seeds, labels, wd.depth, wd.cap);
                auto rep = check_wide_on_sample(fr, wd.samples, wd.c.seed);
                const bool ok = rep.witnessed >= wd.require_witnessed;

                if (!wd.dot_out.empty()) {
                    std::vector<std::string> node_labels;
                    for (const auto& n : fr.nodes)
                        node_labels.push_back(n.label + " [" +
                                              std::to_string(n.pm.mod.total_dim()) + "]");
                    std::vector<std::vector<bool>> le(fr.size(),
                                                      std::vector<bool>(fr.size(), false));
                    for (int i = 0; i < fr.size(); ++i)
                        for (int j = 0; j < fr.size(); ++j) le[i][j] = fragment_le(fr, i, j);
                    emit_file_or_stdout(hasse_dot(node_labels, le), wd.dot_out);
                }

                if (wd.c.format == "structured") {
                    nlohmann::ordered_json j;
                    j["kind"] = "wideness";
                    j["nodes"] = fr.size();
                    j["node_list"] = nlohmann::ordered_json::array();
                    for (const auto& n : fr.nodes) {
                        nlohmann::ordered_json jn;
                        jn["label"] = n.label;
                        jn["dim"] = n.pm.mod.total_dim();
                        j["node_list"].push_back(jn);
                    }
                    j["sampled"] = rep.sampled;
                    j["witnessed"] = rep.witnessed;
                    j["entries"] = nlohmann::ordered_json::array();
                    for (const auto& e : rep.entries) {
                        nlohmann::ordered_json je;
                        je["pair"] = {fr.nodes[e.p].label, fr.nodes[e.q].label};
                        if (e.found) {
                            je["witness"] = {fr.nodes[e.wit_a].label,
                                             fr.nodes[e.wit_b].label};
                            je["verified"] = e.verified;
                        } else {
                            je["witness"] = nullptr;
                            je["note"] = "insufficient fragment at this depth";
                        }
                        j["entries"].push_back(je);
                    }
                    j["result"] = ok ? "pass" : "fail";
                    emit(j.dump(2) + "\n");
                } else {
                    ReportTable tb;
                    tb.title = "wideness sampling";
                    tb.config = {{"nodes", std::to_string(fr.size())},
                                 {"sampled", std::to_string(rep.sampled)},
                                 {"witnessed", std::to_string(rep.witnessed)},
                                 {"seed", std::to_string(wd.c.seed)}};
                    for (const auto& n : fr.nodes)
                        tb.lines.push_back("  node " + n.label + " [dim " +
                                           std::to_string(n.pm.mod.total_dim()) + "]");
                    for (const auto& e : rep.entries) {
                        std::string line =
                            "  " + fr.nodes[e.p].label + " < " + fr.nodes[e.q].label + " : ";
                        if (e.found)
                            line += "witness (" + fr.nodes[e.wit_a].label + ", " +
                                    fr.nodes[e.wit_b].label + ")" +
                                    (e.verified ? " verified" : "");
                        else
                            line += "no witness in fragment (insufficient at this depth)";
                        tb.lines.push_back(line);
                    }
                    tb.pass = ok;
                    emit(render_text(tb));
                }
                return ok ? 0 : 1;
            });
        });
    }

    // ---- export-dot -------------------------------------------------------
    struct {
        Common c;
        std::string algebra, word, out;
    } ed;
    {
        auto* cmd = app.add_subcommand("export-dot", "zigzag diagram of a string module");
        add_common(cmd, ed.c);
        cmd->add_option("--algebra", ed.algebra)->required();
        cmd->add_option("--word", ed.word)->required();
        cmd->add_option("--out", ed.out);
        cmd->callback([&]() {
            auto alg = load_algebra_arg(ed.c, ed.algebra);
            emit_file_or_stdout(string_module_dot(*alg, parse_word(*alg, ed.word)), ed.out);
            rc = 0;
        });
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownArrow& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const MalformedPath& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    const auto t1 = std::chrono::steady_clock::now();
    std::cerr << "elapsed: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms\n";
    return rc;
}
