#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spherekit/complex.hpp"
#include "spherekit/complex_io.hpp"
#include "spherekit/cone_lift.hpp"
#include "spherekit/error.hpp"
#include "spherekit/homology.hpp"
#include "spherekit/invariants.hpp"
#include "spherekit/stress.hpp"
#include "spherekit/structure.hpp"

using namespace spherekit;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string input = "-";
    std::uint64_t seed = 0;
    int trials = 3;
    int k = 1;
    std::string kind = "linear";
    bool json = false;
};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Complex load(const std::string& path) { return parse_complex(slurp(path)); }

std::vector<std::string> to_strings(const std::vector<Integer>& v) {
    std::vector<std::string> out;
    for (const Integer& x : v) out.push_back(x.get_str());
    return out;
}

std::string join_words(const std::vector<std::string>& words, const char* sep = " ") {
    std::string out;
    for (const std::string& w : words) {
        if (!out.empty()) out += sep;
        out += w;
    }
    return out;
}

Json stress_json(const Stress& s) { return Json::parse(stress_to_json(s)); }

void emit_complex(const Complex& c, bool json) { std::cout << (json ? to_json(c) : to_text(c)); }

StressKind parse_kind(const std::string& kind) {
    if (kind == "linear") return StressKind::Linear;
    if (kind == "affine") return StressKind::Affine;
    throw Error(ErrorCode::BadParameters, "--kind must be linear or affine");
}

int cmd_construct(const Options& o, const std::vector<int>& k_args, const std::vector<int>& stacked_args,
                  int boundary, int simplex_dim, int cycle_len, int cross, const std::vector<std::string>& join_files) {
    Complex c;
    int chosen = 0;
    if (!k_args.empty()) c = construct_K(k_args[0], k_args[1]), ++chosen;
    if (!stacked_args.empty()) c = connected_sum_stacked(stacked_args[0], stacked_args[1]), ++chosen;
    if (boundary > 0) c = simplex_boundary(boundary), ++chosen;
    if (simplex_dim >= 0) c = simplex(simplex_dim), ++chosen;
    if (cycle_len > 0) c = cycle(cycle_len), ++chosen;
    if (cross > 0) c = cross_polytope(cross), ++chosen;
    if (!join_files.empty()) {
        std::vector<Complex> parts;
        for (const std::string& f : join_files) parts.push_back(load(f));
        c = join_fresh(parts);
        ++chosen;
    }
    if (chosen != 1) throw Error(ErrorCode::BadParameters, "construct needs exactly one of --K, --stacked, --boundary, --simplex, --cycle, --cross, --join");
    emit_complex(c, o.json);
    return 0;
}

int cmd_info(const Options& o) {
    const Complex c = load(o.input);
    const InvariantVectors v = compute_vectors(c);
    const int s = s_class(c);
    if (o.json) {
        Json doc;
        doc["vertices"] = c.num_vertices();
        doc["d"] = v.d;
        doc["f"] = to_strings(v.f_vec);
        doc["h"] = to_strings(v.h_vec);
        doc["g"] = to_strings(v.g_vec);
        doc["m"] = to_strings(v.m_vec);
        doc["s_class"] = s;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "vertices " << c.num_vertices() << "\n"
                  << "d " << v.d << "\n"
                  << "f " << join_words(to_strings(v.f_vec)) << "\n"
                  << "h " << join_words(to_strings(v.h_vec)) << "\n"
                  << "g " << join_words(to_strings(v.g_vec)) << "\n"
                  << "m " << join_words(to_strings(v.m_vec)) << "\n"
                  << "s_class " << s << "\n";
    }
    return 0;
}

int cmd_check(const Options& o, bool sphere, bool ds, bool mcmullen, bool glbt) {
    if (!sphere && !ds && !mcmullen && !glbt) sphere = ds = mcmullen = glbt = true;
    const Complex c = load(o.input);
    Json doc = Json::object();
    bool ok = true;
    std::vector<std::string> lines;
    if (sphere) {
        const bool pass = c.is_pure() && is_homology_sphere(c);
        doc["sphere"] = pass;
        lines.push_back(pass ? "homology sphere" : "not a homology sphere");
        ok = ok && pass;
    }
    if ((ds || mcmullen || glbt) && !c.is_pure()) throw Error(ErrorCode::NotPure, "invariant checks need a pure complex");
    const int d = c.dim() + 1;
    if (ds) {
        const InvariantVectors v = compute_vectors(c);
        bool pass = true;
        for (int i = 0; i <= d; ++i) pass = pass && v.h(i) == v.h(d - i);
        doc["dehn_sommerville"] = pass;
        lines.push_back(std::string("dehn-sommerville ") + (pass ? "ok" : "FAILED") + " h=" + join_words(to_strings(v.h_vec), ","));
        ok = ok && pass;
    }
    if (mcmullen) {
        Json residuals = Json::array();
        for (int k = 0; k <= (d - 1) / 2; ++k) {
            const Integer r = mcmullen_residual(c, k);
            residuals.push_back(r.get_str());
            lines.push_back("mcmullen k=" + std::to_string(k) + " residual=" + r.get_str());
            ok = ok && r == 0;
        }
        doc["mcmullen_residuals"] = residuals;
    }
    if (glbt) {
        Json clauses = Json::array();
        for (const ReportClause& r : glbt_report(c)) {
            clauses.push_back({{"clause", r.name}, {"k", r.k}, {"passed", r.passed}, {"witness", r.witness}});
            lines.push_back(r.name + " k=" + std::to_string(r.k) + (r.passed ? " ok " : " FAILED ") + r.witness);
            ok = ok && r.passed;
        }
        doc["glbt"] = clauses;
    }
    doc["ok"] = ok;
    if (o.json) {
        std::cout << doc.dump() << "\n";
    } else {
        for (const std::string& l : lines) std::cout << l << "\n";
    }
    if (!ok && !o.json) std::cerr << "check failed\n";
    return ok ? 0 : 1;
}

int cmd_stress(const Options& o, bool basis) {
    const Complex c = load(o.input);
    const StressKind kind = parse_kind(o.kind);
    const StressDims dims = stress_dims(c, o.k, o.trials, o.seed);
    const int dim = kind == StressKind::Linear ? dims.dim_linear : dims.dim_affine;
    Json doc;
    doc["k"] = o.k;
    doc["kind"] = o.kind;
    doc["dim"] = dim;
    doc["dim_linear"] = dims.dim_linear;
    doc["dim_affine"] = dims.dim_affine;
    doc["trials_agree"] = dims.trials_agree;
    if (basis) {
        const Embedding p = generic_embedding(c, c.dim() + 1, o.seed);
        Json arr = Json::array();
        for (const Stress& s : stress_basis(c, p, o.k, kind)) arr.push_back(stress_json(s));
        doc["seed"] = o.seed;
        doc["basis"] = arr;
    }
    if (o.json || basis) {
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "dim " << dim << "\n"
                  << "dim_linear " << dims.dim_linear << "\n"
                  << "dim_affine " << dims.dim_affine << "\n";
        if (!dims.trials_agree) std::cout << "warning: trials disagree\n";
    }
    return 0;
}

int cmd_lift(const Options& o, const std::string& apex, const std::string& stress_file, int embed_dim) {
    const Complex base = load(o.input);
    const int dim = embed_dim > 0 ? embed_dim : base.dim() + 1;
    const Embedding p_prime = generic_embedding(base, dim, o.seed);
    std::vector<Stress> inputs;
    if (!stress_file.empty()) {
        inputs.push_back(stress_from_json(slurp(stress_file)));
    } else {
        inputs = stress_basis(base, p_prime, o.k, StressKind::Linear);
    }
    const AValues a = random_a_values(base.labels(), o.seed);
    const Complex cone_complex = cone(base, apex);
    const Embedding p = cone_embedding(p_prime, a, apex);
    Json arr = Json::array();
    for (const Stress& s : inputs) {
        const Stress lifted = lift(base, p_prime, s, a, apex);
        if (!is_stress(cone_complex, p, lifted, StressKind::Linear)) {
            throw Error(ErrorCode::VerificationFailed, "lifted stress fails on the cone");
        }
        arr.push_back({{"input", stress_json(s)}, {"lift", stress_json(lifted)}});
    }
    Json doc;
    doc["seed"] = o.seed;
    doc["apex"] = apex;
    doc["lifts"] = arr;
    std::cout << doc.dump() << "\n";
    return 0;
}

int cmd_edge_stress(const Options& o, const std::vector<std::string>& edge) {
    const Complex c = load(o.input);
    const EdgeStressResult r = edge_stress(c, edge[0], edge[1], o.seed);
    Json doc;
    doc["seed"] = o.seed;
    doc["edge"] = edge;
    doc["escaping_face"] = c.labels_of(r.escaping);
    doc["stress"] = stress_json(normalized(r.omega_bar));
    std::cout << doc.dump() << "\n";
    return 0;
}

int cmd_stacked(const Options& o) {
    const Complex c = load(o.input);
    const StackedReport r = is_stacked(c, o.k);
    Json doc;
    doc["k"] = r.k;
    doc["g_k"] = r.g_k.get_str();
    doc["stacked"] = r.stacked;
    if (r.m_criterion) doc["m_criterion"] = *r.m_criterion;
    if (r.certificate) {
        doc["certificate"] = Json::parse(to_json(*r.certificate));
        doc["boundary_matches"] = r.boundary_matches;
        doc["delta_equality"] = r.delta_equality;
        doc["certificate_acyclic"] = r.certificate_acyclic;
    }
    if (o.json) {
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << (r.stacked ? "" : "not ") << (o.k - 1) << "-stacked (g_" << o.k << "=" << r.g_k << ")\n";
        if (r.certificate) std::cout << "certificate facets " << r.certificate->facets().size() << "\n";
    }
    return 0;
}

int cmd_classify(const Options& o) {
    const Complex c = load(o.input);
    const G1Classification r = classify_g1(c, o.k);
    Json doc;
    doc["k"] = r.k;
    doc["g_k"] = r.g_k.get_str();
    doc["kind"] = std::string(to_string(r.kind));
    if (r.kind == G1Kind::SimplexBoundaryJoinSphere) doc["j"] = r.j;
    if (r.kind == G1Kind::TwoSimplexBoundaries) doc["j"] = {r.j, r.j2};
    if (!r.factors.empty()) {
        Json factors = Json::array();
        for (const Complex& f : r.factors) factors.push_back(Json::parse(to_json(f)));
        doc["factors"] = factors;
        doc["reconstruction_verified"] = r.reconstruction_verified;
    }
    if (o.json) {
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << to_string(r.kind);
        if (r.kind == G1Kind::SimplexBoundaryJoinSphere) std::cout << " " << r.j;
        if (r.kind == G1Kind::TwoSimplexBoundaries) std::cout << " " << r.j << " " << r.j2;
        std::cout << "\n";
    }
    return 0;
}

int cmd_contract(const Options& o, const std::vector<std::string>& edge) {
    const Complex c = load(o.input);
    emit_complex(contract_edge(c, c.require_index(edge[0]), c.require_index(edge[1])), o.json);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simplicial spheres, stresses and g-numbers"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* sub) { sub->add_option("--input,-i", o.input, "complex file (JSON or text; - for stdin)"); };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };
    auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "random seed"); };
    auto add_k = [&](CLI::App* sub) { sub->add_option("--k", o.k, "degree k"); };

    auto* construct = app.add_subcommand("construct", "emit a standard complex");
    std::vector<int> k_args, stacked_args;
    int boundary = 0, simplex_dim = -1, cycle_len = 0, cross = 0;
    std::vector<std::string> join_files;
    construct->add_option("--K", k_args, "K(i, d-1) from i d")->expected(2);
    construct->add_option("--stacked", stacked_args, "stacked d-polytope boundary from d n")->expected(2);
    construct->add_option("--boundary", boundary, "boundary of the d-simplex");
    construct->add_option("--simplex", simplex_dim, "the full d-simplex");
    construct->add_option("--cycle", cycle_len, "m-cycle");
    construct->add_option("--cross", cross, "boundary of the d-cross-polytope");
    construct->add_option("--join", join_files, "join of complex files (labels suffixed by factor)");
    add_json(construct);

    auto* info = app.add_subcommand("info", "f-, h-, g-, m-vectors");
    add_input(info);
    add_json(info);

    auto* check = app.add_subcommand("check", "sphere, Dehn-Sommerville, McMullen and GLBT checks");
    bool c_sphere = false, c_ds = false, c_mcmullen = false, c_glbt = false;
    check->add_flag("--sphere", c_sphere);
    check->add_flag("--ds", c_ds);
    check->add_flag("--mcmullen", c_mcmullen);
    check->add_flag("--glbt", c_glbt);
    add_input(check);
    add_json(check);

    auto* stress = app.add_subcommand("stress", "stress space dimensions and bases");
    bool want_basis = false;
    add_input(stress);
    add_k(stress);
    stress->add_option("--kind", o.kind, "linear or affine");
    stress->add_option("--trials", o.trials, "number of random embeddings");
    stress->add_flag("--basis", want_basis, "emit the basis for the first seed");
    add_seed(stress);
    add_json(stress);

    auto* lift_cmd = app.add_subcommand("lift", "lift linear stresses to a cone");
    std::string apex = "apex", stress_file;
    int embed_dim = 0;
    add_input(lift_cmd);
    add_k(lift_cmd);
    add_seed(lift_cmd);
    lift_cmd->add_option("--apex", apex, "label of the cone point");
    lift_cmd->add_option("--stress", stress_file, "stress JSON to lift (default: the whole linear basis)");
    lift_cmd->add_option("--dim", embed_dim, "embedding dimension of the base (default dim+1)");
    lift_cmd->add_flag("--json", o.json, "accepted for uniformity; output is always JSON");

    auto* edge_cmd = app.add_subcommand("edge-stress", "affine stress on two adjacent stars");
    std::vector<std::string> edge;
    add_input(edge_cmd);
    add_seed(edge_cmd);
    edge_cmd->add_option("--edge", edge, "vertex labels u v")->expected(2)->required();
    edge_cmd->add_flag("--json", o.json, "accepted for uniformity; output is always JSON");

    auto* stacked = app.add_subcommand("stacked", "(k-1)-stackedness with certificate");
    add_input(stacked);
    add_k(stacked);
    add_json(stacked);

    auto* classify = app.add_subcommand("classify", "normal form of a sphere with g_k = 1");
    add_input(classify);
    add_k(classify);
    add_json(classify);

    auto* contract = app.add_subcommand("contract", "contract an edge");
    add_input(contract);
    contract->add_option("--edge", edge, "vertex labels u v")->expected(2)->required();
    add_json(contract);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*construct) return cmd_construct(o, k_args, stacked_args, boundary, simplex_dim, cycle_len, cross, join_files);
        if (*info) return cmd_info(o);
        if (*check) return cmd_check(o, c_sphere, c_ds, c_mcmullen, c_glbt);
        if (*stress) return cmd_stress(o, want_basis);
        if (*lift_cmd) return cmd_lift(o, apex, stress_file, embed_dim);
        if (*edge_cmd) return cmd_edge_stress(o, edge);
        if (*stacked) return cmd_stacked(o);
        if (*classify) return cmd_classify(o);
        if (*contract) return cmd_contract(o, edge);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_internal() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
