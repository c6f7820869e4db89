#include <hcblock/detour.hpp>
#include <hcblock/families.hpp>
#include <hcblock/json_io.hpp>
#include <hcblock/oracle.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace hcblock;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_input = 2;
constexpr int exit_not_block_graph = 3;
constexpr int exit_size_guard = 4;

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case Error::Kind::not_block_graph: return exit_not_block_graph;
        case Error::Kind::size_guard: return exit_size_guard;
        case Error::Kind::not_sdb: return exit_invalid;
        default: return exit_input;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Error::Kind::parse, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Error::Kind::parse, "cannot write file: " + path);
    out << content;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw Error(Error::Kind::parse, "bad integer list: " + text);
        }
    }
    if (out.empty()) throw Error(Error::Kind::parse, "empty integer list");
    return out;
}

struct Common {
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--out", c.out, "write output to this file instead of stdout");
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
}

int run_analyze(const std::string& input, const Common& c) {
    DetourProfile p = DetourProfile::analyze(parse_graph(read_file(input)));
    emit(c.out, c.format == "json" ? analysis_to_json(p) : analysis_to_text(p));
    return exit_ok;
}

int emit_certificate(const ColoringCertificate& cert, const Common& c) {
    emit(c.out, c.format == "json" ? certificate_to_json(cert) : certificate_to_text(cert));
    return cert.valid ? exit_ok : exit_invalid;
}

int run_verify(const std::string& input, const std::string& coloring_path, const Common& c) {
    DetourProfile p = DetourProfile::analyze(parse_graph(read_file(input)));
    auto colors = colors_from_json(read_file(coloring_path), p.n());
    return emit_certificate(verify_coloring(p, std::move(colors)), c);
}

int run_color(const std::string& input, const std::string& method,
              const std::string& ordering_path, std::string sidecar_path, const Common& c) {
    Graph g = parse_graph(read_file(input));
    DetourProfile p = DetourProfile::analyze(g);
    if (sidecar_path.empty()) sidecar_path = input + ".json";

    auto family_certificate = [&]() -> ColoringCertificate {
        FamilySpec spec = family_spec_from_json(read_file(sidecar_path));
        Graph expected = gen_family(spec);
        if (write_edge_list(expected) != write_edge_list(g))
            throw Error(Error::Kind::validation,
                        "input graph does not match the sidecar family spec");
        return color_from_ordering(p, family_ordering(spec));
    };

    if (method == "ordering-file") {
        if (ordering_path.empty())
            throw Error(Error::Kind::parse, "--method ordering-file requires --ordering");
        return emit_certificate(
            color_from_ordering(p, ordering_from_json(read_file(ordering_path))), c);
    }
    if (method == "sdb") return emit_certificate(sdb_color(p), c);
    if (method == "family") return emit_certificate(family_certificate(), c);

    // auto: family spec if a sidecar matches, then the SDB algorithm, then a
    // bounded search over branch-alternating orderings, else bound only.
    if (std::filesystem::exists(sidecar_path)) {
        try {
            ColoringCertificate cert = family_certificate();
            if (cert.valid && cert.span == cert.lower_bound) return emit_certificate(cert, c);
        } catch (const Error&) {
            // fall through to the next strategy
        }
    }
    if (classify_sdb(p).sdb) {
        ColoringCertificate cert = sdb_color(p);
        if (cert.valid && cert.span == cert.lower_bound) return emit_certificate(cert, c);
    }
    if (auto alt = alternating_ordering(p); alt && check_ordering_thm2(p, *alt).pass)
        return emit_certificate(color_from_ordering(p, *alt), c);

    nlohmann::json j;
    j["method"] = "bound-only";
    j["analysis"] = nlohmann::json::parse(analysis_to_json(p));
    j["note"] = "no verified optimal coloring found; the lower bound still holds";
    emit(c.out, j.dump(2) + "\n");
    return exit_ok;
}

int run_oracle(const std::string& input, const std::vector<int>& pair, int max_n,
               const Common& c) {
    Graph g = parse_graph(read_file(input));
    if (!pair.empty()) {
        if (pair.size() != 2) throw Error(Error::Kind::parse, "--pair needs exactly two ids");
        auto r = brute_detour_distance(g, pair[0], pair[1], max_n > 0 ? max_n : 15);
        emit(c.out, detour_search_to_json(r, pair[0], pair[1]));
        return exit_ok;
    }
    auto r = exact_hc(g, max_n > 0 ? max_n : 9);
    emit(c.out, hc_search_to_json(r));
    return exit_ok;
}

int run_gen(const FamilySpec& spec, const std::string& out) {
    if (out.empty()) throw Error(Error::Kind::parse, "gen requires --out");
    Graph g = gen_family(spec);
    write_file(out, write_edge_list(g));
    bool caveat = DetourProfile::analyze(g).branch_count() < 3;
    write_file(out + ".json",
               family_sidecar_to_json(spec, g.n, family_hc_formula(spec), caveat));
    return exit_ok;
}

int run_gen_random(std::uint64_t seed, int n_target, int max_clique, const std::string& out) {
    if (out.empty()) throw Error(Error::Kind::parse, "gen requires --out");
    Graph g = random_block_graph(seed, n_target, max_clique);
    write_file(out, write_edge_list(g));
    nlohmann::json j;
    j["family"] = "random";
    j["seed"] = seed;
    j["n_target"] = n_target;
    j["max_clique"] = max_clique;
    j["n"] = g.n;
    j["formula_hc"] = nullptr;
    j["caveat"] = true;
    write_file(out + ".json", j.dump(2) + "\n");
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hamiltonian colorings of block graphs"};
    app.require_subcommand(1);

    Common common;

    std::string an_input;
    auto* analyze = app.add_subcommand("analyze", "detour profile, lower bound, classification");
    analyze->add_option("input", an_input, "edge-list file")->required();
    add_common(analyze, common);

    std::string co_input, co_method = "auto", co_ordering, co_sidecar;
    auto* color = app.add_subcommand("color", "compute a coloring certificate");
    color->add_option("input", co_input, "edge-list file")->required();
    color->add_option("--method", co_method, "auto, ordering-file, sdb or family")
        ->check(CLI::IsMember({"auto", "ordering-file", "sdb", "family"}));
    color->add_option("--ordering", co_ordering, "ordering JSON (for --method ordering-file)");
    color->add_option("--sidecar", co_sidecar, "family sidecar JSON (default <input>.json)");
    add_common(color, common);

    std::string ve_input, ve_colors;
    auto* verify = app.add_subcommand("verify", "check a coloring against the definition");
    verify->add_option("input", ve_input, "edge-list file")->required();
    verify->add_option("coloring", ve_colors, "coloring JSON file")->required();
    add_common(verify, common);

    std::string or_input;
    std::vector<int> or_pair;
    int or_max_n = 0;
    auto* oracle = app.add_subcommand("oracle", "brute-force search (exact hc, or --pair detour)");
    oracle->add_option("input", or_input, "edge-list file")->required();
    oracle->add_option("--pair", or_pair, "two vertex ids: longest-path search instead of hc")
        ->expected(2);
    oracle->add_option("--max-n", or_max_n, "override the size guard");
    add_common(oracle, common);

    auto* gen = app.add_subcommand("gen", "generate a family graph plus JSON sidecar");
    gen->require_subcommand(1);
    std::string gen_out, g1_k, g1_m, gm1_k, gm1_m;
    int gm1_central = 1;
    SymmetricBlocks sym;
    ExtendedStarOfBlocks ext;
    OnePointUnion opu;
    StarFamily star;
    PathFamily path;
    std::uint64_t rnd_seed = 1;
    int rnd_n = 10, rnd_clique = 4;

    auto* gen_g1 = gen->add_subcommand("g1", "level-wise regular, one central vertex");
    gen_g1->add_option("--k", g1_k, "comma list of block counts per level")->required();
    gen_g1->add_option("--m", g1_m, "comma list of block sizes minus one")->required();
    auto* gen_gm1 = gen->add_subcommand("gm1", "level-wise regular, central block");
    gen_gm1->add_option("--central", gm1_central, "center block size minus one")->required();
    gen_gm1->add_option("--k", gm1_k, "comma list of block counts per level")->required();
    gen_gm1->add_option("--m", gm1_m, "comma list of block sizes minus one")->required();
    auto* gen_sym = gen->add_subcommand("symmetric", "symmetric block graph");
    gen_sym->add_option("--p", sym.p)->required();
    gen_sym->add_option("--k", sym.k)->required();
    gen_sym->add_option("--d", sym.d)->required();
    auto* gen_ext = gen->add_subcommand("extstar", "extended star of blocks");
    gen_ext->add_option("--m", ext.m)->required();
    gen_ext->add_option("--p", ext.p)->required();
    gen_ext->add_option("--k", ext.k)->required();
    auto* gen_opu = gen->add_subcommand("onepoint", "one-point union of cliques");
    gen_opu->add_option("--p", opu.p)->required();
    gen_opu->add_option("--k", opu.k)->required();
    auto* gen_star = gen->add_subcommand("star", "star K_{1,k}");
    gen_star->add_option("--k", star.k)->required();
    auto* gen_path = gen->add_subcommand("path", "path P_n");
    gen_path->add_option("--n", path.n)->required();
    auto* gen_rnd = gen->add_subcommand("random", "seeded random block graph");
    gen_rnd->add_option("--seed", rnd_seed);
    gen_rnd->add_option("--n-target", rnd_n);
    gen_rnd->add_option("--max-clique", rnd_clique);
    for (auto* sub : {gen_g1, gen_gm1, gen_sym, gen_ext, gen_opu, gen_star, gen_path, gen_rnd})
        sub->add_option("--out", gen_out, "output edge-list path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (analyze->parsed()) return run_analyze(an_input, common);
        if (color->parsed()) return run_color(co_input, co_method, co_ordering, co_sidecar, common);
        if (verify->parsed()) return run_verify(ve_input, ve_colors, common);
        if (oracle->parsed()) return run_oracle(or_input, or_pair, or_max_n, common);
        if (gen->parsed()) {
            if (gen_g1->parsed())
                return run_gen(LevelWiseG1{parse_int_list(g1_k), parse_int_list(g1_m)}, gen_out);
            if (gen_gm1->parsed())
                return run_gen(LevelWiseGm1{gm1_central, parse_int_list(gm1_k),
                                            parse_int_list(gm1_m)},
                               gen_out);
            if (gen_sym->parsed()) return run_gen(sym, gen_out);
            if (gen_ext->parsed()) return run_gen(ext, gen_out);
            if (gen_opu->parsed()) return run_gen(opu, gen_out);
            if (gen_star->parsed()) return run_gen(star, gen_out);
            if (gen_path->parsed()) return run_gen(path, gen_out);
            if (gen_rnd->parsed()) return run_gen_random(rnd_seed, rnd_n, rnd_clique, gen_out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
