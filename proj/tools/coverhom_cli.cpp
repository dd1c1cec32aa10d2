// Command-line driver: decompose / cover / act / demo pipelines with JSON
// input files, a JSON report on stdout or --out, and an on-disk character
// table cache.  Wall-clock timings go to stderr so reports stay byte-stable.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <unistd.h>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <coverhom/components.hpp>
#include <coverhom/cover.hpp>
#include <coverhom/group_fixtures.hpp>
#include <coverhom/rho.hpp>
#include <coverhom/surface.hpp>

using json = nlohmann::json; // std::map-backed: keys serialize sorted
using namespace coverhom;

namespace {

constexpr const char* kSchema = "coverhom-report/1";
constexpr const char* kCacheVersion = "character-table-v1";

/// Automorphism images failed the deck-group compatibility test; exit code 5.
struct gamma_error : error {
    explicit gamma_error(const std::string& m) : error(m) {}
};

struct JobConfig {
    std::string command;
    int genus = 0;
    std::string group_file;
    std::string hom_file;
    std::vector<std::string> aut_specs;
    std::string component = "all";
    int rose = 0;
    std::string out_path;
    std::string cache_dir;
    std::string verify_level = "fast";
    unsigned long seed = 0;
};

// ---------------------------------------------------------------------------
// input parsing

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

/// Built-in group shorthand: "sym:4", "alt:5", "cyclic:6", "dihedral:8",
/// "dicyclic:12", or a product like "sym:3 x cyclic:2".
std::optional<GeneratorSet> builtin_group(const std::string& spec) {
    auto cross = spec.find(" x ");
    if (cross != std::string::npos) {
        auto a = builtin_group(spec.substr(0, cross));
        auto b = builtin_group(spec.substr(cross + 3));
        if (!a || !b) return std::nullopt;
        return direct_product(*a, *b);
    }
    auto colon = spec.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string kind = spec.substr(0, colon);
    int n = 0;
    try {
        n = std::stoi(spec.substr(colon + 1));
    } catch (...) {
        throw parse_error("bad group shorthand '" + spec + "'");
    }
    if (kind == "sym") return symmetric_group(n);
    if (kind == "alt") return alternating_group(n);
    if (kind == "cyclic") return cyclic_group(n);
    if (kind == "dihedral") return dihedral_group(n);
    if (kind == "dicyclic") return dicyclic_group(n);
    return std::nullopt;
}

/// Group from shorthand or a JSON file {"degree", "generators": [[0-based
/// image arrays]], optional "size_bound"}.
FiniteGroup load_group(const std::string& spec) {
    if (auto gs = builtin_group(spec)) return FiniteGroup(gs->generators, gs->degree);
    json j = load_json_file(spec);
    if (!j.contains("degree") || !j.contains("generators"))
        throw parse_error("group file '" + spec + "' needs \"degree\" and \"generators\"");
    int degree = j.at("degree").get<int>();
    std::vector<Permutation> gens;
    for (const auto& row : j.at("generators")) gens.push_back(row.get<Permutation>());
    std::size_t bound = j.value("size_bound", FiniteGroup::kDefaultSizeBound);
    return FiniteGroup(std::move(gens), degree, bound);
}

/// Element specifier: a 0-based permutation image array, or a word in the
/// group file's generators ("g0 g1^-1 g0").
int resolve_element(const FiniteGroup& G, const json& spec) {
    if (spec.is_array()) return G.index_of(spec.get<Permutation>());
    if (!spec.is_string()) throw parse_error("element specifier must be an array or a word");
    int r = 0;
    std::istringstream in(spec.get<std::string>());
    std::string tok;
    while (in >> tok) {
        bool inv = false;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            inv = true;
            tok = tok.substr(0, tok.size() - 3);
        }
        if (tok.size() < 2 || tok[0] != 'g')
            throw parse_error("bad element token '" + tok + "' (expected g<k> or g<k>^-1)");
        std::size_t k = 0;
        try {
            k = std::stoul(tok.substr(1));
        } catch (...) {
            throw parse_error("bad element token '" + tok + "'");
        }
        const auto& gi = G.generator_indices();
        if (k >= gi.size()) throw parse_error("element token '" + tok + "' out of range");
        int e = gi[k];
        r = G.mult(r, inv ? G.inverse(e) : e);
    }
    return r;
}

struct HomInput {
    bool is_surface = false;
    int rank = 0; ///< genus (surface) or petal count (rose)
    std::vector<int> images;
};

/// Hom file: {"surface_genus": g, "images": [...2g...]} or
/// {"rose_rank": n, "images": [...n...]}.
HomInput load_hom(const FiniteGroup& G, const std::string& path) {
    json j = load_json_file(path);
    HomInput h;
    if (j.contains("surface_genus")) {
        h.is_surface = true;
        h.rank = j.at("surface_genus").get<int>();
    } else if (j.contains("rose_rank")) {
        h.rank = j.at("rose_rank").get<int>();
    } else {
        throw parse_error("hom file '" + path + "' needs \"surface_genus\" or \"rose_rank\"");
    }
    if (!j.contains("images")) throw parse_error("hom file '" + path + "' needs \"images\"");
    for (const auto& s : j.at("images")) h.images.push_back(resolve_element(G, s));
    std::size_t expect = h.is_surface ? 2 * static_cast<std::size_t>(h.rank)
                                      : static_cast<std::size_t>(h.rank);
    if (h.images.size() != expect)
        throw parse_error("hom file '" + path + "': expected " + std::to_string(expect) +
                          " images, got " + std::to_string(h.images.size()));
    return h;
}

/// Automorphism specifier: "id", a '*'-separated product of built-in twist
/// names with optional ^-1 ("b1", "a1^-1", "b1*a2^-1*c1"), or "@file.json"
/// with {"images": ["a1 b1", ...]} generator-image words.
SurfaceAutomorphism resolve_aut(const SurfacePresentation& pres, const std::string& spec) {
    if (spec == "id") return identity_automorphism(pres);
    if (!spec.empty() && spec[0] == '@') {
        json j = load_json_file(spec.substr(1));
        if (!j.contains("images")) throw parse_error("aut file '" + spec + "' needs \"images\"");
        std::vector<Word> images;
        for (const auto& s : j.at("images")) images.push_back(parse_word(s.get<std::string>()));
        return validate_automorphism(pres, std::move(images));
    }
    SurfaceAutomorphism f = identity_automorphism(pres);
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t star = spec.find('*', pos);
        std::string name = spec.substr(pos, star == std::string::npos ? star : star - pos);
        int power = 1;
        if (name.size() > 3 && name.substr(name.size() - 3) == "^-1") {
            power = -1;
            name = name.substr(0, name.size() - 3);
        }
        f = compose(pres, f, builtin_twist(pres, name, power));
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return f;
}

// ---------------------------------------------------------------------------
// serialization

json rational_str(const Rational& r) { return r.str(); }

json matrix_json(const Matrix<Rational>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Sparse group-algebra element as sorted [element, coefficient] pairs.
json algebra_json(const GroupAlgebraElement& a) {
    json terms = json::array();
    for (const auto& [h, c] : a.coeffs())
        if (!c.is_zero()) terms.push_back(json::array({h, c.str()}));
    return terms;
}

json gram_json(const std::vector<std::vector<GroupAlgebraElement>>& gram) {
    json rows = json::array();
    for (const auto& r : gram) {
        json row = json::array();
        for (const auto& e : r) row.push_back(algebra_json(e));
        rows.push_back(std::move(row));
    }
    return rows;
}

json component_json(const RationalComponent& c) {
    long ell = detail::euler_phi(c.center_conductor) /
               static_cast<long>(c.center_stabilizer.size());
    json j;
    j["n"] = c.n;
    j["fs"] = c.fs;
    j["kind"] = to_string(c.kind);
    j["type"] = to_string(c.type_label);
    j["target"] = to_string(c.target_label);
    j["q_dimension"] = c.q_dimension;
    j["orbit_size"] = c.orbit.size();
    j["center"] = {{"conductor", c.center_conductor},
                   {"stabilizer", c.center_stabilizer},
                   {"degree_over_Q", ell}};
    // K = fixed field of the involution restricted to the center L
    j["fixed_field"] = {{"equals_center", c.kind == Kind::first},
                        {"degree_over_Q", c.kind == Kind::first ? ell : ell / 2}};
    return j;
}

// ---------------------------------------------------------------------------
// character table cache

json cyclotomic_json(const Cyclotomic& x) {
    json c = json::array();
    for (const Rational& r : x.coeffs()) c.push_back(r.str());
    return json{{"n", x.conductor()}, {"c", std::move(c)}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
    long n = j.at("n").get<long>();
    Cyclotomic x(0);
    const auto& c = j.at("c");
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rational r = Rational::from_string(c[i].get<std::string>());
        if (!r.is_zero()) x += Cyclotomic(r) * Cyclotomic::zeta(n, static_cast<long>(i));
    }
    return x;
}

std::string cache_path(const std::string& dir, const FiniteGroup& G) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(G.multiplication_hash()));
    return dir + "/" + kCacheVersion + "-" + hex + ".json";
}

std::optional<CharacterTable> cache_load(const std::string& path, std::size_t class_count) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        json j;
        in >> j;
        if (j.at("version").get<std::string>() != kCacheVersion) return std::nullopt;
        CharacterTable ct;
        ct.degrees = j.at("degrees").get<std::vector<long>>();
        for (const auto& row : j.at("table")) {
            std::vector<Cyclotomic> r;
            for (const auto& v : row) r.push_back(cyclotomic_from_json(v));
            ct.table.push_back(std::move(r));
        }
        if (ct.table.size() != class_count || ct.degrees.size() != class_count)
            throw parse_error("wrong shape");
        for (const auto& row : ct.table)
            if (row.size() != class_count) throw parse_error("wrong shape");
        return ct;
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring corrupt cache file " << path << " (" << e.what()
                  << ")\n";
        return std::nullopt;
    }
}

void cache_store(const std::string& path, const CharacterTable& ct) {
    json j;
    j["version"] = kCacheVersion;
    j["degrees"] = ct.degrees;
    json table = json::array();
    for (const auto& row : ct.table) {
        json r = json::array();
        for (const auto& v : row) r.push_back(cyclotomic_json(v));
        table.push_back(std::move(r));
    }
    j["table"] = std::move(table);
    std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) return; // cache is best-effort
        out << j.dump(1) << "\n";
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec); // atomic on POSIX
    if (ec) std::filesystem::remove(tmp, ec);
}

CharacterTable cached_character_table(const FiniteGroup& G, const std::string& cache_dir) {
    if (cache_dir.empty()) return character_table(G);
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    std::string path = cache_path(cache_dir, G);
    if (auto ct = cache_load(path, G.class_count())) return std::move(*ct);
    CharacterTable ct = character_table(G);
    cache_store(path, ct);
    return ct;
}

// ---------------------------------------------------------------------------
// report plumbing

bool component_selected(const std::string& selector, std::size_t index) {
    if (selector == "all") return true;
    try {
        return std::stoul(selector) == index;
    } catch (...) {
        throw parse_error("bad --component selector '" + selector + "'");
    }
}

void emit(const json& report, const std::string& out_path) {
    std::string text = report.dump(1) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw error("cannot write '" + out_path + "'");
        out << text;
    }
}

json report_header(const JobConfig& cfg) {
    json j;
    j["schema"] = kSchema;
    j["command"] = cfg.command;
    j["timing_note"] = "wall-clock timings go to stderr to keep reports byte-stable";
    json inputs;
    if (!cfg.group_file.empty()) inputs["group"] = cfg.group_file;
    if (!cfg.hom_file.empty()) inputs["hom"] = cfg.hom_file;
    if (!cfg.aut_specs.empty()) inputs["aut"] = cfg.aut_specs;
    if (cfg.genus > 0) inputs["genus"] = cfg.genus;
    if (cfg.rose > 0) inputs["rose"] = cfg.rose;
    inputs["component"] = cfg.component;
    inputs["verify_level"] = cfg.verify_level;
    if (cfg.verify_level == "full") inputs["seed"] = cfg.seed;
    j["input"] = std::move(inputs);
    return j;
}

// ---------------------------------------------------------------------------
// commands

int run_decompose(const JobConfig& cfg) {
    if (cfg.group_file.empty()) throw parse_error("decompose: --group is required");
    FiniteGroup G = load_group(cfg.group_file);
    ComponentDecomposition dec =
        rational_components(G, cached_character_table(G, cfg.cache_dir));

    json report = report_header(cfg);
    report["group"] = {{"order", G.order()},
                       {"degree", G.degree()},
                       {"class_count", G.class_count()},
                       {"exponent", G.exponent()},
                       {"multiplication_hash", G.multiplication_hash()}};
    json comps = json::array();
    comps.push_back(component_json(dec.trivial));
    for (std::size_t i = 0; i < dec.components.size(); ++i)
        if (component_selected(cfg.component, i)) comps.push_back(component_json(dec.components[i]));
    report["components"] = std::move(comps);
    emit(report, cfg.out_path);
    return 0;
}

/// True iff every b_i dies, i.e. p factors through the handlebody map.
bool handlebody_convention(const HomInput& h) {
    for (int i = 1; i <= h.rank; ++i)
        if (h.images[static_cast<std::size_t>(2 * i - 1)] != 0) return false;
    return true;
}

int run_cover(const JobConfig& cfg) {
    if (cfg.group_file.empty() || cfg.hom_file.empty())
        throw parse_error("cover: --group and --hom are required");
    FiniteGroup G = load_group(cfg.group_file);
    HomInput h = load_hom(G, cfg.hom_file);
    if (cfg.genus > 0 && (!h.is_surface || h.rank != cfg.genus))
        throw parse_error("cover: --genus does not match the hom file");
    if (cfg.rose > 0 && (h.is_surface || h.rank != cfg.rose))
        throw parse_error("cover: --rose does not match the hom file");
    GroupHom p{&G, h.images};
    if (!G.generates(h.images)) throw hom_error("cover: images do not generate the deck group");

    json report = report_header(cfg);
    report["group"] = {{"order", G.order()}, {"multiplication_hash", G.multiplication_hash()}};
    ComponentDecomposition dec =
        rational_components(G, cached_character_table(G, cfg.cache_dir));

    if (!h.is_surface) {
        CoverHomology hom = homology(rose_cover_complex(h.rank, p));
        report["cover"] = {{"kind", "rose"},
                           {"rank", h.rank},
                           {"homology_dimension", hom.dimension},
                           {"expected_dimension", (h.rank - 1) * static_cast<long>(G.order()) + 1}};
        emit(report, cfg.out_path);
        return 0;
    }

    CoverHomology hom = homology(surface_cover_complex(h.rank, p));
    const int g = h.rank;
    report["cover"] = {{"kind", "surface"},
                       {"genus", g},
                       {"homology_dimension", hom.dimension},
                       {"expected_dimension", 2 + (2 * g - 2) * static_cast<long>(G.order())}};

    json table = json::array();
    {
        IsotypicModule mod = trivial_projection(hom, dec.trivial);
        json e = component_json(dec.trivial);
        e["module_dimension"] = mod.q_dimension;
        e["multiplicity"] = mod.q_dimension; // rank over A_0 = Q
        e["gram"] = gram_json(mod.gram);
        table.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
        if (!component_selected(cfg.component, i)) continue;
        IsotypicModule mod = isotypic_projection(hom, dec.components[i]);
        json e = component_json(dec.components[i]);
        e["module_dimension"] = mod.q_dimension;
        e["multiplicity"] = mod.q_dimension / dec.components[i].q_dimension;
        e["gram"] = gram_json(mod.gram);
        table.push_back(std::move(e));
    }
    report["modules"] = std::move(table);

    if (handlebody_convention(h)) {
        std::vector<int> pprime_images;
        for (int i = 1; i <= g; ++i) pprime_images.push_back(h.images[2 * (i - 1)]);
        GroupHom pprime{&G, pprime_images};
        CoverHomology rose = homology(rose_cover_complex(g, pprime));
        std::vector<std::vector<Rational>> phat = kernel_submodule(hom, rose);
        bool isotropic = true;
        for (const auto& u : phat)
            for (const auto& v : phat) {
                Rational s(0);
                for (std::size_t x = 0; x < hom.dimension; ++x)
                    for (std::size_t y = 0; y < hom.dimension; ++y)
                        s = s + u[x] * hom.sp_pairing(x, y) * v[y];
                if (!s.is_zero()) isotropic = false;
            }
        report["kernel_submodule"] = {
            {"dimension", phat.size()},
            {"expected_dimension", (g - 1) * static_cast<long>(G.order()) + 1},
            {"totally_isotropic", isotropic}};
    }
    emit(report, cfg.out_path);
    return 0;
}

int run_act(const JobConfig& cfg) {
    if (cfg.group_file.empty() || cfg.hom_file.empty())
        throw parse_error("act: --group and --hom are required");
    if (cfg.aut_specs.empty()) throw parse_error("act: at least one --aut is required");
    FiniteGroup G = load_group(cfg.group_file);
    HomInput h = load_hom(G, cfg.hom_file);
    if (!h.is_surface) throw hom_error("act: needs a surface homomorphism");
    if (cfg.genus > 0 && h.rank != cfg.genus)
        throw parse_error("act: --genus does not match the hom file");
    GroupHom p{&G, h.images};
    if (!G.generates(h.images)) throw hom_error("act: images do not generate the deck group");
    SurfacePresentation pres(h.rank);

    std::vector<SurfaceAutomorphism> auts;
    for (const auto& spec : cfg.aut_specs) {
        SurfaceAutomorphism f = resolve_aut(pres, spec);
        if (!in_gamma(p, f)) {
            std::ostringstream msg;
            msg << "automorphism '" << spec << "' is not in the stabilizer; failing images:";
            for (std::size_t k = 0; k < f.images.size(); ++k)
                if (p.image_of(f.images[k]) != p.images[k])
                    msg << " generator " << (k + 1) << " -> " << word_str(f.images[k]);
            throw gamma_error(msg.str());
        }
        auts.push_back(std::move(f));
    }

    CoverHomology hom = homology(surface_cover_complex(h.rank, p));
    ComponentDecomposition dec =
        rational_components(G, cached_character_table(G, cfg.cache_dir));

    std::optional<std::vector<std::vector<Rational>>> phat;
    if (handlebody_convention(h)) {
        std::vector<int> pprime_images;
        for (int i = 1; i <= h.rank; ++i) pprime_images.push_back(h.images[2 * (i - 1)]);
        GroupHom pprime{&G, pprime_images};
        phat = kernel_submodule(hom, homology(rose_cover_complex(h.rank, pprime)));
    }

    std::vector<RhoMatrix> actions;
    json auts_json = json::array();
    for (std::size_t a = 0; a < auts.size(); ++a) {
        RhoMatrix rm = induced_action(auts[a], hom);
        json e;
        e["spec"] = cfg.aut_specs[a];
        e["certifications"] = {{"equivariant", rm.equivariant},
                               {"form_preserving", rm.form_preserving},
                               {"integral_on_lattice", rm.integral_on_lattice}};
        e["on_homology"] = matrix_json(rm.on_homology);
        if (phat) e["preserves_kernel_submodule"] = parabolic_check(rm, *phat);
        auts_json.push_back(std::move(e));
        actions.push_back(std::move(rm));
    }
    json report = report_header(cfg);
    report["homology_dimension"] = hom.dimension;
    report["automorphisms"] = std::move(auts_json);

    json comps = json::array();
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
        if (!component_selected(cfg.component, i)) continue;
        const RationalComponent& comp = dec.components[i];
        IsotypicModule mod = isotypic_projection(hom, comp);
        json e = component_json(comp);
        e["module_dimension"] = mod.q_dimension;
        json per_aut = json::array();
        std::vector<Matrix<Rational>> projected;
        for (std::size_t a = 0; a < actions.size(); ++a) {
            Matrix<Rational> R = project_action(actions[a], mod, hom);
            ReducedValues rv = reduced_norm_trace(hom, mod, dec.characters, EndoElement{&mod, R});
            per_aut.push_back(json{{"spec", cfg.aut_specs[a]},
                                   {"matrix", matrix_json(R)},
                                   {"nrd", rv.nrd.str()},
                                   {"trd", rv.trd.str()},
                                   {"degree", rv.degree}});
            projected.push_back(std::move(R));
        }
        NormOneReport n1 = norm_one_check(hom, mod, dec.characters, projected);
        e["actions"] = std::move(per_aut);
        e["norm_one"] = n1.pass;
        comps.push_back(std::move(e));
    }
    report["components"] = std::move(comps);
    emit(report, cfg.out_path);
    return 0;
}

// ---------------------------------------------------------------------------
// demo: self-contained end-to-end checks

struct DemoChecks {
    json list = json::array();
    int failures = 0;

    void add(const std::string& name, bool pass, json detail = json()) {
        json e{{"name", name}, {"pass", pass}};
        if (!detail.is_null()) e["detail"] = std::move(detail);
        list.push_back(std::move(e));
        if (!pass) ++failures;
        std::cerr << (pass ? "pass" : "FAIL") << "  " << name << "\n";
    }
};

bool algebra_is(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a == b; }

int run_demo(const JobConfig& cfg) {
    DemoChecks checks;

    // genus-2 double cover: the nontrivial component carries SL(2,Z)
    GeneratorSet z2 = cyclic_group(2);
    FiniteGroup H(z2.generators, z2.degree);
    RedundantSetup setup = redundant_setup(2, H, {0, 1});
    SurfacePresentation pres(2);
    CoverHomology surf = homology(surface_cover_complex(2, setup.p));
    CoverHomology rose = homology(rose_cover_complex(2, setup.pprime));
    ComponentDecomposition dec =
        rational_components(H, cached_character_table(H, cfg.cache_dir));
    checks.add("double cover homology has dimension 6", surf.dimension == 6);

    IsotypicModule triv = trivial_projection(surf, dec.trivial);
    IsotypicModule sgn = isotypic_projection(surf, dec.components.at(0));
    checks.add("isotypic dimensions are 4 and 2",
               triv.q_dimension == 4 && sgn.q_dimension == 2);

    UnipotentPairReport up = verify_unipotent_pair(surf, rose, sgn, setup);
    GroupAlgebraElement e = dec.components.at(0).idempotent;
    GroupAlgebraElement zero(H);
    bool elementary = up.pass && algebra_is(up.tb[0][0], e) && algebra_is(up.tb[0][1], e) &&
                      algebra_is(up.tb[1][0], zero) && algebra_is(up.tb[1][1], e) &&
                      algebra_is(up.ta_inv[0][0], e) && algebra_is(up.ta_inv[0][1], zero) &&
                      algebra_is(up.ta_inv[1][0], e) && algebra_is(up.ta_inv[1][1], e);
    checks.add("T_b1 and T_a1^-1 act by the elementary matrices", elementary,
               json{{"tb", gram_json(up.tb)}, {"ta_inv", gram_json(up.ta_inv)}});

    std::vector<std::vector<Rational>> phat = kernel_submodule(surf, rose);
    RhoMatrix tb = induced_action(builtin_twist(pres, "b1"), surf);
    RhoMatrix ta = induced_action(builtin_twist(pres, "a1", -1), surf);
    checks.add("twists certify on the double cover",
               tb.equivariant && tb.form_preserving && tb.integral_on_lattice &&
                   ta.equivariant && ta.form_preserving && ta.integral_on_lattice);
    checks.add("handlebody kernel is preserved by T_b1 but not by T_a1^-1",
               parabolic_check(tb, phat) && !parabolic_check(ta, phat));
    {
        Matrix<Rational> R = project_action(tb, sgn, surf);
        ReducedValues rv = reduced_norm_trace(surf, sgn, dec.characters, EndoElement{&sgn, R});
        checks.add("T_b1 is unipotent on the sign component",
                   rv.nrd == Cyclotomic(1) && rv.trd == Cyclotomic(2));
    }

    // classification demos: explicit 2- and 3-dimensional families
    auto classify = [&](const std::string& spec, long n, int fs, TargetLabel target,
                        FormClass forms, const std::vector<Matrix<Cyclotomic>>& rep) {
        FiniteGroup G = load_group(spec);
        ComponentDecomposition d = rational_components(G, cached_character_table(G, cfg.cache_dir));
        const RationalComponent* found = nullptr;
        for (const auto& c : d.components)
            if (c.n == n && c.fs == fs) found = &c;
        bool ok = found && found->target_label == target && invariant_bilinear_forms(rep) == forms;
        checks.add("classification of " + spec, ok,
                   found ? component_json(*found) : json());
    };
    classify("sym:4", 3, 1, TargetLabel::Sp, FormClass::symmetric, rep_sym_standard(3));
    classify("cyclic:5", 1, 0, TargetLabel::GL, FormClass::none, rep_cyclic(5));
    classify("dihedral:8", 2, 1, TargetLabel::Sp, FormClass::symmetric, rep_dihedral(8));
    classify("dicyclic:8", 2, -1, TargetLabel::O, FormClass::alternating, rep_dicyclic(8));

    // dimension formulas on one more pair of fixtures
    {
        GeneratorSet s3 = symmetric_group(3);
        FiniteGroup S3(s3.generators, s3.degree);
        GroupHom p{&S3, {S3.generator_indices()[0], 0, S3.generator_indices()[1], 0}};
        CoverHomology c = homology(surface_cover_complex(2, p));
        checks.add("Sym(3) genus-2 cover has dimension 14", c.dimension == 14);
        GroupHom pp{&S3, {S3.generator_indices()[0], S3.generator_indices()[1], 0, 0}};
        CoverHomology r = homology(rose_cover_complex(4, pp));
        checks.add("Sym(3) rank-4 rose cover has dimension 19", r.dimension == 19);
    }

    if (cfg.verify_level == "full") {
        // randomized sweep: products of stabilizer twists stay certified and
        // have unit reduced norm on the sign component
        std::mt19937 rng(cfg.seed);
        std::vector<std::string> pool{"b1", "b2", "a1"};
        bool all_ok = true;
        for (int trial = 0; trial < 20; ++trial) {
            SurfaceAutomorphism f = identity_automorphism(pres);
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            std::uniform_int_distribution<int> sign(0, 1);
            for (int step = 0; step < 4; ++step)
                f = compose(pres, f, builtin_twist(pres, pool[pick(rng)], sign(rng) ? 1 : -1));
            RhoMatrix rm = induced_action(f, surf);
            if (!rm.equivariant || !rm.form_preserving || !rm.integral_on_lattice) all_ok = false;
            Matrix<Rational> R = project_action(rm, sgn, surf);
            NormOneReport n1 = norm_one_check(surf, sgn, dec.characters, {R});
            if (!n1.pass) all_ok = false;
        }
        checks.add("randomized twist products certify with unit norm", all_ok);
    }

    json report = report_header(cfg);
    report["checks"] = std::move(checks.list);
    report["summary"] = {{"total", report["checks"].size()},
                         {"failed", checks.failures}};
    emit(report, cfg.out_path);
    return checks.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homology representations on finite covers of surfaces"};
    app.require_subcommand(1);
    JobConfig cfg;
    if (const char* env = std::getenv("COVERHOM_CACHE_DIR")) cfg.cache_dir = env;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out_path, "write the JSON report here instead of stdout");
        sub->add_option("--cache-dir", cfg.cache_dir, "character table cache directory");
        sub->add_option("--component", cfg.component, "component index or 'all'");
        sub->add_option("--verify-level", cfg.verify_level, "fast | full")
            ->check(CLI::IsMember({"fast", "full"}));
        sub->add_option("--seed", cfg.seed, "seed for randomized sweeps");
    };
    CLI::App* c_dec = app.add_subcommand("decompose", "decompose Q[G] and classify target types");
    c_dec->add_option("--group", cfg.group_file, "group file or shorthand (sym:4, cyclic:5, ...)");
    add_common(c_dec);
    CLI::App* c_cov = app.add_subcommand("cover", "homology of the cover named by a homomorphism");
    c_cov->add_option("--group", cfg.group_file, "deck group file or shorthand");
    c_cov->add_option("--hom", cfg.hom_file, "homomorphism file");
    c_cov->add_option("--genus", cfg.genus, "expected genus (cross-checked against the hom file)");
    c_cov->add_option("--rose", cfg.rose, "expected rose rank (cross-checked)");
    add_common(c_cov);
    CLI::App* c_act = app.add_subcommand("act", "induced action of mapping classes on the cover");
    c_act->add_option("--group", cfg.group_file, "deck group file or shorthand");
    c_act->add_option("--hom", cfg.hom_file, "homomorphism file");
    c_act->add_option("--genus", cfg.genus, "expected genus (cross-checked against the hom file)");
    c_act->add_option("--aut", cfg.aut_specs, "twist product, 'id', or @file")->take_all();
    add_common(c_act);
    CLI::App* c_demo = app.add_subcommand("demo", "self-contained end-to-end checks");
    add_common(c_demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    auto started = std::chrono::steady_clock::now();
    int rc = 1;
    try {
        if (cfg.command == "decompose") rc = run_decompose(cfg);
        else if (cfg.command == "cover") rc = run_cover(cfg);
        else if (cfg.command == "act") rc = run_act(cfg);
        else rc = run_demo(cfg);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const size_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const gamma_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const hom_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    std::cerr << "timing: " << cfg.command << " took " << ms << " ms\n";
    return rc;
}
