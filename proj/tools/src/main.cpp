#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "eqlab/error.hpp"

using namespace eqlab::cli;

namespace {

int exit_code(eqlab::ErrorCode code) {
    switch (code) {
    case eqlab::ErrorCode::Undetermined: return Undetermined;
    case eqlab::ErrorCode::Internal: return Mismatch;
    default: return Usage;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"eqlab: equisingular families, cones and simple singularities"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--field", cfg.field, "coefficient field: q, gf(p) or q[t]/(m(t))")->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "random seed")->envname("EQLAB_SEED")->capture_default_str();
    app.add_option("--retries", cfg.retries, "retry budget for randomized steps")->capture_default_str();
    app.add_option("--jet-ceiling", cfg.jet_ceiling, "largest jet order for mu/tau")
        ->check(CLI::Range(2u, 4096u))
        ->capture_default_str();

    DimsArgs dims;
    auto* c_dims = app.add_subcommand("dims", "dimension of |dH| and the expected dimension");
    c_dims->add_option("-n", dims.n, "surface degree")->required();
    c_dims->add_option("-d", dims.d, "multiple of the hyperplane class")->required();
    c_dims->add_option("--spec", dims.spec, "singularities, e.g. a1:147,d4:5");
    c_dims->add_option("--spec-file", dims.spec_file, "file with one type:count per line");

    ScanArgs scan;
    auto* c_scan = app.add_subcommand("scan", "obstruction window over a range of d");
    c_scan->add_option("-n", scan.n, "surface degree")->required();
    c_scan->add_option("-d", scan.d_range, "d or lo:hi")->required();
    c_scan->add_option("--type", scan.type, "simple type, e.g. a1")->required();
    c_scan->add_flag("--strict", scan.strict, "reject n <= 3k+4");

    HiranoArgs hir;
    auto* c_hir = app.add_subcommand("hirano", "Hirano's cuspidal families");
    c_hir->add_option("-n", hir.n, "surface degree")->required();
    c_hir->add_option("-k", hir.k, "even index of A_k")->required();
    c_hir->add_option("-m", hir.m_range, "m or lo:hi")->required();

    TsmoothArgs ts;
    auto* c_ts = app.add_subcommand("tsmooth", "T-smoothness conditions and gap report");
    c_ts->add_option("-n", ts.n, "surface degree")->required();
    c_ts->add_option("-d", ts.d, "multiple of the hyperplane class")->required();
    c_ts->add_option("--spec", ts.spec, "singularities, e.g. a1:147");
    c_ts->add_option("--spec-file", ts.spec_file, "file with one type:count per line");

    std::string scene;
    auto* c_cone = app.add_subcommand("cone", "cone over a plane curve cut with a surface");
    c_cone->add_option("scene", scene, "scene JSON file")->required();

    std::string germ;
    auto* c_cls = app.add_subcommand("classify", "mu, tau and ADE class of a plane curve germ");
    c_cls->add_option("germ", germ, "germ file or expression in x, y")->required();

    VerifyArgs ver;
    auto* c_ver = app.add_subcommand("verify-example", "run the built-in acceptance corpus");
    c_ver->add_option("--only", ver.only, "criterion numbers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (*c_dims) return cmd_dims(cfg, dims, std::cout);
        if (*c_scan) return cmd_scan(cfg, scan, std::cout);
        if (*c_hir) return cmd_hirano(cfg, hir, std::cout);
        if (*c_ts) return cmd_tsmooth(cfg, ts, std::cout);
        if (*c_cone) return cmd_cone(cfg, scene, std::cout);
        if (*c_cls) return cmd_classify(cfg, germ, std::cout);
        if (*c_ver) return cmd_verify(cfg, ver, std::cout);
    } catch (const eqlab::Error& e) {
        std::cerr << "error (" << eqlab::to_string(e.code()) << "): " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Mismatch;
    }
    return Usage;
}
