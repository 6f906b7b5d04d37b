#include <iostream>

#include "CLI11.hpp"

#include "intalg/cli.hpp"

int main(int argc, char** argv) {
    intalg::RunConfig cfg;
    CLI::App app{"Invariants of intersection algebras B(a, b)"};
    app.add_option("--a", cfg.a, "comma-separated exponents a_1,...,a_n");
    app.add_option("--b", cfg.b, "comma-separated exponents b_1,...,b_n");
    app.add_option("--invariants", cfg.invariants, "hs,embdim,cl,qgor,fsig,hk or all")->capture_default_str();
    app.add_option("--method", cfg.method, "exact, formula, oracle or all")->capture_default_str();
    app.add_option("--samples", cfg.samples, "Monte Carlo samples")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Monte Carlo seed")->capture_default_str();
    app.add_option("--lattice-scale", cfg.lattice_scale, "lattice oracle scale m")->capture_default_str();
    app.add_option("--output", cfg.output, "json or table")->capture_default_str();
    app.add_option("--mesh", cfg.mesh, "directory for OFF meshes of the three regions (n = 1)");
    app.add_option("--sweep", cfg.sweep, "parameter sweep, e.g. k=1..3,b=1..3 or a=b,a=1..4");
    app.add_option("--threads", cfg.threads, "worker threads for inclusion-exclusion (0 = all cores)")
        ->capture_default_str();
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        nlohmann::ordered_json j;
        j["error"] = {{"code", "InvalidArgument"}, {"message", e.what()}};
        std::cerr << j.dump() << '\n';
        return intalg::kExitUsage;
    }
    return intalg::run(cfg, std::cout, std::cerr);
}
