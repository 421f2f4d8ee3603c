#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "genstab/catalog.hpp"
#include "genstab/properties.hpp"
#include "genstab/verify.hpp"

using namespace genstab;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_error = 2;
constexpr int exit_cap = 3;

std::string render(const VerificationReport& r, const std::string& format) {
    return format == "kv" ? r.to_keyvalue() : r.to_text();
}

int emit(const std::vector<VerificationReport>& reports, const std::string& format) {
    bool ok = true;
    for (const auto& r : reports) {
        std::cout << render(r, format);
        ok = ok && r.pass();
    }
    return ok ? exit_pass : exit_fail;
}

std::vector<VerificationReport> run_cases(const std::vector<std::string>& ids, const CaseOptions& opts) {
    std::vector<std::future<VerificationReport>> jobs;
    jobs.reserve(ids.size());
    for (const auto& id : ids) jobs.push_back(std::async(std::launch::async, [id, opts] { return case_verify(id, opts); }));
    std::vector<VerificationReport> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

void print_record(const ModuleRecord& r) {
    std::string ks;
    for (std::size_t i = 0; i < r.k.size(); ++i) ks += (i ? "," : "") + r.k[i];
    std::cout << "table=" << r.table << " series=" << r.series << " rank=" << r.rank << " weight=" << r.weight
              << " p=" << r.p << " dim=" << r.dim << " form=" << to_string(r.form) << " k=" << ks << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generic stabilizers of totally singular subspaces: catalog, dimensions and verification"};
    app.require_subcommand(1);
    std::uint64_t seed = default_seed;
    std::string catalog_path;
    std::string format = "text";
    app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();
    app.add_option("--catalog", catalog_path, "Catalog data file (overrides GENSTAB_CATALOG)")->check(CLI::ExistingFile);
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "kv"}))->capture_default_str();

    auto* dim = app.add_subcommand("dim", "Dimension of the variety of totally singular k-spaces");
    std::string form, kstr;
    int n = 0;
    std::optional<int> d_special;
    dim->add_option("--form", form, "orthogonal or symplectic")->required()->check(CLI::IsMember({"orthogonal", "symplectic"}));
    dim->add_option("--n", n, "Module dimension")->required()->check(CLI::PositiveNumber);
    dim->add_option("--k", kstr, "Subspace dimension, optionally with ' or ''")->required();
    dim->add_option("--d-special", d_special, "Rank l for the D_l value at k = l-1");

    auto* quad = app.add_subcommand("quadruples", "Catalog records");
    int table = 1;
    std::optional<int> expand_rank;
    bool check = false;
    quad->add_option("--table", table, "Table number")->check(CLI::Range(1, 4))->capture_default_str();
    quad->add_option("--expand-rank", expand_rank, "List instances up to this rank")->check(CLI::PositiveNumber);
    quad->add_flag("--check", check, "Run the table 1 consistency sweep");

    auto* ver = app.add_subcommand("verify", "Run a scripted verification case");
    std::string case_id;
    std::optional<long> characteristic;
    std::optional<int> conductor;
    std::size_t closure_cap = default_closure_cap;
    ver->add_option("--case", case_id, "Case id or 'all'")->required();
    ver->add_option("--char", characteristic, "Prime characteristic")->check(CLI::PositiveNumber);
    ver->add_option("--conductor", conductor, "Cyclotomic conductor")->check(CLI::PositiveNumber);
    ver->add_option("--cap", closure_cap, "Closure cap")->capture_default_str();

    auto* orb = app.add_subcommand("orbits", "Orbit census over a finite field");
    std::string orbit_id;
    std::int64_t q = 0;
    int k = 1;
    std::size_t census_cap = default_census_cap;
    orb->add_option("--case", orbit_id, "Census case id")->required();
    orb->add_option("--q", q, "Field order")->required()->check(CLI::PositiveNumber);
    orb->add_option("--k", k, "Subspace dimension")->capture_default_str();
    orb->add_option("--cap", census_cap, "Census cap")->capture_default_str();

    auto* self = app.add_subcommand("selfcheck", "Dimension cross-check and randomized invariant suite");
    int instances = 1000;
    self->add_option("--instances", instances, "Draws per property")->check(CLI::PositiveNumber)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (!catalog_path.empty()) setenv("GENSTAB_CATALOG", catalog_path.c_str(), 1);

        if (*dim) {
            std::cout << grass_dim(n, parse_k(kstr), parse_form_kind(form), d_special) << '\n';
            return exit_pass;
        }
        if (*quad) {
            const Catalog& c = default_catalog();
            for (const ModuleRecord* r : c.table(table)) {
                print_record(*r);
                if (expand_rank)
                    for (const auto& inst : expand(*r, *expand_rank)) std::cout << "  " << inst.describe() << '\n';
            }
            if (!check) return exit_pass;
            return emit({table1_consistency(c)}, format);
        }
        if (*ver) {
            CaseOptions opts;
            opts.characteristic = characteristic;
            opts.conductor = conductor;
            opts.seed = seed;
            opts.closure_cap = closure_cap;
            if (case_id == "all") return emit(run_cases(case_ids(), opts), format);
            if (!has_case(case_id)) {
                std::cerr << "unknown case " << case_id << "; known:";
                for (const auto& id : case_ids()) std::cerr << ' ' << id;
                std::cerr << '\n';
                return exit_error;
            }
            return emit({case_verify(case_id, opts)}, format);
        }
        if (*orb) return emit({orbit_case(orbit_id, q, k, census_cap)}, format);
        if (*self) return emit({grass_dim_crosscheck(), property_suite(seed, instances)}, format);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return exit_cap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}
