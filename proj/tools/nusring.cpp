// nusring: classify finite rings and verify the NUS-nil clean theorems on a catalog.
//
//   nusring classify SPEC
//   nusring element SPEC ELEMENT
//   nusring verify (catalog | SPEC) (--all | --check ID ...)
//
// Exit codes: 0 success, 1 a check failed, 2 usage, parse or build error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nusring/analysis.hpp"
#include "nusring/errors.hpp"
#include "nusring/harness.hpp"
#include "nusring/predicates.hpp"
#include "nusring/report.hpp"
#include "nusring/ring_spec.hpp"

namespace {

using namespace nusring;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
    bool json = false;
    std::uint64_t max_order = 4096;
    unsigned parallel = 1;
    std::uint64_t seed = 1;
};

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

int cmd_classify(const std::string& text, const Options& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    const RingSpec spec = parse_spec(text);
    const RingHandle ring = build_ring(spec, Budget{opt.max_order});
    const auto profile = Profile::compute(ring);
    const RingClassReport classes = classify(*profile, opt.parallel);
    Report report = ring_report(print_spec(spec), *profile, &classes);
    report.timing_ms = elapsed_ms(t0);
    std::cout << (opt.json ? render_json(report) : render_text(report));
    return kOk;
}

int cmd_element(const std::string& text, const std::string& element, const Options& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    const RingSpec spec = parse_spec(text);
    const RingHandle ring = build_ring(spec, Budget{opt.max_order});
    const Ring& r = *ring;
    const Index a = r.encode(parse_element_form(element));
    const auto profile = Profile::compute(ring);
    const Profile& p = *profile;

    nlohmann::ordered_json j;
    j["spec"] = print_spec(spec);
    j["element"] = r.format(a);
    j["unit"] = p.is_unit(a);
    j["inverse"] = p.is_unit(a) ? nlohmann::ordered_json(r.format(p.inverse(a))) : nlohmann::ordered_json(nullptr);
    j["nilpotent"] = p.is_nilpotent(a);
    j["nilpotency_index"] = p.is_nilpotent(a) ? nlohmann::ordered_json(p.nilpotency_index(a)) : nlohmann::ordered_json(nullptr);
    j["idempotent"] = p.is_idempotent(a);
    j["square_idempotent"] = p.is_square_idempotent(a);
    j["jacobson"] = p.in_jacobson(a);
    j["central"] = p.is_central(a);
    if (const auto w = strongly_pi_regular_witness(r, a))
        j["pi_regular"] = {{"n", w->n}, {"r", r.format(w->r)}};
    else
        j["pi_regular"] = nullptr;
    j["decompositions"] = nlohmann::ordered_json::array();
    for (const DecompKind kind : {DecompKind::Clean, DecompKind::NilClean, DecompKind::SquareNilClean})
        for (const auto& w : decompositions(p, a, kind))
            j["decompositions"].push_back({{"kind", std::string(to_string(kind))},
                                           {"e", r.format(w.e)},
                                           {"rest", r.format(w.n)},
                                           {"commuting", w.commuting}});
    j["timing_ms"] = elapsed_ms(t0);

    if (opt.json) {
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    auto flag = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "ring     " << j["spec"].get<std::string>() << "\n";
    std::cout << "element  " << r.format(a) << "\n";
    std::cout << "unit     " << flag(p.is_unit(a));
    if (p.is_unit(a)) std::cout << "  (inverse " << r.format(p.inverse(a)) << ")";
    std::cout << "\nnilpotent " << flag(p.is_nilpotent(a));
    if (p.is_nilpotent(a)) std::cout << "  (index " << p.nilpotency_index(a) << ")";
    std::cout << "\nidempotent " << flag(p.is_idempotent(a)) << "\n";
    std::cout << "square-idempotent " << flag(p.is_square_idempotent(a)) << "\n";
    std::cout << "in J(R)   " << flag(p.in_jacobson(a)) << "\n";
    std::cout << "central   " << flag(p.is_central(a)) << "\n";
    if (!j["pi_regular"].is_null())
        std::cout << "pi-regular a^" << j["pi_regular"]["n"] << " = a^(n+1) r with r = "
                  << j["pi_regular"]["r"].get<std::string>() << "\n";
    std::cout << "\ndecompositions a = e + x\n";
    if (j["decompositions"].empty()) std::cout << "  none\n";
    for (const auto& d : j["decompositions"])
        std::cout << "  " << d["kind"].get<std::string>() << "  e=" << d["e"].get<std::string>()
                  << "  x=" << d["rest"].get<std::string>() << (d["commuting"].get<bool>() ? "  commuting" : "")
                  << "\n";
    return kOk;
}

int cmd_verify(const std::string& target, bool all, const std::vector<std::string>& ids, const Options& opt) {
    if (all == !ids.empty()) {
        std::cerr << "verify: give exactly one of --all or --check\n";
        return kUsage;
    }
    for (const auto& id : ids)
        if (find_check(id) == nullptr) {
            std::cerr << "verify: unknown check id " << id << "\n";
            return kUsage;
        }
    const std::vector<std::string> selection = all ? all_check_ids() : ids;
    SuiteConfig config;
    config.instance_budget = Budget{opt.max_order > UINT64_MAX / 4 ? UINT64_MAX : opt.max_order * 4};
    config.seed = opt.seed;
    config.parallel = opt.parallel;
    const Budget budget{opt.max_order};

    Report report;
    SuiteReport suite;
    if (target == "catalog") {
        const Catalog catalog = Catalog::default_catalog(budget, opt.seed);
        suite = run_suite(catalog, selection, config);
        report.spec = "catalog";
    } else {
        const RingSpec spec = parse_spec(target);
        const RingHandle ring = build_ring(spec, budget);
        suite = run_suite_on(spec, selection, config, budget);
        report = ring_report(print_spec(spec), *Profile::compute(ring));
    }
    attach_suite(report, suite);
    std::cout << (opt.json ? render_json(report) : render_text(report));
    return suite.ok() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-ring classifier and NUS-nil clean theorem checker"};
    app.require_subcommand(1);
    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", opt.json, "Machine-readable output");
        cmd->add_option("--max-order", opt.max_order, "Largest ring order to build")->check(CLI::PositiveNumber);
        cmd->add_option("--parallel", opt.parallel, "Worker threads")->check(CLI::Range(1u, 256u));
        cmd->add_option("--seed", opt.seed, "Seed for sampled axiom checks");
    };

    std::string spec, element, target;
    bool all = false;
    std::vector<std::string> ids;

    auto* classify_cmd = app.add_subcommand("classify", "Counts and ring-level predicates");
    classify_cmd->add_option("spec", spec, "Ring spec, e.g. M2(Z3)")->required();
    add_common(classify_cmd);

    auto* element_cmd = app.add_subcommand("element", "Properties and decompositions of one element");
    element_cmd->add_option("spec", spec, "Ring spec")->required();
    element_cmd->add_option("element", element, "Element, e.g. 3, (1,2) or [1,1,1,0]")->required();
    add_common(element_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run theorem checks");
    verify_cmd->add_option("target", target, "\"catalog\" or a ring spec")->required();
    verify_cmd->add_flag("--all", all, "Run every check");
    verify_cmd->add_option("--check", ids, "Check id (repeatable)");
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*classify_cmd) return cmd_classify(spec, opt);
        if (*element_cmd) return cmd_element(spec, element, opt);
        return cmd_verify(target, all, ids, opt);
    } catch (const nusring::InvariantViolation& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const nusring::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
