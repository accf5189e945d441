// Command-line front end: counting, enumeration, growth-diagram rendering,
// verification sweeps, symmetry demos, and the property self-test.

#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "lrcarton/json_io.hpp"
#include "lrcarton/render.hpp"
#include "lrcarton/verify.hpp"

using namespace lrcarton;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

Rectangle parse_rect(const std::string& s) {
    auto pos = s.find_first_of("xX");
    if (pos == std::string::npos)
        throw CLI::ValidationError("--rect", "expected LxK, e.g. 3x4");
    try {
        Rectangle rect{std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 1))};
        if (!rect.valid()) throw CLI::ValidationError("--rect", "sides must be positive");
        return rect;
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("--rect", "expected LxK, e.g. 3x4");
    }
}

// comma-separated parts; "0" or the empty string denote the empty partition
Partition parse_partition(const std::string& s) {
    if (s.empty() || s == "0") return Partition{};
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        parts.push_back(std::stoi(item));
    return Partition(std::move(parts));
}

// semicolon-separated partitions
ShapeChain parse_chain(const std::string& s) {
    std::vector<Partition> steps;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) steps.push_back(parse_partition(item));
    if (steps.empty()) steps.push_back(Partition{});
    return ShapeChain(std::move(steps));
}

struct InstanceArgs {
    std::string rect_s, lambda_s, mu_s, nu_s;

    void attach(CLI::App* cmd) {
        cmd->add_option("--rect", rect_s, "rectangle, LxK")->required();
        cmd->add_option("--lambda", lambda_s, "first shape, comma-separated parts")->required();
        cmd->add_option("--mu", mu_s, "second shape")->required();
        cmd->add_option("--nu", nu_s, "third shape")->required();
    }
    Rectangle rect() const { return parse_rect(rect_s); }
    Partition lambda() const { return parse_partition(lambda_s); }
    Partition mu() const { return parse_partition(mu_s); }
    Partition nu() const { return parse_partition(nu_s); }
};

std::vector<Carton> enumerate_parallel(const Rectangle& rect, const Partition& lambda,
                                       const Partition& mu, const Partition& nu, bool parallel) {
    StandardTableau tl = canonical_tableau(lambda);
    StandardTableau tm = canonical_tableau(mu);
    StandardTableau tn = canonical_tableau(nu);
    if (!parallel) return enumerate_cartons(rect, tl, tm, tn);

    auto init = carton_init(rect, tl, tm, tn);
    std::vector<Carton> out;
    if (!init) return out;
    std::vector<std::future<Carton>> jobs;
    for (const Witness& w : find_witnesses(*init))
        jobs.push_back(std::async(std::launch::async,
                                  [&init, w] { return extend_witness(*init, w); }));
    for (auto& job : jobs) out.push_back(job.get());  // canonical order preserved
    return out;
}

int cmd_count(const InstanceArgs& args, bool verbose) {
    Rectangle rect = args.rect();
    Partition lambda = args.lambda(), mu = args.mu(), nu = args.nu();
    long long count = carton_count(rect, lambda, mu, nu);
    std::cout << count << "\n";
    if (verbose) {
        Partition nu_vee = complement(nu, rect);
        long long ballot = contains(lambda, nu_vee) ? lr_ballot_count(lambda, mu, nu_vee) : 0;
        std::cout << "ballot: " << ballot << "\n";
        std::cout << "rectification: " << lr_via_rectification(rect, lambda, mu, nu) << "\n";
    }
    return 0;
}

int cmd_enumerate(const InstanceArgs& args, const std::string& format, bool parallel) {
    Rectangle rect = args.rect();
    auto cartons = enumerate_parallel(rect, args.lambda(), args.mu(), args.nu(), parallel);
    if (format == "json") {
        for (const Carton& carton : cartons) std::cout << carton_to_json(carton).dump() << "\n";
        std::cout << nlohmann::json{{"count", cartons.size()}}.dump() << "\n";
    } else {
        for (size_t i = 0; i < cartons.size(); ++i) {
            std::cout << "carton " << i + 1 << ":\n";
            std::cout << render_carton_text(cartons[i]);
        }
        std::cout << "count: " << cartons.size() << "\n";
    }
    return 0;
}

int cmd_growth(const std::string& left_s, const std::string& top_s) {
    ShapeChain left = parse_chain(left_s);
    ShapeChain top = parse_chain(top_s);
    GrowthGrid grid = grow_rectangle(left, top);
    std::cout << render_grid(grid);
    return 0;
}

int cmd_verify(const std::string& rect_s, int max_size, bool parallel) {
    Rectangle rect = parse_rect(rect_s);
    int threads = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    bool ok = true;

    auto results = verify::oracle_sweep(rect, max_size, threads);
    long long shown = 0, mismatched = 0;
    for (const auto& r : results) {
        if (r.carton == 0 && r.ok()) continue;
        ++shown;
        if (!r.ok()) ++mismatched;
        std::cout << (r.ok() ? "ok   " : "FAIL ") << r.lambda.str() << " " << r.mu.str() << " "
                  << r.nu.str() << "  carton=" << r.carton << " ballot=" << r.ballot
                  << " rectification=" << r.rectification << "\n";
    }
    std::cout << "oracle sweep: " << results.size() << " triples, " << shown << " nonzero, "
              << mismatched << " mismatched\n";
    ok = ok && mismatched == 0;

    bool s3 = verify::s3_count_sweep(rect, std::cout);
    std::cout << "s3 count invariance: " << (s3 ? "ok" : "FAIL") << "\n";
    ok = ok && s3;

    bool bij = verify::s3_bijection_sweep(rect, std::cout);
    std::cout << "s3 carton bijections: " << (bij ? "ok" : "FAIL") << "\n";
    ok = ok && bij;

    bool gen = verify::generic_agreement_sweep(rect, std::cout);
    std::cout << "generic enumerator agreement: " << (gen ? "ok" : "FAIL") << "\n";
    ok = ok && gen;

    std::cout << (ok ? "verify: all checks passed" : "verify: FAILURES") << "\n";
    return ok ? 0 : kExitVerification;
}

int cmd_symmetry(const InstanceArgs& args, const std::string& sigma_s) {
    Rectangle rect = args.rect();
    std::array<Partition, 3> roles = {args.lambda(), args.mu(), args.nu()};

    // --sigma names the permuted triple in terms of the original roles,
    // e.g. "mu,lambda,nu" swaps the first two
    RolePerm perm{};
    {
        std::stringstream ss(sigma_s);
        std::string item;
        int slot = 0;
        while (std::getline(ss, item, ',') && slot < 3) {
            if (item == "lambda") perm[slot] = 0;
            else if (item == "mu") perm[slot] = 1;
            else if (item == "nu") perm[slot] = 2;
            else throw CLI::ValidationError("--sigma", "expected names lambda, mu, nu");
            ++slot;
        }
        if (slot != 3) throw CLI::ValidationError("--sigma", "expected three names");
        RolePerm sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != RolePerm{0, 1, 2})
            throw CLI::ValidationError("--sigma", "each role must appear exactly once");
    }

    auto source = enumerate_cartons(rect, roles[0], roles[1], roles[2]);
    auto target = enumerate_cartons(rect, roles[perm[0]], roles[perm[1]], roles[perm[2]]);
    std::cout << "source cartons: " << source.size() << ", target cartons: " << target.size()
              << "\n";
    bool ok = source.size() == target.size();
    std::vector<bool> used(target.size(), false);
    for (size_t i = 0; i < source.size(); ++i) {
        Carton image = permute_carton(source[i], perm);
        auto report = validate_carton(image);
        if (!report.ok) {
            std::cout << "carton " << i + 1 << ": image INVALID (" << report.violation << ")\n";
            ok = false;
            continue;
        }
        bool matched = false;
        for (size_t j = 0; j < target.size(); ++j) {
            if (!used[j] && target[j] == image) {
                used[j] = true;
                std::cout << "carton " << i + 1 << " -> carton " << j + 1 << "\n";
                matched = true;
                break;
            }
        }
        if (!matched) {
            std::cout << "carton " << i + 1 << " -> no match in target enumeration\n";
            ok = false;
        }
    }
    std::cout << (ok ? "symmetry: bijection verified" : "symmetry: FAILURES") << "\n";
    return ok ? 0 : kExitVerification;
}

int cmd_selftest(std::uint64_t seed) {
    return verify::run_selftest(seed, std::cout) ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"carton enumeration of Littlewood-Richardson coefficients"};
    app.require_subcommand(1);

    InstanceArgs count_args, enum_args, sym_args;
    bool verbose = false;
    auto* count = app.add_subcommand("count", "number of carton fillings");
    count_args.attach(count);
    count->add_flag("-v,--verbose", verbose, "print the oracle values alongside");

    std::string format = "text";
    bool parallel = false;
    auto* enumerate = app.add_subcommand("enumerate", "list every carton filling");
    enum_args.attach(enumerate);
    enumerate->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    enumerate->add_flag("--parallel", parallel, "extend witnesses concurrently");

    std::string left_s, top_s;
    auto* growth = app.add_subcommand("growth", "render a growth diagram from two chains");
    growth->add_option("--left", left_s, "left chain, e.g. \"0;1;2;3;3,1\"")->required();
    growth->add_option("--top", top_s, "top chain, starting where --left ends")->required();

    std::string verify_rect;
    int max_size = -1;
    bool verify_parallel = false;
    auto* verify_cmd = app.add_subcommand("verify", "cross-check every triple in a rectangle");
    verify_cmd->add_option("--rect", verify_rect, "rectangle, LxK")->required();
    verify_cmd->add_option("--max-size", max_size, "cap each shape's cell count");
    verify_cmd->add_flag("--parallel", verify_parallel, "distribute triples across threads");

    std::string sigma_s;
    auto* symmetry = app.add_subcommand("symmetry", "demonstrate a role-permutation bijection");
    sym_args.attach(symmetry);
    symmetry->add_option("--sigma", sigma_s, "permuted role order, e.g. mu,lambda,nu")
        ->required();

    std::uint64_t seed = std::random_device{}();
    auto* selftest = app.add_subcommand("selftest", "run the property suites");
    selftest->add_option("--seed", seed, "seed for the randomized suites");

    try {
        app.parse(argc, argv);
        if (count->parsed()) return cmd_count(count_args, verbose);
        if (enumerate->parsed()) return cmd_enumerate(enum_args, format, parallel);
        if (growth->parsed()) return cmd_growth(left_s, top_s);
        if (verify_cmd->parsed()) return cmd_verify(verify_rect, max_size, verify_parallel);
        if (symmetry->parsed()) return cmd_symmetry(sym_args, sigma_s);
        if (selftest->parsed()) return cmd_selftest(seed);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
