// ctidlab: exact verification of constant-term identities from the command
// line. Subcommands: verify (one case), ct (constant term of a matrix
// product), sweep (parameter grids, JSON-lines reports), sumset (restricted
// sumset enumeration and bound checks).

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ctidlab/identities.hpp"
#include "ctidlab/serialize.hpp"
#include "ctidlab/sumsets.hpp"

namespace {

using namespace ctidlab;

constexpr int kExitEqual = 0;
constexpr int kExitUnequal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

json read_json_arg(const std::string& arg) {
    if (arg == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return json::parse(ss.str());
    }
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw BadParams("cannot open file: " + arg);
    json j;
    in >> j;
    return j;
}

std::uint64_t default_max_terms() {
    if (const char* env = std::getenv("CTIDLAB_MAX_TERMS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed CTIDLAB_MAX_TERMS\n";
    }
    return Budget::kDefaultMaxTerms;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stoi(item));
    return v;
}

// ---- verify ----

struct VerifyOptions {
    std::string json_arg;
    std::string family;
    std::string a_list;
    int n = 0, n0 = 0, m = 0, b = 0, k = 0, r = 0, s = 0;
    std::string method = "both";
    std::uint64_t max_terms = 0;
    std::int64_t timeout_ms = 0;
};

IdentityCase case_from_options(const VerifyOptions& opt) {
    if (!opt.json_arg.empty()) return identity_case_from_json(read_json_arg(opt.json_arg));
    IdentityCase c;
    auto fam = family_from_name(opt.family);
    if (!fam) throw BadParams("unknown or missing family: " + opt.family);
    c.family = *fam;
    auto meth = method_from_name(opt.method);
    if (!meth) throw BadParams("unknown method: " + opt.method);
    c.method = *meth;
    if (has_vector_params(c.family)) {
        c.params.avec = parse_int_list(opt.a_list);
    } else {
        if (!opt.a_list.empty()) {
            std::vector<int> a = parse_int_list(opt.a_list);
            if (a.size() != 1) throw BadParams("family takes a scalar --a");
            c.params.a = a[0];
        }
        c.params.n = opt.n;
    }
    c.params.n0 = opt.n0;
    c.params.m = opt.m;
    c.params.b = opt.b;
    c.params.k = opt.k;
    c.params.r = opt.r;
    c.params.s = opt.s;
    validate_case(c);
    return c;
}

int run_verify(const VerifyOptions& opt) {
    IdentityCase c = case_from_options(opt);
    Budget budget(opt.max_terms ? opt.max_terms : default_max_terms());
    if (opt.timeout_ms > 0) budget.set_deadline_after_ms(opt.timeout_ms);
    VerifyReport rep = verify(c, budget);
    std::cout << to_json(rep).dump() << "\n";
    if (rep.status == "skipped") return kExitResource;
    return rep.equal ? kExitEqual : kExitUnequal;
}

// ---- ct ----

int run_ct(const std::string& matrix_arg, bool q_case, std::uint64_t max_terms) {
    ParamMatrix B = param_matrix_from_json(read_json_arg(matrix_arg));
    Budget budget(max_terms ? max_terms : default_max_terms());
    json out;
    if (q_case) {
        LaurentPoly<QPoly> L = q_laurent_from_matrix(B, budget);
        out["ct"] = to_json(L.constant_term());
    } else {
        LaurentPoly<BigRat> L = laurent_from_matrix(B, budget);
        out["ct"] = to_json(L.constant_term());
    }
    out["terms"] = budget.stats().peak_terms;
    std::cout << out.dump() << "\n";
    return kExitEqual;
}

// ---- sweep ----

struct SweepConfig {
    Family family = Family::dyson;
    Method method = Method::both;
    std::pair<int, int> n{1, 1}, a{0, 0}, b{0, 0}, k{0, 0}, n0{0, 0}, m{0, 0};
    std::pair<int, int> r{0, 0}, s{0, 0};
    std::uint64_t max_terms = 0;
    std::int64_t timeout_ms = 0;
    bool conjecture = false;
    unsigned jobs = 0;
    std::string output;
};

std::pair<int, int> parse_range(const json& j, std::pair<int, int> fallback) {
    if (j.is_number_integer()) {
        int v = j.get<int>();
        return {v, v};
    }
    if (j.is_array() && j.size() == 2) return {j[0].get<int>(), j[1].get<int>()};
    if (j.is_null()) return fallback;
    throw BadParams("range must be an integer or [lo, hi]");
}

SweepConfig sweep_config_from_json(const json& j) {
    SweepConfig cfg;
    auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) throw BadParams("unknown family in sweep config");
    cfg.family = *fam;
    if (j.contains("method")) {
        auto m = method_from_name(j.at("method").get<std::string>());
        if (!m) throw BadParams("unknown method in sweep config");
        cfg.method = *m;
    }
    auto range_of = [&](const char* key, std::pair<int, int> fb) {
        return j.contains(key) ? parse_range(j.at(key), fb) : fb;
    };
    cfg.n = range_of("n", {1, 2});
    cfg.a = range_of("a", {0, 1});
    cfg.b = range_of("b", {0, 1});
    cfg.k = range_of("k", {0, 1});
    cfg.n0 = range_of("n0", {0, 3});
    cfg.m = range_of("m", {0, 3});
    cfg.r = range_of("r", {0, 0});
    cfg.s = range_of("s", {0, 0});
    for (auto [lo, hi] : {cfg.n, cfg.a, cfg.b, cfg.k}) {
        if (lo > hi) throw BadParams("empty range in sweep config");
    }
    if (j.contains("max_terms")) cfg.max_terms = j.at("max_terms").get<std::uint64_t>();
    if (j.contains("timeout_ms")) cfg.timeout_ms = j.at("timeout_ms").get<std::int64_t>();
    if (j.contains("conjecture")) cfg.conjecture = j.at("conjecture").get<bool>();
    if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<unsigned>();
    if (j.contains("output")) cfg.output = j.at("output").get<std::string>();
    return cfg;
}

// Enumerates every valid case of the swept family in deterministic order.
std::vector<IdentityCase> enumerate_cases(const SweepConfig& cfg) {
    std::vector<IdentityCase> cases;
    auto try_add = [&](IdentityCase c) {
        try {
            validate_case(c);
        } catch (const BadParams&) {
            return;
        }
        if (outside_regime(c) && !cfg.conjecture) return;
        cases.push_back(std::move(c));
    };

    for (int n = cfg.n.first; n <= cfg.n.second; ++n) {
        if (n < 1) continue;
        if (has_vector_params(cfg.family)) {
            // every vector a in [a_lo, a_hi]^n, lexicographic
            std::vector<int> avec(n, cfg.a.first);
            for (;;) {
                for (int m = cfg.m.first; m <= std::min(cfg.m.second, n); ++m)
                    for (int r = cfg.r.first; r <= std::min(cfg.r.second, n); ++r)
                        for (int s = cfg.s.first; s <= std::min(cfg.s.second, n); ++s) {
                            IdentityCase c;
                            c.family = cfg.family;
                            c.method = cfg.method;
                            c.params.avec = avec;
                            c.params.m = m;
                            c.params.r = r;
                            c.params.s = s;
                            try_add(c);
                        }
                int i = n - 1;
                while (i >= 0 && avec[i] == cfg.a.second) avec[i--] = cfg.a.first;
                if (i < 0) break;
                ++avec[i];
            }
        } else {
            for (int n0 = cfg.n0.first; n0 <= std::min(cfg.n0.second, n); ++n0)
                for (int m = cfg.m.first; m <= std::min(cfg.m.second, n); ++m)
                    for (int a = cfg.a.first; a <= cfg.a.second; ++a)
                        for (int b = cfg.b.first; b <= cfg.b.second; ++b)
                            for (int k = cfg.k.first; k <= cfg.k.second; ++k) {
                                IdentityCase c;
                                c.family = cfg.family;
                                c.method = cfg.method;
                                c.params.n = n;
                                c.params.n0 = n0;
                                c.params.m = m;
                                c.params.a = a;
                                c.params.b = b;
                                c.params.k = k;
                                try_add(c);
                            }
        }
    }
    // families that take neither n0 nor m ranges produce duplicates when the
    // unused ranges are wider than a point; drop exact duplicates.
    std::vector<IdentityCase> unique;
    std::set<std::string> seen;
    for (auto& c : cases) {
        std::string key = to_json(c).dump();
        if (seen.insert(key).second) unique.push_back(std::move(c));
    }
    return unique;
}

int run_sweep(SweepConfig cfg) {
    std::vector<IdentityCase> cases = enumerate_cases(cfg);
    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!cfg.output.empty() && cfg.output != "-") {
        file_out.open(cfg.output);
        if (!file_out) throw BadParams("cannot open output file: " + cfg.output);
        out = &file_out;
    }

    unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, std::max<std::size_t>(1, cases.size()));

    std::vector<std::optional<VerifyReport>> results(cases.size());
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            Budget budget(cfg.max_terms ? cfg.max_terms : default_max_terms());
            if (cfg.timeout_ms > 0) budget.set_deadline_after_ms(cfg.timeout_ms);
            VerifyReport rep = verify(cases[i], budget);
            {
                std::lock_guard<std::mutex> lock(mu);
                results[i] = std::move(rep);
            }
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);

    // Emit reports in case order as soon as they complete, so long sweeps
    // stream deterministically.
    std::size_t equal = 0, unequal = 0, skipped = 0;
    std::size_t conj_equal = 0, conj_unequal = 0;
    {
        std::unique_lock<std::mutex> lock(mu);
        for (std::size_t i = 0; i < cases.size(); ++i) {
            cv.wait(lock, [&] { return results[i].has_value(); });
            const VerifyReport& rep = *results[i];
            (*out) << to_json(rep).dump() << "\n";
            out->flush();
            if (rep.status == "skipped")
                ++skipped;
            else if (rep.conjecture)
                ++(rep.equal ? conj_equal : conj_unequal);
            else
                ++(rep.equal ? equal : unequal);
        }
    }
    for (auto& t : pool) t.join();

    json summary{{"summary",
                  {{"total", cases.size()},
                   {"equal", equal},
                   {"unequal", unequal},
                   {"skipped", skipped},
                   {"conjecture_equal", conj_equal},
                   {"conjecture_unequal", conj_unequal}}}};
    (*out) << summary.dump() << "\n";
    return unequal == 0 ? kExitEqual : kExitUnequal;
}

// ---- sumset ----

int run_sumset(const std::string& instance_arg, bool with_bound, std::uint64_t max_terms) {
    SumsetInstance inst = sumset_instance_from_json(read_json_arg(instance_arg));
    Budget budget(max_terms ? max_terms : default_max_terms());
    std::set<long> sums = restricted_sumset(inst, budget);
    json out;
    out["size"] = sums.size();
    out["sumset"] = std::vector<long>(sums.begin(), sums.end());
    if (with_bound) out["bound_report"] = to_json(bound_check(inst, budget));
    std::cout << out.dump() << "\n";
    return kExitEqual;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constant-term identity laboratory"};
    app.require_subcommand(1);

    VerifyOptions vopt;
    CLI::App* verify_cmd = app.add_subcommand("verify", "verify a single identity case");
    verify_cmd->add_option("--json", vopt.json_arg, "case JSON (file, inline, or - for stdin)");
    verify_cmd->add_option("--family", vopt.family, "identity family name");
    verify_cmd->add_option("--a", vopt.a_list, "a parameter (comma list or scalar)");
    verify_cmd->add_option("--n", vopt.n, "number of variables");
    verify_cmd->add_option("--n0", vopt.n0, "n0 parameter");
    verify_cmd->add_option("--m", vopt.m, "m parameter");
    verify_cmd->add_option("--b", vopt.b, "b parameter");
    verify_cmd->add_option("--k", vopt.k, "k parameter");
    verify_cmd->add_option("--r", vopt.r, "r parameter");
    verify_cmd->add_option("--s", vopt.s, "s parameter");
    verify_cmd->add_option("--method", vopt.method, "brute | interp | both | rhs_only");
    verify_cmd->add_option("--max-terms", vopt.max_terms, "term budget");
    verify_cmd->add_option("--timeout-ms", vopt.timeout_ms, "wall-clock limit");

    std::string matrix_arg;
    bool q_flag = false;
    std::uint64_t ct_max_terms = 0;
    CLI::App* ct_cmd = app.add_subcommand("ct", "constant term of a matrix product");
    ct_cmd->add_option("--matrix", matrix_arg, "matrix JSON (file, inline, or -)")->required();
    ct_cmd->add_flag("--q", q_flag, "use the q-analogue product");
    ct_cmd->add_option("--max-terms", ct_max_terms, "term budget");

    std::string sweep_arg;
    bool sweep_conjecture = false;
    unsigned sweep_jobs = 0;
    std::string sweep_output;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "verify a parameter grid, JSON lines out");
    sweep_cmd->add_option("--json", sweep_arg, "sweep config JSON (file, inline, or -)")
        ->required();
    sweep_cmd->add_flag("--conjecture", sweep_conjecture,
                        "include outside-regime cases, reported separately");
    sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads");
    sweep_cmd->add_option("--output", sweep_output, "write reports to a file instead of stdout");

    std::string instance_arg;
    bool bound_flag = false;
    std::uint64_t sumset_max_terms = 0;
    CLI::App* sumset_cmd = app.add_subcommand("sumset", "restricted sumset enumeration");
    sumset_cmd->add_option("--instance", instance_arg, "instance JSON (file, inline, or -)")
        ->required();
    sumset_cmd->add_flag("--bound", bound_flag, "also check the size bound");
    sumset_cmd->add_option("--max-terms", sumset_max_terms, "enumeration budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify_cmd->parsed()) return run_verify(vopt);
        if (ct_cmd->parsed()) return run_ct(matrix_arg, q_flag, ct_max_terms);
        if (sweep_cmd->parsed()) {
            SweepConfig cfg = sweep_config_from_json(read_json_arg(sweep_arg));
            if (sweep_conjecture) cfg.conjecture = true;
            if (sweep_jobs) cfg.jobs = sweep_jobs;
            if (!sweep_output.empty()) cfg.output = sweep_output;
            return run_sweep(std::move(cfg));
        }
        if (sumset_cmd->parsed()) return run_sumset(instance_arg, bound_flag, sumset_max_terms);
    } catch (const BadParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SizeLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const Timeout& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnequal;
    }
    return kExitUsage;
}
