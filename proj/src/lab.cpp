#include "ffvc/lab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "ffvc/parallel.hpp"
#include "ffvc/rng.hpp"

namespace ffvc {

using nlohmann::json;

BoundSet evaluate_bounds(uint32_t q, uint32_t d, uint32_t k, uint64_t size,
                         const BoundConstants& constants) {
    if (d < 2)
        throw ValidationError("bound evaluation requires d >= 2");
    if (k < 1 || k > d)
        throw ValidationError("bound evaluation requires 1 <= k <= d");
    if (constants.c_d <= 0 || constants.c_k <= 0 || constants.c_d_prime <= 0)
        throw ValidationError("bound constants must be positive");

    BoundSet b;
    b.q = q;
    b.d = d;
    b.k = k;
    b.size = size;
    BigInt s(size), Q(q);

    b.main_exponent = Rational(BigInt(d) * (d - 1) - 1, d - 1);

    BigInt cd_num = boost::multiprecision::numerator(constants.c_d);
    BigInt cd_den = boost::multiprecision::denominator(constants.c_d);
    BigInt ck_num = boost::multiprecision::numerator(constants.c_k);
    BigInt ck_den = boost::multiprecision::denominator(constants.c_k);

    // |E| >= c_d q^(d - 1/(d-1)), raised to the (d-1)-th power.
    b.main_size_met = bpow(s, d - 1) * bpow(cd_den, d - 1) >=
                      bpow(cd_num, d - 1) * bpow(Q, d * (d - 1) - 1);
    // |E| >= c_k q^((d+1)/2), squared.
    b.kstar_hyp_met = s * s * ck_den * ck_den >= ck_num * ck_num * bpow(Q, d + 1);
    // |E| >= c_d q^(d - 1/2), squared.
    b.final_threshold_met = s * s * cd_den * cd_den >= cd_num * cd_num * bpow(Q, 2 * d - 1);

    b.kstar_rhs = Rational(bpow(s, k + 1), 2 * bpow(Q, k));
    b.indep_rhs = Rational(bpow(s, d + 1), 3 * bpow(Q, d));
    b.badstar_rhs =
        constants.c_d_prime * Rational(bpow(s, k) * bpow(Q, d * d - k * d - d + k));
    b.badstar_total_rhs =
        Rational(d - 1) * constants.c_d_prime * Rational(bpow(s, d - 1) * bpow(Q, d - 1));
    return b;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

uint64_t parse_u64(const std::string& s, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(std::string("bad ") + what + " value '" + s + "'");
    return std::stoull(s);
}

std::vector<uint64_t> parse_u64_list(const std::string& value, const char* what) {
    std::vector<uint64_t> out;
    for (const std::string& raw : split(value, ',')) {
        std::string tok = trim(raw);
        auto dots = tok.find("..");
        if (dots != std::string::npos) {
            uint64_t lo = parse_u64(trim(tok.substr(0, dots)), what);
            uint64_t hi = parse_u64(trim(tok.substr(dots + 2)), what);
            if (hi < lo) throw ParseError(std::string("empty range in ") + what);
            for (uint64_t v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(parse_u64(tok, what));
        }
    }
    return out;
}

} // namespace

SweepConfig SweepConfig::parse(const std::string& text) {
    SweepConfig cfg;
    bool seeds_given = false;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) +
                             " is not 'key = value': '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "qs") {
            for (uint64_t v : parse_u64_list(value, "qs"))
                cfg.qs.push_back(static_cast<uint32_t>(v));
        } else if (key == "ds") {
            for (uint64_t v : parse_u64_list(value, "ds"))
                cfg.ds.push_back(static_cast<uint32_t>(v));
        } else if (key == "ts") {
            for (uint64_t v : parse_u64_list(value, "ts"))
                cfg.ts.push_back(static_cast<uint32_t>(v));
        } else if (key == "gen") {
            if (value == "full") cfg.gen = GenSpec::Kind::full;
            else if (value == "random_exact") cfg.gen = GenSpec::Kind::random_exact;
            else if (value == "random_density") cfg.gen = GenSpec::Kind::random_density;
            else throw ParseError("unknown generator '" + value + "' (sweeps support full, random_exact, random_density)");
        } else if (key == "sizes") {
            cfg.sizes = parse_u64_list(value, "sizes");
        } else if (key == "densities") {
            for (const std::string& tok : split(value, ','))
                cfg.densities.push_back(std::stod(trim(tok)));
        } else if (key == "seeds") {
            cfg.seeds = parse_u64_list(value, "seeds");
            seeds_given = true;
        } else if (key == "master_seed") {
            cfg.master_seed = parse_u64(value, "master_seed");
        } else if (key == "vc") {
            if (value == "none") cfg.vc = VcPolicy::none;
            else if (value == "exhaustive") cfg.vc = VcPolicy::exhaustive;
            else if (value == "star_guided") cfg.vc = VcPolicy::star_guided;
            else throw ParseError("unknown vc policy '" + value + "'");
        } else if (key == "budget") {
            cfg.budget = parse_u64(value, "budget");
        } else if (key == "stars") {
            if (value == "on") cfg.stars = true;
            else if (value == "off") cfg.stars = false;
            else throw ParseError("stars must be on or off");
        } else if (key == "timings") {
            if (value == "none") cfg.wall_timings = false;
            else if (value == "wall") cfg.wall_timings = true;
            else throw ParseError("timings must be none or wall");
        } else if (key == "cd") {
            cfg.constants.c_d = parse_rational(value);
        } else if (key == "ck") {
            cfg.constants.c_k = parse_rational(value);
        } else if (key == "cdp") {
            cfg.constants.c_d_prime = parse_rational(value);
        } else {
            throw ParseError("unknown config key '" + key + "'");
        }
    }
    for (uint32_t q : cfg.qs) make_field(q); // rejects non-primes up front
    for (uint32_t d : cfg.ds)
        if (d < 2) throw ParseError("sweep dimensions must satisfy d >= 2");
    for (uint32_t t : cfg.ts)
        if (t == 0) throw ParseError("sweep t values must be nonzero");
    bool needs_param = cfg.gen == GenSpec::Kind::random_exact ||
                       cfg.gen == GenSpec::Kind::random_density;
    if (cfg.gen == GenSpec::Kind::random_exact && cfg.sizes.empty())
        throw ParseError("random_exact sweeps need sizes = ...");
    if (cfg.gen == GenSpec::Kind::random_density && cfg.densities.empty())
        throw ParseError("random_density sweeps need densities = ...");
    if (!needs_param && !seeds_given)
        cfg.seeds = {0};
    if (cfg.seeds.empty()) cfg.seeds = {0};
    return cfg;
}

namespace {

struct CellParams {
    uint32_t q, d, t;
    GenSpec::Kind gen;
    uint64_t size = 0;
    double density = 0.0;
    uint64_t seed_index = 0;
};

std::string cell_key(const CellParams& p, const std::string& digest) {
    std::string key = "q=" + std::to_string(p.q) + "|d=" + std::to_string(p.d) +
                      "|t=" + std::to_string(p.t) + "|gen=" + digest;
    key += "|seed=" + std::to_string(p.seed_index);
    return key;
}

ExperimentRecord run_cell(const CellParams& p, const SweepConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentRecord rec;
    rec.q = p.q;
    rec.d = p.d;
    rec.t = p.t;
    rec.vc_mode = "none";
    try {
        FieldSpec field = make_field(p.q);
        GenSpec spec;
        switch (p.gen) {
            case GenSpec::Kind::full: spec = GenSpec::full(); break;
            case GenSpec::Kind::random_exact:
                spec = GenSpec::random_exact(p.size, 0);
                break;
            case GenSpec::Kind::random_density:
                spec = GenSpec::random_density(p.density, 0);
                break;
            default:
                throw ValidationError("generator not supported in sweeps");
        }
        rec.gen_digest = spec.digest(); // seed-free by construction
        rec.seed = derive_seed(cfg.master_seed, cell_key(p, rec.gen_digest));
        spec.seed = rec.seed;
        if (p.t >= p.q)
            throw ValidationError("t=" + std::to_string(p.t) +
                                  " is not a canonical nonzero element of F_" +
                                  std::to_string(p.q));
        FieldElement t(p.t, field);

        PointSet e = generate(spec, field, p.d);
        rec.size = e.size();

        if (e.empty()) {
            rec.edges = 0;
            rec.residual = Rational(0);
            rec.thm21_holds = true;
        } else {
            IncidenceSummary inc = residual_check(e, t);
            rec.edges = inc.edge_count;
            rec.residual = inc.residual;
            rec.thm21_holds = inc.bound_holds;
        }

        BoundSet bounds = evaluate_bounds(p.q, p.d, std::min<uint32_t>(p.d, 3), e.size(),
                                          cfg.constants);
        rec.l28_rhs = bounds.badstar_total_rhs;

        if (cfg.stars) {
            BigInt n_d;
            for (uint32_t k = 1; k <= p.d; ++k) {
                if (k > 3 && k < p.d) continue; // only n1..n3 and the d-star count
                BigInt v = e.empty() ? BigInt(0) : count_kstars(e, t, k);
                if (k == 1) rec.n1 = v;
                if (k == 2) rec.n2 = v;
                if (k == 3) rec.n3 = v;
                if (k == p.d) n_d = v;
            }
            rec.n_indep_d = e.empty() ? BigInt(0) : count_indep_dstars(e, t);
            // Both star lower bounds are evaluated at k = d, the case the
            // shattering argument consumes.
            Rational dstar_rhs(bpow(BigInt(e.size()), p.d + 1), 2 * bpow(BigInt(p.q), p.d));
            rec.l24_holds = Rational(n_d) >= dstar_rhs;
            rec.l25_holds = Rational(*rec.n_indep_d) >= bounds.indep_rhs;
        }

        if (cfg.vc != VcPolicy::none && !e.empty()) {
            VcMode mode = cfg.vc == VcPolicy::exhaustive ? VcMode::exhaustive
                                                         : VcMode::star_guided;
            rec.vc_mode = cfg.vc == VcPolicy::exhaustive ? "exhaustive" : "star_guided";
            try {
                VcResult v = vc_dimension(e, t, mode, cfg.budget, rec.seed);
                rec.vc = v.resolved ? std::to_string(v.dimension)
                                    : "unresolved(>=" + std::to_string(v.dimension) + ")";
            } catch (const BudgetError&) {
                rec.vc = "unresolved(>=0)";
            }
        }
    } catch (const BudgetError& err) {
        rec.error = err.what();
    } catch (const ValidationError& err) {
        rec.error = err.what();
    }
    if (cfg.wall_timings) {
        auto t1 = std::chrono::steady_clock::now();
        rec.elapsed_ms = static_cast<uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    }
    return rec;
}

} // namespace

std::vector<ExperimentRecord> run_sweep(const SweepConfig& cfg, int threads) {
    std::vector<CellParams> cells;
    for (uint32_t q : cfg.qs)
        for (uint32_t d : cfg.ds)
            for (uint32_t t : cfg.ts) {
                auto add_seeded = [&](CellParams base) {
                    for (uint64_t s : cfg.seeds) {
                        base.seed_index = s;
                        cells.push_back(base);
                    }
                };
                if (cfg.gen == GenSpec::Kind::full) {
                    add_seeded(CellParams{q, d, t, cfg.gen, 0, 0.0, 0});
                } else if (cfg.gen == GenSpec::Kind::random_exact) {
                    for (uint64_t size : cfg.sizes)
                        add_seeded(CellParams{q, d, t, cfg.gen, size, 0.0, 0});
                } else {
                    for (double density : cfg.densities)
                        add_seeded(CellParams{q, d, t, cfg.gen, 0, density, 0});
                }
            }

    std::vector<ExperimentRecord> records(cells.size());
    threads = resolve_threads(threads);
    if (threads <= 1 || cells.size() < 2) {
        for (size_t i = 0; i < cells.size(); ++i) records[i] = run_cell(cells[i], cfg);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> workers;
        for (int w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (size_t i = next.fetch_add(1); i < cells.size();
                         i = next.fetch_add(1))
                        records[i] = run_cell(cells[i], cfg);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : workers) th.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    std::stable_sort(records.begin(), records.end(),
                     [](const ExperimentRecord& a, const ExperimentRecord& b) {
                         return std::tie(a.q, a.d, a.size, a.seed, a.t, a.gen_digest) <
                                std::tie(b.q, b.d, b.size, b.seed, b.t, b.gen_digest);
                     });
    return records;
}

const char* kSweepCsvHeader =
    "q,d,t,gen,size,seed,edges,residual_num,residual_den,n1,n2,n3,n_indep_d,vc,vc_mode,"
    "thm21_holds,l24_holds,l25_holds,l28_rhs,elapsed_ms";

namespace {

std::string opt_count(const std::optional<BigInt>& v) {
    return v ? v->str() : std::string();
}

std::string opt_flag(const std::optional<bool>& v) {
    return v ? (*v ? "1" : "0") : std::string();
}

} // namespace

std::string records_to_csv(std::span<const ExperimentRecord> records) {
    std::string out = kSweepCsvHeader;
    out += '\n';
    for (const auto& r : records) {
        out += std::to_string(r.q) + ',' + std::to_string(r.d) + ',' + std::to_string(r.t) +
               ',' + r.gen_digest + ',' + std::to_string(r.size) + ',' +
               std::to_string(r.seed) + ',';
        out += (r.edges ? std::to_string(*r.edges) : std::string()) + ',';
        out += (r.residual ? rational_num_string(*r.residual) : std::string()) + ',';
        out += (r.residual ? rational_den_string(*r.residual) : std::string()) + ',';
        out += opt_count(r.n1) + ',' + opt_count(r.n2) + ',' + opt_count(r.n3) + ',' +
               opt_count(r.n_indep_d) + ',';
        out += r.vc + ',' + r.vc_mode + ',';
        out += opt_flag(r.thm21_holds) + ',' + opt_flag(r.l24_holds) + ',' +
               opt_flag(r.l25_holds) + ',';
        out += rational_to_string(r.l28_rhs) + ',' + std::to_string(r.elapsed_ms);
        out += '\n';
    }
    return out;
}

std::string records_to_json(std::span<const ExperimentRecord> records) {
    json arr = json::array();
    for (const auto& r : records) {
        json j;
        j["q"] = r.q;
        j["d"] = r.d;
        j["t"] = r.t;
        j["gen"] = r.gen_digest;
        j["size"] = r.size;
        j["seed"] = r.seed;
        j["edges"] = r.edges ? json(*r.edges) : json(nullptr);
        j["residual_num"] = r.residual ? json(rational_num_string(*r.residual)) : json(nullptr);
        j["residual_den"] = r.residual ? json(rational_den_string(*r.residual)) : json(nullptr);
        j["n1"] = r.n1 ? json(r.n1->str()) : json(nullptr);
        j["n2"] = r.n2 ? json(r.n2->str()) : json(nullptr);
        j["n3"] = r.n3 ? json(r.n3->str()) : json(nullptr);
        j["n_indep_d"] = r.n_indep_d ? json(r.n_indep_d->str()) : json(nullptr);
        j["vc"] = r.vc;
        j["vc_mode"] = r.vc_mode;
        j["thm21_holds"] = r.thm21_holds ? json(*r.thm21_holds) : json(nullptr);
        j["l24_holds"] = r.l24_holds ? json(*r.l24_holds) : json(nullptr);
        j["l25_holds"] = r.l25_holds ? json(*r.l25_holds) : json(nullptr);
        j["l28_rhs"] = rational_to_string(r.l28_rhs);
        j["elapsed_ms"] = r.elapsed_ms;
        if (!r.error.empty()) j["error"] = r.error;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

bool VerifyReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::string report_to_json(const VerifyReport& report) {
    json j;
    j["level"] = report.level == VerifyLevel::fast ? "fast" : "full";
    j["all_passed"] = report.all_passed();
    json arr = json::array();
    for (const auto& c : report.checks) {
        json item;
        item["name"] = c.name;
        item["passed"] = c.passed;
        item["detail"] = c.detail;
        item["millis"] = c.millis;
        arr.push_back(std::move(item));
    }
    j["checks"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string report_to_text(const VerifyReport& report) {
    std::string out;
    for (const auto& c : report.checks) {
        out += c.passed ? "PASS " : "FAIL ";
        out += c.name;
        if (!c.passed && !c.detail.empty()) out += "  [" + c.detail + "]";
        out += '\n';
    }
    out += report.all_passed() ? "all checks passed\n" : "CHECKS FAILED\n";
    return out;
}

} // namespace ffvc
