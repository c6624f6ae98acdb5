#pragma once

#include <optional>

#include "ffvc/shatter.hpp"

namespace ffvc {

// The three existential constants of the size hypotheses. Defaults of 1
// chart the empirical thresholds; sweeps may scan a grid of values.
struct BoundConstants {
    Rational c_d = 1;       // main and independent-star size hypothesis
    Rational c_k = 1;       // k-star size hypothesis
    Rational c_d_prime = 1; // bad-star upper-bound constant
};

// Every inequality the toolkit evaluates, as exact rationals. Comparisons
// with fractional exponents are raised to the exponent's denominator, so no
// flag ever touches floating point.
struct BoundSet {
    uint32_t q = 0, d = 0, k = 0;
    BigInt size;

    Rational main_exponent;       // d - 1/(d-1)
    bool main_size_met = false;   // |E| >= c_d q^(d - 1/(d-1))
    bool kstar_hyp_met = false;   // |E| >= c_k q^((d+1)/2)
    bool final_threshold_met = false; // |E| >= c_d q^(d - 1/2)

    Rational kstar_rhs;           // |E|^(k+1) / (2 q^k)
    Rational indep_rhs;           // |E|^(d+1) / (3 q^d)
    Rational badstar_rhs;         // c'_d |E|^k q^(d^2 - kd - d + k)
    Rational badstar_total_rhs;   // (d-1) c'_d |E|^(d-1) q^(d-1)
};

BoundSet evaluate_bounds(uint32_t q, uint32_t d, uint32_t k, uint64_t size,
                         const BoundConstants& constants = {});

enum class VcPolicy { none, exhaustive, star_guided };

struct SweepConfig {
    std::vector<uint32_t> qs;
    std::vector<uint32_t> ds;
    std::vector<uint32_t> ts;
    GenSpec::Kind gen = GenSpec::Kind::full;
    std::vector<uint64_t> sizes;     // random_exact
    std::vector<double> densities;   // random_density
    std::vector<uint64_t> seeds;     // seed indices; one implicit 0 for full
    uint64_t master_seed = 0;
    VcPolicy vc = VcPolicy::none;
    uint64_t budget = 1'000'000;
    bool stars = true;               // compute star counts per cell
    bool wall_timings = false;       // true breaks byte-identical reruns
    BoundConstants constants;

    // "key = value" lines, '#' comments, lists "1,2,3", ranges "0..9".
    static SweepConfig parse(const std::string& text);
};

// One sweep cell. Missing optionals print as empty CSV fields.
struct ExperimentRecord {
    uint32_t q = 0, d = 0, t = 0;
    std::string gen_digest;
    uint64_t size = 0;
    uint64_t seed = 0; // effective stream seed; regenerates E exactly
    std::optional<uint64_t> edges;
    std::optional<Rational> residual;
    std::optional<BigInt> n1, n2, n3, n_indep_d;
    std::string vc;      // "", "3", or "unresolved(>=k)"
    std::string vc_mode; // none | exhaustive | star_guided
    std::optional<bool> thm21_holds;
    std::optional<bool> l24_holds; // N_d >= |E|^(d+1)/(2 q^d)
    std::optional<bool> l25_holds; // indep d-stars >= |E|^(d+1)/(3 q^d)
    Rational l28_rhs;              // (d-1) c'_d |E|^(d-1) q^(d-1)
    uint64_t elapsed_ms = 0;
    std::string error; // cell-level failure, never aborts the sweep
};

std::vector<ExperimentRecord> run_sweep(const SweepConfig& cfg, int threads = 1);

extern const char* kSweepCsvHeader;
std::string records_to_csv(std::span<const ExperimentRecord> records);
std::string records_to_json(std::span<const ExperimentRecord> records);

enum class VerifyLevel { fast, full };

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
    uint64_t millis = 0;
};

struct VerifyReport {
    VerifyLevel level = VerifyLevel::fast;
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
};

// Packaged oracle-equivalence and inequality checks across all modules.
// Failures are report content, not errors.
VerifyReport verify_suite(VerifyLevel level, int threads = 1);

std::string report_to_json(const VerifyReport& report);
std::string report_to_text(const VerifyReport& report); // timing-free

} // namespace ffvc
