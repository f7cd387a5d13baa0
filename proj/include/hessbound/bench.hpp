#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hessbound/codelist.hpp"
#include "hessbound/costmodel.hpp"
#include "hessbound/interval.hpp"
#include "hessbound/spectral.hpp"

namespace hb {

// splitmix64; one independent stream per (case, trial) so parallel and
// serial runs produce identical trials
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::uint64_t fnv1a(const std::string& s);

struct FunctionCase {
    std::string name;
    int n = 0;
    Box domain;
    std::string expression;
};

enum class ClassLabel { Minus = 0, Circle = 1, Plus = 2, PlusPlus = 3 };
const char* class_symbol(ClassLabel c);  // "-", "o", "+", "++"

struct TrialRecord {
    std::string case_name;
    int trial = 0;
    Box box;
    bool feasible = false;
    SpectralBounds a, g, h;
    ClassLabel class_lo = ClassLabel::Circle;
    ClassLabel class_hi = ClassLabel::Circle;
};

struct Tally {
    std::string case_name;
    int n = 0;
    int feasible = 0;
    int infeasible = 0;
    int lower[4] = {0, 0, 0, 0};  // indexed by ClassLabel
    int upper[4] = {0, 0, 0, 0};
};

std::vector<Box> random_boxes(const Box& domain, int count, std::uint64_t seed);

// Table of classes rating the arithmetic bounds a against Gershgorin (g)
// and vertex enumeration (h); requires h within g up to tolerance.
std::pair<ClassLabel, ClassLabel> classify(const SpectralBounds& a,
                                           const SpectralBounds& g,
                                           const SpectralBounds& h);

struct BenchOptions {
    std::uint64_t seed = 0;
    int trials = 100;
    int jobs = 1;
    // pinned boxes per case name; cases present here skip random generation
    std::map<std::string, std::vector<Box>> fixed_boxes;
};

struct CaseResult {
    std::vector<TrialRecord> records;
    Tally tally;
    CountReport cost;
};

CaseResult run_case(const FunctionCase& fc, const BenchOptions& opt,
                    const CostTable& table);

struct DimRow {
    int n = 0;  // 0 for the overall row
    int cases = 0;
    double mean_pct[4] = {0, 0, 0, 0};  // class percentages, lower+upper pooled
    double mean_na_ng = 0, mean_dna_ng = 0;
    double std_na_ng = 0, std_dna_ng = 0;
};

struct RankedRow {
    int rank = 0;
    std::string name;
    int n = 0;
    int lower[4] = {0, 0, 0, 0};
    int upper[4] = {0, 0, 0, 0};
};

struct AggregateReport {
    std::vector<DimRow> by_dim;
    DimRow overall;
    std::vector<RankedRow> ranked;
};

AggregateReport aggregate(const std::vector<CaseResult>& results);

std::vector<FunctionCase> load_corpus(const std::string& path);
std::map<std::string, std::vector<Box>> load_boxes_file(const std::string& path);

void write_trials_csv(std::ostream& os, const std::vector<TrialRecord>& records);
void write_aggregate_csv(std::ostream& os, const AggregateReport& rep);
void write_aggregate_markdown(std::ostream& os, const AggregateReport& rep);

// Full corpus run honoring opt.jobs; record order is independent of the
// job count.
std::vector<CaseResult> run_corpus(const std::vector<FunctionCase>& corpus,
                                   const BenchOptions& opt, const CostTable& table);

}  // namespace hb
