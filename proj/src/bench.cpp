#include "hessbound/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "hessbound/propagate.hpp"
#include "json.hpp"

namespace hb {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

const char* class_symbol(ClassLabel c) {
    switch (c) {
        case ClassLabel::Minus: return "-";
        case ClassLabel::Circle: return "o";
        case ClassLabel::Plus: return "+";
        case ClassLabel::PlusPlus: return "++";
    }
    return "?";
}

namespace {

constexpr double kClassifyTol = 1e-12;

bool approx_eq(double a, double b) {
    return std::fabs(a - b) <=
           kClassifyTol * std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b)));
}

Box draw_box(const Box& domain, SplitMix64& rng) {
    Box b;
    b.dims.reserve(domain.size());
    for (const Interval& d : domain.dims) {
        const double u1 = d.lo + rng.uniform() * d.width();
        const double u2 = d.lo + rng.uniform() * d.width();
        b.dims.emplace_back(std::fmin(u1, u2), std::fmax(u1, u2));
    }
    return b;
}

std::uint64_t trial_seed(std::uint64_t seed, const std::string& case_name, int trial) {
    return seed ^ fnv1a(case_name) ^
           (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1));
}

}  // namespace

std::vector<Box> random_boxes(const Box& domain, int count, std::uint64_t seed) {
    std::vector<Box> boxes;
    boxes.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        SplitMix64 rng(trial_seed(seed, "", t));
        boxes.push_back(draw_box(domain, rng));
    }
    return boxes;
}

std::pair<ClassLabel, ClassLabel> classify(const SpectralBounds& a,
                                           const SpectralBounds& g,
                                           const SpectralBounds& h) {
    if (g.lo > h.lo && !approx_eq(g.lo, h.lo))
        throw std::invalid_argument("vertex bounds escape Gershgorin (lower)");
    if (h.hi > g.hi && !approx_eq(g.hi, h.hi))
        throw std::invalid_argument("vertex bounds escape Gershgorin (upper)");

    ClassLabel lo;
    if (approx_eq(a.lo, g.lo)) lo = ClassLabel::Circle;
    else if (a.lo < g.lo) lo = ClassLabel::Minus;
    else if (a.lo < h.lo || approx_eq(a.lo, h.lo)) lo = ClassLabel::Plus;
    else lo = ClassLabel::PlusPlus;

    ClassLabel hi;
    if (approx_eq(a.hi, g.hi)) hi = ClassLabel::Circle;
    else if (a.hi > g.hi) hi = ClassLabel::Minus;
    else if (a.hi > h.hi || approx_eq(a.hi, h.hi)) hi = ClassLabel::Plus;
    else hi = ClassLabel::PlusPlus;
    return {lo, hi};
}

CaseResult run_case(const FunctionCase& fc, const BenchOptions& opt,
                    const CostTable& table) {
    const Codelist cl = Codelist::parse(fc.expression, fc.n);

    const auto pinned = opt.fixed_boxes.find(fc.name);
    const bool has_pinned = pinned != opt.fixed_boxes.end();
    const int trials =
        has_pinned ? static_cast<int>(pinned->second.size()) : opt.trials;

    CaseResult res;
    res.tally.case_name = fc.name;
    res.tally.n = fc.n;
    res.cost = count(cl, table);
    res.records.reserve(static_cast<std::size_t>(trials));

    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng(trial_seed(opt.seed, fc.name, t));
        TrialRecord rec;
        rec.case_name = fc.name;
        rec.trial = t;
        const int attempts = has_pinned ? 1 : 10;
        for (int attempt = 0; attempt < attempts && !rec.feasible; ++attempt) {
            rec.box = has_pinned ? pinned->second[static_cast<std::size_t>(t)]
                                 : draw_box(fc.domain, rng);
            try {
                const EvalTrace trace = propagate(cl, rec.box, {Mode::Both});
                rec.a = {trace.eig.lo, trace.eig.hi};
                const SpectralBounds g = gershgorin(trace.hessian);
                const HertzResult h = hertz_rohn(trace.hessian);
                rec.g = g;
                rec.h = {h.lo, h.hi};
                rec.feasible = true;
            } catch (const DomainViolation&) {
                // box leaves the function's domain; redraw
            }
        }
        if (rec.feasible) {
            std::tie(rec.class_lo, rec.class_hi) = classify(rec.a, rec.g, rec.h);
            ++res.tally.feasible;
            ++res.tally.lower[static_cast<int>(rec.class_lo)];
            ++res.tally.upper[static_cast<int>(rec.class_hi)];
        } else {
            ++res.tally.infeasible;
        }
        res.records.push_back(std::move(rec));
    }
    return res;
}

std::vector<CaseResult> run_corpus(const std::vector<FunctionCase>& corpus,
                                   const BenchOptions& opt, const CostTable& table) {
    std::vector<CaseResult> results(corpus.size());
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || corpus.size() <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i)
            results[i] = run_case(corpus[i], opt, table);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) {
        pool.emplace_back([&, j] {
            try {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= corpus.size()) break;
                    results[i] = run_case(corpus[i], opt, table);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(j)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

AggregateReport aggregate(const std::vector<CaseResult>& results) {
    AggregateReport rep;

    std::map<int, std::vector<const CaseResult*>> by_dim;
    for (const CaseResult& r : results) by_dim[r.tally.n].push_back(&r);

    const auto make_row = [](int n, const std::vector<const CaseResult*>& cases) {
        DimRow row;
        row.n = n;
        row.cases = static_cast<int>(cases.size());
        int rated = 0;
        double ratio_a[2] = {0, 0};   // sum, sum of squares of N_A/N_G (%)
        double ratio_d[2] = {0, 0};
        for (const CaseResult* r : cases) {
            if (r->tally.feasible > 0) {
                ++rated;
                const double denom = 2.0 * r->tally.feasible;
                for (int c = 0; c < 4; ++c)
                    row.mean_pct[c] +=
                        100.0 * (r->tally.lower[c] + r->tally.upper[c]) / denom;
            }
            const double ra =
                100.0 * static_cast<double>(r->cost.n_a) / static_cast<double>(r->cost.n_g);
            const double rd = 100.0 * static_cast<double>(r->cost.delta_a) /
                              static_cast<double>(r->cost.n_g);
            ratio_a[0] += ra;
            ratio_a[1] += ra * ra;
            ratio_d[0] += rd;
            ratio_d[1] += rd * rd;
        }
        if (rated > 0)
            for (double& p : row.mean_pct) p /= rated;
        const double m = static_cast<double>(cases.size());
        row.mean_na_ng = ratio_a[0] / m;
        row.mean_dna_ng = ratio_d[0] / m;
        row.std_na_ng = std::sqrt(std::fmax(0.0, ratio_a[1] / m - row.mean_na_ng * row.mean_na_ng));
        row.std_dna_ng = std::sqrt(std::fmax(0.0, ratio_d[1] / m - row.mean_dna_ng * row.mean_dna_ng));
        return row;
    };

    for (const auto& [n, cases] : by_dim) rep.by_dim.push_back(make_row(n, cases));
    std::vector<const CaseResult*> all;
    for (const CaseResult& r : results) all.push_back(&r);
    if (!all.empty()) rep.overall = make_row(0, all);

    // rank by pooled (++), then (+), then (o), then (-) counts; name breaks ties
    std::vector<const CaseResult*> order = all;
    const auto pooled = [](const CaseResult* r, int c) {
        return r->tally.lower[c] + r->tally.upper[c];
    };
    std::sort(order.begin(), order.end(), [&](const CaseResult* a, const CaseResult* b) {
        for (int c = 3; c >= 0; --c)
            if (pooled(a, c) != pooled(b, c)) return pooled(a, c) > pooled(b, c);
        return a->tally.case_name < b->tally.case_name;
    });
    int rank = 1;
    for (const CaseResult* r : order) {
        RankedRow row;
        row.rank = rank++;
        row.name = r->tally.case_name;
        row.n = r->tally.n;
        for (int c = 0; c < 4; ++c) {
            row.lower[c] = r->tally.lower[c];
            row.upper[c] = r->tally.upper[c];
        }
        rep.ranked.push_back(std::move(row));
    }
    return rep;
}

namespace {

std::vector<double> parse_numbers(const std::string& s, char sep, const std::string& ctx) {
    std::vector<double> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, sep)) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        out.push_back(std::stod(tok, &used));
    }
    if (out.empty()) throw std::runtime_error("no numbers in " + ctx);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

FunctionCase case_from_fields(const std::string& name, int n,
                              const std::vector<double>& bounds,
                              const std::string& expr, const std::string& ctx) {
    if (static_cast<int>(bounds.size()) != 2 * n)
        throw std::runtime_error(ctx + ": expected " + std::to_string(2 * n) +
                                 " domain endpoints");
    FunctionCase fc;
    fc.name = name;
    fc.n = n;
    fc.expression = expr;
    for (int i = 0; i < n; ++i)
        fc.domain.dims.emplace_back(bounds[static_cast<std::size_t>(2 * i)],
                                    bounds[static_cast<std::size_t>(2 * i + 1)]);
    Codelist::parse(expr, n);  // validate early
    return fc;
}

}  // namespace

std::vector<FunctionCase> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file " + path);
    std::vector<FunctionCase> corpus;

    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json j;
        in >> j;
        for (const auto& e : j) {
            std::vector<double> bounds;
            for (const auto& d : e.at("domain")) {
                bounds.push_back(d.at(0).get<double>());
                bounds.push_back(d.at(1).get<double>());
            }
            corpus.push_back(case_from_fields(e.at("name").get<std::string>(),
                                              e.at("n").get<int>(), bounds,
                                              e.at("expression").get<std::string>(),
                                              "corpus entry"));
        }
        return corpus;
    }

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string ctx = path + ":" + std::to_string(lineno);
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ';')) fields.push_back(trim(f));
        if (fields.size() != 4)
            throw std::runtime_error(ctx + ": expected 'name; n; bounds; expression'");
        corpus.push_back(case_from_fields(fields[0], std::stoi(fields[1]),
                                          parse_numbers(fields[2], ',', ctx),
                                          fields[3], ctx));
    }
    return corpus;
}

std::map<std::string, std::vector<Box>> load_boxes_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open boxes file " + path);
    std::map<std::string, std::vector<Box>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string ctx = path + ":" + std::to_string(lineno);
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto semi = line.find(';');
        if (semi == std::string::npos)
            throw std::runtime_error(ctx + ": expected 'name; lo,hi; lo,hi; ...'");
        const std::string name = trim(line.substr(0, semi));
        Box b;
        std::istringstream rest(line.substr(semi + 1));
        std::string dim;
        while (std::getline(rest, dim, ';')) {
            const auto v = parse_numbers(dim, ',', ctx);
            if (v.size() != 2) throw std::runtime_error(ctx + ": dimension needs lo,hi");
            b.dims.emplace_back(v[0], v[1]);
        }
        out[name].push_back(std::move(b));
    }
    return out;
}

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string pct(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

void write_trials_csv(std::ostream& os, const std::vector<TrialRecord>& records) {
    os << "case,trial,feasible,lo_A,hi_A,lo_G,hi_G,lo_H,hi_H,class_lo,class_hi\n";
    for (const TrialRecord& r : records) {
        os << r.case_name << ',' << r.trial << ',' << (r.feasible ? 1 : 0) << ',';
        if (r.feasible) {
            os << g17(r.a.lo) << ',' << g17(r.a.hi) << ',' << g17(r.g.lo) << ','
               << g17(r.g.hi) << ',' << g17(r.h.lo) << ',' << g17(r.h.hi) << ','
               << class_symbol(r.class_lo) << ',' << class_symbol(r.class_hi);
        } else {
            os << ",,,,,,,";
        }
        os << '\n';
    }
}

void write_aggregate_csv(std::ostream& os, const AggregateReport& rep) {
    os << "n,cases,minus,circle,plus,plusplus,mean_na_ng,mean_dna_ng,std_na_ng,"
          "std_dna_ng\n";
    const auto row = [&](const DimRow& r, const std::string& label) {
        os << label << ',' << r.cases << ',' << pct(r.mean_pct[0]) << ','
           << pct(r.mean_pct[1]) << ',' << pct(r.mean_pct[2]) << ','
           << pct(r.mean_pct[3]) << ',' << pct(r.mean_na_ng) << ','
           << pct(r.mean_dna_ng) << ',' << pct(r.std_na_ng) << ','
           << pct(r.std_dna_ng) << '\n';
    };
    for (const DimRow& r : rep.by_dim) row(r, std::to_string(r.n));
    if (rep.overall.cases > 0) row(rep.overall, "all");
}

void write_aggregate_markdown(std::ostream& os, const AggregateReport& rep) {
    os << "| rank | name | n | low (-) | low (o) | low (+) | low (++) | up (-) | "
          "up (o) | up (+) | up (++) |\n";
    os << "|---:|:---|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n";
    for (const RankedRow& r : rep.ranked) {
        os << "| " << r.rank << " | " << r.name << " | " << r.n;
        for (int c = 0; c < 4; ++c) os << " | " << r.lower[c];
        for (int c = 0; c < 4; ++c) os << " | " << r.upper[c];
        os << " |\n";
    }
    os << '\n';
    os << "| n | cases | (-) % | (o) % | (+) % | (++) % | N_A/N_G % | dN_A/N_G % | "
          "std N_A/N_G | std dN_A/N_G |\n";
    os << "|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n";
    const auto row = [&](const DimRow& r, const std::string& label) {
        os << "| " << label << " | " << r.cases;
        for (int c = 0; c < 4; ++c) os << " | " << pct(r.mean_pct[c]);
        os << " | " << pct(r.mean_na_ng) << " | " << pct(r.mean_dna_ng) << " | "
           << pct(r.std_na_ng) << " | " << pct(r.std_dna_ng) << " |\n";
    };
    for (const DimRow& r : rep.by_dim) row(r, std::to_string(r.n));
    if (rep.overall.cases > 0) row(rep.overall, "all");
}

}  // namespace hb
