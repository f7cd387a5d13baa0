#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hessbound/bench.hpp"
#include "hessbound/codelist.hpp"
#include "hessbound/costmodel.hpp"
#include "hessbound/propagate.hpp"
#include "hessbound/spectral.hpp"

namespace {

hb::Box parse_box(const std::string& spec) {
    hb::Box b;
    std::istringstream is(spec);
    std::string dim;
    while (std::getline(is, dim, ';')) {
        double lo = 0, hi = 0;
        char comma = 0;
        std::istringstream ds(dim);
        if (!(ds >> lo >> comma >> hi) || comma != ',')
            throw std::runtime_error("bad box syntax, expected 'lo,hi;lo,hi;...'");
        b.dims.emplace_back(lo, hi);
    }
    if (b.dims.empty()) throw std::runtime_error("empty box");
    return b;
}

std::string fmt(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

hb::CostTable load_table(const std::string& path) {
    if (path.empty()) return hb::CostTable::defaults();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cost table " + path);
    return hb::CostTable::load(in);
}

int run(int argc, char** argv) {
    CLI::App app{"guaranteed eigenvalue bounds for interval Hessians"};
    app.require_subcommand(1);

    std::string expr, box_spec, methods = "A,G,H", corpus_path, boxes_path;
    std::string cost_table_path, out_prefix = "bench";
    int n = 0, digits = 6, trials = 100, jobs = 1, samples = 64;
    std::uint64_t seed = 0;
    double inflate_eps = 0.0;

    CLI::App* bounds = app.add_subcommand("bounds", "eigenvalue bounds over one box");
    bounds->add_option("--expr", expr, "expression in x1..xn")->required();
    bounds->add_option("--box", box_spec, "box 'lo,hi;lo,hi;...'")->required();
    bounds->add_option("--methods", methods, "comma list from A,G,H (default all)");
    bounds->add_option("--digits", digits, "significant digits (default 6)");
    bounds->add_option("--inflate", inflate_eps, "relative outward inflation");

    CLI::App* codelist = app.add_subcommand("codelist", "dump the codelist");
    codelist->add_option("--expr", expr)->required();
    codelist->add_option("-n", n, "number of variables")->required();

    CLI::App* count_cmd = app.add_subcommand("count", "static operation counts");
    count_cmd->add_option("--expr", expr)->required();
    count_cmd->add_option("-n", n, "number of variables")->required();
    count_cmd->add_option("--cost-table", cost_table_path, "cost table config");

    CLI::App* bench = app.add_subcommand("bench", "run the benchmark harness");
    bench->add_option("--corpus", corpus_path, "corpus file (text or .json)")->required();
    bench->add_option("--seed", seed, "RNG seed (default 0)");
    bench->add_option("--trials", trials, "boxes per function (default 100)");
    bench->add_option("--jobs", jobs, "worker threads");
    bench->add_option("--out", out_prefix, "output file prefix (default 'bench')");
    bench->add_option("--boxes-file", boxes_path, "pin exact boxes per case");
    bench->add_option("--cost-table", cost_table_path, "cost table config");

    CLI::App* oracle = app.add_subcommand("oracle", "sampled inner eigenvalue range");
    oracle->add_option("--expr", expr)->required();
    oracle->add_option("--box", box_spec)->required();
    oracle->add_option("--samples", samples, "Halton samples (default 64)");
    oracle->add_option("--digits", digits);

    CLI11_PARSE(app, argc, argv);

    if (bounds->parsed()) {
        const hb::Box box = parse_box(box_spec);
        const hb::Codelist cl =
            hb::Codelist::parse(expr, static_cast<int>(box.size()));
        hb::PropagateOptions opt;
        opt.mode = hb::Mode::Both;
        opt.inflation_eps = inflate_eps;
        const hb::EvalTrace trace = hb::propagate(cl, box, opt);
        std::istringstream ms(methods);
        std::string m;
        while (std::getline(ms, m, ',')) {
            if (m == "A") {
                std::cout << "A " << fmt(trace.eig.lo, digits) << ' '
                          << fmt(trace.eig.hi, digits) << '\n';
            } else if (m == "G") {
                const auto g = hb::gershgorin(trace.hessian);
                std::cout << "G " << fmt(g.lo, digits) << ' ' << fmt(g.hi, digits)
                          << '\n';
            } else if (m == "H") {
                const auto h = hb::hertz_rohn(trace.hessian);
                std::cout << "H " << fmt(h.lo, digits) << ' ' << fmt(h.hi, digits)
                          << '\n';
            } else {
                throw std::runtime_error("unknown method '" + m + "'");
            }
        }
        return 0;
    }

    if (codelist->parsed()) {
        std::cout << hb::Codelist::parse(expr, n).dump();
        return 0;
    }

    if (count_cmd->parsed()) {
        const hb::Codelist cl = hb::Codelist::parse(expr, n);
        const hb::CostTable table = load_table(cost_table_path);
        std::printf("%-12s %6s %6s %6s %6s\n", "op", "val", "grad", "eig", "hess");
        for (const hb::CodeLine& ln : cl.lines()) {
            const hb::OpCost& c = table.of(ln.kind);
            std::printf("%-12s %6lld %6lld %6lld %6lld\n", hb::op_name(ln.kind),
                        c.val.eval(n), c.grad.eval(n), c.eig.eval(n), c.hess.eval(n));
        }
        const hb::CountReport r = hb::count(cl, table);
        std::printf("N_A=%lld N_G=%lld dNA=%lld\n", r.n_a, r.n_g, r.delta_a);
        std::printf("N_A/N_G=%.2f%% dNA/N_G=%.2f%%\n",
                    100.0 * static_cast<double>(r.n_a) / static_cast<double>(r.n_g),
                    100.0 * static_cast<double>(r.delta_a) /
                        static_cast<double>(r.n_g));
        return 0;
    }

    if (bench->parsed()) {
        const auto corpus = hb::load_corpus(corpus_path);
        const hb::CostTable table = load_table(cost_table_path);
        hb::BenchOptions opt;
        opt.seed = seed;
        opt.trials = trials;
        opt.jobs = jobs;
        if (!boxes_path.empty()) opt.fixed_boxes = hb::load_boxes_file(boxes_path);
        const auto results = hb::run_corpus(corpus, opt, table);

        std::vector<hb::TrialRecord> records;
        for (const auto& r : results)
            records.insert(records.end(), r.records.begin(), r.records.end());
        const hb::AggregateReport rep = hb::aggregate(results);

        std::ofstream trials_csv(out_prefix + "_trials.csv");
        hb::write_trials_csv(trials_csv, records);
        std::ofstream agg_csv(out_prefix + "_aggregate.csv");
        hb::write_aggregate_csv(agg_csv, rep);
        std::ofstream agg_md(out_prefix + "_aggregate.md");
        hb::write_aggregate_markdown(agg_md, rep);

        if (rep.overall.cases > 0) {
            std::printf("all: cases=%d (-)=%.2f%% (o)=%.2f%% (+)=%.2f%% (++)=%.2f%% "
                        "N_A/N_G=%.2f%% dNA/N_G=%.2f%%\n",
                        rep.overall.cases, rep.overall.mean_pct[0],
                        rep.overall.mean_pct[1], rep.overall.mean_pct[2],
                        rep.overall.mean_pct[3], rep.overall.mean_na_ng,
                        rep.overall.mean_dna_ng);
        }
        return 0;
    }

    if (oracle->parsed()) {
        const hb::Box box = parse_box(box_spec);
        const hb::Codelist cl =
            hb::Codelist::parse(expr, static_cast<int>(box.size()));
        const hb::SpectralBounds o = hb::sampled_oracle(cl, box, samples);
        std::cout << "oracle " << fmt(o.lo, digits) << ' ' << fmt(o.hi, digits)
                  << '\n';
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hb::ParseError& e) {
        std::cerr << "parse error at position " << e.pos << ": " << e.what() << '\n';
        return 1;
    } catch (const hb::DomainViolation& e) {
        std::cerr << "domain violation";
        if (e.line > 0) std::cerr << " at line " << e.line;
        std::cerr << ": " << e.what() << '\n';
        return 2;
    } catch (const hb::DimensionCapExceeded& e) {
        std::cerr << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
