#include "offsetsing/oracle.hpp"
#include "offsetsing/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

using namespace offsetsing;

namespace {

enum Exit { kOk = 0, kReducible = 2, kInput = 3, kInternal = 4 };

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

CurveSpec load_curve(const std::string& path, const std::string& distance)
{
    CurveSpec c = parse_curve_file(path);
    if (!distance.empty()) {
        c.d = parse_rat(distance);
        c = normalize_curve(std::move(c));
    }
    return c;
}

struct ComputeArgs {
    std::string curve, distance, mobius, report, svg, window;
    int precision = 53;
    int samples = 2000;
    bool timing = false;
};

int run_compute(const ComputeArgs& a)
{
    CurveSpec c = load_curve(a.curve, a.distance);
    AnalyzeOptions opts;
    opts.precision_bits = a.precision;
    opts.timing = a.timing;
    if (!a.mobius.empty()) {
        auto parts = split_commas(a.mobius);
        if (parts.size() != 4) throw InputError("--mobius expects a,b,c,e");
        opts.mobius = std::array<Rat, 4>{parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2]), parse_rat(parts[3])};
    }
    std::optional<Window> window;
    if (!a.window.empty()) {
        auto parts = split_commas(a.window);
        if (parts.size() != 4) throw InputError("--window expects x0,y0,x1,y1");
        double v[4];
        for (int i = 0; i < 4; ++i) v[i] = to_double(parse_rat(parts[static_cast<std::size_t>(i)]));
        window = Window{v[0], v[1], v[2], v[3]};
        if (!(window->x1 > window->x0) || !(window->y1 > window->y0)) throw InputError("plot window is empty");
    }

    if (properness_suspect(c))
        std::cerr << "offsetsing: warning: the parametrization does not look proper; results may be incomplete\n";
    Analysis an = analyze(c, opts);
    std::string json = emit_report(an.report);
    if (a.report.empty()) std::cout << json;
    else write_file(a.report, json);

    if (an.report.flags.reducible_rejected) {
        std::cerr << "offsetsing: " << an.curve.name << ": U^2 + V^2 is a perfect square, the offset is reducible\n";
        return kReducible;
    }
    if (!a.svg.empty()) write_file(a.svg, emit_svg(an.curve, an.result->sys, an.report, window, a.samples));
    if (an.report.flags.w_gcd_nonconstant)
        std::cerr << "offsetsing: note: gcd(omega*, W) is nonconstant; roots of W were removed from B\n";
    return kOk;
}

int run_verify(const std::string& curve, const std::string& distance, int grid, int trials)
{
    CurveSpec c = load_curve(curve, distance);
    Analysis an = analyze(c);
    if (an.report.flags.reducible_rejected) {
        std::cerr << "offsetsing: the offset is reducible; nothing to verify\n";
        return kReducible;
    }
    const PipelineResult& res = *an.result;
    bool all = true;
    auto line = [&](const std::string& name, bool ok, const std::string& detail) {
        all = all && ok;
        std::cout << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : ": " + detail) << "\n";
    };

    oracle::ScanOptions so;
    so.grid = grid;
    auto params = oracle::scan_parameters(oracle::numeric_singularity_scan(an.curve, so));
    auto missing = oracle::uncovered_parameters(params, res.roots.roots);
    line("scan-superset", missing.empty(),
         std::to_string(params.size()) + " scanned parameters, " + std::to_string(missing.size()) + " outside B");
    line("sres1-vanishing", oracle::verify_sres1_vanishing(*an.classification, res.sres1, an.curve), "");

    if (res.sys.degP_t + res.sys.degQ_t <= 16) {
        TriPoly H = oracle::implicit_offset(res.sys);
        line("implicit-on-offset", oracle::implicit_vanishes_on_offset(H, an.curve),
             "total degree " + std::to_string(H.total_degree()));
        line("squarefree-offset", oracle::squarefree_offset_check(H, an.curve, trials), std::to_string(trials) + " slices");
    } else {
        std::cout << "SKIP implicit-on-offset: deg_t P + deg_t Q exceeds 16\n";
    }
    return all ? kOk : kInternal;
}

struct BenchRow {
    std::string file;
    std::string json;
    std::string line;
    int status = kOk;
};

int run_bench(const std::string& dir, const std::string& report, unsigned jobs, bool timing)
{
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw InputError("corpus directory '" + dir + "' does not exist");
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError("no curve files in '" + dir + "'");

    std::vector<BenchRow> rows(files.size());
    auto work = [&](std::size_t i) {
        BenchRow& row = rows[i];
        row.file = files[i];
        try {
            AnalyzeOptions opts;
            opts.timing = timing;
            Analysis an = analyze(parse_curve_file(files[i]), opts);
            const Report& r = an.report;
            row.json = emit_report(r);
            char buf[256];
            auto num = [](const auto& v) { return v ? std::to_string(*v) : std::string("-"); };
            std::size_t sup = static_cast<std::size_t>(
                std::count_if(r.roots.begin(), r.roots.end(), [](const ReportRoot& e) { return e.kind == "superfluous"; }));
            std::snprintf(buf, sizeof buf, "%-16s %-6s %5zu %8s %6s %5s %5s %5zu%s", r.name.c_str(), r.d.c_str(), r.n_p,
                          num(r.delta_t).c_str(), num(r.tau).c_str(), num(r.deg_t_P).c_str(), num(r.deg_t_Q).c_str(), sup,
                          r.flags.reducible_rejected ? "  reducible" : "");
            row.line = buf;
            if (r.wall_time_ms) {
                std::snprintf(buf, sizeof buf, " %10.1f", *r.wall_time_ms);
                row.line += buf;
            }
        } catch (const InputError& e) {
            row.status = kInput;
            row.line = files[i] + ": input error: " + e.what();
        } catch (const std::exception& e) {
            row.status = kInternal;
            row.line = files[i] + ": internal error: " + e.what();
        }
    };

    jobs = std::max(1u, jobs);
    std::vector<std::future<void>> pending;
    std::size_t next = 0;
    while (next < files.size() || !pending.empty()) {
        while (next < files.size() && pending.size() < jobs) pending.push_back(std::async(std::launch::async, work, next++));
        pending.front().get();
        pending.erase(pending.begin());
    }

    std::cout << "curve            d        n_p  delta_t    tau  degP  degQ  supf" << (timing ? "    time_ms" : "") << "\n";
    int status = kOk;
    std::string combined = "[\n";
    bool first = true;
    for (const auto& row : rows) {
        std::cout << row.line << "\n";
        status = std::max(status, row.status);
        if (row.json.empty()) continue;
        combined += (first ? "" : ",\n") + row.json.substr(0, row.json.size() - 1);
        first = false;
    }
    combined += "\n]\n";
    if (!report.empty()) write_file(report, combined);
    return status;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Offset singularity finder for parametric curves"};
    app.require_subcommand(1);

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "Compute and classify the singularity parameters of one offset");
    compute->add_option("--curve", ca.curve, "Curve file (JSON)")->required();
    compute->add_option("--distance", ca.distance, "Offset distance, overrides the file's d");
    compute->add_option("--precision", ca.precision, "Root precision in bits")->check(CLI::Range(8, 4096));
    compute->add_option("--mobius", ca.mobius, "Reparametrize by t -> (a t + b)/(c t + e), given as a,b,c,e");
    compute->add_option("--report", ca.report, "Write the JSON report here instead of stdout");
    compute->add_option("--svg", ca.svg, "Write an SVG plot");
    compute->add_option("--window", ca.window, "Plot window x0,y0,x1,y1");
    compute->add_option("--samples", ca.samples, "Plot samples per curve")->check(CLI::Range(16, 1000000));
    compute->add_flag("--timing", ca.timing, "Include wall_time_ms in the report");

    std::string vcurve, vdistance;
    int grid = 20000, trials = 5;
    auto* verify = app.add_subcommand("verify", "Check the solver against the brute-force oracles");
    verify->add_option("--curve", vcurve, "Curve file (JSON)")->required();
    verify->add_option("--distance", vdistance, "Offset distance, overrides the file's d");
    verify->add_option("--grid", grid, "Scan samples per branch")->check(CLI::Range(100, 10000000));
    verify->add_option("--trials", trials, "Square-freeness slices")->check(CLI::Range(1, 1000));

    std::string corpus, breport;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool btiming = false;
    auto* bench = app.add_subcommand("bench", "Run every curve file in a directory and tabulate");
    bench->add_option("--corpus", corpus, "Directory of curve files")->required();
    bench->add_option("--report", breport, "Write all reports as one JSON array");
    bench->add_option("--jobs", jobs, "Parallel pipelines");
    bench->add_flag("--timing", btiming, "Include timings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (*compute) return run_compute(ca);
        if (*verify) return run_verify(vcurve, vdistance, grid, trials);
        if (*bench) return run_bench(corpus, breport, jobs, btiming);
    } catch (const InputError& e) {
        std::cerr << "offsetsing: input error: " << e.what() << "\n";
        return kInput;
    } catch (const ReducibleOffsetError& e) {
        std::cerr << "offsetsing: " << e.what() << "\n";
        return kReducible;
    } catch (const std::exception& e) {
        std::cerr << "offsetsing: internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}
