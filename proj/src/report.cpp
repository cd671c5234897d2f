#include "offsetsing/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

namespace offsetsing {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

UniPoly parse_coeffs(const json& doc, const char* field)
{
    auto it = doc.find(field);
    if (it == doc.end()) throw InputError(std::string("syntax error: missing field '") + field + "'");
    if (!it->is_array()) throw InputError(std::string("syntax error in field '") + field + "': expected an array");
    if (it->empty()) throw InputError(std::string("syntax error in field '") + field + "': coefficient array is empty");
    std::vector<Rat> v;
    std::size_t k = 0;
    for (const auto& x : *it) {
        std::string where = std::string(field) + "[" + std::to_string(k++) + "]";
        if (x.is_number_integer()) {
            v.emplace_back(Int(std::to_string(x.get<long long>())));
        } else if (x.is_string()) {
            const auto& s = x.get_ref<const std::string&>();
            Rat q;
            try {
                q = parse_rat(s);
            } catch (const InputError& e) {
                throw InputError("syntax error in field '" + where + "': " + e.what());
            }
            if (q.get_den() != 1) throw InputError("syntax error in field '" + where + "': coefficient must be an integer");
            v.push_back(q);
        } else {
            throw InputError("syntax error in field '" + where + "': coefficient must be an integer");
        }
    }
    return UniPoly(std::move(v));
}

Rat parse_distance(const json& doc)
{
    auto it = doc.find("d");
    if (it == doc.end()) throw InputError("syntax error: missing field 'd'");
    try {
        if (it->is_string()) return parse_rat(it->get_ref<const std::string&>());
        if (it->is_number_integer()) return Rat(Int(std::to_string(it->get<long long>())));
    } catch (const InputError& e) {
        throw InputError(std::string("syntax error in field 'd': ") + e.what());
    }
    throw InputError("syntax error in field 'd': expected a rational string such as \"3/10\"");
}

ojson coeff_array(const UniPoly& p)
{
    ojson a = ojson::array();
    if (p.is_zero()) {
        a.push_back(0);
        return a;
    }
    for (const Rat& q : p.coeffs()) {
        const Int& n = q.get_num();
        if (n.fits_slong_p()) a.push_back(n.get_si());
        else a.push_back(to_string(n));
    }
    return a;
}

}  // namespace

CurveSpec parse_curve_text(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("syntax error: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("syntax error: curve file must be a JSON object");
    CurveSpec c;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) throw InputError("syntax error in field 'name': expected a string");
        c.name = it->get<std::string>();
    }
    c.X = parse_coeffs(doc, "X");
    c.Y = parse_coeffs(doc, "Y");
    c.W = parse_coeffs(doc, "W");
    c.d = parse_distance(doc);
    return normalize_curve(std::move(c));
}

CurveSpec parse_curve_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open curve file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    CurveSpec c = parse_curve_text(ss.str());
    if (c.name.empty()) {
        auto slash = path.find_last_of('/');
        std::string stem = path.substr(slash == std::string::npos ? 0 : slash + 1);
        if (auto dot = stem.rfind('.'); dot != std::string::npos) stem.resize(dot);
        c.name = stem;
    }
    return c;
}

std::string emit_curve_file(const CurveSpec& c)
{
    ojson doc;
    doc["name"] = c.name;
    doc["X"] = coeff_array(c.X);
    doc["Y"] = coeff_array(c.Y);
    doc["W"] = coeff_array(c.W);
    doc["d"] = to_string(c.d);
    return doc.dump() + "\n";
}

std::string decimal_string(const Rat& q, int digits)
{
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::max(digits, 0)));
    Rat scaled = abs(q) * scale;
    // Round half up on the magnitude.
    Int n = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    std::string s = n.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (q < 0 && n != 0) s.insert(0, "-");
    return s;
}

Analysis analyze(const CurveSpec& input, const AnalyzeOptions& opts)
{
    auto start = std::chrono::steady_clock::now();
    Analysis a;
    a.curve = normalize_curve(input);
    if (opts.mobius) {
        const auto& m = *opts.mobius;
        a.curve = normalize_curve(mobius_reparametrize(a.curve, m[0], m[1], m[2], m[3]));
    }
    Report& r = a.report;
    r.name = a.curve.name;
    r.d = to_string(a.curve.d);
    r.precision_bits = opts.precision_bits;

    try {
        SolverOptions so;
        so.precision_bits = opts.precision_bits;
        a.result = run_offset_sing(a.curve, so);
    } catch (const ReducibleOffsetError&) {
        r.flags.reducible_rejected = true;
        if (opts.timing)
            r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return a;
    }
    PipelineResult& res = *a.result;
    a.classification = classify(res, opts.pair_tol);
    const Classification& cls = *a.classification;

    r.n_p = cls.roots.size();
    r.delta_t = res.omega.deg_omega;
    r.tau = res.omega.tau_omega;
    r.deg_t_P = res.sys.degP_t;
    r.deg_t_Q = res.sys.degQ_t;
    r.deg_omega_tilde = res.omega.deg_omega_tilde;
    r.flags.superfluous_present = cls.superfluous_present;
    r.flags.unresolved_present = cls.unresolved_present;
    r.flags.w_gcd_nonconstant = res.omega.w_gcd_nonconstant;
    r.flags.b_gcd_nonconstant = res.omega.b_gcd_nonconstant;

    std::vector<std::size_t> order(cls.roots.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return cls.roots[i].interval.mid() < cls.roots[j].interval.mid();
    });
    std::vector<std::size_t> rank(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;

    const int digits = std::max(6, static_cast<int>(std::ceil(opts.precision_bits * 0.30103)));
    for (std::size_t k : order) {
        const RootRecord& rec = cls.roots[k];
        ReportRoot e;
        e.lo = to_string(rec.interval.lo);
        e.hi = to_string(rec.interval.hi);
        e.exact = rec.interval.exact();
        e.approx = decimal_string(rec.interval.mid(), digits);
        e.kind = kind_name(rec.kind);
        for (Branch b : rec.branches) e.branches.emplace_back(branch_name(b));
        for (std::size_t p : rec.partners) e.partners.push_back(rank[p]);
        std::sort(e.partners.begin(), e.partners.end());
        e.near_coincident = rec.near_coincident;
        e.nu_zero = rec.nu_zero;
        e.point_plus = {rec.point_plus.first, rec.point_plus.second};
        e.point_minus = {rec.point_minus.first, rec.point_minus.second};
        r.roots.push_back(std::move(e));
    }
    if (opts.timing)
        r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return a;
}

std::string emit_report(const Report& r)
{
    auto opt = [](const auto& v) { return v ? ojson(*v) : ojson(nullptr); };
    ojson doc;
    doc["name"] = r.name;
    doc["d"] = r.d;
    doc["precision_bits"] = r.precision_bits;
    doc["n_p"] = r.n_p;
    doc["delta_t"] = opt(r.delta_t);
    doc["tau"] = opt(r.tau);
    doc["deg_t_P"] = opt(r.deg_t_P);
    doc["deg_t_Q"] = opt(r.deg_t_Q);
    doc["deg_omega_tilde"] = opt(r.deg_omega_tilde);
    doc["branch_convention"] = "+ uses the normal (Vhat, -Uhat)/|(Uhat, Vhat)|";
    ojson roots = ojson::array();
    for (const auto& e : r.roots) {
        ojson j;
        j["interval"] = ojson::array({e.lo, e.hi});
        j["exact"] = e.exact;
        j["approx"] = e.approx;
        j["kind"] = e.kind;
        j["branch"] = e.branches;
        j["partners"] = e.partners;
        j["near_coincident"] = e.near_coincident;
        j["nu_zero"] = e.nu_zero;
        j["point_plus"] = ojson::array({e.point_plus[0], e.point_plus[1]});
        j["point_minus"] = ojson::array({e.point_minus[0], e.point_minus[1]});
        roots.push_back(std::move(j));
    }
    doc["roots"] = std::move(roots);
    ojson flags;
    flags["reducible_rejected"] = r.flags.reducible_rejected;
    flags["superfluous_present"] = r.flags.superfluous_present;
    flags["unresolved_present"] = r.flags.unresolved_present;
    flags["w_gcd_nonconstant"] = r.flags.w_gcd_nonconstant;
    flags["b_gcd_nonconstant"] = r.flags.b_gcd_nonconstant;
    doc["flags"] = std::move(flags);
    if (r.wall_time_ms) doc["wall_time_ms"] = std::round(*r.wall_time_ms * 1000) / 1000;
    return doc.dump(2) + "\n";
}

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

struct Plot {
    Window w;
    double width = 800, height = 800;
    double sx() const { return width / (w.x1 - w.x0); }
    double sy() const { return height / (w.y1 - w.y0); }
    double px(double x) const { return (x - w.x0) * sx(); }
    double py(double y) const { return height - (y - w.y0) * sy(); }
    // Points far outside the window are dropped, which breaks the polyline there.
    bool keep(double x, double y) const
    {
        double mx = w.x1 - w.x0, my = w.y1 - w.y0;
        return std::isfinite(x) && std::isfinite(y) && x > w.x0 - mx && x < w.x1 + mx && y > w.y0 - my && y < w.y1 + my;
    }
};

template <class F>
std::vector<std::vector<std::pair<double, double>>> trace(const Plot& plot, const UniPoly& W, int samples, F point)
{
    std::vector<std::vector<std::pair<double, double>>> runs(1);
    const double diag = std::hypot(plot.w.x1 - plot.w.x0, plot.w.y1 - plot.w.y0);
    auto emit = [&](double x, double y) {
        if (plot.keep(x, y)) runs.back().emplace_back(x, y);
        else if (!runs.back().empty()) runs.emplace_back();
    };
    auto refine = [&](auto&& self, double ta, double tb, double xa, double ya, double xb, double yb, int depth) -> void {
        if (depth == 0 || std::hypot(xb - xa, yb - ya) < diag / 200) {
            emit(xb, yb);
            return;
        }
        double tm = std::tan(0.5 * (std::atan(ta) + std::atan(tb)));
        double xm, ym;
        if (!point(tm, xm, ym)) {
            if (!runs.back().empty()) runs.emplace_back();
            return;
        }
        self(self, ta, tm, xa, ya, xm, ym, depth - 1);
        self(self, tm, tb, xm, ym, xb, yb, depth - 1);
    };
    double tp = 0, xp = 0, yp = 0;
    bool have = false;
    for (int i = 0; i < samples; ++i) {
        double t = std::tan(-kPi / 2 + kPi * (i + 0.5) / samples);
        double x, y;
        if (!point(t, x, y)) {
            if (!runs.back().empty()) runs.emplace_back();
            have = false;
            continue;
        }
        // Split at poles of W.
        if (have && W.eval(tp) * W.eval(t) <= 0) {
            if (!runs.back().empty()) runs.emplace_back();
            have = false;
        }
        if (have && plot.keep(xp, yp) && plot.keep(x, y)) refine(refine, tp, t, xp, yp, x, y, 8);
        else emit(x, y);
        tp = t;
        xp = x;
        yp = y;
        have = true;
    }
    runs.erase(std::remove_if(runs.begin(), runs.end(), [](const auto& r) { return r.size() < 2; }), runs.end());
    return runs;
}

}  // namespace

std::string emit_svg(const CurveSpec& c, const OffsetSystem& sys, const Report& r, std::optional<Window> window,
                     int samples)
{
    samples = std::max(samples, 16);
    auto gen = [&](double t, double& x, double& y) {
        double w = c.W.eval(t);
        if (w == 0.0) return false;
        x = c.X.eval(t) / w;
        y = c.Y.eval(t) / w;
        return std::isfinite(x) && std::isfinite(y);
    };
    if (!window) {
        std::vector<double> xs, ys;
        for (int i = 0; i < samples; ++i) {
            double x, y;
            if (gen(std::tan(-kPi / 2 + kPi * (i + 0.5) / samples), x, y)) {
                xs.push_back(x);
                ys.push_back(y);
            }
        }
        if (xs.empty()) throw InputError("cannot fit a plot window: the generator has no finite samples");
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        auto q = [](const std::vector<double>& v, double f) { return v[static_cast<std::size_t>(f * (v.size() - 1))]; };
        double m = 1.5 * to_double(c.d);
        window = Window{q(xs, 0.05) - m, q(ys, 0.05) - m, q(xs, 0.95) + m, q(ys, 0.95) + m};
        double cx = 0.5 * (window->x0 + window->x1), cy = 0.5 * (window->y0 + window->y1);
        double half = 0.5 * std::max(window->x1 - window->x0, window->y1 - window->y0);
        window = Window{cx - half, cy - half, cx + half, cy + half};
    }
    const Window& w = *window;
    if (!(w.x1 > w.x0) || !(w.y1 > w.y0) || !std::isfinite(w.x1 - w.x0) || !std::isfinite(w.y1 - w.y0))
        throw InputError("plot window is empty");

    Plot plot{w};
    plot.height = plot.width * (w.y1 - w.y0) / (w.x1 - w.x0);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(plot.width) << "\" height=\""
        << fmt(plot.height) << "\" viewBox=\"0 0 " << fmt(plot.width) << " " << fmt(plot.height) << "\">\n"
        << "<title>" << r.name << " offset, d = " << r.d << "</title>\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << fmt(plot.width) << "\" height=\"" << fmt(plot.height)
        << "\" fill=\"white\"/>\n";

    auto polylines = [&](const auto& runs, const char* stroke, const char* id) {
        out << "<g id=\"" << id << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.2\">\n";
        for (const auto& run : runs) {
            out << "<polyline points=\"";
            for (std::size_t i = 0; i < run.size(); ++i)
                out << (i ? " " : "") << fmt(plot.px(run[i].first)) << "," << fmt(plot.py(run[i].second));
            out << "\"/>\n";
        }
        out << "</g>\n";
    };
    polylines(trace(plot, c.W, samples, gen), "black", "generator");
    for (Branch br : {Branch::Plus, Branch::Minus}) {
        auto off = [&](double t, double& x, double& y) {
            try {
                auto p = eval_offset_point(c, sys, t, br);
                x = p.first;
                y = p.second;
            } catch (const std::domain_error&) {
                return false;
            }
            return std::isfinite(x) && std::isfinite(y);
        };
        polylines(trace(plot, c.W, samples, off), br == Branch::Plus ? "#1f77b4" : "#2ca02c",
                  br == Branch::Plus ? "offset-plus" : "offset-minus");
    }

    out << "<g id=\"singular-points\" stroke-width=\"1.5\">\n";
    for (const auto& e : r.roots) {
        const char* color = "#d62728";
        if (e.kind == "local") color = "#9467bd";
        else if (e.kind == "cusp_generated") color = "#ff7f0e";
        else if (e.kind == "unresolved") color = "#8c564b";
        std::vector<std::array<double, 2>> pts;
        if (e.branches.empty()) {
            pts = {e.point_plus, e.point_minus};
        } else {
            for (const auto& b : e.branches) pts.push_back(b == "+" ? e.point_plus : e.point_minus);
        }
        for (const auto& p : pts) {
            if (!plot.keep(p[0], p[1])) continue;
            double x = plot.px(p[0]), y = plot.py(p[1]);
            if (e.kind == "superfluous") {
                out << "<path d=\"M" << fmt(x - 5) << "," << fmt(y - 5) << " L" << fmt(x + 5) << "," << fmt(y + 5)
                    << " M" << fmt(x - 5) << "," << fmt(y + 5) << " L" << fmt(x + 5) << "," << fmt(y - 5)
                    << "\" stroke=\"gray\"><title>t = " << e.approx << " (superfluous)</title></path>\n";
            } else {
                out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"4\" fill=\"none\" stroke=\"" << color
                    << "\"><title>t = " << e.approx << " (" << e.kind << ")</title></circle>\n";
            }
        }
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace offsetsing
