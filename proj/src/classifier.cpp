#include "offsetsing/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace offsetsing {

const char* kind_name(RootKind k)
{
    switch (k) {
    case RootKind::SelfIntersection: return "self_intersection";
    case RootKind::Local: return "local";
    case RootKind::CuspGenerated: return "cusp_generated";
    case RootKind::Superfluous: return "superfluous";
    default: return "unresolved";
    }
}

namespace {

// Sign of a rational polynomial at the root, keeping the sign of the scale.
int signed_at_root(const UniPoly& f, const ZPoly& omega, IsolatedRoot& r)
{
    if (f.is_zero()) return 0;
    auto [scale, z] = f.to_primitive_integer();
    return sgn(scale) * sign_at_root(z, omega, r);
}

UniPoly jacobian_J(const OffsetSystem& sys)
{
    return sys.Uhat * sys.Vhat.derivative() - sys.Vhat * sys.Uhat.derivative();
}

struct Box {
    double xlo, xhi, ylo, yhi;
    double width() const { return std::max(xhi - xlo, yhi - ylo); }
};

Box enclosure(const RootSet& B, Branch br, const OffsetSystem& sys, const CurveSpec& c,
              IsolatedRoot& root)
{
    for (int attempt = 0; attempt < 400; ++attempt) {
        try {
            auto e = eval_offset_point(c, sys, RatInterval(root.lo, root.hi), br);
            auto [xl, xh] = e.x.to_doubles();
            auto [yl, yh] = e.y.to_doubles();
            // Widen by a few ulps to absorb double conversion.
            auto pad = [](double v) { return 4 * std::numeric_limits<double>::epsilon() * (1 + std::fabs(v)); };
            return {xl - pad(xl), xh + pad(xh), yl - pad(yl), yh + pad(yh)};
        } catch (const std::domain_error&) {
            bisect_root(B.poly, root);
        }
    }
    throw InvariantError("offset point enclosure failed: W or the normal vanishes near a root");
}

double box_gap(const Box& a, const Box& b)
{
    double gx = std::max({0.0, a.xlo - b.xhi, b.xlo - a.xhi});
    double gy = std::max({0.0, a.ylo - b.yhi, b.ylo - a.yhi});
    return std::hypot(gx, gy);
}

double box_spread(const Box& a, const Box& b)
{
    double dx = std::max(a.xhi, b.xhi) - std::min(a.xlo, b.xlo);
    double dy = std::max(a.yhi, b.yhi) - std::min(a.ylo, b.ylo);
    return std::hypot(dx, dy);
}

std::size_t find(std::vector<std::size_t>& parent, std::size_t x)
{
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

std::vector<PairGroup> pair_self_intersections(RootSet& B, const OffsetSystem& sys, const CurveSpec& c, double tol,
                                               std::vector<std::size_t>* undecided)
{
    const std::size_t n = B.roots.size();
    const Branch branches[2] = {Branch::Plus, Branch::Minus};
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::set<std::size_t> pending;

    for (int round = 0; round <= 8; ++round) {
        std::vector<Box> boxes(2 * n);
        for (std::size_t i = 0; i < n; ++i)
            for (int b = 0; b < 2; ++b) boxes[2 * i + static_cast<std::size_t>(b)] = enclosure(B, branches[b], sys, c, B.roots[i]);
        edges.clear();
        pending.clear();
        for (std::size_t u = 0; u < 2 * n; ++u)
            for (std::size_t v = u + 1; v < 2 * n; ++v) {
                if (u / 2 == v / 2) continue;
                if (box_gap(boxes[u], boxes[v]) > tol) continue;
                if (box_spread(boxes[u], boxes[v]) <= tol) {
                    edges.emplace_back(u, v);
                    continue;
                }
                pending.insert(u / 2);
                pending.insert(v / 2);
            }
        if (pending.empty()) break;
        if (round == 8) break;
        for (std::size_t i : pending)
            for (int k = 0; k < 8; ++k) bisect_root(B.poly, B.roots[i]);
    }
    if (undecided) undecided->assign(pending.begin(), pending.end());

    std::vector<std::size_t> parent(2 * n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (auto [u, v] : edges) parent[find(parent, u)] = find(parent, v);
    std::map<std::size_t, PairGroup> comps;
    std::set<std::size_t> in_edge;
    for (auto [u, v] : edges) {
        in_edge.insert(u);
        in_edge.insert(v);
    }
    for (std::size_t u : in_edge) comps[find(parent, u)].push_back({u / 2, branches[u % 2]});
    std::vector<PairGroup> groups;
    for (auto& [rep, g] : comps) {
        std::set<std::size_t> roots;
        for (const auto& m : g) roots.insert(m.root);
        if (roots.size() < 2) continue;
        std::sort(g.begin(), g.end(), [](const PairMember& a, const PairMember& b) {
            return a.root != b.root ? a.root < b.root : a.branch < b.branch;
        });
        groups.push_back(std::move(g));
    }
    std::sort(groups.begin(), groups.end(), [](const PairGroup& a, const PairGroup& b) {
        return a.front().root < b.front().root;
    });
    return groups;
}

LocalTestResult local_singularity_test(const ZPoly& omega, IsolatedRoot& t0, const OffsetSystem& sys,
                                       const CurveSpec& c)
{
    const int s_nu = signed_at_root(sys.nu, omega, t0);
    if (s_nu == 0) throw std::invalid_argument("local_singularity_test: nu vanishes at the root; use the cusp test");
    const UniPoly J = jacobian_J(sys);
    const UniPoly b = sys.b();
    const UniPoly W2 = c.W * c.W;
    const UniPoly K = W2 * W2 * J * J * (c.d * c.d) - sys.nu * sys.nu * b * b * b;
    LocalTestResult r;
    if (signed_at_root(K, omega, t0) != 0) return r;
    const int s_j = signed_at_root(J, omega, t0);
    if (s_j == 0) throw InvariantError("curvature polynomial vanishes with J = 0 and nu != 0");
    r.singular = true;
    r.branch = s_nu * s_j < 0 ? Branch::Plus : Branch::Minus;
    return r;
}

bool cusp_generated_test(const ZPoly& omega, IsolatedRoot& t0, const OffsetSystem& sys)
{
    if (signed_at_root(sys.nu, omega, t0) != 0)
        throw std::invalid_argument("cusp_generated_test: nu does not vanish at the root");
    return signed_at_root(jacobian_J(sys), omega, t0) == 0;
}

Classification superfluous_filter(const RootSet& B, const std::vector<PairGroup>& groups,
                                  const std::vector<RootRecord>& local_flags, const OffsetSystem& sys,
                                  const CurveSpec& c)
{
    (void)c;
    Classification out;
    out.roots = local_flags;
    out.roots.resize(B.roots.size());
    for (std::size_t i = 0; i < B.roots.size(); ++i) out.roots[i].interval = B.roots[i];

    std::vector<std::set<std::size_t>> partners(B.roots.size());
    std::vector<std::set<Branch>> pair_branches(B.roots.size());
    for (const auto& g : groups)
        for (const auto& m : g) {
            pair_branches[m.root].insert(m.branch);
            for (const auto& o : g)
                if (o.root != m.root) partners[m.root].insert(o.root);
        }

    const bool mu_constant = sys.mu.degree() <= 0;
    for (std::size_t i = 0; i < out.roots.size(); ++i) {
        RootRecord& r = out.roots[i];
        r.partners.assign(partners[i].begin(), partners[i].end());
        r.branches.clear();
        if (!r.partners.empty()) {
            r.kind = RootKind::SelfIntersection;
            r.branches.assign(pair_branches[i].begin(), pair_branches[i].end());
            for (std::size_t j : r.partners)
                if (std::fabs(B.roots[i].approx() - B.roots[j].approx()) < kNearCoincidentT) r.near_coincident = true;
        } else if (r.local) {
            r.kind = RootKind::Local;
            if (r.local_branch) r.branches.push_back(*r.local_branch);
        } else if (r.cusp_generated) {
            r.kind = RootKind::CuspGenerated;
            r.branches = {Branch::Plus, Branch::Minus};
        } else {
            r.kind = mu_constant ? RootKind::Unresolved : RootKind::Superfluous;
        }
        out.superfluous_present = out.superfluous_present || r.kind == RootKind::Superfluous;
        out.unresolved_present = out.unresolved_present || r.kind == RootKind::Unresolved;
    }
    return out;
}

Classification classify(PipelineResult& res, double tol)
{
    RootSet& B = res.roots;
    std::vector<std::size_t> undecided;
    auto groups = pair_self_intersections(B, res.sys, res.curve, tol, &undecided);

    std::vector<RootRecord> flags(B.roots.size());
    for (std::size_t i = 0; i < B.roots.size(); ++i) {
        RootRecord& r = flags[i];
        IsolatedRoot& root = B.roots[i];
        r.nu_zero = signed_at_root(res.sys.nu, B.poly, root) == 0;
        if (r.nu_zero) {
            r.cusp_generated = cusp_generated_test(B.poly, root, res.sys);
        } else {
            auto lt = local_singularity_test(B.poly, root, res.sys, res.curve);
            r.local = lt.singular;
            r.local_branch = lt.branch;
        }
        double t = root.approx();
        try {
            r.point_plus = eval_offset_point(res.curve, res.sys, t, Branch::Plus);
            r.point_minus = eval_offset_point(res.curve, res.sys, t, Branch::Minus);
        } catch (const std::domain_error&) {
        }
    }
    Classification out = superfluous_filter(B, groups, flags, res.sys, res.curve);
    out.tol = tol;
    for (std::size_t i : undecided)
        if (out.roots[i].kind == RootKind::Superfluous) {
            out.roots[i].kind = RootKind::Unresolved;
            out.unresolved_present = true;
        }
    out.superfluous_present = std::any_of(out.roots.begin(), out.roots.end(),
                                          [](const RootRecord& r) { return r.kind == RootKind::Superfluous; });
    return out;
}

}  // namespace offsetsing
