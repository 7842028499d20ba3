#include "clexp/expand.hpp"

#include <algorithm>

namespace clexp {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SurfaceError(msg); }

LPoly sum_angle_weights(const TPolygon& tp, int* count) {
    AngleMatching minimal = minimal_matching(tp);
    LPoly sum(tp.nvars);
    int c = 0;
    for (const AngleMatching& a : enumerate_matchings(tp)) {
        sum.add_term(weight_xy(tp, a, minimal), 1);
        ++c;
    }
    if (count) *count = c;
    return sum;
}

LPoly sum_bipartite_weights(const TPolygon& tp, int* count) {
    BipartiteGraph b = build_bipartite(tp);
    PerfectMatching emin = bipartite_minimal(b, minimal_matching(tp));
    LPoly sum(tp.nvars);
    int c = 0;
    for (const PerfectMatching& e : enumerate_bipartite_pm(b)) {
        Monomial m(tp.nvars);
        for (int x : e)
            if (b.edges[x].label > 0) m.xexp[b.edges[x].label - 1] += 1;
        for (int sq : squares_of(b, e, emin)) {
            int label = tp.edge(sq).label;
            if (label > 0) m.yexp[label - 1] += 1;
        }
        sum.add_term(m, 1);
        ++c;
    }
    if (count) *count = c;
    return sum;
}

LPoly sum_qp_weights(const TPolygon& tp, int* count) {
    QuiverPotential qp = build_qp(tp);
    AngleMatching minimal = minimal_matching(tp);
    LPoly sum(tp.nvars);
    int c = 0;
    for (const Cut& cut : minimal_cuts(qp)) {
        AngleMatching a = rho_inv(qp, cut);
        if (!is_angle_matching(tp, a)) fail("minimal cut is not an angle matching");
        sum.add_term(weight_xy(tp, a, minimal), 1);
        ++c;
    }
    if (count) *count = c;
    return sum;
}

ArcSpec underlying_plain(const ArcSpec& d) {
    ArcSpec g = d;
    g.kind = ArcSpec::Kind::plain;
    g.tags = {Tag::plain, Tag::plain};
    return g;
}

LPoly sum_snake_weights(const Triangulation& t, const ArcSpec& d, int* count) {
    if (d.kind == ArcSpec::Kind::plain) {
        SnakeGraph g = build_snake(build_plain(t, d));
        LPoly sum(t.num_arcs());
        int c = 0;
        for (const PerfectMatching& p : enumerate_pm(g)) {
            sum.add_term(pm_weight_xy(g, p), 1);
            ++c;
        }
        if (count) *count = c;
        return sum;
    }
    ArcSpec gamma = underlying_plain(d);
    if (d.kind == ArcSpec::Kind::notched1) {
        int end = d.tags[1] == Tag::notched ? 1 : 0;
        SnakeGraph loop = build_snake(build_notched_loop_polygon(t, d, end));
        ArcSpec g = end == 1 ? gamma : gamma.reversed();
        SnakeGraph base = build_snake(build_plain(t, g));
        LPoly sum(t.num_arcs());
        int c = 0;
        for (const SymmetricMatching& s : symmetric_pms(loop, base)) {
            sum.add_term(s.weight, 1);
            ++c;
        }
        if (count) *count = c;
        return sum;
    }
    SnakeGraph gp = build_snake(build_notched_loop_polygon(t, d, 1));
    SnakeGraph gq = build_snake(build_notched_loop_polygon(t, d, 0));
    SnakeGraph base_p = build_snake(build_plain(t, gamma));
    SnakeGraph base_q = build_snake(build_plain(t, gamma.reversed()));
    LPoly sum(t.num_arcs());
    int c = 0;
    for (const CompatiblePair& pr : compatible_pairs(gp, base_p, gq, base_q)) {
        sum.add_term(pr.weight, 1);
        ++c;
    }
    if (count) *count = c;
    return sum;
}

}  // namespace

Monomial cross_monomial(const TPolygon& tp) {
    Monomial m(tp.nvars);
    for (int d : tp.diagonals()) {
        int label = tp.edge(d).label;
        if (label > 0) m.xexp[label - 1] += 1;
    }
    return m;
}

std::pair<std::map<int, LPoly>, std::map<int, LPoly>> phi_maps(const Triangulation& t) {
    int n = t.num_arcs();
    std::map<int, LPoly> sx, sy;
    for (const auto& a : t.arcs) {
        if (!a.notched()) continue;
        int radius = t.radius_of_loop(a.id);
        if (radius == 0) fail("1-notched arc without a self-folded triangle");
        Monomial mx = Monomial::x(n, a.id) * Monomial::x(n, radius);
        sx.emplace(a.id, LPoly::monomial(mx));
        Monomial my = Monomial::y(n, radius) * Monomial::y(n, a.id, -1);
        sy.emplace(radius, LPoly::monomial(my));
    }
    return {sx, sy};
}

LPoly apply_phi(const Triangulation& t, const LPoly& p) {
    auto [sx, sy] = phi_maps(t);
    if (sx.empty() && sy.empty()) return p;
    return p.substitute(sx, sy);
}

LPoly backend_sum(const Triangulation& t, const ArcSpec& d, Backend b, int* count) {
    if (b == Backend::snake) return sum_snake_weights(t, d, count);
    TPolygon tp = d.kind == ArcSpec::Kind::plain ? build_plain(t, d) : build_notched(t, d);
    switch (b) {
        case Backend::angles:
            return sum_angle_weights(tp, count);
        case Backend::bipartite:
            return sum_bipartite_weights(tp, count);
        case Backend::qp:
            return sum_qp_weights(tp, count);
        default:
            fail("unknown backend");
    }
}

namespace {

LPoly relabel(const LPoly& p, const Relabeling& r) {
    if (r.empty()) return p;
    int n = p.vars();
    std::map<int, LPoly> sx, sy;
    for (auto [a, b] : r.swaps) {
        sx.emplace(a, LPoly::var_x(n, b));
        sx.emplace(b, LPoly::var_x(n, a));
        sy.emplace(a, LPoly::var_y(n, b));
        sy.emplace(b, LPoly::var_y(n, a));
    }
    return p.substitute(sx, sy);
}

// x_{ell_s} of the loop around puncture s based at the far end of base_arc.
LPoly loop_variable(const Triangulation& t, int base_arc, int s, Backend b, int* count) {
    TPolygon lp = build_loop_polygon(t, base_arc, s);
    LPoly sum(t.num_arcs());
    switch (b) {
        case Backend::angles:
            sum = sum_angle_weights(lp, count);
            break;
        case Backend::bipartite:
            sum = sum_bipartite_weights(lp, count);
            break;
        case Backend::qp:
            sum = sum_qp_weights(lp, count);
            break;
        case Backend::snake: {
            SnakeGraph g = build_snake(lp);
            LPoly acc(t.num_arcs());
            int c = 0;
            for (const PerfectMatching& p : enumerate_pm(g)) {
                acc.add_term(pm_weight_xy(g, p), 1);
                ++c;
            }
            if (count) *count = c;
            sum = acc;
            break;
        }
    }
    LPoly num = apply_phi(t, sum);
    LPoly den = apply_phi(t, LPoly::monomial(cross_monomial(lp)));
    if (!den.is_monomial()) fail("cross image is not a monomial");
    return num * den.terms().begin()->first.inverse();
}

}  // namespace

Expansion cluster_variable(const Triangulation& t, const ArcSpec& d, const ExpandOptions& opt) {
    d.validate(t);
    NormalizedInput ni = normalize_tags(t, d);
    const Triangulation& tt = ni.triangulation;
    const ArcSpec& dd = ni.arc;
    int n = tt.num_arcs();

    Expansion out;
    out.backend = opt.backend;
    out.relabeling = ni.relabeling;
    out.denominator = Monomial(n);

    if (dd.in_triangulation()) {
        out.value = LPoly::var_x(n, dd.base_arc);
        out.object_count = 1;
    } else if (dd.underlying_in_triangulation()) {
        const Arc& base = tt.arc(dd.base_arc);
        LPoly xbase = LPoly::var_x(n, dd.base_arc);
        if (dd.kind == ArcSpec::Kind::notched1) {
            int s = dd.tags[0] == Tag::notched ? base.ends[0] : base.ends[1];
            int r = dd.tags[0] == Tag::notched ? base.ends[1] : base.ends[0];
            (void)r;
            int c = 0;
            LPoly ls = loop_variable(tt, dd.base_arc, s, opt.backend, &c);
            out.object_count = c;
            out.value = LPoly::div_exact(ls, xbase);
        } else {
            int p = base.ends[0], q = base.ends[1];
            int cp = 0, cq = 0;
            LPoly lp = loop_variable(tt, dd.base_arc, p, opt.backend, &cp);
            LPoly lq = loop_variable(tt, dd.base_arc, q, opt.backend, &cq);
            out.object_count = cp * cq;
            if (opt.branch == TwoNotchedBranch::printed_plus_one) {
                out.value =
                    LPoly::div_exact(lp.set_y_one() * lq.set_y_one() + LPoly::one(n), xbase);
            } else {
                LPoly prod_p = LPoly::one(n), prod_q = LPoly::one(n);
                for (const auto& a : tt.arcs) {
                    int ep = tt.end_count(a.id, p), eq = tt.end_count(a.id, q);
                    if (ep) prod_p = prod_p * LPoly::monomial(Monomial::y(n, a.id, ep));
                    if (eq) prod_q = prod_q * LPoly::monomial(Monomial::y(n, a.id, eq));
                }
                LPoly one = LPoly::one(n);
                LPoly correction = (one - prod_p) * (one - prod_q);
                if (opt.branch == TwoNotchedBranch::notched_product) {
                    // x_{d^(p)} x_{d^(q)} y_d + (1 - prod_p)(1 - prod_q), all over x_d.
                    LPoly np = LPoly::div_exact(lp, xbase);
                    LPoly nq = LPoly::div_exact(lq, xbase);
                    out.value = LPoly::div_exact(
                        np * nq * LPoly::var_y(n, dd.base_arc) + correction, xbase);
                } else {
                    LPoly num = lp * lq * LPoly::var_y(n, dd.base_arc) + correction;
                    out.value = LPoly::div_exact(num, xbase);
                }
            }
        }
    } else {
        TPolygon tp = dd.kind == ArcSpec::Kind::plain ? build_plain(tt, dd) : build_notched(tt, dd);
        out.denominator = cross_monomial(tp);
        int c = 0;
        LPoly sum = backend_sum(tt, dd, opt.backend, &c);
        out.object_count = c;
        LPoly num = apply_phi(tt, sum);
        LPoly den = apply_phi(tt, LPoly::monomial(out.denominator));
        if (!den.is_monomial()) fail("cross image is not a monomial");
        out.value = num * den.terms().begin()->first.inverse();
    }

    if (opt.coefficient_free) out.value = out.value.set_y_one();
    out.value = relabel(out.value, ni.relabeling);
    if (!opt.skip_output_checks) {
        if (!out.value.all_coeffs_positive()) fail("expansion has a non-positive coefficient");
        if (!out.value.y_exponents_nonnegative()) fail("expansion has a negative y exponent");
    }
    return out;
}

AnnulusContext annulus_context(const Triangulation& t, const LoopSpec& z) {
    for (const auto& a : t.arcs)
        if (a.notched()) fail("loop elements live on triangulations without notched arcs");
    AnnulusContext ctx{build_annulus(t, z), TPolygon{}, {}, {}, {}, {}};

    int n = static_cast<int>(z.arcs.size());
    ArcSpec cut;
    cut.kind = ArcSpec::Kind::plain;
    cut.triangles.push_back(z.triangles[n - 1]);
    for (int i = 0; i < n; ++i) cut.triangles.push_back(z.triangles[i]);
    cut.arcs = z.arcs;
    ctx.cut = build_plain(t, cut);

    // Distinguished angles of the cut polygon: in its first triangle, beta is
    // the first crossing, alpha the last one, tau the remaining side.
    auto slot_of = [&](int copy, int edge) {
        for (int j = 0; j < 3; ++j)
            if (ctx.cut.mesh.tris[copy].edges[j] == edge) return j;
        fail("cut polygon slot lookup failed");
    };
    int beta0 = slot_of(0, ctx.cut.tau.front());
    int alpha_label = ctx.cut.edge(ctx.cut.tau.back()).label;
    int alpha0 = -1, tau0 = -1;
    for (int j = 0; j < 3; ++j) {
        if (j == beta0) continue;
        if (ctx.cut.edge(ctx.cut.mesh.tris[0].edges[j]).label == alpha_label)
            alpha0 = j;
        else
            tau0 = j;
    }
    if (alpha0 < 0 || tau0 < 0) fail("cut triangle sides not identifiable");
    auto corner_between = [&](int copy, int s1, int s2) -> Angle {
        for (int j = 0; j < 3; ++j) {
            int a = j, b = (j + 2) % 3;
            if ((a == s1 && b == s2) || (a == s2 && b == s1)) return {copy, j};
        }
        fail("no corner between the given slots");
    };
    ctx.b = corner_between(0, tau0, beta0);
    ctx.c = corner_between(0, alpha0, beta0);
    int alpha_n = slot_of(n, ctx.cut.tau.back());
    int beta_label = ctx.cut.edge(ctx.cut.tau.front()).label;
    int beta_n = -1;
    for (int j = 0; j < 3; ++j)
        if (j != alpha_n && ctx.cut.edge(ctx.cut.mesh.tris[n].edges[j]).label == beta_label)
            beta_n = j;
    if (beta_n < 0) fail("cut triangle sides not identifiable at the far end");
    ctx.c_last = corner_between(n, alpha_n, beta_n);

    AngleMatching amin = minimal_matching(ctx.cut);
    ctx.minimal = transport_to_annulus(ctx, amin);
    return ctx;
}

AngleMatching transport_to_annulus(const AnnulusContext& ctx, const AngleMatching& cut_matching) {
    int n = ctx.annulus.num_triangles();
    std::set<Angle> in(cut_matching.begin(), cut_matching.end());
    bool has_b = in.count(ctx.b) > 0;
    // With b the matching contains the far copy's alpha-beta angle and loses
    // it; without b it contains and loses the near copy's one.
    const Angle& dropped = has_b ? ctx.c_last : ctx.c;
    if (!in.count(dropped)) fail("cut matching is not good; cannot transport");
    AngleMatching out;
    for (const Angle& a : cut_matching) {
        if (a == dropped) continue;
        int copy = has_b ? (a.tri == 0 ? n - 1 : a.tri - 1) : a.tri - 1;
        if (copy < 0 || copy >= n) fail("transport hit a removed triangle");
        out.push_back({copy, a.corner});
    }
    std::sort(out.begin(), out.end());
    if (!is_angle_matching(ctx.annulus, out)) fail("transported matching is not a matching");
    return out;
}

Expansion loop_element(const Triangulation& t, const LoopSpec& z, bool band_backend,
                       bool coefficient_free) {
    z.validate(t);
    AnnulusContext ctx = annulus_context(t, z);
    Monomial cross = cross_monomial(ctx.annulus);

    Expansion out;
    out.denominator = cross;
    out.backend = band_backend ? Backend::snake : Backend::angles;
    LPoly sum(t.num_arcs());
    if (band_backend) {
        BandGraph b = build_band(ctx.cut);
        int c = 0;
        for (const auto& gm : band_good_pms(b)) {
            sum.add_term(gm.weight, 1);
            ++c;
        }
        out.object_count = c;
    } else {
        int c = 0;
        for (const AngleMatching& a : good_enumerate(ctx.annulus)) {
            sum.add_term(weight_xy(ctx.annulus, a, ctx.minimal), 1);
            ++c;
        }
        out.object_count = c;
    }
    out.value = sum * cross.inverse();
    if (coefficient_free) out.value = out.value.set_y_one();
    if (!out.value.all_coeffs_positive()) fail("loop element has a non-positive coefficient");
    return out;
}

namespace {

std::vector<int> combinatorial_f_vector(const Triangulation& t, const ArcSpec& d) {
    int n = t.num_arcs();
    std::vector<int> f(n, 0);
    if (d.in_triangulation()) return f;
    if (d.underlying_in_triangulation()) {
        const Arc& base = t.arc(d.base_arc);
        if (d.kind == ArcSpec::Kind::notched1) {
            int s = d.tags[0] == Tag::notched ? base.ends[0] : base.ends[1];
            for (int i = 1; i <= n; ++i)
                f[i - 1] = t.end_count(i, s) - (i == d.base_arc ? 1 : 0);
        } else {
            for (int i = 1; i <= n; ++i)
                f[i - 1] = t.end_count(i, base.ends[0]) + t.end_count(i, base.ends[1]);
        }
        return f;
    }
    TPolygon tp = d.kind == ArcSpec::Kind::plain ? build_plain(t, d) : build_notched(t, d);
    std::vector<int> count(n + 1, 0);
    for (int e : tp.diagonals()) count[tp.edge(e).label] += 1;
    for (int i = 1; i <= n; ++i) {
        const Arc& a = t.arc(i);
        if (a.notched())
            f[i - 1] = count[i] - count[t.radius_of_loop(i)];
        else
            f[i - 1] = count[i];
    }
    return f;
}

}  // namespace

FVectorReport f_vector(const Triangulation& t, const ArcSpec& d) {
    d.validate(t);
    NormalizedInput ni = normalize_tags(t, d);
    const Triangulation& tt = ni.triangulation;
    const ArcSpec& dd = ni.arc;
    int n = tt.num_arcs();

    FVectorReport rep;
    Expansion ex = cluster_variable(tt, dd, {});
    rep.from_expansion.resize(n);
    for (int i = 1; i <= n; ++i) rep.from_expansion[i - 1] = ex.value.max_y_degree(i);

    if (!dd.underlying_in_triangulation()) {
        TPolygon tp =
            dd.kind == ArcSpec::Kind::plain ? build_plain(tt, dd) : build_notched(tt, dd);
        Monomial prod(n);
        for (int e : tp.diagonals()) {
            int label = tp.edge(e).label;
            if (label > 0) prod.yexp[label - 1] += 1;
        }
        LPoly img = apply_phi(tt, LPoly::monomial(prod));
        if (!img.is_monomial()) fail("fan product image is not a monomial");
        Monomial m = img.terms().begin()->first;
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) {
            if (m.yexp[i] < 0) fail("fan product has a negative exponent");
            v[i] = m.yexp[i];
        }
        rep.from_fan_product = v;
    }
    rep.combinatorial = combinatorial_f_vector(tt, dd);

    // Swap entries back to the caller's labels.
    for (auto [a, b] : ni.relabeling.swaps) {
        std::swap(rep.from_expansion[a - 1], rep.from_expansion[b - 1]);
        if (rep.from_fan_product)
            std::swap((*rep.from_fan_product)[a - 1], (*rep.from_fan_product)[b - 1]);
        std::swap(rep.combinatorial[a - 1], rep.combinatorial[b - 1]);
    }
    return rep;
}

int intersection_number(const Triangulation& t, const ArcSpec& d, int arc) {
    d.validate(t);
    NormalizedInput ni = normalize_tags(t, d);
    int target = arc;
    for (auto [a, b] : ni.relabeling.swaps) {
        if (target == a)
            target = b;
        else if (target == b)
            target = a;
    }
    return combinatorial_f_vector(ni.triangulation, ni.arc)[target - 1];
}

}  // namespace clexp
