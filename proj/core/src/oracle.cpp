#include "clexp/oracle.hpp"

#include <algorithm>
#include <deque>

namespace clexp {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SurfaceError(msg); }

}  // namespace

Seed Seed::initial(const std::vector<std::vector<int>>& b) {
    Seed s;
    int n = static_cast<int>(b.size());
    for (int i = 1; i <= n; ++i) s.cluster.push_back(LPoly::var_x(n, i));
    s.ext_matrix.assign(2 * n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.ext_matrix[i][j] = b[i][j];
    for (int i = 0; i < n; ++i) s.ext_matrix[n + i][i] = 1;
    s.check();
    return s;
}

void Seed::check() const {
    int n = rank();
    if (static_cast<int>(ext_matrix.size()) != 2 * n) fail("seed: bad matrix height");
    for (const auto& row : ext_matrix)
        if (static_cast<int>(row.size()) != n) fail("seed: bad matrix width");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (ext_matrix[i][j] != -ext_matrix[j][i]) fail("seed: upper block not skew-symmetric");
}

Seed mutate(const Seed& s, int k) {
    int n = s.rank();
    if (k < 1 || k > n) fail("mutate: direction out of range");
    int kk = k - 1;

    LPoly m1 = LPoly::one(n), m2 = LPoly::one(n);
    for (int i = 0; i < n; ++i) {
        int b = s.ext_matrix[i][kk];
        for (int r = 0; r < b; ++r) m1 = m1 * s.cluster[i];
        for (int r = 0; r < -b; ++r) m2 = m2 * s.cluster[i];
    }
    Monomial y1(n), y2(n);
    for (int i = 0; i < n; ++i) {
        int b = s.ext_matrix[n + i][kk];
        if (b > 0) y1.yexp[i] += b;
        if (b < 0) y2.yexp[i] += -b;
    }
    LPoly rhs = m1 * y1 + m2 * y2;

    Seed out = s;
    out.cluster[kk] = LPoly::div_exact(rhs, s.cluster[kk]);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < n; ++j) {
            int b = s.ext_matrix[i][j];
            if (i == kk || j == kk) {
                out.ext_matrix[i][j] = -b;
            } else {
                int bik = s.ext_matrix[i][kk];
                int bkj = s.ext_matrix[kk][j];
                int plus = std::max(bik * bkj, 0);
                out.ext_matrix[i][j] = b + (bik > 0 ? plus : bik < 0 ? -plus : 0);
            }
        }
    out.check();
    return out;
}

Closure mutation_closure(const Seed& s, int max_depth, size_t seed_limit) {
    Closure cl;
    auto seed_key = [](const Seed& sd) {
        std::vector<std::string> parts;
        for (const auto& v : sd.cluster) parts.push_back(v.str());
        std::sort(parts.begin(), parts.end());
        std::string key;
        for (const auto& p : parts) {
            key += p;
            key += '|';
        }
        return key;
    };
    std::set<std::string> seen_seeds;
    std::deque<std::pair<Seed, int>> frontier;
    frontier.emplace_back(s, 0);
    seen_seeds.insert(seed_key(s));
    while (!frontier.empty()) {
        auto [cur, depth] = frontier.front();
        frontier.pop_front();
        ++cl.seeds_visited;
        for (const auto& v : cur.cluster) {
            // Laurent phenomenon: denominators are x-monomials, coefficients
            // stay polynomial in the y's.
            if (!v.y_exponents_nonnegative()) fail("closure variable has negative y exponent");
            cl.variables.insert(v.str());
        }
        if (depth == max_depth) {
            bool frontier_exhausted = true;
            for (int k = 1; k <= cur.rank(); ++k) {
                Seed nxt = mutate(cur, k);
                if (!seen_seeds.count(seed_key(nxt))) frontier_exhausted = false;
            }
            if (!frontier_exhausted) cl.complete = false;
            continue;
        }
        for (int k = 1; k <= cur.rank(); ++k) {
            Seed nxt = mutate(cur, k);
            std::string key = seed_key(nxt);
            if (seen_seeds.count(key)) continue;
            if (seen_seeds.size() >= seed_limit) {
                cl.complete = false;
                continue;
            }
            seen_seeds.insert(key);
            frontier.emplace_back(std::move(nxt), depth + 1);
        }
    }
    return cl;
}

VerifyResult verify_against_formula(const Triangulation& t,
                                    const std::vector<std::pair<std::string, ArcSpec>>& arcs,
                                    int max_depth, Backend backend) {
    Seed s = Seed::initial(t.exchange_matrix());
    Closure cl = mutation_closure(s, max_depth);
    VerifyResult out;
    out.closure_size = static_cast<int>(cl.variables.size());
    out.closure_complete = cl.complete;
    for (const auto& [name, spec] : arcs) {
        ExpandOptions opt;
        opt.backend = backend;
        Expansion e = cluster_variable(t, spec, opt);
        VerifyResult::Item item;
        item.name = name;
        item.value = e.value.str();
        item.in_closure = cl.contains(e.value);
        out.items.push_back(item);
    }
    return out;
}

}  // namespace clexp
