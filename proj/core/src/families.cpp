#include "equimatch/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>

namespace equimatch {

namespace {

LinExpr lit(int c) {
    LinExpr e;
    e.c0 = c;
    return e;
}

LinExpr var(Param p) {
    LinExpr e;
    e.coeff[p] = 1;
    return e;
}

LinExpr operator+(LinExpr a, const LinExpr& b) {
    a.c0 += b.c0;
    for (int p = 0; p < kParamCount; ++p) a.coeff[p] += b.coeff[p];
    return a;
}

LinExpr operator-(LinExpr a, const LinExpr& b) {
    a.c0 -= b.c0;
    for (int p = 0; p < kParamCount; ++p) a.coeff[p] -= b.coeff[p];
    return a;
}

LinConstraint ge(const LinExpr& lhs, const LinExpr& rhs, std::string text) {
    return {lhs - rhs, false, std::move(text)};
}

FamilyPattern make_pattern(FamilyId id, TemplateId tmpl, std::vector<LinExpr> mults,
                           std::vector<LinConstraint> constraints) {
    FamilyPattern pat;
    pat.id = id;
    pat.tmpl = tmpl;
    pat.mults = std::move(mults);
    pat.constraints = std::move(constraints);
    pat.param_mask = 0;
    auto scan = [&](const LinExpr& e) {
        for (int p = 0; p < kParamCount; ++p)
            if (e.coeff[p] != 0) pat.param_mask |= uint8_t(1u << p);
    };
    for (const auto& e : pat.mults) scan(e);
    for (const auto& c : pat.constraints) scan(c.expr);
    return pat;
}

std::vector<FamilyPattern> build_table() {
    const LinExpr n = var(ParamN), m = var(ParamM), r = var(ParamR), s = var(ParamS),
                  k = var(ParamK), l = var(ParamL);
    const LinExpr zero = lit(0), one = lit(1);

    std::vector<FamilyPattern> table;
    table.reserve(kFamilyCount);

    table.push_back(make_pattern(FamilyId::C5, TemplateId::G2,
                                 {zero, zero, zero, one, one, one, one, one, zero, zero, zero},
                                 {}));
    table.push_back(
        make_pattern(FamilyId::C7, TemplateId::G1, {one, one, one, one, one, one, one}, {}));
    table.push_back(make_pattern(FamilyId::F11, TemplateId::G2,
                                 {n, n, zero, one, one, one, one, one, zero, zero, zero},
                                 {ge(n, one, "n >= 1")}));
    table.push_back(make_pattern(FamilyId::F12, TemplateId::G1, {n, n, one, one, one, one, one},
                                 {ge(n, lit(2), "n >= 2")}));
    table.push_back(make_pattern(
        FamilyId::F21, TemplateId::G2,
        {r, n, s, one, n + one - r - s, one, one, one, zero, zero, zero},
        {ge(n, one, "n >= 1"), ge(r, lit(0), "r >= 0"), ge(s, lit(0), "s >= 0"),
         ge(n, r + s, "r+s <= n")}));
    table.push_back(make_pattern(
        FamilyId::F22, TemplateId::G1, {n, r, one, one, one, one, n - r + one},
        {ge(n, lit(2), "n >= 2"), ge(r, one, "r >= 1"), ge(n, r, "r <= n")}));
    table.push_back(make_pattern(
        FamilyId::F3, TemplateId::G2,
        {zero, zero, zero, one, one, one, r, s, zero, n + one - r, n + one - s},
        {ge(n, one, "n >= 1"), ge(r, one, "r >= 1"), ge(n + one, r, "r <= n+1"),
         ge(s, one, "s >= 1"), ge(n + one, s, "s <= n+1")}));
    table.push_back(make_pattern(
        FamilyId::F4, TemplateId::G2,
        {zero, zero, zero, one, one, r, n + one, s, zero, zero, n + lit(2) - r - s},
        {ge(n, lit(2), "n >= 2"), ge(r, lit(2), "r >= 2"), ge(s, lit(2), "s >= 2"),
         ge(n + lit(2), r + s, "r+s <= n+2")}));
    table.push_back(make_pattern(FamilyId::G11, TemplateId::G1, {n, n, one, m, m, one, one},
                                 {ge(n, lit(2), "n >= 2"), ge(m, lit(2), "m >= 2")}));
    table.push_back(make_pattern(
        FamilyId::G12, TemplateId::G1, {n, r, one, m, m, one, n - r + one},
        {ge(n, lit(2), "n >= 2"), ge(r, one, "r >= 1"), ge(n, r, "r <= n"),
         ge(m, lit(2), "m >= 2")}));
    table.push_back(make_pattern(
        FamilyId::G21, TemplateId::G2,
        {n, n, zero, one, one, one, one, m + one, zero, m, zero},
        {ge(n, one, "n >= 1"), ge(m, one, "m >= 1")}));
    table.push_back(make_pattern(
        FamilyId::G22, TemplateId::G2,
        {n, n, zero, one, one, one, k + one, m + one, zero, m - k, zero},
        {ge(n, one, "n >= 1"), ge(m, one, "m >= 1"), ge(k, one, "k >= 1"),
         ge(m, k, "k <= m")}));
    table.push_back(make_pattern(
        FamilyId::G23, TemplateId::G2,
        {n, n, zero, l + one, one, one, k + one, m + one, zero, m - k - l, zero},
        {ge(n, one, "n >= 1"), ge(m, one, "m >= 1"), ge(l, one, "l >= 1"),
         ge(k, lit(0), "k >= 0"), ge(m, k + l, "k+l <= m")}));
    table.push_back(make_pattern(
        FamilyId::G31, TemplateId::G2,
        {r, n, s, one, n + one - r - s, one, m + one, m + one, zero, zero, zero},
        {ge(n, one, "n >= 1"), ge(m, one, "m >= 1"), ge(r, lit(0), "r >= 0"),
         ge(s, lit(0), "s >= 0"), ge(n, r + s, "r+s <= n")}));
    table.push_back(make_pattern(
        FamilyId::G32, TemplateId::G2,
        {r, n, zero, one, n + one - r, one, k + one, m + one, zero, m - k, zero},
        {ge(n, one, "n >= 1"), ge(m, one, "m >= 1"), ge(r, lit(0), "r >= 0"),
         ge(n, r, "r <= n"), ge(k, lit(0), "k >= 0"), ge(m, k, "k <= m")}));
    // second g32 placement: a plain K_{m,m} on the cycle's both-neighbor
    // blocks combined with an unrestricted 4-arc component
    table.push_back(make_pattern(
        FamilyId::G32, TemplateId::G2,
        {zero, m, zero, one, m + one, one, r, s, zero, n + one - r, n + one - s},
        {ge(n, one, "n >= 1"), ge(m, one, "m >= 1"), ge(r, one, "r >= 1"),
         ge(n + one, r, "r <= n+1"), ge(s, one, "s >= 1"), ge(n + one, s, "s <= n+1")}));
    return table;
}

}  // namespace

Graph template_graph(TemplateId t) {
    if (t == TemplateId::G1) {
        // the 7-cycle u1 u7 u6 u5 u4 u3 u2, 0-indexed
        return Graph::from_edges(7, {{0, 6}, {6, 5}, {5, 4}, {4, 3}, {3, 2}, {2, 1}, {1, 0}});
    }
    return Graph::from_edges(11, {{0, 1}, {0, 5}, {1, 2}, {1, 4}, {2, 3},
                                  {3, 4}, {3, 7}, {3, 8}, {4, 5}, {5, 6},
                                  {6, 7}, {6, 10}, {7, 9}, {8, 9}, {9, 10}});
}

char param_name(int p) {
    static constexpr char names[kParamCount] = {'n', 'm', 'r', 's', 'k', 'l'};
    return names[p];
}

std::string family_token(FamilyId id) {
    static const char* tokens[kFamilyCount] = {"c5",  "c7",  "f11", "f12", "f21",
                                               "f22", "f3",  "f4",  "g11", "g12",
                                               "g21", "g22", "g23", "g31", "g32"};
    return tokens[static_cast<int>(id)];
}

std::optional<FamilyId> family_from_token(const std::string& token) {
    for (int i = 0; i < kFamilyCount; ++i)
        if (family_token(static_cast<FamilyId>(i)) == token) return static_cast<FamilyId>(i);
    return std::nullopt;
}

const std::vector<FamilyPattern>& family_table() {
    static const std::vector<FamilyPattern> table = build_table();
    return table;
}

std::vector<const FamilyPattern*> patterns_for(FamilyId id) {
    std::vector<const FamilyPattern*> out;
    for (const auto& pat : family_table())
        if (pat.id == id) out.push_back(&pat);
    return out;
}

namespace {

// One row accepts a parameter assignment when the assignment is zero on
// the row's unused slots and satisfies its constraints plus the
// nonnegativity guard. Rows of one family have disjoint acceptance.
std::optional<std::string> check_against(const FamilyPattern& pat, const FamilyParams& p) {
    for (int q = 0; q < kParamCount; ++q)
        if (!pat.uses(q) && p.values[q] != 0)
            return std::string("family ") + family_token(p.family) +
                   " takes no parameter " + param_name(q);
    for (const auto& c : pat.constraints) {
        long long v = c.expr.eval(p.values);
        if (c.equality ? v != 0 : v < 0) return c.text;
    }
    for (size_t i = 0; i < pat.mults.size(); ++i)
        if (pat.mults[i].eval(p.values) < 0)
            return "multiplicity of template vertex u" + std::to_string(i + 1) +
                   " would be negative";
    return std::nullopt;
}

const FamilyPattern* accepting_row(const FamilyParams& p) {
    for (const auto& pat : family_table())
        if (pat.id == p.family && !check_against(pat, p)) return &pat;
    return nullptr;
}

}  // namespace

std::optional<std::string> check_params(const FamilyParams& p) {
    std::optional<std::string> first;
    for (const auto& pat : family_table()) {
        if (pat.id != p.family) continue;
        auto violation = check_against(pat, p);
        if (!violation) return std::nullopt;
        if (!first) first = violation;
    }
    return first;
}

MultiplicityVector evaluate_mults(const FamilyParams& p) {
    const FamilyPattern* pat = accepting_row(p);
    if (!pat) pat = patterns_for(p.family).front();
    MultiplicityVector out(pat->mults.size());
    for (size_t i = 0; i < pat->mults.size(); ++i)
        out[i] = static_cast<int>(pat->mults[i].eval(p.values));
    return out;
}

Graph instantiate(const FamilyParams& p) {
    const FamilyPattern* pat = accepting_row(p);
    if (!pat)
        throw std::invalid_argument("instantiate(" + family_token(p.family) +
                                    "): constraint violated: " + *check_params(p));
    return blow_up(template_graph(pat->tmpl), evaluate_mults(p));
}

namespace {

// Bounds for one parameter from the constraints whose other parameters are
// already assigned. `assigned` marks decided slots; their values live in
// `values`.
struct Range {
    long long lo, hi;
    bool empty() const { return lo > hi; }
};

Range propagate_range(const FamilyPattern& pat, const LinExpr& size_expr, int size_limit, int p,
                      const std::array<int, kParamCount>& values,
                      const std::array<char, kParamCount>& assigned, long long default_hi) {
    Range range{0, default_hi};
    auto apply = [&](const LinExpr& expr, bool equality, long long slack) {
        // expr(+slack applied by caller as part of expr) with only p free
        long long residual = expr.c0 + slack;
        int cp = expr.coeff[p];
        for (int q = 0; q < kParamCount; ++q) {
            if (q == p) continue;
            if (expr.coeff[q] == 0) continue;
            if (!assigned[q]) return;  // more than one free parameter
            residual += static_cast<long long>(expr.coeff[q]) * values[q];
        }
        if (cp == 0) return;
        if (equality) {
            // cp * p = -residual
            if ((-residual) % cp != 0) {
                range.lo = 1;
                range.hi = 0;
                return;
            }
            long long v = -residual / cp;
            range.lo = std::max(range.lo, v);
            range.hi = std::min(range.hi, v);
        } else if (cp > 0) {
            // p >= ceil(-residual / cp)
            long long num = -residual;
            long long bound = num >= 0 ? (num + cp - 1) / cp : -((-num) / cp);
            range.lo = std::max(range.lo, bound);
        } else {
            // p <= floor(residual / -cp)
            long long d = -cp;
            long long bound = residual >= 0 ? residual / d : -((-residual + d - 1) / d);
            range.hi = std::min(range.hi, bound);
        }
    };
    for (const auto& c : pat.constraints) apply(c.expr, c.equality, 0);
    // vertex budget: size_limit - size_expr >= 0
    LinExpr budget;
    budget.c0 = size_limit - size_expr.c0;
    for (int q = 0; q < kParamCount; ++q) budget.coeff[q] = -size_expr.coeff[q];
    apply(budget, false, 0);
    return range;
}

}  // namespace

std::vector<std::pair<FamilyParams, Graph>> enumerate_members(FamilyId id, int max_vertices) {
    if (max_vertices > kEnumerationVertexCeiling)
        throw CeilingExceeded("enumerate_members: max_vertices " + std::to_string(max_vertices) +
                              " above ceiling " + std::to_string(kEnumerationVertexCeiling));
    std::set<FamilyParams> assignments;
    for (const FamilyPattern* pat_ptr : patterns_for(id)) {
        const FamilyPattern& pat = *pat_ptr;
        LinExpr size_expr;
        for (const auto& e : pat.mults) size_expr = size_expr + e;

        std::vector<int> used;
        for (int p = 0; p < kParamCount; ++p)
            if (pat.uses(p)) used.push_back(p);

        FamilyParams current{id, {}};
        std::array<char, kParamCount> assigned{};

        auto emit_if_valid = [&]() {
            if (check_against(pat, current)) return;
            if (size_expr.eval(current.values) > max_vertices) return;
            assignments.insert(current);
        };

        auto descend = [&](auto&& self, size_t idx) -> void {
            if (idx == used.size()) {
                emit_if_valid();
                return;
            }
            int p = used[idx];
            Range range = propagate_range(pat, size_expr, max_vertices, p, current.values,
                                          assigned, max_vertices);
            if (range.empty()) return;
            for (long long v = range.lo; v <= range.hi; ++v) {
                current.values[p] = static_cast<int>(v);
                assigned[p] = 1;
                self(self, idx + 1);
                assigned[p] = 0;
                current.values[p] = 0;
            }
        };
        descend(descend, 0);
    }
    std::vector<std::pair<FamilyParams, Graph>> out;
    out.reserve(assignments.size());
    for (const auto& params : assignments) out.emplace_back(params, instantiate(params));
    return out;
}

// ---------------------------------------------------------------------------
// multiplicity pattern matching
// ---------------------------------------------------------------------------

namespace {

// Which template positions can carry multiplicity zero under some valid
// parameter assignment. Probed over a small box; every vanishing entry in
// the table is a complement form (m-k, n+1-r, ...) that first hits zero
// at parameter values well inside it.
struct PatternMeta {
    std::vector<char> always_zero;  // expr is literally 0
    std::vector<char> maybe_zero;   // non-constant, zero-feasible
};

PatternMeta probe_pattern(const FamilyPattern& pat) {
    constexpr int kProbeMax = 8;
    PatternMeta meta;
    size_t count = pat.mults.size();
    meta.always_zero.assign(count, 0);
    meta.maybe_zero.assign(count, 0);
    for (size_t i = 0; i < count; ++i)
        if (pat.mults[i].is_const() && pat.mults[i].c0 == 0) meta.always_zero[i] = 1;

    std::vector<int> used;
    for (int p = 0; p < kParamCount; ++p)
        if (pat.uses(p)) used.push_back(p);

    std::array<int, kParamCount> values{};
    auto walk = [&](auto&& self, size_t idx) -> void {
        if (idx == used.size()) {
            for (const auto& c : pat.constraints) {
                long long v = c.expr.eval(values);
                if (c.equality ? v != 0 : v < 0) return;
            }
            for (size_t i = 0; i < count; ++i) {
                long long v = pat.mults[i].eval(values);
                if (v < 0) return;
            }
            for (size_t i = 0; i < count; ++i)
                if (!meta.always_zero[i] && pat.mults[i].eval(values) == 0)
                    meta.maybe_zero[i] = 1;
            return;
        }
        for (int v = 0; v <= kProbeMax; ++v) {
            values[used[idx]] = v;
            self(self, idx + 1);
        }
        values[used[idx]] = 0;
    };
    walk(walk, 0);
    return meta;
}

const std::vector<PatternMeta>& pattern_meta() {
    static const std::vector<PatternMeta> meta = [] {
        std::vector<PatternMeta> out;
        for (const auto& pat : family_table()) out.push_back(probe_pattern(pat));
        return out;
    }();
    return meta;
}

// Exact integer solving of the per-map linear system. Rows are
// (coefficients over used params, rhs).
struct LinearSystem {
    std::vector<int> cols;  // param ids
    std::vector<std::vector<long long>> rows;

    void add(const LinExpr& expr, long long target) {
        std::vector<long long> row(cols.size() + 1, 0);
        for (size_t i = 0; i < cols.size(); ++i) row[i] = expr.coeff[cols[i]];
        row[cols.size()] = target - expr.c0;
        rows.push_back(std::move(row));
    }

    // Returns assignments over cols; empty when inconsistent. Bounded
    // enumeration handles rank-deficient systems (never reached by the
    // fixed table, kept for safety).
    std::vector<std::vector<long long>> solve(long long free_bound) const {
        auto work = rows;
        size_t q = cols.size();
        std::vector<int> pivot_row(q, -1);
        size_t next_row = 0;
        for (size_t c = 0; c < q && next_row < work.size(); ++c) {
            size_t sel = next_row;
            while (sel < work.size() && work[sel][c] == 0) ++sel;
            if (sel == work.size()) continue;
            std::swap(work[sel], work[next_row]);
            for (size_t r2 = 0; r2 < work.size(); ++r2) {
                if (r2 == next_row || work[r2][c] == 0) continue;
                long long a = work[next_row][c], b = work[r2][c];
                for (size_t j = 0; j <= q; ++j)
                    work[r2][j] = work[r2][j] * a - work[next_row][j] * b;
                long long g = 0;
                for (size_t j = 0; j <= q; ++j) g = std::gcd(g, std::abs(work[r2][j]));
                if (g > 1)
                    for (size_t j = 0; j <= q; ++j) work[r2][j] /= g;
            }
            pivot_row[c] = static_cast<int>(next_row);
            ++next_row;
        }
        for (size_t r = next_row; r < work.size(); ++r)
            if (work[r][q] != 0) return {};  // 0 = nonzero

        std::vector<int> free_cols;
        for (size_t c = 0; c < q; ++c)
            if (pivot_row[c] == -1) free_cols.push_back(static_cast<int>(c));

        std::vector<std::vector<long long>> solutions;
        std::vector<long long> value(q, 0);
        auto emit_for_free_assignment = [&]() {
            for (size_t c = 0; c < q; ++c) {
                if (pivot_row[c] == -1) continue;
                const auto& row = work[pivot_row[c]];
                long long rhs = row[q];
                for (size_t j = 0; j < q; ++j)
                    if (j != c && row[j] != 0) rhs -= row[j] * value[j];
                if (rhs % row[c] != 0) return;
                value[c] = rhs / row[c];
            }
            solutions.push_back(value);
        };
        if (free_cols.empty()) {
            // fully-reduced RREF: every pivot row has zeros elsewhere
            emit_for_free_assignment();
            return solutions;
        }
        long long combos = 1;
        for (size_t i = 0; i < free_cols.size(); ++i) {
            combos *= free_bound + 1;
            if (combos > (1 << 20))
                throw std::runtime_error("match_multiplicities: pattern system unexpectedly "
                                         "underdetermined beyond enumeration budget");
        }
        auto walk = [&](auto&& self, size_t idx) -> void {
            if (idx == free_cols.size()) {
                emit_for_free_assignment();
                return;
            }
            for (long long v = 0; v <= free_bound; ++v) {
                value[free_cols[idx]] = v;
                self(self, idx + 1);
            }
        };
        walk(walk, 0);
        return solutions;
    }
};

// Backtracking enumeration of admissible maps from the surviving template
// vertices onto the quotient h: adjacent template vertices map to distinct
// adjacent images, nonadjacent ones to equal or nonadjacent images, and
// every h vertex must be hit.
struct MapSearch {
    const Graph& tmpl;
    const Graph& h;
    const std::vector<int>& survivors;        // template vertex ids, search order
    std::vector<int> surviving_degree;        // template vertex -> degree within survivors
    std::vector<int> image;                   // survivor index -> h vertex
    std::vector<int> hit_count;               // h vertex -> how many preimages
    int uncovered = 0;
    bool found_any = false;

    MapSearch(const Graph& t, const Graph& quotient, const std::vector<int>& surv)
        : tmpl(t), h(quotient), survivors(surv) {
        std::vector<char> in_surv(tmpl.n, 0);
        for (int s : survivors) in_surv[s] = 1;
        surviving_degree.assign(tmpl.n, 0);
        for (int s : survivors)
            for (int u : tmpl.adj[s])
                if (in_surv[u]) ++surviving_degree[s];
    }

    template <typename Leaf>
    void search(Leaf&& leaf) {
        image.assign(survivors.size(), -1);
        hit_count.assign(h.n, 0);
        uncovered = h.n;
        place(0, leaf);
    }

    template <typename Leaf>
    void place(size_t idx, Leaf&& leaf) {
        if (idx == survivors.size()) {
            if (uncovered == 0) {
                found_any = true;
                leaf(image);
            }
            return;
        }
        // every remaining survivor covers at most one new h vertex
        if (uncovered > static_cast<int>(survivors.size() - idx)) return;
        int t = survivors[idx];
        for (int v = 0; v < h.n; ++v) {
            // the image's neighborhood is the mapped surviving neighborhood
            if (h.degree(v) > surviving_degree[t]) continue;
            bool ok = true;
            for (size_t j = 0; j < idx && ok; ++j) {
                bool t_adj = tmpl.has_edge(t, survivors[j]);
                if (image[j] == v) {
                    if (t_adj) ok = false;  // adjacent vertices cannot merge
                } else if (t_adj != h.has_edge(v, image[j])) {
                    ok = false;
                }
            }
            if (!ok) continue;
            image[idx] = v;
            if (hit_count[v]++ == 0) --uncovered;
            place(idx + 1, leaf);
            if (--hit_count[v] == 0) ++uncovered;
            image[idx] = -1;
        }
    }
};

}  // namespace

MatchDetails match_multiplicities_details(const Graph& h, const MultiplicityVector& mults) {
    if (h.n > kQuotientCeiling)
        throw CeilingExceeded("match_multiplicities: quotient has " + std::to_string(h.n) +
                              " vertices, ceiling is " + std::to_string(kQuotientCeiling));
    if (static_cast<int>(mults.size()) != h.n)
        throw std::invalid_argument("match_multiplicities: multiplicity length mismatch");
    for (int v = 0; v < h.n; ++v)
        if (mults[v] < 1)
            throw std::invalid_argument("match_multiplicities: multiplicities must be >= 1");
    for (int u = 0; u < h.n; ++u)
        for (int v = u + 1; v < h.n; ++v)
            if (h.adj[u] == h.adj[v])
                throw std::invalid_argument("match_multiplicities: input has twins " +
                                            std::to_string(u) + "," + std::to_string(v));

    MatchDetails details;
    std::set<FamilyParams> seen;
    long long mult_sum = 0;
    for (int v = 0; v < h.n; ++v) mult_sum += mults[v];

    const auto& table = family_table();
    const auto& metas = pattern_meta();
    for (size_t fi = 0; fi < table.size(); ++fi) {
        const FamilyPattern& pat = table[fi];
        const PatternMeta& meta = metas[fi];
        const Graph tmpl = template_graph(pat.tmpl);

        std::vector<int> optional_zero;
        std::vector<int> base_survivors;
        for (int t = 0; t < tmpl.n; ++t) {
            if (meta.always_zero[t]) continue;
            if (meta.maybe_zero[t]) optional_zero.push_back(t);
            base_survivors.push_back(t);
        }

        std::vector<int> used_cols;
        for (int p = 0; p < kParamCount; ++p)
            if (pat.uses(p)) used_cols.push_back(p);

        size_t zero_choices = size_t(1) << optional_zero.size();
        for (size_t zmask = 0; zmask < zero_choices; ++zmask) {
            std::vector<int> survivors;
            std::vector<int> deleted_optional;
            for (int t : base_survivors) {
                bool drop = false;
                for (size_t z = 0; z < optional_zero.size(); ++z)
                    if (optional_zero[z] == t && ((zmask >> z) & 1)) drop = true;
                (drop ? deleted_optional : survivors).push_back(t);
            }
            if (static_cast<int>(survivors.size()) < h.n) continue;

            MapSearch search(tmpl, h, survivors);
            search.search([&](const std::vector<int>& image) {
                LinearSystem system;
                system.cols = used_cols;
                for (int v = 0; v < h.n; ++v) {
                    LinExpr total;
                    for (size_t i = 0; i < survivors.size(); ++i)
                        if (image[i] == v) total = total + pat.mults[survivors[i]];
                    system.add(total, mults[v]);
                }
                for (int t : deleted_optional) system.add(pat.mults[t], 0);
                for (const auto& c : pat.constraints)
                    if (c.equality) system.add(c.expr, 0);

                for (const auto& sol : system.solve(mult_sum + 2)) {
                    FamilyParams params{pat.id, {}};
                    bool in_range = true;
                    for (size_t i = 0; i < used_cols.size(); ++i) {
                        if (sol[i] < 0 || sol[i] > std::numeric_limits<int>::max())
                            in_range = false;
                        else
                            params.values[used_cols[i]] = static_cast<int>(sol[i]);
                    }
                    if (!in_range || check_params(params)) continue;
                    // re-verify the multiplicity equations on the solution
                    MultiplicityVector got = evaluate_mults(params);
                    bool consistent = true;
                    for (int v = 0; v < h.n && consistent; ++v) {
                        long long sum = 0;
                        for (size_t i = 0; i < survivors.size(); ++i)
                            if (image[i] == v) sum += got[survivors[i]];
                        if (sum != mults[v]) consistent = false;
                    }
                    for (int t : deleted_optional)
                        if (got[t] != 0) consistent = false;
                    if (consistent) seen.insert(params);
                }
            });
            if (search.found_any) details.any_template_map = true;
        }
    }
    details.matches.assign(seen.begin(), seen.end());
    return details;
}

std::vector<FamilyParams> match_multiplicities(const Graph& h, const MultiplicityVector& mults) {
    return match_multiplicities_details(h, mults).matches;
}

}  // namespace equimatch
