#include "equimatch/recognition.hpp"

#include <algorithm>

#include "equimatch/oracle.hpp"

namespace equimatch {

std::string branch_token(Branch b) {
    switch (b) {
        case Branch::NonbipartiteFamily: return "nonbipartite_family";
        case Branch::BipartiteOutOfScope: return "bipartite_out_of_scope";
        case Branch::BipartiteLeskChecked: return "bipartite_lesk_checked";
        case Branch::Disconnected: return "disconnected";
        case Branch::Rejected: return "rejected";
    }
    return "?";
}

std::string reject_reason_token(RejectReason r) {
    switch (r) {
        case RejectReason::HasTriangle: return "has_triangle";
        case RejectReason::NotConnected: return "not_connected";
        case RejectReason::QuotientTooLarge: return "quotient_too_large";
        case RejectReason::NoTemplateIsomorphism: return "no_template_isomorphism";
        case RejectReason::NoMultiplicityMatch: return "no_multiplicity_match";
        case RejectReason::OracleNegative: return "oracle_negative";
        case RejectReason::BipartiteGuardExceeded: return "bipartite_guard_exceeded";
    }
    return "?";
}

namespace {

Classification reject(RejectReason why) {
    Classification c;
    c.verdict = false;
    c.branch = Branch::Rejected;
    c.reject_reason = why;
    return c;
}

// Steps 2-3 of the recognition algorithm on an already-contracted input.
Classification recognize_quotient(const TwinContraction& tc) {
    if (tc.quotient.n > kQuotientCeiling) return reject(RejectReason::QuotientTooLarge);
    MatchDetails details = match_multiplicities_details(tc.quotient, tc.mults);
    if (!details.matches.empty()) {
        Classification c;
        c.verdict = true;
        c.branch = Branch::NonbipartiteFamily;
        c.family = details.matches.front();  // family-table order, then parameters
        return c;
    }
    return reject(details.any_template_map ? RejectReason::NoMultiplicityMatch
                                           : RejectReason::NoTemplateIsomorphism);
}

}  // namespace

Classification recognize_nonbipartite(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("recognize_nonbipartite: input must be connected");
    if (is_bipartite(g))
        throw std::invalid_argument("recognize_nonbipartite: input must not be bipartite");
    return recognize_quotient(twin_contract(g));
}

Classification classify(const Graph& g) {
    if (!is_connected(g)) {
        Classification c;
        c.verdict = false;
        c.branch = Branch::Disconnected;
        c.reject_reason = RejectReason::NotConnected;
        return c;
    }
    if (auto sides = is_bipartite(g)) {
        // bipartite graphs have no odd cycle, hence no triangle; the
        // verdict is Lesk's criterion alone
        Classification c;
        const auto& small_side =
            sides->left.size() <= sides->right.size() ? sides->left : sides->right;
        int max_deg = 0;
        for (int u : small_side) max_deg = std::max(max_deg, g.degree(u));
        if (max_deg > kLeskDegreeGuard) {
            c.verdict = false;
            c.branch = Branch::BipartiteOutOfScope;
            c.reject_reason = RejectReason::BipartiteGuardExceeded;
            return c;
        }
        c.branch = Branch::BipartiteLeskChecked;
        c.verdict = bipartite_equimatchable_lesk(g);
        if (!c.verdict) c.reject_reason = RejectReason::OracleNegative;
        return c;
    }
    TwinContraction tc = twin_contract(g);
    if (tc.quotient.n <= kQuotientCeiling) {
        // blocks are independent sets, so g has a triangle iff its
        // twin-free quotient does
        if (!is_triangle_free(tc.quotient)) return reject(RejectReason::HasTriangle);
        return recognize_quotient(tc);
    }
    // verdict is already negative; a full scan decides only the reason
    if (!is_triangle_free(g)) return reject(RejectReason::HasTriangle);
    return reject(RejectReason::QuotientTooLarge);
}

}  // namespace equimatch
