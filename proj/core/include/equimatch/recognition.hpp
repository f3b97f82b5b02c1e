#pragma once

#include <optional>
#include <string>

#include "equimatch/families.hpp"
#include "equimatch/graph.hpp"

namespace equimatch {

enum class Branch {
    NonbipartiteFamily,
    BipartiteOutOfScope,
    BipartiteLeskChecked,
    Disconnected,
    Rejected,
};

enum class RejectReason {
    HasTriangle,
    NotConnected,
    QuotientTooLarge,
    NoTemplateIsomorphism,
    NoMultiplicityMatch,
    OracleNegative,
    BipartiteGuardExceeded,
};

std::string branch_token(Branch b);
std::string reject_reason_token(RejectReason r);

/// Verdict of triangle-free-equimatchable recognition, with the matched
/// family certificate on acceptance and a named reason on rejection.
struct Classification {
    bool verdict = false;
    Branch branch = Branch::Rejected;
    std::optional<FamilyParams> family;
    std::optional<RejectReason> reject_reason;
};

/// Linear-time recognition: contract twins, bound the quotient by 11
/// vertices, and match the multiplicity vector against the family
/// patterns. Requires a connected non-bipartite input (throws otherwise).
Classification recognize_nonbipartite(const Graph& g);

/// Total classifier. Disconnected and bipartite inputs are outside the
/// recognition algorithm's contract and get their own branches; connected
/// bipartite graphs within the subset-enumeration guard are decided by
/// the Lesk criterion.
Classification classify(const Graph& g);

}  // namespace equimatch
