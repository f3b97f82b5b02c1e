#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equimatch/blowup.hpp"
#include "equimatch/graph.hpp"

namespace equimatch {

/// The two twin-free templates behind every triangle-free equimatchable
/// factor-critical graph: G1 is a 7-cycle, G2 an 11-vertex graph whose
/// middle five vertices induce a 5-cycle.
enum class TemplateId { G1, G2 };

Graph template_graph(TemplateId t);

/// Pattern parameters, in the fixed order used everywhere (enumeration,
/// serialization, determinism).
enum Param : int { ParamN = 0, ParamM, ParamR, ParamS, ParamK, ParamL, kParamCount };
char param_name(int p);

/// Linear form c0 + sum coeff[p] * p over the six parameters.
struct LinExpr {
    int c0 = 0;
    std::array<int, kParamCount> coeff{};

    long long eval(const std::array<int, kParamCount>& values) const {
        long long acc = c0;
        for (int p = 0; p < kParamCount; ++p) acc += static_cast<long long>(coeff[p]) * values[p];
        return acc;
    }
    bool is_const() const {
        for (int c : coeff)
            if (c != 0) return false;
        return true;
    }
};

/// expr >= 0, or expr == 0 for the coupled-parameter families.
struct LinConstraint {
    LinExpr expr;
    bool equality;
    std::string text;  // human-readable, e.g. "r <= n-1"
};

enum class FamilyId : int {
    C5 = 0, C7, F11, F12, F21, F22, F3, F4,
    G11, G12, G21, G22, G23, G31, G32,
};
inline constexpr int kFamilyCount = 15;

std::string family_token(FamilyId id);                     // lowercase, e.g. "f21"
std::optional<FamilyId> family_from_token(const std::string& token);

struct FamilyPattern {
    FamilyId id;
    TemplateId tmpl;
    uint8_t param_mask;               // bit p set iff parameter p is used
    std::vector<LinExpr> mults;       // one per template vertex
    std::vector<LinConstraint> constraints;

    bool uses(int p) const { return (param_mask >> p) & 1; }
};

/// All pattern rows in the fixed table order c5, c7, f11, ..., g32. A
/// family may contribute more than one row (g32 has two placements); rows
/// of one family occupy consecutive positions.
const std::vector<FamilyPattern>& family_table();

/// The rows belonging to one family token.
std::vector<const FamilyPattern*> patterns_for(FamilyId id);

/// A concrete parameter assignment for one family. Unused slots stay 0.
struct FamilyParams {
    FamilyId family;
    std::array<int, kParamCount> values{};

    bool operator==(const FamilyParams&) const = default;
    bool operator<(const FamilyParams& o) const {
        if (family != o.family) return family < o.family;
        return values < o.values;
    }
};

/// nullopt when the assignment satisfies the family's constraint list and
/// the nonnegativity guard on every multiplicity; otherwise the violated
/// constraint's text.
std::optional<std::string> check_params(const FamilyParams& p);

MultiplicityVector evaluate_mults(const FamilyParams& p);

/// Blow up the family's template by the evaluated multiplicities. Throws
/// std::invalid_argument naming the violated constraint on bad parameters.
Graph instantiate(const FamilyParams& p);

/// Every constraint-satisfying assignment whose instance has at most
/// max_vertices vertices, in lexicographic (n, m, r, s, k, l) order.
std::vector<std::pair<FamilyParams, Graph>> enumerate_members(FamilyId id, int max_vertices);

inline constexpr int kEnumerationVertexCeiling = 64;
inline constexpr int kQuotientCeiling = 11;

/// All family parameter assignments under which blowing up the family
/// pattern reproduces blow_up(h, mults); h must be twin-free with at most
/// 11 vertices. Results are sorted by (family table order, parameter
/// tuple).
std::vector<FamilyParams> match_multiplicities(const Graph& h, const MultiplicityVector& mults);

/// match_multiplicities plus whether any admissible template-to-quotient
/// map existed at all (even without an integer solution); recognition uses
/// the flag to distinguish its two rejection reasons.
struct MatchDetails {
    std::vector<FamilyParams> matches;
    bool any_template_map = false;
};
MatchDetails match_multiplicities_details(const Graph& h, const MultiplicityVector& mults);

}  // namespace equimatch
