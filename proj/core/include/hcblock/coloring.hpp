#pragma once

#include <hcblock/detour.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hcblock {

// A candidate vertex ordering u_0..u_{n-1}: the lineup induced by a coloring
// with increasing colors.
struct Ordering {
    std::vector<int> seq;
};

// Theory lower bound on the minimum span: (n-1)(n-omega) - 2*L(G) + xi.
long long span_lower_bound(const DetourProfile& p);

// Exact ordering criterion: endpoint level conditions plus, for all i < j,
//   D(u_i,u_j) >= sum_{t=i}^{j-1} (L(u_t)+L(u_{t+1})) - (j-i)(n-omega) + (n-1).
// An ordering passes iff the recurrence coloring attains the lower bound.
struct OrderingCheckResult {
    bool pass = false;
    bool endpoints_ok = false;
    std::optional<std::pair<int, int>> violation; // first failing (i,j), lexicographic
    int branch_count = 0;                         // below 3, the theory's standing assumption fails
};

OrderingCheckResult check_ordering_thm2(const DetourProfile& p, const Ordering& o);

// Simpler sufficient conditions. thm3 additionally caps every consecutive
// detour distance at n/2; thm4 caps the detour diameter instead. All n/2
// comparisons are exact (2x <= n), never floating point.
struct SufficiencyResult {
    bool thm3 = false;
    std::string thm3_reason; // empty when thm3 passes
    bool thm4 = false;
    std::string thm4_reason;
};

SufficiencyResult check_sufficient(const DetourProfile& p, const Ordering& o);

// Star-shaped: an ordering alternating branches (omega = 1) or anchor
// central vertices (omega >= 2) exists; decided by the scheduling criterion
// largest group <= ceil(N/2) over the N non-central vertices. db_half:
// detour diameter <= n/2.
struct SdbClassification {
    bool star_shaped = false;
    bool db_half = false;
    bool sdb = false;
    int largest_group = 0;
    int non_central = 0;
};

SdbClassification classify_sdb(const DetourProfile& p);

struct Violation {
    int u = 0, v = 0;
    int detour = 0;
    long long required = 0; // n-1-D
    long long actual = 0;   // |c(u)-c(v)|
};

struct CertificateConditions {
    std::optional<bool> thm2, thm3, thm4; // absent when no ordering was checked
    bool star_shaped = false;
    bool db_half = false;
    int branch_count = 0;
};

// Result of checking a coloring against D(u,v) + |c(u)-c(v)| >= n-1 for every
// pair, together with the profile context it was verified in. Colors are
// normalized so the minimum color is 0; span is the maximum color.
struct ColoringCertificate {
    int n = 0;
    int omega = 0;
    int xi = 0;
    long long total_level = 0;
    long long lower_bound = 0;
    std::optional<Ordering> ordering;
    std::vector<long long> colors;
    long long span = 0;
    bool valid = false;
    std::vector<Violation> violations;
    CertificateConditions conditions;
    std::vector<std::string> warnings;
};

ColoringCertificate verify_coloring(const DetourProfile& p, std::vector<long long> colors);

// Applies the recurrence c(u_0) = 0, c(u_{i+1}) = c(u_i) + n - omega -
// L(u_{i+1}) - L(u_i) and verifies the result. Produces a certificate even
// for orderings that fail the criterion; validity is reported, not assumed.
ColoringCertificate color_from_ordering(const DetourProfile& p, const Ordering& o);

// Optimal coloring for SDB(n/2) block graphs: center first, branches
// alternated largest-remaining-first, closing in the smallest block at the
// center. Throws Error(not_sdb) when classify_sdb fails.
ColoringCertificate sdb_color(const DetourProfile& p);

// Deterministic branch-alternating ordering builder used by sdb_color and the
// CLI's bounded search. Returns nullopt when no alternation schedule exists.
std::optional<Ordering> alternating_ordering(const DetourProfile& p);

} // namespace hcblock
