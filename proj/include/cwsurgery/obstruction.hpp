#pragma once

// Necessary conditions for p/q surgery M on a knot in S^3 to be recovered by
// a slope s with Delta(s, mu_K) = n on a knot K in M. Writing the pair as a
// link L = K_x u K_y with framings m/n and p/q and linking number l, the
// conditions come from |H_1| (the homology identity mp - nql^2 = eps p) and
// from lambda_w(S^3_L) == lambda_w(M). A verdict other than Inconclusive
// means some necessary condition fails; the engine never asserts that a
// homeomorphism exists.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cwsurgery/number_theory.hpp"
#include "cwsurgery/rational.hpp"

namespace cwsurgery {

struct HomologySolution {
  Integer m;
  int eps = 1;

  friend bool operator==(const HomologySolution&, const HomologySolution&) = default;
};

/// All (m, eps), eps = +1 first, with m = nql^2/p + eps integral and
/// gcd(m, n) = 1. Empty means the homology obstruction fires.
std::vector<HomologySolution> homology_solutions(const Integer& p, const Integer& q,
                                                 const Integer& n, const Integer& l);

/// (p, q, n, l, m, eps) satisfying mp - nql^2 = eps p, with
/// c = gcd(n, p), p = c p0, n = c n0.
class ObstructionInstance {
 public:
  /// Throws DomainError when any invariant fails.
  static ObstructionInstance create(Integer p, Integer q, Integer n, Integer l, Integer m,
                                    int eps);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& n() const { return n_; }
  const Integer& l() const { return l_; }
  const Integer& m() const { return m_; }
  int eps() const { return eps_; }
  const Integer& c() const { return c_; }
  const Integer& p0() const { return p0_; }
  const Integer& n0() const { return n0_; }

 private:
  ObstructionInstance() = default;

  Integer p_, q_, n_, l_, m_;
  int eps_ = 1;
  Integer c_, p0_, n0_;
};

/// p0 = d0^2 p0', l = d0 p0' l', gcd(d0, l') = 1, d0 = p0 / gcd(p0, l).
struct D0Decomposition {
  Integer d0;
  Integer p0_prime;
  Integer l_prime;
};

/// Throws DomainError when p0 does not divide l^2.
D0Decomposition d0_decompose(const Integer& p0, const Integer& l);

/// cw_residual == kResidualSign * 12 eps p (lambda_w(M) - lambda_w(S^3_L)),
/// pinned by exact evaluation against the casson_walker module.
inline constexpr int kResidualSign = -1;

/// Right-hand side of the Casson-Walker constraint
///
///   24 a2x n p + 24 a2y q (m - eps) + (3 eps sigma - 3 eps sgn(q) - n) p
///   + (np + mq) l^2 - n0 l^2 (q^2 + 1)/p0 + 24 n q (2 v3)
///   + eps p (S(m/n) - (m + eps)/n).
///
/// Zero is necessary for S^3_L == M. The sgn(q) factor is the reciprocity
/// constant -3 sgn(pq); it is 1 for the usual q > 0.
/// Throws DomainError when sigma is not in {-2, 0, 2}.
Rational cw_residual(const ObstructionInstance& inst, const Integer& a2x, const Integer& a2y,
                     const Rational& v3, int sigma);

enum class CongruenceOutcome { Pass, FailNotIntegral, FailCongruence };

/// X = p (S(m/n) - (m + eps)/n).
Rational dedekind_congruence_value(const Integer& p, const Integer& n, const Integer& m,
                                   int eps);

/// X must be an integer divisible by p0 = p / gcd(n, p).
CongruenceOutcome dedekind_congruence(const Integer& p, const Integer& n, const Integer& m,
                                      int eps);
CongruenceOutcome dedekind_congruence(const ObstructionInstance& inst);

enum class KeyOutcome { Obstructed, Inconclusive };

/// Obstructed when d0 != 1, d0 | 24 and gcd(d0, p0') = 1.
KeyOutcome key_obstruction(const Integer& p0, const Integer& l);

enum class Verdict {
  ObstructedByHomology,
  ObstructedByKey,
  ObstructedByDedekindCongruence,
  ObstructedByCaseAnalysis,
  Inconclusive,
};

std::string_view to_string(Verdict v);
std::string_view to_string(CongruenceOutcome v);
bool is_obstructed(Verdict v);

struct FiredRule {
  std::string rule;
  std::string reason;
};

struct CandidateReport {
  HomologySolution solution;
  std::vector<std::string> eliminated_by;

  bool survives() const { return eliminated_by.empty(); }
};

struct ObstructionReport {
  Integer p, q, n;
  Integer l;  ///< canonicalized to |l|; only l^2 enters any rule
  Integer c, p0, n0;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<FiredRule> fired_rules;
  std::vector<CandidateReport> candidates;

  std::vector<HomologySolution> survivors() const;
};

/// Runs homology integrality, then the d0 / key rule, then the Dedekind
/// congruence on every candidate, accumulating every reason. Obstructed
/// verdicts require all candidates eliminated.
/// Throws DomainError unless p >= 1, n >= 1, q != 0 and gcd(p, q) = 1.
ObstructionReport obstruct_slope(const Integer& p, const Integer& q, const Integer& n,
                                 const Integer& l);

struct ScanEntry {
  Integer l;
  Verdict verdict = Verdict::Inconclusive;
};

struct ScanReport {
  Integer p, q;
  SquareFreeDecomposition decomposition;
  std::vector<ScanEntry> entries;

  bool all_obstructed() const;
  std::vector<Integer> surviving_l() const;
};

/// Checks p = d^2 p', p' square-free, d in {1,2,3,6}, gcd(d, p') = 1 for
/// d > 1, and p/q > 0 with gcd(p, q) = 1. Throws HypothesisError
/// ("outside distance-one scan hypotheses: ...") or DomainError.
SquareFreeDecomposition validate_scan_hypotheses(const Integer& p, const Integer& q);

/// Runs obstruct_slope(p, q, 1, l) for l = 1..p-1 on the OpenMP pool.
ScanReport theorem_main_scan(const Integer& p, const Integer& q);
/// Serial reference for theorem_main_scan.
ScanReport theorem_main_scan_serial(const Integer& p, const Integer& q);

/// Summary of one (p, q) cell of a scan grid.
struct GridCell {
  Integer p, q;
  std::size_t slopes_checked = 0;
  std::size_t by_homology = 0;
  std::size_t by_key = 0;
  std::size_t by_dedekind = 0;
  std::vector<Integer> surviving_l;
};

/// Every p <= max_p meeting the scan hypotheses, with every 0 < q < p
/// coprime to p. Cells come back ordered by (p, q).
std::vector<GridCell> scan_theorem_grid(long max_p);
std::vector<GridCell> scan_theorem_grid_serial(long max_p);

enum class CaseOutcome { Eliminated, NotApplicable, Survives };
std::string_view to_string(CaseOutcome v);

struct CaseResult {
  Integer c, n;
  CaseOutcome outcome = CaseOutcome::NotApplicable;
  std::string reason;
  std::vector<Integer> surviving_l;  ///< only for Survives in the c = 1 branch
};

/// Case analysis for slopes at distance n with c = gcd(n, p).
///  c = 1           : scans l = 1..p-1 through obstruct_slope with the given q.
///  (2,2), (2,6)    : parity of m against gcd(m, n) = 1.
///  (3,3), (3,6)    : the Casson-Walker constraint mod 3 over every residue
///                    class of (q mod 3, eps).
///  anything else   : NotApplicable.
/// Throws DomainError when c != gcd(n, p), or when c > 1 and p is not
/// square-free.
CaseResult eliminate_case(const Integer& c, const Integer& n, const Integer& p,
                          const Integer& q = 1);

enum class ManifoldClass { Reducible, Lens, FinitePi1, SmallSFSLSpace };
std::string_view to_string(ManifoldClass v);
/// Accepts reducible | lens | finite | ssfs.
ManifoldClass parse_manifold_class(std::string_view text);

struct Certificate {
  Integer p, q;
  ManifoldClass manifold_class = ManifoldClass::Lens;
  std::string clause;
  Integer n_bound;
  std::string n_bound_reason;
  std::vector<CaseResult> cases;
  bool issued = false;
  std::string refusal;  ///< empty when issued
};

/// Validates the clause hypotheses for the manifold class, enumerates every
/// n up to the class's distance bound, and runs eliminate_case on each.
/// Throws HypothesisError naming the violated clause.
Certificate certify_complement(const Integer& p, const Integer& q, ManifoldClass cls);

}  // namespace cwsurgery
