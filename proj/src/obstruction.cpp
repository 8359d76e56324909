#include "cwsurgery/obstruction.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "cwsurgery/dedekind.hpp"
#include "cwsurgery/error.hpp"
#include "cwsurgery/parallel.hpp"

namespace cwsurgery {

namespace {

std::string join_integers(const std::vector<Integer>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

void require_slope_args(const Integer& p, const Integer& q, const Integer& n) {
  if (p < 1) throw DomainError("p must be positive, got " + p.get_str());
  if (n < 1) throw DomainError("n must be positive, got " + n.get_str());
  if (q == 0) throw DomainError("degenerate fraction: q must be nonzero");
  if (gcd_pair(p, q) != 1) {
    throw DomainError("p = " + p.get_str() + " and q = " + q.get_str() + " are not coprime");
  }
}

long to_long(const Integer& v) { return v.get_si(); }

}  // namespace

std::vector<HomologySolution> homology_solutions(const Integer& p, const Integer& q,
                                                 const Integer& n, const Integer& l) {
  require_slope_args(p, q, n);
  const Integer numerator = n * q * l * l;
  std::vector<HomologySolution> out;
  if (!divides(p, numerator)) return out;
  const Integer base = numerator / p;
  for (int eps : {1, -1}) {
    Integer m = base + eps;
    if (gcd_pair(m, n) == 1) out.push_back({std::move(m), eps});
  }
  return out;
}

ObstructionInstance ObstructionInstance::create(Integer p, Integer q, Integer n, Integer l,
                                                Integer m, int eps) {
  require_slope_args(p, q, n);
  if (eps != 1 && eps != -1) throw DomainError("eps must be +1 or -1");
  if (gcd_pair(m, n) != 1) {
    throw DomainError("slope m/n = " + m.get_str() + "/" + n.get_str() + " is not reduced");
  }
  if (m * p - n * q * l * l != eps * p) {
    throw DomainError("homology identity m p - n q l^2 = eps p fails");
  }
  ObstructionInstance inst;
  inst.c_ = gcd_pair(n, p);
  inst.p0_ = p / inst.c_;
  inst.n0_ = n / inst.c_;
  inst.p_ = std::move(p);
  inst.q_ = std::move(q);
  inst.n_ = std::move(n);
  inst.l_ = std::move(l);
  inst.m_ = std::move(m);
  inst.eps_ = eps;
  return inst;
}

D0Decomposition d0_decompose(const Integer& p0, const Integer& l) {
  if (p0 < 1) throw DomainError("p0 must be positive");
  if (!divides(p0, l * l)) {
    throw DomainError("homology requires p0 | l^2, but p0 = " + p0.get_str() +
                      " does not divide l^2 = " + Integer(l * l).get_str());
  }
  const Integer g = gcd_pair(p0, l);
  D0Decomposition out;
  out.d0 = p0 / g;
  out.p0_prime = g / out.d0;
  out.l_prime = l / g;
  return out;
}

Rational cw_residual(const ObstructionInstance& inst, const Integer& a2x, const Integer& a2y,
                     const Rational& v3, int sigma) {
  if (sigma != -2 && sigma != 0 && sigma != 2) {
    throw DomainError("signature of a 2x2 form must be -2, 0 or 2");
  }
  const Integer& p = inst.p();
  const Integer& q = inst.q();
  const Integer& n = inst.n();
  const Integer& m = inst.m();
  const Integer l2 = inst.l() * inst.l();
  const int eps = inst.eps();
  const int sgn_q = sgn(q);

  Rational r = Rational(Integer(24 * a2x * n * p));
  r += Rational(Integer(24 * a2y * q * (m - eps)));
  r += Rational(Integer((3 * eps * sigma - 3 * eps * sgn_q - n) * p));
  r += Rational(Integer((n * p + m * q) * l2));
  r -= make_rational(inst.n0() * l2 * (q * q + 1), inst.p0());
  r += Rational(Integer(48 * n * q)) * v3;
  r += dedekind_congruence_value(p, n, m, eps) * Rational(eps);
  return r;
}

Rational dedekind_congruence_value(const Integer& p, const Integer& n, const Integer& m,
                                   int eps) {
  const Rational symbol = dedekind_symbol(DedekindArgs(m, n));
  return Rational(p) * (symbol - make_rational(m + eps, n));
}

CongruenceOutcome dedekind_congruence(const Integer& p, const Integer& n, const Integer& m,
                                      int eps) {
  const Rational x = dedekind_congruence_value(p, n, m, eps);
  if (!x.is_integer()) return CongruenceOutcome::FailNotIntegral;
  const Integer p0 = p / gcd_pair(n, p);
  return divides(p0, x.num()) ? CongruenceOutcome::Pass : CongruenceOutcome::FailCongruence;
}

CongruenceOutcome dedekind_congruence(const ObstructionInstance& inst) {
  return dedekind_congruence(inst.p(), inst.n(), inst.m(), inst.eps());
}

KeyOutcome key_obstruction(const Integer& p0, const Integer& l) {
  const D0Decomposition dec = d0_decompose(p0, l);
  if (dec.d0 != 1 && divides(dec.d0, 24) && gcd_pair(dec.d0, dec.p0_prime) == 1) {
    return KeyOutcome::Obstructed;
  }
  return KeyOutcome::Inconclusive;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ObstructedByHomology: return "ObstructedByHomology";
    case Verdict::ObstructedByKey: return "ObstructedByKey";
    case Verdict::ObstructedByDedekindCongruence: return "ObstructedByDedekindCongruence";
    case Verdict::ObstructedByCaseAnalysis: return "ObstructedByCaseAnalysis";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string_view to_string(CongruenceOutcome v) {
  switch (v) {
    case CongruenceOutcome::Pass: return "Pass";
    case CongruenceOutcome::FailNotIntegral: return "FailNotIntegral";
    case CongruenceOutcome::FailCongruence: return "FailCongruence";
  }
  return "Pass";
}

bool is_obstructed(Verdict v) { return v != Verdict::Inconclusive; }

std::vector<HomologySolution> ObstructionReport::survivors() const {
  std::vector<HomologySolution> out;
  for (const auto& cand : candidates) {
    if (cand.survives()) out.push_back(cand.solution);
  }
  return out;
}

ObstructionReport obstruct_slope(const Integer& p, const Integer& q, const Integer& n,
                                 const Integer& l) {
  require_slope_args(p, q, n);
  ObstructionReport report;
  report.p = p;
  report.q = q;
  report.n = n;
  report.l = abs(l);
  report.c = gcd_pair(n, p);
  report.p0 = p / report.c;
  report.n0 = n / report.c;

  const auto solutions = homology_solutions(p, q, n, report.l);
  if (solutions.empty()) {
    const Integer numerator = n * q * report.l * report.l;
    std::string reason;
    if (!divides(p, numerator)) {
      reason = "n q l^2 / p = " + make_rational(numerator, p).str() + " is not an integer";
    } else {
      reason = "both m = n q l^2/p +- 1 share a factor with n = " + n.get_str();
    }
    report.fired_rules.push_back({"homology", std::move(reason)});
    report.verdict = Verdict::ObstructedByHomology;
    return report;
  }

  for (const auto& s : solutions) report.candidates.push_back({s, {}});

  const D0Decomposition dec = d0_decompose(report.p0, report.l);
  const bool key_fired = key_obstruction(report.p0, report.l) == KeyOutcome::Obstructed;
  if (key_fired) {
    report.fired_rules.push_back(
        {"key", "d0 = " + dec.d0.get_str() + " divides 24 and is coprime to p0' = " +
                    dec.p0_prime.get_str() + " (p0 = " + report.p0.get_str() + ")"});
    for (auto& cand : report.candidates) cand.eliminated_by.push_back("key");
  }

  bool dedekind_fired_everywhere = true;
  for (auto& cand : report.candidates) {
    const CongruenceOutcome outcome =
        dedekind_congruence(p, n, cand.solution.m, cand.solution.eps);
    if (outcome == CongruenceOutcome::Pass) {
      dedekind_fired_everywhere = false;
      continue;
    }
    const Rational x = dedekind_congruence_value(p, n, cand.solution.m, cand.solution.eps);
    std::string reason = "m = " + cand.solution.m.get_str() +
                         ", eps = " + std::to_string(cand.solution.eps) +
                         ": p (S(m/n) - (m+eps)/n) = " + x.str();
    reason += outcome == CongruenceOutcome::FailNotIntegral
                  ? " is not an integer"
                  : " is not divisible by p0 = " + report.p0.get_str();
    report.fired_rules.push_back({"dedekind_congruence", std::move(reason)});
    cand.eliminated_by.push_back("dedekind_congruence");
  }

  if (key_fired) {
    report.verdict = Verdict::ObstructedByKey;
  } else if (dedekind_fired_everywhere) {
    report.verdict = Verdict::ObstructedByDedekindCongruence;
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  return report;
}

bool ScanReport::all_obstructed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ScanEntry& e) { return is_obstructed(e.verdict); });
}

std::vector<Integer> ScanReport::surviving_l() const {
  std::vector<Integer> out;
  for (const auto& e : entries) {
    if (!is_obstructed(e.verdict)) out.push_back(e.l);
  }
  return out;
}

SquareFreeDecomposition validate_scan_hypotheses(const Integer& p, const Integer& q) {
  if (p < 1) throw DomainError("p must be positive, got " + p.get_str());
  if (q == 0) throw DomainError("degenerate fraction: q must be nonzero");
  if (gcd_pair(p, q) != 1) {
    throw DomainError("p = " + p.get_str() + " and q = " + q.get_str() + " are not coprime");
  }
  if (q < 0) {
    throw HypothesisError("outside distance-one scan hypotheses: p/q = " + p.get_str() + "/" +
                          q.get_str() + " is not positive");
  }
  const SquareFreeDecomposition dec = squarefree_decompose(p);
  if (dec.d != 1 && dec.d != 2 && dec.d != 3 && dec.d != 6) {
    throw HypothesisError("outside distance-one scan hypotheses: p = " + dec.d.get_str() + "^2 * " +
                          dec.p_prime.get_str() + " with d not in {1,2,3,6}");
  }
  if (dec.d > 1 && gcd_pair(dec.d, dec.p_prime) != 1) {
    throw HypothesisError("outside distance-one scan hypotheses: gcd(d, p') = gcd(" + dec.d.get_str() +
                          ", " + dec.p_prime.get_str() + ") != 1");
  }
  return dec;
}

namespace {

template <class Mapper>
ScanReport run_main_scan(const Integer& p, const Integer& q, Mapper&& map) {
  ScanReport report;
  report.p = p;
  report.q = q;
  report.decomposition = validate_scan_hypotheses(p, q);
  const std::size_t count = p > 1 ? static_cast<std::size_t>(to_long(p) - 1) : 0;
  report.entries = map(count, [&](std::size_t i) {
    const Integer l = static_cast<long>(i + 1);
    return ScanEntry{l, obstruct_slope(p, q, 1, l).verdict};
  });
  return report;
}

// Every (p, q) of the grid in (p, q) order.
std::vector<std::pair<long, long>> grid_pairs(long max_p) {
  std::vector<std::pair<long, long>> pairs;
  for (long p = 1; p <= max_p; ++p) {
    try {
      validate_scan_hypotheses(p, 1);
    } catch (const HypothesisError&) {
      continue;
    }
    for (long q = 1; q < p; ++q) {
      if (gcd_pair(p, q) == 1) pairs.emplace_back(p, q);
    }
  }
  return pairs;
}

GridCell grid_cell(long p, long q) {
  GridCell cell;
  cell.p = p;
  cell.q = q;
  validate_scan_hypotheses(cell.p, cell.q);
  for (long l = 1; l < p; ++l) {
    const Verdict v = obstruct_slope(cell.p, cell.q, 1, l).verdict;
    ++cell.slopes_checked;
    switch (v) {
      case Verdict::ObstructedByHomology: ++cell.by_homology; break;
      case Verdict::ObstructedByKey: ++cell.by_key; break;
      case Verdict::ObstructedByDedekindCongruence: ++cell.by_dedekind; break;
      default: cell.surviving_l.push_back(l); break;
    }
  }
  return cell;
}

}  // namespace

ScanReport theorem_main_scan(const Integer& p, const Integer& q) {
  return run_main_scan(p, q, [](std::size_t n, auto&& fn) { return parallel_map(n, fn); });
}

ScanReport theorem_main_scan_serial(const Integer& p, const Integer& q) {
  return run_main_scan(p, q, [](std::size_t n, auto&& fn) { return serial_map(n, fn); });
}

std::vector<GridCell> scan_theorem_grid(long max_p) {
  const auto pairs = grid_pairs(max_p);
  return parallel_map(pairs.size(),
                      [&](std::size_t i) { return grid_cell(pairs[i].first, pairs[i].second); });
}

std::vector<GridCell> scan_theorem_grid_serial(long max_p) {
  const auto pairs = grid_pairs(max_p);
  return serial_map(pairs.size(),
                    [&](std::size_t i) { return grid_cell(pairs[i].first, pairs[i].second); });
}

std::string_view to_string(CaseOutcome v) {
  switch (v) {
    case CaseOutcome::Eliminated: return "Eliminated";
    case CaseOutcome::NotApplicable: return "NotApplicable";
    case CaseOutcome::Survives: return "Survives";
  }
  return "NotApplicable";
}

namespace {

CaseResult eliminate_coprime_case(const Integer& n, const Integer& p, const Integer& q) {
  CaseResult result;
  result.c = 1;
  result.n = n;
  if (p == 1) {
    result.outcome = CaseOutcome::Eliminated;
    result.reason = "c=1: H_1 is trivial, every knot is null-homologous";
    return result;
  }
  const std::size_t count = static_cast<std::size_t>(to_long(p) - 1);
  const auto verdicts = parallel_map(count, [&](std::size_t i) {
    return obstruct_slope(p, q, n, Integer(static_cast<long>(i + 1))).verdict;
  });
  std::array<std::size_t, 5> tally{};
  for (std::size_t i = 0; i < count; ++i) {
    ++tally[static_cast<std::size_t>(verdicts[i])];
    if (!is_obstructed(verdicts[i])) result.surviving_l.push_back(static_cast<long>(i + 1));
  }
  if (result.surviving_l.empty()) {
    result.outcome = CaseOutcome::Eliminated;
    result.reason = "c=1: all " + std::to_string(count) +
                    " non-null-homologous classes l obstructed (homology " +
                    std::to_string(tally[0]) + ", key " + std::to_string(tally[1]) +
                    ", dedekind " + std::to_string(tally[2]) + ")";
  } else {
    result.outcome = CaseOutcome::Survives;
    result.reason = "c=1: l in {" + join_integers(result.surviving_l) + "} not obstructed";
  }
  return result;
}

// (2,2), (2,6): p = 2 p0 square-free forces p0, q and l odd, so
// m = n0 q (l^2/p0) + eps is even while n is even.
CaseResult eliminate_parity_case(const Integer& n, const Integer& p) {
  CaseResult result;
  result.c = 2;
  result.n = n;
  const Integer p0 = p / 2;
  const Integer n0 = n / 2;
  const long q_mod2 = 1;  // gcd(p, q) = 1 with p even
  // p0 | l (p0 square-free, p0 | l^2) and 2 does not divide l / p0 (else p | l).
  const long l2_over_p0_mod2 = mod_floor(p0, 2).get_si();
  std::ostringstream why;
  why << "parity: p0 = " << p0 << ", n0 = " << n0 << " odd, q and l odd;";
  bool all_even = true;
  for (int eps : {1, -1}) {
    const long m_mod2 = (mod_floor(n0, 2).get_si() * q_mod2 * l2_over_p0_mod2 + eps + 2) % 2;
    why << " eps=" << eps << ": m = " << m_mod2 << " mod 2;";
    all_even = all_even && m_mod2 == 0;
  }
  if (all_even) {
    why << " m even contradicts gcd(m, n) = 1 with n even";
    result.outcome = CaseOutcome::Eliminated;
  } else {
    result.outcome = CaseOutcome::Survives;
  }
  result.reason = why.str();
  return result;
}

long mod3(const Integer& v) { return mod_floor(v, 3).get_si(); }

// (3,3), (3,6): the Casson-Walker constraint reduced mod 3, over every
// residue class (q mod 3, eps). With 3 | p square-free, p0 and l are units
// mod 3 and l^2/p0 = p0 (l/p0)^2 = p0 (mod 3). Mod 3 the constraint keeps
//   m q l^2 - n0 l^2 (q^2+1)/p0 + eps p0 n0^{-1} (n S(m/n) - (m + eps)),
// every other summand being a multiple of 3.
CaseResult eliminate_mod3_case(const Integer& n, const Integer& p) {
  CaseResult result;
  result.c = 3;
  result.n = n;
  const Integer p0 = p / 3;
  const Integer n0 = n / 3;
  const long u = mod3(p0);
  const long n0_mod3 = mod3(n0);
  const long n0_inverse = n0_mod3;  // 1 and 2 are self-inverse mod 3
  std::ostringstream why;
  why << "mod-3 Dedekind: p0 = " << u << " mod 3;";
  bool all_eliminated = true;
  for (long q3 : {1L, 2L}) {
    for (int eps : {1, -1}) {
      const long m3 = ((n0_mod3 * q3 * u + eps) % 3 + 3) % 3;
      why << " (q=" << q3 << ",eps=" << eps << "): m = " << m3 << " mod 3";
      if (m3 == 0) {
        why << ", contradicts gcd(m, n) = 1;";
        continue;
      }
      // Residue of m mod n: for n = 6, n0 = 2 is even so m = eps mod 2 is odd.
      long m_mod_n = m3;
      if (n == 6) m_mod_n = (m3 % 2 == 1) ? m3 : m3 + 3;
      const Rational nS = dedekind_symbol(DedekindArgs(m_mod_n, n)) * Rational(n);
      const long ns3 = mod3(nS.num());  // n S(m/n) is an integer
      const long term_link = m3 * q3;
      const long term_h1 = n0_mod3 * u * (q3 * q3 + 1);
      const long term_dedekind = eps * u * n0_inverse * (ns3 - (m3 + eps));
      const long total = (((term_link - term_h1 + term_dedekind) % 3) + 3) % 3;
      why << ", nS(m/n) = " << nS.num() << ", constraint = " << total << " mod 3;";
      if (total == 0) all_eliminated = false;
    }
  }
  result.outcome = all_eliminated ? CaseOutcome::Eliminated : CaseOutcome::Survives;
  if (all_eliminated) why << " no residue class satisfies the constraint";
  result.reason = why.str();
  return result;
}

}  // namespace

CaseResult eliminate_case(const Integer& c, const Integer& n, const Integer& p,
                          const Integer& q) {
  if (p < 1 || n < 1) throw DomainError("p and n must be positive");
  if (c != gcd_pair(n, p)) {
    throw DomainError("inconsistent case: c = " + c.get_str() + " but gcd(n, p) = " +
                      gcd_pair(n, p).get_str());
  }
  if (c == 1) {
    if (q == 0 || gcd_pair(p, q) != 1) {
      throw DomainError("q must be nonzero and coprime to p");
    }
    return eliminate_coprime_case(n, p, q);
  }
  if (!is_squarefree(p)) {
    throw DomainError("inconsistent case: c > 1 requires square-free p, got " + p.get_str());
  }
  if (c == 2 && (n == 2 || n == 6)) return eliminate_parity_case(n, p);
  if (c == 3 && (n == 3 || n == 6)) return eliminate_mod3_case(n, p);
  CaseResult result;
  result.c = c;
  result.n = n;
  result.outcome = CaseOutcome::NotApplicable;
  result.reason = "(c,n) = (" + c.get_str() + "," + n.get_str() +
                  ") is outside the parity and mod-3 arguments";
  return result;
}

std::string_view to_string(ManifoldClass v) {
  switch (v) {
    case ManifoldClass::Reducible: return "reducible";
    case ManifoldClass::Lens: return "lens";
    case ManifoldClass::FinitePi1: return "finite";
    case ManifoldClass::SmallSFSLSpace: return "ssfs";
  }
  return "lens";
}

ManifoldClass parse_manifold_class(std::string_view text) {
  if (text == "reducible") return ManifoldClass::Reducible;
  if (text == "lens") return ManifoldClass::Lens;
  if (text == "finite") return ManifoldClass::FinitePi1;
  if (text == "ssfs") return ManifoldClass::SmallSFSLSpace;
  throw DomainError("unknown manifold class '" + std::string(text) +
                    "' (expected reducible|lens|finite|ssfs)");
}

Certificate certify_complement(const Integer& p, const Integer& q, ManifoldClass cls) {
  if (p < 1) throw DomainError("p must be positive, got " + p.get_str());
  if (q == 0) throw DomainError("degenerate fraction: q must be nonzero");
  if (gcd_pair(p, q) != 1) {
    throw DomainError("p = " + p.get_str() + " and q = " + q.get_str() + " are not coprime");
  }

  Certificate cert;
  cert.p = p;
  cert.q = q;
  cert.manifold_class = cls;

  auto require_d2p = [&](const char* clause) {
    try {
      validate_scan_hypotheses(p, q);
    } catch (const HypothesisError& e) {
      throw HypothesisError(std::string("clause ") + clause + " violated: " + e.what());
    }
  };

  switch (cls) {
    case ManifoldClass::Reducible:
      cert.clause = "(i) reducible L-space, |H1| = d^2 p'";
      require_d2p("(i)");
      cert.n_bound = 1;
      cert.n_bound_reason = "reducible surgery has distance n = 1";
      break;
    case ManifoldClass::Lens:
      cert.clause = "(ii) lens space, |H1| = d^2 p'";
      require_d2p("(ii)");
      cert.n_bound = 1;
      cert.n_bound_reason = "cyclic surgery theorem: n = 1";
      break;
    case ManifoldClass::FinitePi1:
      cert.clause = "(iii) finite pi_1, |H1| square-free";
      if (!is_squarefree(p)) {
        throw HypothesisError("clause (iii) violated: |H1| = " + p.get_str() +
                              " is not square-free");
      }
      cert.n_bound = 3;
      cert.n_bound_reason = "finite filling theorem: n <= 3";
      break;
    case ManifoldClass::SmallSFSLSpace: {
      cert.clause = "(iv) small Seifert fibered L-space, |H1| square-free, coprime to 35, 6 does not divide |H1|";
      std::vector<std::string> violations;
      if (!is_squarefree(p)) violations.push_back("|H1| = " + p.get_str() + " is not square-free");
      if (gcd_pair(p, 35) != 1) violations.push_back("|H1| = " + p.get_str() + " is not coprime to 35");
      if (divides(6, p)) violations.push_back("6 divides |H1| = " + p.get_str());
      if (!violations.empty()) {
        std::string msg = "clause (iv) violated: " + violations.front();
        for (std::size_t i = 1; i < violations.size(); ++i) msg += "; " + violations[i];
        throw HypothesisError(msg);
      }
      cert.n_bound = 8;
      cert.n_bound_reason = "exceptional surgery distance bound: n <= 8";
      break;
    }
  }

  for (Integer n = 1; n <= cert.n_bound; ++n) {
    cert.cases.push_back(eliminate_case(gcd_pair(n, p), n, p, q));
  }
  cert.issued = true;
  for (const auto& cr : cert.cases) {
    if (cr.outcome != CaseOutcome::Eliminated) {
      cert.issued = false;
      cert.refusal = "case (c,n) = (" + cr.c.get_str() + "," + cr.n.get_str() + ") " +
                     std::string(to_string(cr.outcome)) + ": " + cr.reason;
      break;
    }
  }
  return cert;
}

}  // namespace cwsurgery
