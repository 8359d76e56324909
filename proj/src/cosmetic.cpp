#include "cwsurgery/cosmetic.hpp"

#include <algorithm>

#include "cwsurgery/casson_walker.hpp"
#include "cwsurgery/error.hpp"
#include "cwsurgery/number_theory.hpp"
#include "cwsurgery/obstruction.hpp"
#include "cwsurgery/parallel.hpp"

namespace cwsurgery {

std::string_view to_string(ConditionState v) {
  switch (v) {
    case ConditionState::Holds: return "holds";
    case ConditionState::Fails: return "fails";
    case ConditionState::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(CosmeticOutcome v) {
  switch (v) {
    case CosmeticOutcome::ConfirmedByThm110: return "ConfirmedByThm110";
    case CosmeticOutcome::ConfirmedByCor111: return "ConfirmedByCor111";
    case CosmeticOutcome::Open: return "Open";
  }
  return "Open";
}

ConditionC check_condition_c(const Integer& determinant) {
  if (determinant < 1 || !divides(9, determinant)) return {};
  Integer p_prime = determinant / 9;
  if (divides(3, p_prime) || !is_squarefree(p_prime)) return {};
  return {true, p_prime};
}

namespace {

ConditionState from_tristate(TriState v) {
  switch (v) {
    case TriState::True: return ConditionState::Holds;
    case TriState::False: return ConditionState::Fails;
    case TriState::Unknown: return ConditionState::Unknown;
  }
  return ConditionState::Unknown;
}

bool is_one(const std::optional<Integer>& v) { return v && *v == 1; }

}  // namespace

CosmeticVerdict cosmetic_verdict(const KnotRecord& record) {
  CosmeticVerdict out;
  out.name = record.name;

  const ConditionState a = from_tristate(record.dbc_is_lspace);
  out.reasons.push_back("(a) branched double cover L-space flag: " +
                        std::string(to_string(record.dbc_is_lspace)));

  ConditionState b = ConditionState::Unknown;
  if (!record.dbc_surgery) {
    out.reasons.push_back("(b) no surgery witness recorded");
  } else {
    const SurgeryWitness& w = *record.dbc_surgery;
    const Integer p = abs(w.slope.p());
    if (p != record.determinant) {
      b = ConditionState::Fails;
      out.reasons.push_back("(b) witness " + w.str() + " gives |H1| = " + p.get_str() +
                            " but det = " + record.determinant.get_str());
    } else if (divides(2, p)) {
      b = ConditionState::Fails;
      out.reasons.push_back("(b) witness " + w.str() + " has even |H1|, so gcd(2, p) != 1");
    } else {
      b = ConditionState::Holds;
      out.reasons.push_back("(b) witness " + w.str() + " with odd |H1| = " + p.get_str());
      if (std::holds_alternative<TorusKnot>(w.knot)) {
        WitnessCheck check;
        check.a2 = w.a2();
        check.lambda = lambda_knot({check.a2, w.slope});
        if (w.slope.p() > 0) {
          try {
            check.scan_all_obstructed = theorem_main_scan(w.slope.p(), w.slope.q()).all_obstructed();
          } catch (const Error&) {
          }
        }
        out.witness = check;
      }
    }
  }

  ConditionState b_prime = ConditionState::Unknown;
  if (is_one(record.unknotting_number) || is_one(record.h2_unknotting_number)) {
    b_prime = ConditionState::Holds;
    out.reasons.push_back(is_one(record.unknotting_number) ? "(b') unknotting number is 1"
                                                           : "(b') H(2)-unknotting number is 1");
  } else if (record.unknotting_number && record.h2_unknotting_number) {
    b_prime = ConditionState::Fails;
    out.reasons.push_back("(b') neither unknotting number is 1");
  } else {
    out.reasons.push_back("(b') unknotting data incomplete");
  }

  const ConditionC cc = check_condition_c(record.determinant);
  const ConditionState c = cc.holds ? ConditionState::Holds : ConditionState::Fails;
  out.reasons.push_back(cc.holds ? "(c) det = 9 * " + cc.p_prime.get_str()
                                 : "(c) det = " + record.determinant.get_str() +
                                       " is not 9p' with p' square-free and prime to 3");

  out.conditions = {{"a", a}, {"b", b}, {"bPrime", b_prime}, {"c", c}};
  const bool ac = a == ConditionState::Holds && c == ConditionState::Holds;
  if (ac && b == ConditionState::Holds) {
    out.verdict = CosmeticOutcome::ConfirmedByThm110;
  } else if (ac && b_prime == ConditionState::Holds) {
    out.verdict = CosmeticOutcome::ConfirmedByCor111;
  }
  return out;
}

const std::vector<std::string>& ten_crossing_exceptions() {
  static const std::vector<std::string> names = {"10_65", "10_66", "10_67",  "10_77",  "10_87",
                                                 "10_98", "10_108", "10_129", "10_147", "10_164"};
  return names;
}

CosmeticPartition reproduce_cor_ten(const std::vector<KnotRecord>& table) {
  if (table.empty()) throw DomainError("knot table is empty");
  const auto& names = ten_crossing_exceptions();
  std::vector<const KnotRecord*> picked;
  std::string missing;
  for (const auto& name : names) {
    auto it = std::find_if(table.begin(), table.end(),
                           [&](const KnotRecord& r) { return r.name == name; });
    if (it == table.end()) {
      missing += (missing.empty() ? "" : ", ") + name;
    } else {
      picked.push_back(&*it);
    }
  }
  if (!missing.empty()) throw DomainError("knot table lacks " + missing);

  const auto verdicts =
      parallel_map(picked.size(), [&](std::size_t i) { return cosmetic_verdict(*picked[i]).verdict; });
  CosmeticPartition out;
  for (std::size_t i = 0; i < picked.size(); ++i) {
    (verdicts[i] == CosmeticOutcome::Open ? out.open : out.resolved).push_back(picked[i]->name);
  }
  return out;
}

}  // namespace cwsurgery
