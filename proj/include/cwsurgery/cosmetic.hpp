#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwsurgery/knot_table.hpp"

namespace cwsurgery {

enum class ConditionState { Holds, Fails, Unknown };
std::string_view to_string(ConditionState v);

/// det = 9 p' with p' square-free and coprime to 3.
struct ConditionC {
  bool holds = false;
  Integer p_prime;  ///< meaningful only when holds
};

ConditionC check_condition_c(const Integer& determinant);

enum class CosmeticOutcome { ConfirmedByThm110, ConfirmedByCor111, Open };
std::string_view to_string(CosmeticOutcome v);

/// Sanity data computed for a torus-knot witness.
struct WitnessCheck {
  Integer a2;
  Rational lambda;            ///< lambda_w of the witness surgery
  /// Distance-1 scan on the witness slope; empty when the slope lies
  /// outside the scan hypotheses.
  std::optional<bool> scan_all_obstructed;
};

struct CosmeticVerdict {
  std::string name;
  /// Keys "a", "b", "bPrime", "c".
  std::map<std::string, ConditionState> conditions;
  CosmeticOutcome verdict = CosmeticOutcome::Open;
  std::vector<std::string> reasons;
  std::optional<WitnessCheck> witness;
};

/// (a) from the recorded L-space flag, (b) from a validated surgery witness,
/// (b') from u = 1 or u_H(2) = 1, (c) from the determinant.
CosmeticVerdict cosmetic_verdict(const KnotRecord& record);

/// The ten knots the cosmetic pipeline is checked against, in table order.
const std::vector<std::string>& ten_crossing_exceptions();

struct CosmeticPartition {
  std::vector<std::string> resolved;
  std::vector<std::string> open;
};

/// Partitions the ten exceptional knots. Throws DomainError when the table
/// is empty or lacks any of them.
CosmeticPartition reproduce_cor_ten(const std::vector<KnotRecord>& table);

}  // namespace cwsurgery
