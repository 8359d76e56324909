#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cwsurgery/rational.hpp"
#include "cwsurgery/slope.hpp"

namespace cwsurgery {

enum class TriState { True, False, Unknown };

std::string_view to_string(TriState v);

struct TorusKnot {
  Integer r, s;

  friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
};

struct NamedKnot {
  std::string name;
  Integer a2;

  friend bool operator==(const NamedKnot&, const NamedKnot&) = default;
};

/// Witness that the branched double cover is a Dehn surgery on a knot in S^3.
struct SurgeryWitness {
  std::variant<TorusKnot, NamedKnot> knot;
  Slope slope;

  /// "T(r,s)@P/Q" or "name[a2]@P/Q".
  std::string str() const;
  /// a2 of the underlying knot.
  Integer a2() const;
};

struct KnotRecord {
  std::string name;
  Integer determinant;
  TriState dbc_is_lspace = TriState::Unknown;
  std::optional<Integer> unknotting_number;
  std::optional<Integer> h2_unknotting_number;
  std::optional<SurgeryWitness> dbc_surgery;
  std::string provenance;
};

/// Header required on every table.
inline constexpr std::string_view kKnotTableHeader =
    "name,det,dbc_lspace,u,u_h2,dbc_surgery,provenance";

/// Parses a witness cell. Throws DomainError.
SurgeryWitness parse_surgery_witness(std::string_view text);

/// Parses CSV text with the header above. Empty optional cells mean
/// "unknown". Blank lines and lines starting with '#' are skipped.
/// Throws DomainError("line N: ...") for the first malformed or invalid row.
std::vector<KnotRecord> load_knot_table(std::string_view text);

/// Reads the file at path and parses it. Throws DomainError.
std::vector<KnotRecord> load_knot_table_file(const std::string& path);

/// Throws DomainError when a record breaks the table invariants (odd
/// positive determinant, witness |p| = det).
void validate_record(const KnotRecord& record);

/// The ten-crossing table shipped with the library.
std::string_view bundled_knot_table();

/// Splits one CSV line honoring double quotes ("" escapes a quote). Commas
/// inside parentheses do not split, so T(r,s) needs no quoting.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace cwsurgery
