#include "cwsurgery/knot_table.hpp"

#include <fstream>
#include <sstream>

#include "cwsurgery/casson_walker.hpp"
#include "cwsurgery/error.hpp"
#include "cwsurgery/number_theory.hpp"

namespace cwsurgery {

namespace {

constexpr std::size_t kColumns = 7;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

TriState parse_tristate(std::string_view cell) {
  if (cell == "true") return TriState::True;
  if (cell == "false") return TriState::False;
  if (cell == "unknown") return TriState::Unknown;
  throw DomainError("dbc_lspace must be true, false or unknown, got '" + std::string(cell) + "'");
}

std::optional<Integer> parse_optional_count(std::string_view cell, const char* column) {
  if (cell.empty()) return std::nullopt;
  Integer v = parse_integer(cell);
  if (v < 0) throw DomainError(std::string(column) + " must be non-negative");
  return v;
}

}  // namespace

std::string_view to_string(TriState v) {
  switch (v) {
    case TriState::True: return "true";
    case TriState::False: return "false";
    case TriState::Unknown: return "unknown";
  }
  return "unknown";
}

std::string SurgeryWitness::str() const {
  std::string head;
  if (const auto* t = std::get_if<TorusKnot>(&knot)) {
    head = "T(" + t->r.get_str() + "," + t->s.get_str() + ")";
  } else {
    const auto& k = std::get<NamedKnot>(knot);
    head = k.name + "[" + k.a2.get_str() + "]";
  }
  return head + "@" + slope.str();
}

Integer SurgeryWitness::a2() const {
  if (const auto* t = std::get_if<TorusKnot>(&knot)) {
    return torus_knot_a2(t->r, t->s);
  }
  return std::get<NamedKnot>(knot).a2;
}

SurgeryWitness parse_surgery_witness(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) {
    throw DomainError("surgery witness '" + std::string(text) + "' lacks '@P/Q'");
  }
  const std::string_view head = trim(text.substr(0, at));
  const Slope slope = Slope::parse(trim(text.substr(at + 1)));
  if (head.size() > 3 && head.substr(0, 2) == "T(" && head.back() == ')') {
    const std::string_view inner = head.substr(2, head.size() - 3);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) {
      throw DomainError("torus knot witness '" + std::string(head) + "' needs T(r,s)");
    }
    TorusKnot t{parse_integer(trim(inner.substr(0, comma))),
                parse_integer(trim(inner.substr(comma + 1)))};
    if (t.r < 2 || t.s < 2 || gcd_pair(t.r, t.s) != 1) {
      throw DomainError("torus knot T(" + t.r.get_str() + "," + t.s.get_str() +
                        ") needs coprime parameters >= 2");
    }
    return {std::move(t), slope};
  }
  const auto open = head.find('[');
  if (open == std::string_view::npos || head.back() != ']' || open == 0) {
    throw DomainError("surgery witness '" + std::string(text) +
                      "' must be T(r,s)@P/Q or name[a2]@P/Q");
  }
  NamedKnot k{std::string(head.substr(0, open)),
              parse_integer(head.substr(open + 1, head.size() - open - 2))};
  return {std::move(k), slope};
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  int depth = 0;  // T(r,s) witnesses carry an unquoted comma
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cell += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == '(') {
      ++depth;
      cell += ch;
    } else if (ch == ')') {
      if (depth > 0) --depth;
      cell += ch;
    } else if (ch == ',' && depth == 0) {
      cells.push_back(std::string(trim(cell)));
      cell.clear();
    } else {
      cell += ch;
    }
  }
  if (quoted) throw DomainError("unterminated quoted field");
  if (depth != 0) throw DomainError("unbalanced parenthesis");
  cells.push_back(std::string(trim(cell)));
  return cells;
}

void validate_record(const KnotRecord& record) {
  if (record.name.empty()) throw DomainError("knot name is empty");
  if (record.determinant < 1) {
    throw DomainError(record.name + ": determinant must be positive");
  }
  if (divides(2, record.determinant)) {
    throw DomainError(record.name + ": determinant " + record.determinant.get_str() +
                      " is even; a knot's branched double cover has odd |H1|");
  }
  if (record.dbc_surgery && abs(record.dbc_surgery->slope.p()) != record.determinant) {
    throw DomainError(record.name + ": witness slope " + record.dbc_surgery->slope.str() +
                      " gives |H1| = " + Integer(abs(record.dbc_surgery->slope.p())).get_str() +
                      ", not det = " + record.determinant.get_str());
  }
}

std::vector<KnotRecord> load_knot_table(std::string_view text) {
  std::vector<KnotRecord> records;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!saw_header) {
      if (line != kKnotTableHeader) {
        throw DomainError("line " + std::to_string(line_no) + ": expected header '" +
                          std::string(kKnotTableHeader) + "'");
      }
      saw_header = true;
      continue;
    }
    try {
      const auto cells = split_csv_line(line);
      if (cells.size() != kColumns) {
        throw DomainError("expected " + std::to_string(kColumns) + " columns, got " +
                          std::to_string(cells.size()));
      }
      KnotRecord r;
      r.name = cells[0];
      r.determinant = parse_integer(cells[1]);
      r.dbc_is_lspace = parse_tristate(cells[2]);
      r.unknotting_number = parse_optional_count(cells[3], "u");
      r.h2_unknotting_number = parse_optional_count(cells[4], "u_h2");
      if (!cells[5].empty()) r.dbc_surgery = parse_surgery_witness(cells[5]);
      r.provenance = cells[6];
      validate_record(r);
      records.push_back(std::move(r));
    } catch (const DomainError& e) {
      throw DomainError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!saw_header) throw DomainError("knot table is empty (no header)");
  return records;
}

std::vector<KnotRecord> load_knot_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open knot table '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_knot_table(buffer.str());
}

}  // namespace cwsurgery
