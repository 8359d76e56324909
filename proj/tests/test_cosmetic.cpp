#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cwsurgery/casson_walker.hpp"
#include "cwsurgery/cosmetic.hpp"
#include "cwsurgery/error.hpp"
#include "cwsurgery/number_theory.hpp"
#include "generators.hpp"

using namespace cwsurgery;

namespace {

std::vector<KnotRecord> bundled() { return load_knot_table(bundled_knot_table()); }

const KnotRecord& find(const std::vector<KnotRecord>& table, const std::string& name) {
  for (const auto& r : table)
    if (r.name == name) return r;
  throw std::runtime_error("missing " + name);
}

std::string table_with(const std::string& row) {
  return std::string(kKnotTableHeader) + "\n" + row + "\n";
}

bool confirmed(const CosmeticVerdict& v) { return v.verdict != CosmeticOutcome::Open; }

}  // namespace

TEST_CASE("bundled table contents") {
  const auto table = bundled();
  REQUIRE(table.size() == 10);
  const auto& k65 = find(table, "10_65");
  CHECK(k65.determinant == 63);
  REQUIRE(k65.dbc_surgery);
  CHECK(k65.dbc_surgery->str() == "T(3,4)@63/5");
  CHECK(k65.dbc_surgery->a2() == 5);
  const auto& k77 = find(table, "10_77");
  REQUIRE(k77.dbc_surgery);
  CHECK(k77.dbc_surgery->str() == "T(2,3)@63/10");
  CHECK(find(table, "10_164").unknotting_number == Integer(1));
  CHECK(find(table, "10_129").dbc_is_lspace == TriState::Unknown);
  for (const auto& r : table) {
    CHECK(!r.provenance.empty());
    CHECK(divides(2, r.determinant) == false);
  }
}

TEST_CASE("data file and embedded table agree") {
  std::ifstream in(std::string(CWS_DATA_DIR) + "/ten_crossing_knots.csv");
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == bundled_knot_table());
  CHECK(load_knot_table_file(std::string(CWS_DATA_DIR) + "/ten_crossing_knots.csv").size() == 10);
}

TEST_CASE("load_knot_table rejects malformed rows with line numbers") {
  CHECK_THROWS_WITH_AS(load_knot_table(table_with("k,12,true,,,,src")),
                       doctest::Contains("line 2"), DomainError);
  CHECK_THROWS_WITH_AS(load_knot_table(table_with("k,12,true,,,,src")), doctest::Contains("even"),
                       DomainError);
  CHECK_THROWS_WITH_AS(load_knot_table(table_with("k,9,true,,,")), doctest::Contains("columns"),
                       DomainError);
  CHECK_THROWS_WITH_AS(load_knot_table(table_with("k,9,maybe,,,,src")),
                       doctest::Contains("dbc_lspace"), DomainError);
  CHECK_THROWS_WITH_AS(load_knot_table(table_with("k,9,true,,,T(2,3)@7/1,src")),
                       doctest::Contains("det"), DomainError);
  CHECK_THROWS_WITH_AS(load_knot_table(table_with("k,9,true,,,T(2,4)@9/1,src")),
                       doctest::Contains("coprime"), DomainError);
  CHECK_THROWS_WITH_AS(load_knot_table(table_with("k,9,true,-1,,,src")),
                       doctest::Contains("non-negative"), DomainError);
  CHECK_THROWS_WITH_AS(load_knot_table(table_with("k,x,true,,,,src")), doctest::Contains("line 2"),
                       DomainError);
  CHECK_THROWS_AS(load_knot_table("name,det\nk,9\n"), DomainError);
  CHECK_THROWS_AS(load_knot_table(""), DomainError);
  CHECK_THROWS_AS(load_knot_table_file("/nonexistent/table.csv"), DomainError);
  // Blank and comment lines are skipped; the error still names the real line.
  const std::string text = "# comment\n\n" + std::string(kKnotTableHeader) + "\nk,9,true,,,,ok\n\nj,4,true,,,,bad\n";
  CHECK_THROWS_WITH_AS(load_knot_table(text), doctest::Contains("line 6"), DomainError);
}

TEST_CASE("CSV quoting and witnesses") {
  CHECK(split_csv_line(R"(a,"b,c",T(2,3)@9/1,"say ""hi""")") ==
        std::vector<std::string>{"a", "b,c", "T(2,3)@9/1", "say \"hi\""});
  CHECK_THROWS_AS(split_csv_line(R"(a,"b)"), DomainError);
  const auto w = parse_surgery_witness("K[7]@-9/2");
  CHECK(std::get<NamedKnot>(w.knot).name == "K");
  CHECK(w.a2() == 7);
  CHECK(w.str() == "K[7]@-9/2");
  CHECK_THROWS_AS(parse_surgery_witness("T(2,3)"), DomainError);
  CHECK_THROWS_AS(parse_surgery_witness("T(2,3)@9/3"), DomainError);
  CHECK_THROWS_AS(parse_surgery_witness("trefoil@9/1"), DomainError);
}

TEST_CASE("check_condition_c") {
  auto c = check_condition_c(63);
  CHECK(c.holds);
  CHECK(c.p_prime == 7);
  c = check_condition_c(9);
  CHECK(c.holds);
  CHECK(c.p_prime == 1);
  CHECK_FALSE(check_condition_c(27).holds);
  CHECK_FALSE(check_condition_c(75).holds);
  CHECK_FALSE(check_condition_c(81).holds);
  CHECK_FALSE(check_condition_c(25).holds);
}

TEST_CASE("check_condition_c against squarefree_decompose up to 10^4") {
  for (long det = 1; det <= 10000; ++det) {
    const auto c = check_condition_c(det);
    bool expected = false;
    if (det % 9 == 0) {
      const long p_prime = det / 9;
      const auto dec = squarefree_decompose(p_prime);
      expected = dec.d == 1 && p_prime % 3 != 0;
      if (expected) CHECK(c.p_prime == p_prime);
    }
    CHECK(c.holds == expected);
  }
}

TEST_CASE("cosmetic_verdict examples") {
  const auto table = bundled();
  auto v = cosmetic_verdict(find(table, "10_164"));
  CHECK(v.verdict == CosmeticOutcome::ConfirmedByCor111);
  CHECK(v.conditions.at("bPrime") == ConditionState::Holds);
  v = cosmetic_verdict(find(table, "10_67"));
  CHECK(v.verdict == CosmeticOutcome::ConfirmedByCor111);
  v = cosmetic_verdict(find(table, "10_66"));
  CHECK(v.verdict == CosmeticOutcome::Open);
  CHECK(v.conditions.at("b") == ConditionState::Unknown);
  CHECK(v.conditions.at("c") == ConditionState::Fails);
  v = cosmetic_verdict(find(table, "10_65"));
  CHECK(v.verdict == CosmeticOutcome::ConfirmedByThm110);
  REQUIRE(v.witness);
  CHECK(v.witness->a2 == 5);
  CHECK(v.witness->lambda == lambda_knot({5, Slope(63, 5)}));
  CHECK(v.witness->scan_all_obstructed == true);
  v = cosmetic_verdict(find(table, "10_147"));
  CHECK(v.conditions.at("a") == ConditionState::Unknown);
  CHECK(v.verdict == CosmeticOutcome::Open);
}

TEST_CASE("verdict invariants and monotonicity under downgrades") {
  oracle::Gen gen(51);
  const long dets[] = {9, 45, 63, 75, 81, 99, 117, 27};
  for (int i = 0; i < 2000; ++i) {
    KnotRecord r;
    r.name = "k" + std::to_string(i);
    r.determinant = dets[gen.range(0, 7)];
    r.dbc_is_lspace = static_cast<TriState>(gen.range(0, 2));
    if (gen.range(0, 2) == 0) r.unknotting_number = gen.range(0, 3);
    if (gen.range(0, 2) == 0) r.h2_unknotting_number = gen.range(0, 3);
    if (gen.range(0, 1) == 0) r.dbc_surgery = SurgeryWitness{TorusKnot{2, 3}, Slope(r.determinant, 1)};
    const auto v = cosmetic_verdict(r);
    const auto& cs = v.conditions;
    if (v.verdict == CosmeticOutcome::ConfirmedByThm110)
      CHECK((cs.at("a") == ConditionState::Holds && cs.at("b") == ConditionState::Holds &&
             cs.at("c") == ConditionState::Holds));
    if (v.verdict == CosmeticOutcome::ConfirmedByCor111)
      CHECK((cs.at("a") == ConditionState::Holds && cs.at("bPrime") == ConditionState::Holds &&
             cs.at("c") == ConditionState::Holds));

    KnotRecord down = r;
    switch (gen.range(0, 2)) {
      case 0: down.dbc_is_lspace = TriState::Unknown; break;
      case 1: down.dbc_surgery.reset(); break;
      default:
        down.unknotting_number.reset();
        down.h2_unknotting_number.reset();
    }
    CHECK((confirmed(cosmetic_verdict(down)) <= confirmed(v)));
  }
}

TEST_CASE("torus witnesses evaluate") {
  for (const auto& r : bundled()) {
    if (!r.dbc_surgery || !std::holds_alternative<TorusKnot>(r.dbc_surgery->knot)) continue;
    const auto& t = std::get<TorusKnot>(r.dbc_surgery->knot);
    CHECK(abs(r.dbc_surgery->slope.p()) == r.determinant);
    CHECK_NOTHROW(lambda_knot({torus_knot_a2(t.r, t.s), r.dbc_surgery->slope}));
  }
}

TEST_CASE("reproduce_cor_ten") {
  auto table = bundled();
  auto part = reproduce_cor_ten(table);
  CHECK(part.resolved == std::vector<std::string>{"10_65", "10_67", "10_77", "10_108", "10_164"});
  CHECK(part.open == std::vector<std::string>{"10_66", "10_87", "10_98", "10_129", "10_147"});

  for (auto& r : table)
    if (r.name == "10_65") r.dbc_is_lspace = TriState::Unknown;
  part = reproduce_cor_ten(table);
  CHECK(std::find(part.open.begin(), part.open.end(), "10_65") != part.open.end());
  CHECK(part.resolved.size() == 4);

  CHECK_THROWS_AS(reproduce_cor_ten({}), DomainError);
  table.erase(table.begin() + 1, table.begin() + 3);
  CHECK_THROWS_WITH_AS(reproduce_cor_ten(table), doctest::Contains("10_66, 10_67"), DomainError);
}
