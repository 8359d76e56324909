#include "cwsurgery/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cwsurgery/dedekind.hpp"
#include "cwsurgery/number_theory.hpp"

namespace cwsurgery::cli {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

struct HelpRequested {
  std::string text;
};

Integer integer_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const DomainError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Slope slope_arg(const std::string& flag, const std::string& text) {
  try {
    return Slope::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void require_coprime_slope(const Integer& p, const Integer& q) {
  if (q == 0) throw UsageError("--q: degenerate fraction " + p.get_str() + "/0");
  if (gcd_pair(p, q) != 1) {
    throw UsageError("--p/--q: " + p.get_str() + "/" + q.get_str() + " is not reduced");
  }
}

void add_approx(Json& payload, const char* key, const Rational& value, bool enabled) {
  if (enabled) payload[std::string(key) + "_approx"] = value.approx();
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "unknown";
  return j.dump();
}

void render_text(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_array()) {
    for (const auto& item : j) {
      if (is_scalar(item)) {
        os << pad << "- " << scalar_text(item) << '\n';
      } else {
        os << pad << "-\n";
        render_text(item, indent + 2, os);
      }
    }
    return;
  }
  if (!j.is_object()) {
    os << pad << scalar_text(j) << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (is_scalar(value)) {
      os << pad << key << ": " << scalar_text(value) << '\n';
    } else if (value.is_array() &&
               std::all_of(value.begin(), value.end(), [](const Json& v) { return is_scalar(v); })) {
      os << pad << key << ":";
      if (value.empty()) os << " (none)";
      bool first = true;
      for (const auto& v : value) {
        os << (first ? " " : ", ") << scalar_text(v);
        first = false;
      }
      os << '\n';
    } else {
      os << pad << key << ":\n";
      render_text(value, indent + 2, os);
    }
  }
}

Json error_json(std::string_view kind, const std::string& message) {
  Json j;
  j["error"] = {{"kind", std::string(kind)}, {"message", message}};
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<KnotRecord> table_for(const CosmeticParams& c) {
  return c.table ? load_knot_table_file(*c.table) : load_knot_table(bundled_knot_table());
}

struct Outcome {
  Json payload;
  int exit_code;
};

Outcome dispatch(const CommandRequest& req) {
  return std::visit(
      Overloaded{
          [&](const DedekindSumParams& a) {
            const DedekindArgs args(a.p, a.q);
            const Rational s = a.naive ? dedekind_sum_naive(args) : dedekind_sum(args);
            Json j;
            j["p"] = integer_json(a.p);
            j["q"] = integer_json(a.q);
            j["method"] = a.naive ? "naive" : "reciprocity";
            j["s"] = rational_json(s);
            add_approx(j, "s", s, req.approx);
            return Outcome{j, kSuccess};
          },
          [&](const DedekindSymbolParams& a) {
            const Rational s = dedekind_symbol(a.slope);
            Json j;
            j["slope"] = a.slope.str();
            j["S"] = rational_json(s);
            add_approx(j, "S", s, req.approx);
            return Outcome{j, kSuccess};
          },
          [&](const LambdaKnotParams& a) {
            const Rational lambda = lambda_knot({a.a2, a.slope});
            Json j;
            j["a2"] = integer_json(a.a2);
            j["slope"] = a.slope.str();
            j["lambda"] = rational_json(lambda);
            add_approx(j, "lambda", lambda, req.approx);
            return Outcome{j, kSuccess};
          },
          [&](const LambdaLinkParams& a) {
            const TwoComponentLinkData link = link_from_json(read_json_file(a.input));
            const SurgeryFormulaBreakdown b = lambda_link_breakdown(link);
            Json j;
            j["link"] = link_json(link);
            if (a.breakdown) {
              j["breakdown"] = breakdown_json(b);
            } else {
              j["det"] = rational_json(b.form.det);
              j["signature"] = b.form.signature;
            }
            j["lambda"] = rational_json(b.lambda);
            add_approx(j, "lambda", b.lambda, req.approx);
            return Outcome{j, kSuccess};
          },
          [&](const ObstructSlopeParams& a) {
            const ObstructionReport r = obstruct_slope(a.p, a.q, a.n, a.l);
            return Outcome{report_json(r), is_obstructed(r.verdict) ? kSuccess : kInconclusive};
          },
          [&](const ObstructScanParams& a) {
            const ScanReport r = theorem_main_scan(a.p, a.q);
            return Outcome{scan_json(r), r.all_obstructed() ? kSuccess : kInconclusive};
          },
          [&](const CertifyParams& a) {
            const Certificate c = certify_complement(a.p, a.q, a.manifold_class);
            return Outcome{certificate_json(c), c.issued ? kSuccess : kInconclusive};
          },
          [&](const CosmeticParams& a) {
            const auto table = table_for(a);
            if (a.reproduce) return Outcome{partition_json(reproduce_cor_ten(table)), kSuccess};
            if (a.name) {
              for (const auto& r : table) {
                if (r.name == *a.name) {
                  const CosmeticVerdict v = cosmetic_verdict(r);
                  return Outcome{verdict_json(v),
                                 v.verdict == CosmeticOutcome::Open ? kInconclusive : kSuccess};
                }
              }
              throw DomainError("knot '" + *a.name + "' is not in the table");
            }
            Json list = Json::array();
            for (const auto& r : table) list.push_back(verdict_json(cosmetic_verdict(r)));
            Json j;
            j["verdicts"] = std::move(list);
            return Outcome{j, kSuccess};
          },
      },
      req.params);
}

}  // namespace

std::string CommandRequest::command() const {
  return std::visit(Overloaded{
                        [](const DedekindSumParams&) { return "dedekind sum"; },
                        [](const DedekindSymbolParams&) { return "dedekind symbol"; },
                        [](const LambdaKnotParams&) { return "lambda knot"; },
                        [](const LambdaLinkParams&) { return "lambda link"; },
                        [](const ObstructSlopeParams&) { return "obstruct slope"; },
                        [](const ObstructScanParams&) { return "obstruct scan"; },
                        [](const CertifyParams&) { return "certify"; },
                        [](const CosmeticParams&) { return "cosmetic"; },
                    },
                    params);
}

Json CommandRequest::echo() const {
  Json j;
  j["command"] = command();
  std::visit(Overloaded{
                 [&](const DedekindSumParams& a) {
                   j["p"] = integer_json(a.p);
                   j["q"] = integer_json(a.q);
                   j["naive"] = a.naive;
                 },
                 [&](const DedekindSymbolParams& a) { j["slope"] = a.slope.str(); },
                 [&](const LambdaKnotParams& a) {
                   j["a2"] = integer_json(a.a2);
                   j["slope"] = a.slope.str();
                 },
                 [&](const LambdaLinkParams& a) {
                   j["input"] = a.input;
                   j["breakdown"] = a.breakdown;
                 },
                 [&](const ObstructSlopeParams& a) {
                   j["p"] = integer_json(a.p);
                   j["q"] = integer_json(a.q);
                   j["n"] = integer_json(a.n);
                   j["l"] = integer_json(a.l);
                 },
                 [&](const ObstructScanParams& a) {
                   j["p"] = integer_json(a.p);
                   j["q"] = integer_json(a.q);
                 },
                 [&](const CertifyParams& a) {
                   j["p"] = integer_json(a.p);
                   j["q"] = integer_json(a.q);
                   j["class"] = std::string(to_string(a.manifold_class));
                 },
                 [&](const CosmeticParams& a) {
                   j["table"] = a.table ? Json(*a.table) : Json("bundled");
                   if (a.name) j["name"] = *a.name;
                   j["reproduce_cor_ten"] = a.reproduce;
                 },
             },
             params);
  j["output"] = output == OutputFormat::Json ? "json" : "text";
  return j;
}

CommandRequest parse_request(const std::vector<std::string>& args) {
  CLI::App app{"Exact Casson-Walker surgery invariants and complement obstructions", "cwsurgery"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string output = "json";
  bool approx = false;
  bool timing = false;
  app.add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--approx", approx, "append decimal approximations (display only)");
  app.add_flag("--timing", timing, "include elapsed milliseconds");

  std::string p, q, n, l, a2, slope, input, cls, table, name;
  bool naive = false, breakdown = false, reproduce = false;

  auto* dedekind = app.add_subcommand("dedekind", "Dedekind sums and symbols");
  dedekind->require_subcommand(1);
  auto* dsum = dedekind->add_subcommand("sum", "s(p, q)");
  dsum->add_option("--p", p)->required();
  dsum->add_option("--q", q)->required();
  dsum->add_flag("--naive", naive, "term-by-term summation");
  auto* dsym = dedekind->add_subcommand("symbol", "S(p/q) = 12 sign(q) s(p, q)");
  dsym->add_option("--slope", slope)->required();

  auto* lambda = app.add_subcommand("lambda", "Casson-Walker invariant of a surgery");
  lambda->require_subcommand(1);
  auto* lknot = lambda->add_subcommand("knot", "p/q surgery on a knot");
  lknot->add_option("--a2", a2)->required();
  lknot->add_option("--slope", slope)->required();
  auto* llink = lambda->add_subcommand("link", "surgery on a 2-component link");
  llink->add_option("--input", input, "JSON file {a2x, a2y, a3, lk, fx, fy}")->required();
  llink->add_flag("--breakdown", breakdown, "report every summand of the formula");

  auto* obstruct = app.add_subcommand("obstruct", "knot complement obstructions");
  obstruct->require_subcommand(1);
  auto* oslope = obstruct->add_subcommand("slope", "one (p, q, n, l) instance");
  oslope->add_option("--p", p)->required();
  oslope->add_option("--q", q)->required();
  oslope->add_option("--n", n)->required();
  oslope->add_option("--l", l)->required();
  auto* oscan = obstruct->add_subcommand("scan", "every l at distance one");
  oscan->add_option("--p", p)->required();
  oscan->add_option("--q", q)->required();

  auto* certify = app.add_subcommand("certify", "complement certificate for a manifold class");
  certify->add_option("--p", p)->required();
  certify->add_option("--q", q)->required();
  certify->add_option("--class", cls, "reducible | lens | finite | ssfs")->required();

  auto* cosmetic = app.add_subcommand("cosmetic", "cosmetic crossing hypotheses over a knot table");
  auto* table_opt = cosmetic->add_option("--table", table, "CSV knot table");
  cosmetic->add_option("--name", name, "single knot")->needs(table_opt);
  cosmetic->add_flag("--reproduce-cor-ten", reproduce, "partition the ten exceptional knots")
      ->excludes(table_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CommandRequest req;
  req.output = output == "text" ? OutputFormat::Text : OutputFormat::Json;
  req.approx = approx;
  req.timing = timing;

  if (dsum->parsed()) {
    DedekindSumParams d{integer_arg("--p", p), integer_arg("--q", q), naive};
    require_coprime_slope(d.p, d.q);
    req.params = d;
  } else if (dsym->parsed()) {
    req.params = DedekindSymbolParams{slope_arg("--slope", slope)};
  } else if (lknot->parsed()) {
    req.params = LambdaKnotParams{integer_arg("--a2", a2), slope_arg("--slope", slope)};
  } else if (llink->parsed()) {
    req.params = LambdaLinkParams{input, breakdown};
  } else if (oslope->parsed()) {
    ObstructSlopeParams o{integer_arg("--p", p), integer_arg("--q", q), integer_arg("--n", n),
                          integer_arg("--l", l)};
    require_coprime_slope(o.p, o.q);
    if (o.p < 1) throw UsageError("--p must be positive");
    if (o.n < 1) throw UsageError("--n must be positive");
    req.params = o;
  } else if (oscan->parsed()) {
    ObstructScanParams o{integer_arg("--p", p), integer_arg("--q", q)};
    require_coprime_slope(o.p, o.q);
    req.params = o;
  } else if (certify->parsed()) {
    CertifyParams c{integer_arg("--p", p), integer_arg("--q", q), ManifoldClass::Lens};
    require_coprime_slope(c.p, c.q);
    try {
      c.manifold_class = parse_manifold_class(cls);
    } catch (const DomainError& e) {
      throw UsageError(std::string("--class: ") + e.what());
    }
    req.params = c;
  } else if (cosmetic->parsed()) {
    if (!reproduce && table.empty()) {
      throw UsageError("cosmetic needs --table FILE or --reproduce-cor-ten");
    }
    CosmeticParams c;
    if (!table.empty()) c.table = table;
    if (!name.empty()) c.name = name;
    c.reproduce = reproduce;
    req.params = c;
  } else {
    throw UsageError("missing subcommand");
  }
  return req;
}

std::string RunReport::render() const {
  Json doc;
  doc["request"] = request;
  doc["result"] = payload;
  doc["exit_code"] = exit_code;
  if (include_timing) doc["elapsed_ms"] = elapsed_ms;
  if (output == OutputFormat::Json) return doc.dump(2) + "\n";
  std::ostringstream os;
  render_text(doc, 0, os);
  return os.str();
}

RunReport run(const CommandRequest& request) {
  RunReport report;
  report.request = request.echo();
  report.include_timing = request.timing;
  report.output = request.output;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = dispatch(request);
    report.payload = std::move(o.payload);
    report.exit_code = o.exit_code;
  } catch (const HypothesisError& e) {
    report.payload = error_json("HypothesisError", e.what());
    report.exit_code = kInputError;
  } catch (const Error& e) {
    report.payload = error_json("DomainError", e.what());
    report.exit_code = kInputError;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandRequest request;
  try {
    request = parse_request(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kSuccess;
  } catch (const UsageError& e) {
    err << "cwsurgery: " << e.what() << "\nRun with --help for usage.\n";
    Json doc;
    doc["result"] = error_json("UsageError", e.what());
    doc["exit_code"] = static_cast<int>(kInputError);
    out << doc.dump(2) << "\n";
    return kInputError;
  }
  const RunReport report = run(request);
  out << report.render();
  if (report.exit_code == kInputError) {
    err << "cwsurgery: " << report.payload["error"]["message"].get<std::string>() << "\n";
  }
  return report.exit_code;
}

}  // namespace cwsurgery::cli
