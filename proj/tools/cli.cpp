#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssq/ssq.hpp"
#include "ssq/verify.hpp"

namespace ssq::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

/// Largest integer a JSON double holds exactly.
const BigInt kMaxSafeInteger = (BigInt(1) << 53) - 1;

/// Collects payload values, remembering whether any integer had to be
/// written as a decimal string.
class JsonBuilder {
 public:
  Json integer(const BigInt& v) {
    if (abs(v) <= kMaxSafeInteger) return Json(v.convert_to<long long>());
    big_ = true;
    return Json(v.str());
  }

  Json integers(const std::vector<BigInt>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(integer(v));
    return arr;
  }

  static Json monomials(const std::vector<Monomial>& ms) {
    Json arr = Json::array();
    for (const auto& m : ms) arr.push_back(Json::array({m.i, m.j}));
    return arr;
  }

  static Json monomial(const std::optional<Monomial>& m) {
    return m ? Json::array({m->i, m->j}) : Json(nullptr);
  }

  bool big() const { return big_; }

 private:
  bool big_ = false;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t c = 0; c < cells.size(); ++c) out += (c ? "," : "") + csv_cell(cells[c]);
  return out + "\n";
}

/// "[1,7,5]"
std::string bracket(const HVector& h) {
  std::string out = "[";
  for (std::size_t i = 0; i < h.size(); ++i) out += (i ? "," : "") + h[i].str();
  return out + "]";
}

std::uint64_t work_cap() {
  const char* env = std::getenv("SSQ_WORK_CAP");
  if (env == nullptr || *env == '\0') return kDefaultWorkCap;
  std::uint64_t cap = 0;
  const std::string_view text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap == 0)
    throw std::invalid_argument("SSQ_WORK_CAP must be a positive integer, got '" + std::string(text) + "'");
  return cap;
}

struct Emitter {
  std::ostream& out;
  Format format;
  std::string command;
  std::vector<std::string> argv;

  void json(const JsonBuilder& jb, const Json& payload) const {
    Json env;
    env["command"] = command;
    env["argv"] = argv;
    env["format"] = "json";
    env["bigints_as_strings"] = jb.big();
    for (const auto& [key, value] : payload.items()) env[key] = value;
    out << env.dump() << '\n';
  }
};

Diagram diagram_from(const std::string& gens, std::optional<int> dim) {
  Diagram d = closure(parse_generators(gens));
  if (dim) d = extend_first_row(d, *dim);
  return d;
}

Json structural_json(const StructuralEvidence& ev) {
  Json s;
  s["outcome"] = to_string(ev.outcome);
  s["holds"] = ev.holds();
  s["k"] = ev.k;
  s["extra_generators"] = JsonBuilder::monomials(ev.extra_generators);
  s["offending"] = JsonBuilder::monomial(ev.offending);
  if (ev.offending_pair)
    s["offending_pair"] = JsonBuilder::monomials({ev.offending_pair->first, ev.offending_pair->second});
  else
    s["offending_pair"] = nullptr;
  s["shared_box"] = JsonBuilder::monomial(ev.shared_box);
  return s;
}

std::string structural_text(const StructuralEvidence& ev) {
  std::string out = to_string(ev.outcome);
  if (ev.offending) out += " (offending " + to_string(*ev.offending) + ")";
  if (ev.offending_pair)
    out += " (" + to_string(ev.offending_pair->first) + " and " + to_string(ev.offending_pair->second) +
           " share " + to_string(*ev.shared_box) + ")";
  return out;
}

int cmd_hvector(const Emitter& em, const std::string& gens, std::optional<int> dim) {
  const Diagram d = diagram_from(gens, dim);
  const HilbertSeries series = hilbert_series(d);
  const bool gorenstein = classify(d).gorenstein;
  switch (em.format) {
    case Format::text:
      em.out << "n: " << d.dimension() << "\nh: " << to_string(series.numerator) << "\nseries: " << to_string(series)
             << "\ngorenstein: " << (gorenstein ? "true" : "false") << '\n';
      break;
    case Format::csv:
      em.out << csv_line({"n", "h", "gorenstein"})
             << csv_line({std::to_string(d.dimension()), bracket(series.numerator), gorenstein ? "true" : "false"});
      break;
    case Format::json: {
      JsonBuilder jb;
      Json p;
      p["n"] = d.dimension();
      p["h"] = jb.integers(series.numerator.entries());
      p["gorenstein"] = gorenstein;
      p["denom_power"] = series.denom_power;
      p["series"] = to_string(series);
      em.json(jb, p);
      break;
    }
  }
  return kOk;
}

int cmd_classify(const Emitter& em, const std::string& gens) {
  const Diagram d = closure(parse_generators(gens));
  const ClassificationReport r = classify(d);
  const bool normalized = r.input != r.normalized;
  switch (em.format) {
    case Format::text:
      em.out << "gorenstein: " << (r.gorenstein ? "true" : "false") << "\nn: " << r.n << "\nk: " << r.k
             << "\nh: " << to_string(r.hvector) << "\ninput bounds: " << format_bounds(r.input)
             << "\nnormalized bounds: " << format_bounds(r.normalized) << (normalized ? " (row 1 trimmed)" : "")
             << "\nsymmetric: " << (r.symmetric ? "true" : "false") << "\nquick check: " << (r.quick ? "true" : "false")
             << "\nstructural: " << structural_text(r.structural)
             << "\nextra generators: " << format_st(r.structural.extra_generators)
             << "\nmethod agreement: " << (r.method_agreement ? "true" : "false") << '\n';
      break;
    case Format::csv:
      em.out << csv_line({"bounds", "generators", "h", "gorenstein", "extra"})
             << csv_line({format_bounds(r.normalized), format_generators(borel_generators(r.normalized)),
                          bracket(r.hvector), r.gorenstein ? "true" : "false",
                          format_generators(r.structural.extra_generators)});
      break;
    case Format::json: {
      JsonBuilder jb;
      Json p;
      p["gorenstein"] = r.gorenstein;
      p["n"] = r.n;
      p["k"] = r.k;
      p["h"] = jb.integers(r.hvector.entries());
      p["method_agreement"] = r.method_agreement;
      p["symmetric"] = r.symmetric;
      p["quick_check"] = r.quick;
      p["input_bounds"] = r.input.bounds();
      p["normalized_bounds"] = r.normalized.bounds();
      p["normalized"] = normalized;
      p["structural"] = structural_json(r.structural);
      em.json(jb, p);
      break;
    }
  }
  return kOk;
}

struct SeriesArgs {
  std::string family;
  std::optional<int> k, n, j, a, dim;
};

int need(const std::optional<int>& v, const char* flag, const std::string& family) {
  if (!v) throw std::invalid_argument("family " + family + " needs " + flag);
  return *v;
}

int cmd_series(const Emitter& em, const SeriesArgs& args) {
  HVector h;
  int natural = 0;
  const auto& f = args.family;
  if (f == "v2k") {
    const int k = need(args.k, "--k", f);
    h = hvec_v2k(k);
    natural = 2 * k;
  } else if (f == "veronese") {
    const int n = args.n ? *args.n : need(args.k, "--n", f);
    h = hvec_veronese(n);
    natural = n;
  } else if (f == "v2k-square") {
    const int k = need(args.k, "--k", f);
    h = hvec_v2k_square(k, need(args.j, "--j", f));
    natural = 2 * k;
  } else if (f == "hook") {
    const int k = need(args.k, "--k", f);
    h = hvec_hook(k);
    natural = 2 * k;
  } else if (f == "onebox") {
    const int k = need(args.k, "--k", f);
    h = hvec_onebox(k, need(args.a, "--a", f));
    natural = 2 * k;
  } else {
    throw std::invalid_argument("unknown family '" + f + "'");
  }
  if (args.dim && *args.dim < natural)
    throw std::invalid_argument("--dim must be at least " + std::to_string(natural));
  const HilbertSeries series{h, args.dim ? *args.dim : natural};
  switch (em.format) {
    case Format::text:
      em.out << "family: " << f << "\nnumerator: " << to_string(h) << "\ndenom_power: " << series.denom_power
             << "\nseries: " << to_string(series) << "\nsymmetric: " << (is_symmetric(h) ? "true" : "false") << '\n';
      break;
    case Format::csv:
      em.out << csv_line({"family", "numerator", "denom_power"})
             << csv_line({f, bracket(h), std::to_string(series.denom_power)});
      break;
    case Format::json: {
      JsonBuilder jb;
      Json p;
      p["family"] = f;
      p["numerator"] = jb.integers(h.entries());
      p["denom_power"] = series.denom_power;
      p["series"] = to_string(series);
      p["symmetric"] = is_symmetric(h);
      em.json(jb, p);
      break;
    }
  }
  return kOk;
}

int cmd_enumerate(const Emitter& em, int n, bool gorenstein_only) {
  const auto rows = classify_all(n, gorenstein_only, work_cap());
  switch (em.format) {
    case Format::text:
      em.out << "bounds | generators | h | gorenstein | W\n";
      for (const auto& r : rows)
        em.out << format_bounds(r.diagram) << " | " << format_generators(r.generators) << " | " << to_string(r.hvector)
               << " | " << (r.gorenstein ? "true" : "false") << " | "
               << (r.gorenstein ? format_st(r.extra_generators) : "-") << '\n';
      em.out << rows.size() << " diagrams\n";
      break;
    case Format::csv:
      em.out << csv_line({"bounds", "generators", "h", "gorenstein", "extra"});
      for (const auto& r : rows)
        em.out << csv_line({format_bounds(r.diagram), format_generators(r.generators), bracket(r.hvector),
                            r.gorenstein ? "true" : "false", format_generators(r.extra_generators)});
      break;
    case Format::json: {
      JsonBuilder jb;
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json row;
        row["bounds"] = r.diagram.bounds();
        row["generators"] = format_generators(r.generators);
        row["h"] = jb.integers(r.hvector.entries());
        row["gorenstein"] = r.gorenstein;
        row["extra_generators"] = JsonBuilder::monomials(r.extra_generators);
        arr.push_back(std::move(row));
      }
      Json p;
      p["n"] = n;
      p["count"] = rows.size();
      p["rows"] = std::move(arr);
      em.json(jb, p);
      break;
    }
  }
  return kOk;
}

std::vector<AppendixRow> load_table(const std::string& path) {
  if (path.empty()) return bundled_appendix();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read table '" + path + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_appendix_csv(text);
}

int cmd_appendix(const Emitter& em, int kmax, bool audit, const std::string& table_path) {
  if (!audit) {
    const auto rows = appendix_table(kmax);
    switch (em.format) {
      case Format::text:
        em.out << render_appendix_table(rows);
        break;
      case Format::csv:
        em.out << csv_line({"k", "h", "gens"});
        for (const auto& r : rows)
          em.out << csv_line({std::to_string(r.diagram.dimension() / 2), bracket(r.hvector),
                              format_generators(r.extra_generators)});
        break;
      case Format::json: {
        JsonBuilder jb;
        Json arr = Json::array();
        for (const auto& r : rows) {
          Json row;
          row["k"] = r.diagram.dimension() / 2;
          row["h"] = jb.integers(r.hvector.entries());
          row["W"] = JsonBuilder::monomials(r.extra_generators);
          row["bounds"] = r.diagram.bounds();
          arr.push_back(std::move(row));
        }
        Json p;
        p["kmax"] = kmax;
        p["rows"] = std::move(arr);
        em.json(jb, p);
        break;
      }
    }
    return kOk;
  }

  const AuditReport report = audit_appendix(kmax, load_table(table_path));
  switch (em.format) {
    case Format::text:
      em.out << render_audit(report);
      break;
    case Format::csv:
      em.out << csv_line({"kind", "row", "k", "h", "gens", "detail"});
      for (const auto& r : report.rows) {
        if (!r.hvector_found)
          em.out << csv_line({"missing_hvector", std::to_string(r.index + 1), std::to_string(r.row.k), bracket(r.row.h),
                              format_generators(r.row.generators), ""});
        for (const auto& issue : r.label_issues)
          em.out << csv_line({"inconsistent_label", std::to_string(r.index + 1), std::to_string(r.row.k),
                              bracket(r.row.h), format_generators(r.row.generators), issue});
      }
      for (const auto& u : report.unlisted)
        em.out << csv_line({"unlisted", "", std::to_string(u.diagram.dimension() / 2), bracket(u.hvector),
                            format_generators(u.extra_generators), format_bounds(u.diagram)});
      break;
    case Format::json: {
      JsonBuilder jb;
      Json rows = Json::array();
      for (const auto& r : report.rows) {
        Json row;
        row["row"] = r.index + 1;
        row["k"] = r.row.k;
        row["h"] = jb.integers(r.row.h.entries());
        row["W"] = JsonBuilder::monomials(r.row.generators);
        row["hvector_found"] = r.hvector_found;
        Json carriers = Json::array();
        for (const auto& c : r.carriers) carriers.push_back(c.bounds());
        row["carriers"] = std::move(carriers);
        row["label_hvector"] = r.label_hvector ? jb.integers(r.label_hvector->entries()) : Json(nullptr);
        row["label_issues"] = r.label_issues;
        rows.push_back(std::move(row));
      }
      Json unlisted = Json::array();
      for (const auto& u : report.unlisted) {
        Json row;
        row["k"] = u.diagram.dimension() / 2;
        row["bounds"] = u.diagram.bounds();
        row["W"] = JsonBuilder::monomials(u.extra_generators);
        row["h"] = jb.integers(u.hvector.entries());
        unlisted.push_back(std::move(row));
      }
      Json p;
      p["kmax"] = kmax;
      p["rows_checked"] = report.rows.size();
      p["hvectors_found"] = report.hvectors_found();
      p["perfect"] = report.perfect();
      p["rows"] = std::move(rows);
      p["unlisted"] = std::move(unlisted);
      em.json(jb, p);
      break;
    }
  }
  return kOk;
}

int cmd_expand(const Emitter& em, const std::string& gens, int upto, bool oracle) {
  if (upto < 0) throw std::invalid_argument("--upto must be nonnegative");
  const Diagram d = closure(parse_generators(gens));
  const auto values = expand(hilbert_series(d), upto);
  std::vector<BigInt> direct;
  bool agree = true;
  if (oracle) {
    const auto cap = work_cap();
    for (int i = 0; i <= upto; ++i) {
      direct.push_back(direct_hf(d, i, cap));
      agree = agree && direct.back() == values[static_cast<std::size_t>(i)];
    }
  }
  switch (em.format) {
    case Format::text:
      for (int i = 0; i <= upto; ++i) {
        em.out << "HF(" << i << ") = " << values[static_cast<std::size_t>(i)].str();
        if (oracle) em.out << "  direct = " << direct[static_cast<std::size_t>(i)].str();
        em.out << '\n';
      }
      if (oracle) em.out << "oracle agreement: " << (agree ? "true" : "false") << '\n';
      break;
    case Format::csv:
      em.out << csv_line(oracle ? std::vector<std::string>{"i", "hf", "direct"} : std::vector<std::string>{"i", "hf"});
      for (int i = 0; i <= upto; ++i) {
        std::vector<std::string> cells{std::to_string(i), values[static_cast<std::size_t>(i)].str()};
        if (oracle) cells.push_back(direct[static_cast<std::size_t>(i)].str());
        em.out << csv_line(cells);
      }
      break;
    case Format::json: {
      JsonBuilder jb;
      Json p;
      p["n"] = d.dimension();
      p["hf"] = jb.integers(values);
      if (oracle) {
        p["direct"] = jb.integers(direct);
        p["oracle_agreement"] = agree;
      }
      em.json(jb, p);
      break;
    }
  }
  return agree ? kOk : kFailed;
}

int cmd_verify(const Emitter& em, VerifyOptions opt) {
  opt.cap = work_cap();
  const auto results = run_verification(opt);
  const auto passed = std::count_if(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
  switch (em.format) {
    case Format::text:
    case Format::csv:
      for (const auto& r : results) {
        em.out << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed) em.out << ": " << r.detail;
        em.out << '\n';
      }
      em.out << "verify: " << passed << "/" << results.size() << " properties passed\n";
      break;
    case Format::json: {
      JsonBuilder jb;
      Json arr = Json::array();
      for (const auto& r : results) arr.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      Json p;
      p["max_n"] = opt.max_n;
      p["hf_degree"] = opt.hf_degree;
      p["samples"] = opt.samples;
      p["seed"] = opt.seed;
      p["passed"] = passed;
      p["total"] = results.size();
      p["properties"] = std::move(arr);
      em.json(jb, p);
      break;
    }
  }
  return passed == static_cast<long>(results.size()) ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert series and Gorenstein classification of strongly stable quadratic monomial algebras", "ssq"};
  app.require_subcommand(1);

  Format format = Format::text;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  std::string gens;
  std::optional<int> dim;

  auto* hvector = app.add_subcommand("hvector", "h-vector, dimension and Hilbert series");
  hvector->add_option("--gens", gens, "generators, e.g. \"3,4;2,6\"")->required();
  hvector->add_option("--dim", dim, "extend row 1 to this many variables");
  add_format(hvector);

  auto* classify_cmd = app.add_subcommand("classify", "full Gorenstein classification report");
  classify_cmd->add_option("--gens", gens, "generators")->required();
  add_format(classify_cmd);

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "closed-form Hilbert series of a Gorenstein family");
  series->add_option("--family", series_args.family, "v2k, veronese, v2k-square, hook or onebox")
      ->required()
      ->check(CLI::IsMember({"v2k", "veronese", "v2k-square", "hook", "onebox"}));
  series->add_option("--k", series_args.k, "half the dimension");
  series->add_option("--n", series_args.n, "dimension (veronese)");
  series->add_option("--j", series_args.j, "square index (v2k-square)");
  series->add_option("--a", series_args.a, "row of the added box (onebox)");
  series->add_option("--dim", series_args.dim, "denominator exponent, at least the natural dimension");
  add_format(series);

  int enum_n = 0;
  bool gorenstein_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "classify every no-free-variable diagram of dimension n");
  enumerate->add_option("--n", enum_n, "dimension")->required();
  enumerate->add_flag("--gorenstein-only", gorenstein_only, "keep Gorenstein rows only");
  add_format(enumerate);

  int kmax = 0;
  bool audit = false;
  std::string table_path;
  auto* appendix = app.add_subcommand("appendix", "reproduce or audit the table of Gorenstein algebras");
  appendix->add_option("--kmax", kmax, "largest k")->required();
  appendix->add_flag("--audit", audit, "compare against the published table");
  appendix->add_option("--table", table_path, "audit this CSV instead of the bundled table");
  add_format(appendix);

  auto* render = app.add_subcommand("render", "ASCII shifted Ferrers diagram");
  render->add_option("--gens", gens, "generators")->required();

  int upto = 0;
  bool oracle = false;
  auto* expand_cmd = app.add_subcommand("expand", "Hilbert function values from the series");
  expand_cmd->add_option("--gens", gens, "generators")->required();
  expand_cmd->add_option("--upto", upto, "largest degree")->required();
  expand_cmd->add_flag("--oracle", oracle, "cross-check against direct monomial counting");
  add_format(expand_cmd);

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--max-n", verify_opt.max_n, "largest dimension for exhaustive checks")->capture_default_str();
  verify->add_option("--hf-degree", verify_opt.hf_degree, "largest degree for the direct oracle")->capture_default_str();
  verify->add_option("--samples", verify_opt.samples, "random diagrams per property")->capture_default_str();
  verify->add_option("--seed", verify_opt.seed, "random seed")->capture_default_str();
  add_format(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  auto* active = app.get_subcommands().front();
  const Emitter em{out, format, active->get_name(), args};
  try {
    if (active == hvector) return cmd_hvector(em, gens, dim);
    if (active == classify_cmd) return cmd_classify(em, gens);
    if (active == series) return cmd_series(em, series_args);
    if (active == enumerate) return cmd_enumerate(em, enum_n, gorenstein_only);
    if (active == appendix) return cmd_appendix(em, kmax, audit, table_path);
    if (active == render) {
      out << render_ascii(closure(parse_generators(gens)));
      return kOk;
    }
    if (active == expand_cmd) return cmd_expand(em, gens, upto, oracle);
    if (active == verify) {
      if (verify_opt.max_n < 2 || verify_opt.hf_degree < 0 || verify_opt.samples < 0)
        throw std::invalid_argument("verify needs --max-n >= 2, --hf-degree >= 0, --samples >= 0");
      return cmd_verify(em, verify_opt);
    }
  } catch (const InternalInconsistency& e) {
    err << "error: internal inconsistency: " << e.what() << '\n';
    return kFailed;
  } catch (const WorkCapExceeded& e) {
    err << "error: work cap exceeded: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace ssq::cli
