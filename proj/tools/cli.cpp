#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "cabling/error.hpp"
#include "cabling/selftest.hpp"
#include "render.hpp"
#include "report.hpp"

namespace cabling::cli {

namespace {

constexpr std::uint64_t kDefaultKMax = 10;

struct Options {
  std::string spec;
  bool have_spec = false;
  std::string format = "text";
  std::string batch;
  std::string cable;
  std::string tb_floor;
  std::optional<std::uint64_t> k_max;
  std::string target = "Cp";
};

struct Outcome {
  int code = kOk;
  std::string output;
  std::string error;
};

std::uint64_t default_k_max() {
  const char* env = std::getenv("CABLING_ATLAS_KMAX_DEFAULT");
  if (env == nullptr || *env == '\0') return kDefaultKMax;
  const std::string value(env);
  if (value.find_first_not_of("0123456789") != std::string::npos || value.size() > 18) {
    throw ValidationError("CABLING_ATLAS_KMAX_DEFAULT must be a nonnegative integer, got \"" +
                          value + "\"");
  }
  return std::stoull(value);
}

Integer parse_integer(const std::string& text, const std::string& what) {
  std::size_t start = !text.empty() && (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size() || text.find_first_not_of("0123456789", start) != std::string::npos) {
    throw ValidationError(what + " must be an integer, got \"" + text + "\"");
  }
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

CablingPair parse_cable(const std::string& text) {
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  const auto comma = body.find(',');
  if (comma == std::string::npos) throw ValidationError("--cable expects p,q, got \"" + text + "\"");
  return {parse_integer(body.substr(0, comma), "cable p"),
          parse_integer(body.substr(comma + 1), "cable q")};
}

// Builds a report for one spec string and renders it in the requested format.
Outcome evaluate(const std::string& command, const Options& opt, const std::string& input,
                 bool one_line) {
  Outcome o;
  try {
    const KnotSpec spec = parse_knot(input);
    Report report;
    std::optional<MountainRange> range;
    if (command == "invariants") {
      report = invariants_report(input, spec);
    } else if (command == "classify") {
      report = classify_report(input, spec);
    } else if (command == "range") {
      RangeOptions ro;
      if (!opt.cable.empty()) ro.cable = parse_cable(opt.cable);
      if (!opt.tb_floor.empty()) ro.tb_floor = parse_integer(opt.tb_floor, "--tb-floor");
      report = range_report(input, spec, ro);
    } else if (command == "tori") {
      report = tori_report(input, spec, opt.k_max.value_or(default_k_max()));
    } else if (command == "convert") {
      Framing target;
      if (opt.target == "C") {
        target = Framing::C;
      } else if (opt.target == "Cp" || opt.target == "Cprime") {
        target = Framing::Cprime;
      } else {
        throw ValidationError("--to expects C or Cp, got \"" + opt.target + "\"");
      }
      report = convert_report(input, spec, target);
    }

    if (one_line || opt.format == "json") {
      o.output = one_line ? report.json.dump() + "\n" : report.json.dump(2) + "\n";
    } else if (opt.format == "text") {
      o.output = report.text;
    } else {
      // ascii / svg: range only, validated before dispatch
      RangeOptions ro;
      if (!opt.cable.empty()) ro.cable = parse_cable(opt.cable);
      if (!opt.tb_floor.empty()) ro.tb_floor = parse_integer(opt.tb_floor, "--tb-floor");
      MountainRange mr;
      if (ro.cable) {
        mr = cable_peaks(spec, ro.cable->meridian, ro.cable->longitude, ro.tb_floor);
      } else {
        const Json& j = report.json.at("range");
        mr = breve_range(spec, ro.tb_floor.value_or(integer_from_json(j.at("tb_floor"))));
      }
      o.output = opt.format == "ascii" ? render_ascii(mr) : render_svg(mr);
    }
  } catch (const ValidationError& e) {
    o = {kUsage, "", e.what()};
  } catch (const DomainError& e) {
    o = {kDomain, "", e.what()};
  } catch (const ConsistencyError& e) {
    o = {kConsistency, "", std::string("internal consistency failure: ") + e.what()};
  }
  return o;
}

std::string error_line(const std::string& input, const Outcome& o) {
  Json j{{"input", input}, {"error", o.error}, {"exit_code", o.code}};
  return j.dump() + "\n";
}

int run_batch(const std::string& command, const Options& opt, std::ostream& out,
              std::ostream& err) {
  std::ifstream in(opt.batch);
  if (!in) {
    err << "error: cannot open batch file " << opt.batch << '\n';
    return kUsage;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }

  std::vector<Outcome> results(lines.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(lines.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < lines.size(); i = next++) {
          results[i] = evaluate(command, opt, lines[i], true);
        }
      });
    }
  }

  int code = kOk;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (results[i].code == kOk) {
      out << results[i].output;
    } else {
      out << error_line(lines[i], results[i]);
      code = std::max(code, results[i].code);
    }
  }
  return code;
}

int run_selftest(std::ostream& out) {
  std::uint64_t failures = 0;
  for (const SelftestCheck& check : cabling::run_selftest()) {
    out << check.name << ": " << check.cases << " cases, " << check.failures << " failures\n";
    failures += check.failures;
  }
  out << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
  return failures == 0 ? kOk : kConsistency;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Legendrian invariants and classification of iterated torus knots",
               "cabling-atlas"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(0, 1);

  bool selftest = false;
  app.add_flag("--selftest", selftest, "Run the embedded oracle identities and report counts");

  Options opt;
  const std::vector<std::string> formats_all{"text", "json", "ascii", "svg"};
  const std::vector<std::string> formats_plain{"text", "json"};

  auto add_common = [&](CLI::App* sub, const std::vector<std::string>& formats) {
    sub->add_option("spec", opt.spec, "Knot spec, e.g. C:(2,3),(2,3) or Cp:(2,3),(-13,2)");
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    sub->add_option("--batch", opt.batch, "Read one spec per line, emit JSON lines");
  };

  CLI::App* invariants = app.add_subcommand("invariants", "Classical invariants A, B, chi, tb, sl, w");
  add_common(invariants, formats_plain);
  CLI::App* classify_cmd = app.add_subcommand("classify", "Legendrian simplicity / UTP verdict");
  add_common(classify_cmd, formats_plain);
  CLI::App* range = app.add_subcommand("range", "Legendrian mountain range");
  add_common(range, formats_all);
  range->add_option("--cable", opt.cable, "Inner cable p,q in the C' framing (use --cable=-13,2)");
  range->add_option("--tb-floor", opt.tb_floor, "Lowest tb row to enumerate (default tb_max - 10)");
  CLI::App* tori = app.add_subcommand("tori", "Candidate non-thickenable solid tori");
  add_common(tori, formats_plain);
  std::uint64_t k_max = 0;
  CLI::Option* k_max_opt = tori->add_option("--k-max", k_max,
                                            "Largest k (default $CABLING_ATLAS_KMAX_DEFAULT or 10)");
  CLI::App* convert = app.add_subcommand("convert", "Convert between the C and C' framings");
  add_common(convert, formats_plain);
  convert->add_option("--to", opt.target, "Target framing: C or Cp")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (selftest) return run_selftest(out);

  const auto chosen = app.get_subcommands();
  if (chosen.empty()) {
    err << app.help();
    return kUsage;
  }
  const std::string command = chosen.front()->get_name();
  opt.have_spec = chosen.front()->count("spec") > 0;
  if (k_max_opt->count() > 0) opt.k_max = k_max;

  if (!opt.batch.empty()) {
    if (opt.have_spec) {
      err << "error: give either a spec or --batch, not both\n";
      return kUsage;
    }
    return run_batch(command, opt, out, err);
  }
  if (!opt.have_spec) {
    err << "error: missing knot spec\n";
    return kUsage;
  }

  const Outcome o = evaluate(command, opt, opt.spec, false);
  if (o.code != kOk) {
    err << "error: " << o.error << '\n';
    return o.code;
  }
  out << o.output;
  return kOk;
}

}  // namespace cabling::cli
