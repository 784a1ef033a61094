// logsurf: command-line front end. JSON in, JSON out; DOT on request.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "logsurf/dot.hpp"
#include "logsurf/errors.hpp"
#include "logsurf/json_io.hpp"

namespace {

using namespace logsurf;

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kInvalid = 2;
constexpr int kRefused = 3;

struct Exit {
  int code;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, what + ": " + e.what());
  }
}

// Inline JSON when the argument looks like an object or list, a file path otherwise.
json json_arg(const std::string& arg, const std::string& what) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parse_text(arg, what);
  return parse_text(slurp(arg), what);
}

void emit(const json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }

[[noreturn]] void fail(int code, const std::string& status, const std::vector<Violation>& violations, bool pretty) {
  for (const auto& v : violations) std::cerr << "logsurf: " << v.subject << ": " << v.rule << ": " << v.detail << '\n';
  emit({{"status", status}, {"violations", to_json(violations)}}, pretty);
  throw Exit{code};
}

SingularModel load_model(const std::string& path, bool pretty) {
  std::vector<Violation> problems;
  SingularModel m = model_from_json(json_arg(path, "model"), problems);
  const auto more = validate(m);
  problems.insert(problems.end(), more.begin(), more.end());
  if (!problems.empty()) fail(kInvalid, "invalid", problems, pretty);
  return m;
}

Divisor load_delta(const std::string& arg) { return arg.empty() ? Divisor{} : divisor_from_json(json_arg(arg, "delta")); }

// Unknown or contracted boundary components are input errors; coefficients
// outside [0,1] are a refusal unless explicitly allowed.
void check_boundary(const SingularModel& m, const Divisor& delta, bool allow_out_of_range, bool pretty) {
  std::vector<Violation> invalid;
  std::vector<Violation> range;
  for (auto& v : boundary_violations(m, delta)) (v.rule == "boundary.range" ? range : invalid).push_back(std::move(v));
  if (!invalid.empty()) fail(kInvalid, "invalid", invalid, pretty);
  if (!range.empty() && !allow_out_of_range) fail(kRefused, "refused", range, pretty);
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotGMRLC:
    case ErrorCode::BoundaryOutOfRange:
    case ErrorCode::NotLogResolution:
    case ErrorCode::InconsistentUniverse:
      return kRefused;
    case ErrorCode::Internal:
    case ErrorCode::SingularMatrix:
    case ErrorCode::NotSymmetric:
    case ErrorCode::DivisionByZero:
    case ErrorCode::ContractionNotNegDef:
      return kInternal;
    default:
      return kInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact log-surface classification and minimal model program"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  std::string model_path;
  std::string delta_arg;
  bool allow_out_of_range = false;

  auto* classify_cmd = app.add_subcommand("classify", "klt / lc / MRLC / GMRLC verdicts with witnesses");
  classify_cmd->add_option("--model", model_path, "Model JSON file ('-' for stdin)")->required();
  classify_cmd->add_option("--delta", delta_arg, "Boundary as JSON {id: \"p/q\"} or a file");

  auto* pullback_cmd = app.add_subcommand("pullback", "Log pullback Delta_Y of K_X + Delta");
  pullback_cmd->add_option("--model", model_path, "Model JSON file")->required();
  pullback_cmd->add_option("--delta", delta_arg, "Boundary divisor");
  pullback_cmd->add_flag("--allow-out-of-range", allow_out_of_range, "Accept coefficients outside [0,1]");

  auto* minres_cmd = app.add_subcommand("minres", "Blow down contracted (-1)-curves");
  minres_cmd->add_option("--model", model_path, "Model JSON file")->required();

  std::string component_arg;
  auto* fund_cmd = app.add_subcommand("fundcycle", "Fundamental cycles of the contracted components");
  fund_cmd->add_option("--model", model_path, "Model JSON file")->required();
  fund_cmd->add_option("--component", component_arg, "Comma-separated curve ids of one component");

  auto* mult_cmd = app.add_subcommand("multiplier", "Round-down of Delta_Y on a log resolution");
  mult_cmd->add_option("--model", model_path, "Model JSON file")->required();
  mult_cmd->add_option("--delta", delta_arg, "Boundary divisor");

  std::string fan_path;
  std::string universe_arg;
  std::string trace_path;
  std::string dot_path;
  bool vertical_only = false;
  auto* mmp_cmd = app.add_subcommand("mmp", "Run the (K + Delta)-MMP");
  auto* mmp_model = mmp_cmd->add_option("--model", model_path, "Model JSON file");
  auto* mmp_fan = mmp_cmd->add_option("--fan", fan_path, "Fan JSON file (list of integer pairs)");
  mmp_model->excludes(mmp_fan);
  mmp_cmd->add_option("--delta", delta_arg, "Boundary divisor");
  mmp_cmd->add_option("--universe", universe_arg, "Comma-separated curve ids (default: all surviving curves)");
  mmp_cmd->add_flag("--vertical-only", vertical_only, "Only vertical curves enter the cone");
  mmp_cmd->add_option("--trace", trace_path, "Write one JSON object per step (newline-delimited; '-' for stderr)");
  mmp_cmd->add_option("--dot", dot_path, "Write dual graphs of every intermediate model");

  auto* toric_cmd = app.add_subcommand("toric-build", "Model of the toric surface of a complete fan");
  toric_cmd->add_option("--fan", fan_path, "Fan JSON file")->required();

  auto* dot_cmd = app.add_subcommand("dot", "Dual graph of a model in DOT");
  dot_cmd->add_option("--model", model_path, "Model JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? kOk : kInvalid;
  }

  try {
    if (*classify_cmd) {
      const auto m = load_model(model_path, pretty);
      const auto delta = load_delta(delta_arg);
      check_boundary(m, delta, false, pretty);
      emit(to_json(classify(m, delta, classify_options_from_env())), pretty);
    } else if (*pullback_cmd) {
      const auto m = load_model(model_path, pretty);
      const auto delta = load_delta(delta_arg);
      check_boundary(m, delta, allow_out_of_range, pretty);
      const Divisor dy = log_pullback_unchecked(m, delta);
      json disc = json::object();
      for (const auto& id : m.contracted) disc[id] = to_json(-dy.coeff(id));
      emit({{"delta_Y", to_json(dy)}, {"discrepancies", disc}}, pretty);
    } else if (*minres_cmd) {
      const auto m = load_model(model_path, pretty);
      emit(to_json(minimal_resolution(m)), pretty);
    } else if (*fund_cmd) {
      const auto m = load_model(model_path, pretty);
      std::vector<Component> comps;
      if (component_arg.empty()) {
        comps = contracted_components(m);
      } else {
        const auto ids = split_ids(component_arg);
        comps.push_back({ids.begin(), ids.end()});
      }
      json out = json::array();
      for (const auto& c : comps) {
        json entry = to_json(fundamental_cycle(m, c));
        entry["curves"] = std::vector<std::string>(c.begin(), c.end());
        out.push_back(std::move(entry));
      }
      emit(out, pretty);
    } else if (*mult_cmd) {
      const auto m = load_model(model_path, pretty);
      const auto delta = load_delta(delta_arg);
      check_boundary(m, delta, false, pretty);
      emit(to_json(multiplier_floor(m, delta)), pretty);
    } else if (*mmp_cmd) {
      SingularModel m;
      std::vector<std::string> universe;
      if (!fan_path.empty()) {
        const auto ts = config_from_fan(fan_from_json(json_arg(fan_path, "fan")));
        m = ts.model;
        universe = ts.universe;
      } else if (!model_path.empty()) {
        m = load_model(model_path, pretty);
        universe = surviving_curves(m);
      } else {
        fail(kInvalid, "invalid", {{"arguments", "mmp.input", "one of --model or --fan is required"}}, pretty);
      }
      if (!universe_arg.empty()) universe = split_ids(universe_arg);
      const auto delta = load_delta(delta_arg);
      check_boundary(m, delta, false, pretty);

      std::ofstream trace_file;
      std::ostream* trace = nullptr;
      if (trace_path == "-") {
        trace = &std::cerr;
      } else if (!trace_path.empty()) {
        trace_file.open(trace_path);
        if (!trace_file) throw Error(ErrorCode::ParseError, "cannot write '" + trace_path + "'");
        trace = &trace_file;
      }
      std::ostringstream dots;
      std::size_t n = 0;
      MMPOptions opts;
      opts.classify = classify_options_from_env();
      opts.on_step = [&](const MMPStep& s) {
        ++n;
        if (trace) {
          json line = to_json(s);
          line["step"] = n;
          *trace << line.dump() << std::endl;
        }
        if (!dot_path.empty()) dots << dual_graph_dot(s.after, "step" + std::to_string(n));
      };
      const auto result = run_mmp(m, delta, universe, vertical_only, opts);
      if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + dot_path + "'");
        out << dual_graph_dot(m, "step0") << dots.str();
      }
      emit(to_json(result), pretty);
    } else if (*toric_cmd) {
      emit(to_json(config_from_fan(fan_from_json(json_arg(fan_path, "fan")))), pretty);
    } else if (*dot_cmd) {
      std::cout << dual_graph_dot(load_model(model_path, pretty));
    }
    return kOk;
  } catch (const Exit& e) {
    return e.code;
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    std::cerr << "logsurf: " << e.what() << '\n';
    emit({{"status", code == kRefused ? "refused" : (code == kInvalid ? "invalid" : "error")},
          {"error", std::string(error_name(e.code()))},
          {"message", e.what()}},
         pretty);
    return code;
  } catch (const std::exception& e) {
    std::cerr << "logsurf: internal error: " << e.what() << '\n';
    return kInternal;
  }
}
