#include "entangle/cli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "entangle/cli/state_file.hpp"
#include "entangle/entangle.hpp"

namespace entangle::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kLhvBound = 2.0;

struct GlobalOptions {
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  bool json = false;
  std::string output;
};

struct Context {
  GlobalOptions global;
  std::ostream& out;
  std::ostream& err;
};

std::string num(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

// Floats in reports carry 12 significant digits.
double round12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

const char* yes_no(bool b) {
  return b ? "yes" : "no";
}

Json vec_json(const Direction& d) {
  return Json::array({round12(d.x()), round12(d.y()), round12(d.z())});
}

Json report_header(const Context& ctx, const std::string& command, const std::string& input,
                   const BipartiteDims& dims) {
  Json j;
  j["tool"] = "entangle";
  j["version"] = kVersion;
  j["command"] = command;
  j["input"] = input;
  j["dims"] = {dims.d_a(), dims.d_b()};
  j["tolerances"] = {{"tol", ctx.global.tol}, {"schmidt_cutoff", kSchmidtCutoff}};
  return j;
}

Json verdict_json(const CriterionVerdict& v) {
  Json j;
  j["name"] = v.criterion;
  j["margin"] = round12(v.margin);
  j["violated"] = v.violated;
  j["conclusive_for_entanglement"] = v.conclusive_for_entanglement;
  j["separable_certified"] = v.separable_certified;
  return j;
}

void print_verdict(std::ostream& out, const CriterionVerdict& v) {
  out << std::left << std::setw(14) << v.criterion << " margin=" << num(v.margin)
      << " violated=" << yes_no(v.violated);
  if (v.separable_certified) out << " (separable certified)";
  out << '\n';
}

// Sends text either to stdout or to the -o path.
void emit(const Context& ctx, const std::string& text) {
  if (ctx.global.output.empty()) {
    ctx.out << text;
    return;
  }
  std::ofstream f(ctx.global.output);
  if (!f) throw StateFileError("cannot write " + ctx.global.output);
  f << text;
}

void emit_report(const Context& ctx, Json report, int exit_code,
                 const std::function<void(std::ostream&)>& human) {
  report["exit_code"] = exit_code;
  if (ctx.global.json) {
    emit(ctx, report.dump(2) + "\n");
  } else {
    std::ostringstream s;
    human(s);
    emit(ctx, s.str());
  }
}

ChshSearchOptions chsh_options(const Context& ctx, int restarts) {
  ChshSearchOptions opts;
  opts.restarts = restarts;
  opts.seed = ctx.global.seed;
  return opts;
}

void require_two_qubit(const DensityMatrix& rho, const char* command) {
  if (rho.dims() != BipartiteDims(2, 2)) {
    throw DimensionError(std::string(command) + ": requires dims [2, 2]");
  }
}

int cmd_classify(const Context& ctx, const std::string& path, bool with_chsh, int restarts,
                 const std::string& witness_path) {
  const DensityMatrix rho = read_state_file(path).density(ctx.global.tol);
  std::optional<Witness> witness;
  if (!witness_path.empty()) witness = read_witness_file(witness_path, ctx.global.tol);
  const ClassificationReport rep =
      classify(rho, ctx.global.tol, witness ? &*witness : nullptr);

  std::optional<ChshOptimum> chsh;
  if (with_chsh) {
    require_two_qubit(rho, "classify --chsh");
    chsh = maximize_chsh(rho, chsh_options(ctx, restarts));
  }
  const int code = rep.entangled_certified() ? kEntangledCertified : kSeparableOrUndetermined;
  const bool undetermined = rep.class_label == ClassLabel::SepOrBound;
  const char* warning =
      "PPT state outside 2x2/2x3: separability is undetermined, entanglement not certified";

  Json j = report_header(ctx, "classify", path, rho.dims());
  j["criteria"] = Json::array(
      {verdict_json(rep.ppt), verdict_json(rep.majorization), verdict_json(rep.entropy)});
  j["dc_advantage"] = round12(rep.dc_advantage);
  j["capacity"] = round12(rep.capacity);
  j["class_label"] = std::string(to_string(rep.class_label));
  if (chsh) j["chsh_max"] = round12(chsh->value);
  if (rep.witness_value) j["witness_value"] = round12(*rep.witness_value);
  if (undetermined) j["warning"] = warning;

  emit_report(ctx, std::move(j), code, [&](std::ostream& s) {
    print_verdict(s, rep.ppt);
    print_verdict(s, rep.majorization);
    print_verdict(s, rep.entropy);
    s << "dc_advantage   " << num(rep.dc_advantage) << '\n';
    s << "capacity       " << num(rep.capacity) << '\n';
    if (chsh) s << "chsh_max       " << num(chsh->value) << '\n';
    if (rep.witness_value) s << "witness_value  " << num(*rep.witness_value) << '\n';
    s << "class          " << to_string(rep.class_label) << '\n';
  });
  if (undetermined) ctx.err << "warning: " << warning << '\n';
  return code;
}

int cmd_single_criterion(const Context& ctx, const std::string& name, const std::string& path) {
  const DensityMatrix rho = read_state_file(path).density(ctx.global.tol);
  CriterionVerdict v;
  if (name == "ppt") {
    v = ppt_test(rho, ctx.global.tol);
  } else if (name == "majorization") {
    v = majorization_test(rho, ctx.global.tol);
  } else {
    v = entropy_test(rho, ctx.global.tol);
  }
  const int code = v.violated ? kEntangledCertified : kSeparableOrUndetermined;
  Json j = report_header(ctx, name, path, rho.dims());
  j["criteria"] = Json::array({verdict_json(v)});
  emit_report(ctx, std::move(j), code, [&](std::ostream& s) { print_verdict(s, v); });
  return code;
}

int cmd_chsh(const Context& ctx, const std::string& path, int restarts) {
  const DensityMatrix rho = read_state_file(path).density(ctx.global.tol);
  require_two_qubit(rho, "chsh");
  const ChshOptimum best = maximize_chsh(rho, chsh_options(ctx, restarts));
  const bool violated = best.value > kLhvBound + ctx.global.tol;
  const int code = violated ? kEntangledCertified : kSeparableOrUndetermined;

  Json j = report_header(ctx, "chsh", path, rho.dims());
  j["restarts"] = restarts;
  j["seed"] = ctx.global.seed;
  j["chsh_max"] = round12(best.value);
  j["lhv_bound"] = kLhvBound;
  j["violated"] = violated;
  j["setting"] = {{"a", vec_json(best.setting.a)},
                  {"a_prime", vec_json(best.setting.a_prime)},
                  {"b", vec_json(best.setting.b)},
                  {"b_prime", vec_json(best.setting.b_prime)}};
  emit_report(ctx, std::move(j), code, [&](std::ostream& s) {
    s << "chsh_max  " << num(best.value) << '\n';
    s << "violated  " << yes_no(violated) << '\n';
  });
  return code;
}

int cmd_capacity(const Context& ctx, const std::string& path) {
  const DensityMatrix rho = read_state_file(path).density(ctx.global.tol);
  const double raw = dc_capacity(rho);
  const double adv = dc_advantage(rho);
  const double reported = reported_capacity(rho);
  const bool dc = adv > ctx.global.tol;
  const int code = dc ? kEntangledCertified : kSeparableOrUndetermined;

  Json j = report_header(ctx, "capacity", path, rho.dims());
  j["capacity"] = round12(reported);
  j["one_capacity_raw"] = round12(raw);
  j["unassisted"] = round12(std::log2(static_cast<double>(rho.dims().d_a())));
  j["dc_advantage"] = round12(adv);
  j["dense_codeable"] = dc;
  emit_report(ctx, std::move(j), code, [&](std::ostream& s) {
    s << "capacity      " << num(reported) << '\n';
    s << "dc_advantage  " << num(adv) << '\n';
    s << "dense_codeable " << yes_no(dc) << '\n';
  });
  return code;
}

int cmd_schmidt(const Context& ctx, const std::string& path) {
  const PureState psi = read_state_file(path).pure();
  const SchmidtDecomposition dec = schmidt(psi);
  const int code = dec.rank() > 1 ? kEntangledCertified : kSeparableOrUndetermined;

  Json j = report_header(ctx, "schmidt", path, psi.dims());
  Json coeffs = Json::array();
  for (double c : dec.coefficients) coeffs.push_back(round12(c));
  j["coefficients"] = std::move(coeffs);
  j["schmidt_rank"] = dec.rank();
  j["product"] = dec.rank() == 1;
  emit_report(ctx, std::move(j), code, [&](std::ostream& s) {
    s << "schmidt_rank  " << dec.rank() << '\n';
    for (double c : dec.coefficients) s << "coefficient   " << num(c) << '\n';
  });
  return code;
}

int cmd_witness(const Context& ctx, const std::string& path, const std::string& witness_path,
                int restarts) {
  const DensityMatrix rho = read_state_file(path).density(ctx.global.tol);
  const Witness w =
      witness_path.empty() ? canonical_witness_2x2() : read_witness_file(witness_path, ctx.global.tol);
  const double value = witness_value(w, rho);
  SeesawOptions opts;
  opts.restarts = restarts;
  opts.seed = ctx.global.seed;
  const ProductMinimum product_min = min_product_expectation(w, opts);
  const bool detects = value < -ctx.global.tol;
  const int code = detects ? kEntangledCertified : kSeparableOrUndetermined;

  Json j = report_header(ctx, "witness", path, rho.dims());
  j["witness"] = witness_path.empty() ? std::string("canonical_2x2") : witness_path;
  j["witness_value"] = round12(value);
  j["detected"] = detects;
  j["decomposable"] = w.is_decomposable();
  j["min_product_expectation"] = round12(product_min.value);
  emit_report(ctx, std::move(j), code, [&](std::ostream& s) {
    s << "witness_value            " << num(value) << '\n';
    s << "detected                 " << yes_no(detects) << '\n';
    s << "min_product_expectation  " << num(product_min.value) << '\n';
  });
  return code;
}

BellKind parse_bell_kind(const std::string& s) {
  static const std::map<std::string, BellKind> kinds{{"psi_plus", BellKind::PsiPlus},
                                                     {"psi_minus", BellKind::PsiMinus},
                                                     {"phi_plus", BellKind::PhiPlus},
                                                     {"phi_minus", BellKind::PhiMinus}};
  const auto it = kinds.find(s);
  if (it == kinds.end()) throw DomainError("gen bell: unknown kind " + s);
  return it->second;
}

struct GenOptions {
  std::string kind;
  std::string bell_kind = "psi_minus";
  std::optional<double> p;
  std::vector<int> dims{2, 2};
  std::optional<int> rank;
  std::optional<int> terms;
};

int cmd_gen(const Context& ctx, const GenOptions& g) {
  if (g.dims.size() != 2) throw DimensionError("gen: --dims takes two values");
  const BipartiteDims dims(g.dims[0], g.dims[1]);
  const std::uint64_t seed = ctx.global.seed;
  StateFile file;
  if (g.kind == "bell") {
    file = make_state_file(bell_state(parse_bell_kind(g.bell_kind)), g.bell_kind);
  } else if (g.kind == "werner") {
    if (!g.p) throw DomainError("gen werner: --p is required");
    file = make_state_file(werner(*g.p), "werner(p=" + num(*g.p) + ")");
  } else if (g.kind == "random") {
    file = make_state_file(random_density(dims, g.rank.value_or(dims.total()), seed), "random",
                           seed);
  } else {
    file = make_state_file(random_separable(dims, g.terms, seed), "separable", seed);
  }
  emit(ctx, to_json(file).dump(2) + "\n");
  return kSeparableOrUndetermined;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite entanglement detection and dense-coding classification", "entangle"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--tol", global.tol, "Absolute tolerance for all numerical decisions")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", global.seed, "Seed for randomized searches and generators");
  app.add_flag("--json", global.json, "Emit a machine-readable JSON report");
  app.add_option("-o,--output", global.output, "Write output to this path instead of stdout");

  std::string path;
  std::string witness_path;
  bool with_chsh = false;
  int restarts = 32;

  auto* classify_cmd = app.add_subcommand("classify", "Run every criterion and assign a class");
  classify_cmd->add_option("path", path, "State file")->required();
  classify_cmd->add_flag("--chsh", with_chsh, "Also maximize the CHSH value (two qubits)");
  classify_cmd->add_option("--restarts", restarts, "CHSH search restarts")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--witness-file", witness_path, "Witness used to certify PPT entanglement");

  std::map<std::string, CLI::App*> criterion_cmds;
  for (const char* name : {"ppt", "majorization", "entropy"}) {
    auto* c = app.add_subcommand(name, std::string("Run the ") + name + " criterion");
    c->add_option("path", path, "State file")->required();
    criterion_cmds[name] = c;
  }

  auto* chsh_cmd = app.add_subcommand("chsh", "Maximize the CHSH value over measurement settings");
  chsh_cmd->add_option("path", path, "State file")->required();
  chsh_cmd->add_option("--restarts", restarts, "Search restarts")->check(CLI::PositiveNumber);

  auto* capacity_cmd = app.add_subcommand("capacity", "Dense-coding capacity");
  capacity_cmd->add_option("path", path, "State file")->required();

  auto* schmidt_cmd = app.add_subcommand("schmidt", "Schmidt decomposition of a pure state");
  schmidt_cmd->add_option("path", path, "Pure state file")->required();

  auto* witness_cmd = app.add_subcommand("witness", "Evaluate an entanglement witness");
  witness_cmd->add_option("path", path, "State file")->required();
  witness_cmd->add_option("--witness-file", witness_path, "Witness operator (default: canonical 2x2)");
  witness_cmd->add_option("--restarts", restarts, "See-saw restarts")->check(CLI::PositiveNumber);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a state file");
  gen_cmd->add_option("generator", gen.kind, "bell | werner | random | separable")
      ->required()
      ->check(CLI::IsMember({"bell", "werner", "random", "separable"}));
  gen_cmd->add_option("--kind", gen.bell_kind, "Bell state: psi_plus | psi_minus | phi_plus | phi_minus");
  gen_cmd->add_option("--p", gen.p, "Werner mixing parameter in [0, 1]");
  gen_cmd->add_option("--dims", gen.dims, "Local dimensions d_A d_B")->expected(2);
  gen_cmd->add_option("--rank", gen.rank, "Rank of a random state");
  gen_cmd->add_option("--terms", gen.terms, "Product terms in a random separable state");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  const Context ctx{global, out, err};
  try {
    if (classify_cmd->parsed()) return cmd_classify(ctx, path, with_chsh, restarts, witness_path);
    for (const auto& [name, c] : criterion_cmds) {
      if (c->parsed()) return cmd_single_criterion(ctx, name, path);
    }
    if (chsh_cmd->parsed()) return cmd_chsh(ctx, path, restarts);
    if (capacity_cmd->parsed()) return cmd_capacity(ctx, path);
    if (schmidt_cmd->parsed()) return cmd_schmidt(ctx, path);
    if (witness_cmd->parsed()) return cmd_witness(ctx, path, witness_path, restarts);
    if (gen_cmd->parsed()) return cmd_gen(ctx, gen);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace entangle::cli
