// Command-line front end: arithmetic evaluation, axiom and family checks,
// physical-model demos, and resource reports. Output is JSON (or CSV for
// resources); --pretty switches to indented JSON. Exit codes: 0 success or
// all checks pass, 1 a verification failed, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "qarith/json_io.hpp"
#include "qarith/resources.hpp"

namespace {

using namespace qarith;

Index dimension_cap_from_env() {
  if (const char* cap = std::getenv("QAS_DIM_CAP")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(cap, &end, 10);
    if (end && *end == '\0' && parsed >= 2) return parsed;
    throw std::invalid_argument("QAS_DIM_CAP must be an integer >= 2");
  }
  return kDefaultDimensionCap;
}

void emit(const Json& payload, const std::string& out_path, bool pretty) {
  std::string text = pretty ? payload.dump(2) : payload.dump();
  if (out_path.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text << '\n';
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

Index parse_operand(const std::string& text, const RegisterShape& shape,
                    bool digits_mode) {
  if (digits_mode) return DigitString::parse_display(text, shape).value();
  char* end = nullptr;
  unsigned long long value = std::strtoull(text.c_str(), &end, 10);
  if (!end || *end != '\0')
    throw std::invalid_argument("operand is not a decimal number: " + text);
  if (value >= shape.register_dimension())
    throw std::out_of_range("operand out of range [0, k^L-1]: " + text);
  return value;
}

struct ArithArgs {
  std::uint32_t k = 2, L = 3, j = 1;
  std::vector<std::string> operands;
  bool digits = false;
  std::string out;
};

int run_succ(const ArithArgs& args, bool pretty, Index cap) {
  RegisterShape shape(args.k, args.L, 1, cap);
  Index n = parse_operand(args.operands.at(0), shape, args.digits);
  ResourceLedger led;
  Index result = successor_implicit(shape, args.j).apply_index(n, &led);
  emit({{"op", "succ"},
        {"k", args.k},
        {"L", args.L},
        {"j", args.j},
        {"inputs", {n}},
        {"outputs", {result}},
        {"ledger", {{"u_steps", led.u_steps},
                    {"projector_evals", led.projector_evals}}}},
       args.out, pretty);
  return 0;
}

int run_binary_op(const ArithArgs& args, bool multiply, bool pretty, Index cap) {
  RegisterShape single(args.k, args.L, 1, cap);
  Index a = parse_operand(args.operands.at(0), single, args.digits);
  Index b = parse_operand(args.operands.at(1), single, args.digits);
  const Index K = single.register_dimension();
  ResourceLedger led;
  Index output;
  if (multiply) {
    RegisterShape four(args.k, args.L, 4, cap);
    Index out = times_op(four).apply_index(a + b * K, &led);
    output = out / (K * K * K);
  } else {
    RegisterShape two(args.k, args.L, 2, cap);
    Index out = plus_op(two).apply_index(a + b * K, &led);
    output = out / K;
  }
  emit({{"op", multiply ? "times" : "plus"},
        {"k", args.k},
        {"L", args.L},
        {"inputs", {a, b}},
        {"outputs", {output}},
        {"ledger", {{"u_steps", led.u_steps},
                    {"projector_evals", led.projector_evals},
                    {"successor_calls", led.successor_calls},
                    {"targeted_plus_calls", led.targeted_plus_calls}}}},
       args.out, pretty);
  return 0;
}

ArithmeticModel corrupted_model(const RegisterShape& reg) {
  ArithmeticModel model = abstract_model(reg);
  model.plus = plus_adjoint(reg.with_registers(2));
  return model;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular arithmetic on tensor-product state spaces"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  ArithArgs succ_args, add_args, mul_args;
  auto* succ = app.add_subcommand("succ", "apply the successor at digit j");
  succ->add_option("--k", succ_args.k)->check(CLI::Range(2u, 64u));
  succ->add_option("--L", succ_args.L)->required();
  succ->add_option("--j", succ_args.j)->required();
  succ->add_flag("--digits", succ_args.digits, "operands are digit strings");
  succ->add_option("--out", succ_args.out);
  succ->add_option("operand", succ_args.operands)->expected(1);

  auto* add = app.add_subcommand("add", "add two numbers mod k^L");
  add->add_option("--k", add_args.k)->check(CLI::Range(2u, 64u));
  add->add_option("--L", add_args.L)->required();
  add->add_flag("--digits", add_args.digits, "operands are digit strings");
  add->add_option("--out", add_args.out);
  add->add_option("operands", add_args.operands)->expected(2);

  auto* mul = app.add_subcommand("mul", "multiply two numbers mod k^L");
  mul->add_option("--k", mul_args.k)->check(CLI::Range(2u, 64u));
  mul->add_option("--L", mul_args.L)->required();
  mul->add_flag("--digits", mul_args.digits, "operands are digit strings");
  mul->add_option("--out", mul_args.out);
  mul->add_option("operands", mul_args.operands)->expected(2);

  std::uint32_t ax_k = 2, ax_L = 3;
  bool ax_corrupt = false;
  std::string ax_out, ax_model_path;
  auto* axioms = app.add_subcommand("axioms", "verify the arithmetic axioms");
  axioms->add_option("--k", ax_k)->check(CLI::Range(2u, 64u));
  axioms->add_option("--L", ax_L);
  axioms->add_option("--model", ax_model_path, "label-model JSON; check the induced model");
  axioms->add_flag("--corrupt", ax_corrupt, "swap plus for its adjoint (negative control)");
  axioms->add_option("--out", ax_out);

  std::string family_path, family_out;
  auto* family = app.add_subcommand("family-check", "check operator-family properties 1-6");
  family->add_option("file", family_path)->required();
  family->add_option("--out", family_out);

  std::uint32_t gr_L = 3, gr_iters = 2;
  std::string gr_target, gr_model_path, gr_out;
  auto* grover = app.add_subcommand("grover", "amplitude-amplification demo");
  grover->add_option("--L", gr_L)->required()->check(CLI::Range(1u, 20u));
  grover->add_option("--target", gr_target, "target bitstring, most significant site first")
      ->required();
  grover->add_option("--iters", gr_iters)->required();
  grover->add_option("--model", gr_model_path, "label-model JSON (dynamics ignores it)");
  grover->add_option("--out", gr_out);

  std::uint64_t sh_M = 15, sh_m = 7, sh_seed = 1;
  std::uint32_t sh_trials = 100;
  std::string sh_model_path, sh_decode_path, sh_out;
  auto* shor = app.add_subcommand("shor", "period-finding demo");
  shor->add_option("--M", sh_M)->required();
  shor->add_option("--m", sh_m)->required();
  shor->add_option("--model", sh_model_path, "label-model JSON for the dynamics");
  shor->add_option("--decode-model", sh_decode_path, "label-model JSON for decoding");
  shor->add_option("--seed", sh_seed);
  shor->add_option("--trials", sh_trials);
  shor->add_option("--out", sh_out);

  std::uint32_t rs_kmax = 3, rs_Lmax = 6;
  std::string rs_out;
  auto* resources = app.add_subcommand("resources", "operation-count scaling report");
  resources->add_option("--kmax", rs_kmax)->check(CLI::Range(2u, 5u));
  resources->add_option("--Lmax", rs_Lmax)->check(CLI::Range(1u, 10u));
  resources->add_option("--out", rs_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    Index cap = dimension_cap_from_env();

    if (*succ) return run_succ(succ_args, pretty, cap);
    if (*add) return run_binary_op(add_args, false, pretty, cap);
    if (*mul) return run_binary_op(mul_args, true, pretty, cap);

    if (*axioms) {
      RegisterShape reg(ax_k, ax_L, 1, cap);
      // The four-register space must also fit under the cap.
      RegisterShape four(ax_k, ax_L, 4, cap);
      (void)four;
      ArithmeticModel model =
          ax_corrupt ? corrupted_model(reg)
          : !ax_model_path.empty()
              ? induced_model(label_model_from_json(load_json_file(ax_model_path)), reg)
              : abstract_model(reg);
      AxiomReport report = check_arithmetic_axioms(model);
      emit(axiom_report_to_json(report), ax_out, pretty);
      return report.all_pass() ? 0 : 1;
    }

    if (*family) {
      OperatorFamily fam = family_from_json(load_json_file(family_path));
      FamilyReport report = check_family(fam);
      emit(family_report_to_json(report), family_out, pretty);
      return report.all_pass() ? 0 : 1;
    }

    if (*grover) {
      if (!gr_model_path.empty())
        (void)label_model_from_json(load_json_file(gr_model_path));
      RegisterShape shape(2, gr_L, 1, cap);
      Index target = DigitString::parse_display(gr_target, shape).value();
      GroverRun run = grover_iterate(gr_L, target, gr_iters);
      emit(grover_run_to_json(run), gr_out, pretty);
      return 0;
    }

    if (*shor) {
      std::uint32_t n = shor_register_size(sh_M);
      LabelSets sets;
      for (std::uint32_t i = 0; i < n; ++i) sets.A.push_back("q" + std::to_string(i));
      sets.B = {"0", "1"};
      LabelModel model = sh_model_path.empty()
                             ? LabelModel::trivial(sets)
                             : label_model_from_json(load_json_file(sh_model_path));
      LabelModel decode = sh_decode_path.empty()
                              ? model
                              : label_model_from_json(load_json_file(sh_decode_path));
      ShorRun run = shor_pipeline(sh_m, sh_M, model, decode, sh_seed, sh_trials);
      emit(shor_run_to_json(run), sh_out, pretty);
      return 0;
    }

    if (*resources) {
      ScalingReport report = scaling_report(rs_kmax, rs_Lmax);
      if (rs_out.empty()) {
        std::cout << report.to_csv();
      } else {
        std::ofstream out(rs_out);
        if (!out) throw std::runtime_error("cannot open output file " + rs_out);
        out << report.to_csv();
      }
      return 0;
    }
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
