// Copyright 2026 The sidom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end over the C API.
//
// Exit codes: 0 success, 1 semantic negative (verification failed, laws
// violated, not critical, oracle mismatch), 2 input error, 3 inapplicable,
// 4 internal failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sidom/sidom.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitInapplicable = 3;
constexpr int kExitInternal = 4;

struct DigraphDeleter {
  void operator()(sidom_digraph* d) const { sidom_digraph_free(d); }
};
struct PartitionDeleter {
  void operator()(sidom_partition* p) const { sidom_partition_free(p); }
};
struct StringDeleter {
  void operator()(char* s) const { sidom_string_free(s); }
};
using DigraphPtr = std::unique_ptr<sidom_digraph, DigraphDeleter>;
using PartitionPtr = std::unique_ptr<sidom_partition, PartitionDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Carries an exit code out of a failed library call.
struct Exit {
  int code;
};

int exit_code_for(sidom_status status) {
  switch (status) {
    case SIDOM_OK:
      return kExitOk;
    case SIDOM_ERR_INVALID_ARGUMENT:
    case SIDOM_ERR_PARSE:
      return kExitInput;
    case SIDOM_ERR_NOT_STRONG:
    case SIDOM_ERR_NOT_APPLICABLE:
    case SIDOM_ERR_SIZE_LIMIT:
      return kExitInapplicable;
    case SIDOM_ERR_INTERNAL:
      break;
  }
  return kExitInternal;
}

void check(sidom_status status) {
  if (status == SIDOM_OK) return;
  std::cerr << "error: " << sidom_last_error() << "\n";
  throw Exit{exit_code_for(status)};
}

DigraphPtr read_digraph(const std::string& path) {
  sidom_digraph* d = nullptr;
  check(sidom_digraph_read(path.c_str(), &d));
  return DigraphPtr(d);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Exit{kExitInput};
  }
}

std::string take(char* s) {
  StringPtr owned(s);
  return s ? std::string(s) : std::string();
}

struct ComputeArgs {
  std::string in;
  std::string what;
  std::string witness;
};

int run_compute(const ComputeArgs& args) {
  static const std::map<std::string, sidom_invariant> kInvariants = {
      {"dsminus", SIDOM_DSMINUS},   {"dsplus", SIDOM_DSPLUS},
      {"lambda", SIDOM_LAMBDA},     {"indomatic", SIDOM_INDOMATIC},
      {"dc", SIDOM_DC},             {"kappa", SIDOM_KAPPA},
      {"gammacl", SIDOM_GAMMACL}};
  auto d = read_digraph(args.in);
  int32_t value = 0;
  char* witness = nullptr;
  check(sidom_compute(d.get(), kInvariants.at(args.what), &value, &witness));
  const std::string text = take(witness);
  std::cout << value << "\n";
  if (!args.witness.empty()) {
    write_file(args.witness, text);
  } else {
    std::cout << text;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string in;
  std::string partition;
  std::string mode = "in";
};

int run_verify(const VerifyArgs& args) {
  auto d = read_digraph(args.in);
  sidom_partition* raw = nullptr;
  check(sidom_partition_read(args.partition.c_str(),
                             sidom_digraph_order(d.get()), &raw));
  PartitionPtr p(raw);
  int valid = 0;
  char* message = nullptr;
  check(sidom_verify(d.get(), p.get(), args.mode == "out", &valid, &message));
  std::cout << take(message) << "\n";
  return valid ? kExitOk : kExitNegative;
}

struct TransformArgs {
  std::string in;
  std::string op;
  std::vector<std::string> with;
  std::string out;
  std::string dot;
};

int run_transform(const TransformArgs& args) {
  static const std::map<std::string, sidom_transform_op> kOps = {
      {"line", SIDOM_OP_LINE},         {"subdivision", SIDOM_OP_SUBDIVISION},
      {"root", SIDOM_OP_ROOT},         {"middle", SIDOM_OP_MIDDLE},
      {"total", SIDOM_OP_TOTAL},       {"converse", SIDOM_OP_CONVERSE},
      {"product", SIDOM_OP_PRODUCT},   {"compose", SIDOM_OP_COMPOSE}};
  auto d = read_digraph(args.in);
  std::vector<DigraphPtr> operands;
  std::vector<const sidom_digraph*> raw;
  for (const std::string& path : args.with) {
    operands.push_back(read_digraph(path));
    raw.push_back(operands.back().get());
  }
  sidom_digraph* result = nullptr;
  check(sidom_transform(d.get(), kOps.at(args.op), raw.data(), raw.size(),
                        &result));
  DigraphPtr derived(result);
  char* text = nullptr;
  check(sidom_digraph_format(derived.get(), &text));
  const std::string canonical = take(text);
  if (args.out.empty()) {
    std::cout << canonical;
  } else {
    write_file(args.out, canonical);
  }
  if (!args.dot.empty()) {
    char* dot = nullptr;
    check(sidom_digraph_to_dot(derived.get(), &dot));
    write_file(args.dot, take(dot));
  }
  return kExitOk;
}

struct GenerateArgs {
  std::string family;
  int n = -1;
  int p = -1;
  int m = -1;
  std::string out;
};

int run_generate(const GenerateArgs& args) {
  int a = 0;
  int b = 0;
  auto need = [](int value, const char* flag, const std::string& family) {
    if (value < 0) {
      std::cerr << "error: family " << family << " needs " << flag << "\n";
      throw Exit{kExitInput};
    }
    return value;
  };
  if (args.family == "order-value") {
    a = need(args.p, "--p", args.family);
    b = need(args.m, "--m", args.family);
  } else if (args.family == "critical-composition") {
    a = need(args.p, "--p", args.family);
    b = need(args.n, "--n", args.family);
  } else {
    a = need(args.n, "--n", args.family);
  }
  sidom_digraph* d = nullptr;
  sidom_partition* p = nullptr;
  char* claims = nullptr;
  check(sidom_generate(args.family.c_str(), a, b, &d, &p, &claims));
  DigraphPtr digraph(d);
  PartitionPtr partition(p);
  const std::string claims_text = take(claims);
  char* text = nullptr;
  check(sidom_digraph_format(digraph.get(), &text));
  const std::string canonical = take(text);
  if (args.out.empty()) {
    std::cout << canonical;
    return kExitOk;
  }
  write_file(args.out, canonical);
  if (partition) {
    char* blocks = nullptr;
    check(sidom_partition_format(partition.get(), &blocks));
    write_file(args.out + ".partition", take(blocks));
  }
  write_file(args.out + ".claims.json", claims_text);
  std::cout << claims_text;
  return kExitOk;
}

int run_critical(const std::string& in) {
  auto d = read_digraph(in);
  int critical = 0;
  int characterization = 0;
  char* report = nullptr;
  check(sidom_critical(d.get(), &critical, &characterization, &report));
  std::cout << take(report);
  return critical ? kExitOk : kExitNegative;
}

int run_laws(const std::string& in, bool json) {
  auto d = read_digraph(in);
  int violations = 0;
  char* report = nullptr;
  check(sidom_laws(d.get(), json ? 1 : 0, &violations, &report));
  std::cout << take(report);
  return violations == 0 ? kExitOk : kExitNegative;
}

struct OracleArgs {
  int max_n = 3;
  std::uint64_t seed = 0;
  int random = 0;
  int up_to = 6;
};

int run_oracle(const OracleArgs& args) {
  int64_t mismatches = 0;
  char* summary = nullptr;
  check(sidom_oracle_scan(args.max_n, args.seed, args.random, args.up_to,
                          &mismatches, &summary));
  std::cout << take(summary);
  return mismatches == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong in-domatic partitions of digraphs"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* cmd_compute = app.add_subcommand("compute", "Compute an invariant");
  cmd_compute->add_option("--in", compute.in, "Digraph file")->required();
  cmd_compute->add_option("--what", compute.what, "Invariant")
      ->required()
      ->check(CLI::IsMember({"dsminus", "dsplus", "lambda", "indomatic", "dc",
                             "kappa", "gammacl"}));
  cmd_compute->add_option("--witness", compute.witness,
                          "Write the witness here instead of stdout");

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Check a partition");
  cmd_verify->add_option("--in", verify.in, "Digraph file")->required();
  cmd_verify->add_option("--partition", verify.partition, "Partition file")
      ->required();
  cmd_verify->add_option("--mode", verify.mode, "in or out")
      ->check(CLI::IsMember({"in", "out"}));

  TransformArgs transform;
  auto* cmd_transform = app.add_subcommand("transform", "Derive a digraph");
  cmd_transform->add_option("--in", transform.in, "Digraph file")->required();
  cmd_transform->add_option("--op", transform.op, "Operation")
      ->required()
      ->check(CLI::IsMember({"line", "subdivision", "root", "middle", "total",
                             "converse", "product", "compose"}));
  cmd_transform->add_option("--with", transform.with,
                            "Second factor or composition parts");
  cmd_transform->add_option("--out", transform.out, "Output digraph file");
  cmd_transform->add_option("--dot", transform.dot, "Graphviz export");

  GenerateArgs generate;
  auto* cmd_generate = app.add_subcommand("generate", "Build a family member");
  cmd_generate->add_option("--family", generate.family, "Family")
      ->required()
      ->check(CLI::IsMember({"complete", "cycle", "empty", "pair-critical",
                             "order-value", "critical-composition"}));
  cmd_generate->add_option("--n", generate.n, "n");
  cmd_generate->add_option("--p", generate.p, "p");
  cmd_generate->add_option("--m", generate.m, "m");
  cmd_generate->add_option("--out", generate.out,
                           "Digraph file; FILE.partition and FILE.claims.json "
                           "are written alongside");

  std::string critical_in;
  auto* cmd_critical = app.add_subcommand("critical", "Criticality report");
  cmd_critical->add_option("--in", critical_in, "Digraph file")->required();

  std::string laws_in;
  bool laws_json = false;
  auto* cmd_laws = app.add_subcommand("laws", "Evaluate the law suite");
  cmd_laws->add_option("--in", laws_in, "Digraph file")->required();
  cmd_laws->add_flag("--json", laws_json, "Machine-readable report");

  OracleArgs oracle;
  auto* cmd_oracle = app.add_subcommand("oracle", "Solver vs brute force");
  cmd_oracle->add_option("--max-n", oracle.max_n, "Exhaustive order (3 or 4)")
      ->check(CLI::IsMember({3, 4}));
  cmd_oracle->add_option("--seed", oracle.seed, "Random seed");
  cmd_oracle->add_option("--random", oracle.random, "Random instances");
  cmd_oracle->add_option("--up-to", oracle.up_to, "Largest random order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*cmd_compute) return run_compute(compute);
    if (*cmd_verify) return run_verify(verify);
    if (*cmd_transform) return run_transform(transform);
    if (*cmd_generate) return run_generate(generate);
    if (*cmd_critical) return run_critical(critical_in);
    if (*cmd_laws) return run_laws(laws_in, laws_json);
    if (*cmd_oracle) return run_oracle(oracle);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitInput;
}
