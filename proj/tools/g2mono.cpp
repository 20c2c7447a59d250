// Copyright 2026 The g2mono Authors
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

// g2mono command-line front end.
//
//   g2mono verify --family N [--checks id,id] [--format json|text] [--out PATH] [--kmax K]
//   g2mono dump   --family N [--out PATH]
//   g2mono word   --family N "T0 T1 T0^-1"
//
// Exit status: 0 overall pass, 2 some check failed, 3 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "g2mono/certify/certificate.hpp"
#include "g2mono/certify/pipeline.hpp"
#include "g2mono/families/dataset.hpp"
#include "g2mono/plmono/loop_word.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 2;
constexpr int kExitUsage = 3;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw g2mono::UsageError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw g2mono::UsageError("failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of elliptic-surface monodromy and its Lie algebra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", g2mono::kToolkitVersion);

  int family = 0;
  std::vector<std::string> checks;
  std::string format = "json";
  std::string out_path;
  unsigned k_max = g2mono::kDefaultTorsionBound;
  std::string word_text;

  auto* verify = app.add_subcommand("verify", "run the verification pipeline and print a certificate");
  verify->add_option("--family", family, "family id (1-4)")->required()->check(CLI::Range(1, 4));
  verify->add_option("--checks", checks, "comma-separated check ids to keep")->delimiter(',');
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "write the report here instead of stdout");
  verify->add_option("--kmax", k_max, "torsion-order search bound")->check(CLI::PositiveNumber);

  auto* dump = app.add_subcommand("dump", "export a family's embedded dataset as JSON");
  dump->add_option("--family", family, "family id (1-4)")->required()->check(CLI::Range(1, 4));
  dump->add_option("--out", out_path, "write the dataset here instead of stdout");

  auto* word = app.add_subcommand("word", "evaluate a loop word over a family's local monodromies");
  word->add_option("--family", family, "family id (1-4)")->required()->check(CLI::Range(1, 4));
  word->add_option("word", word_text, "e.g. \"T0 T1 T0^-1\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) {
      g2mono::PipelineOptions opt;
      opt.k_max = k_max;
      if (verify->count("--checks") > 0) opt.selection = std::set<std::string>(checks.begin(), checks.end());
      const g2mono::Certificate cert = g2mono::run_pipeline(family, opt);
      emit(g2mono::render_report(cert, format), out_path);
      return cert.overall() ? kExitPass : kExitFail;
    }
    if (*dump) {
      emit(g2mono::dataset_to_json(g2mono::family_dataset(family)).dump(2) + "\n", out_path);
      return kExitPass;
    }
    if (*word) {
      const auto data = g2mono::family_dataset(family);
      g2mono::RationalMatrix value;
      try {
        value = g2mono::evaluate_word(g2mono::LoopWord::parse(word_text), data.local_monodromies);
      } catch (const g2mono::Error& e) {
        throw g2mono::UsageError(e.what());
      }
      std::cout << g2mono::matrix_to_json(value).dump() << "\n";
      return kExitPass;
    }
  } catch (const g2mono::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const g2mono::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
