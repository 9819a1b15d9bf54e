// Copyright 2026 The bcfd Authors
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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bcfd/cli.hpp"
#include "bcfd/json_io.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = bcfd::cli::run(args, out, err);
  return Run{code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(BCFD_TEST_DATA) + "/" + name; }

/// Scratch directory removed at scope exit.
class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("bcfd_cli_" + std::to_string(counter_++) + "_" +
                                                 std::to_string(reinterpret_cast<std::uintptr_t>(this)))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }
  std::string write(const char* name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

 private:
  static inline int counter_ = 0;
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli examples") {
  TEST_CASE("prove a transitive goal") {
    Run r = run({"prove", "--premises", data("chain.txt"), "--goal", "{a} |3 {c}"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Trans") != std::string::npos);
  }
  TEST_CASE("unprovable goal ships cuts") {
    Run r = run({"--json", "prove", "--premises", data("chain.txt"), "--goal", "{a} |2 {c}"});
    CHECK(r.code == 1);
    auto j = bcfd::Json::parse(r.out);
    CHECK(j["entailed"] == false);
    CHECK(j["refutation"]["min_budget"] == "3");
    CHECK(j["refutation"]["cuts"].size() == 2);
  }
  TEST_CASE("four-folder formula is invalid") {
    Run r = run({"--json", "valid", "--formula", data("four_folder_formula.txt")});
    CHECK(r.code == 1);
    auto j = bcfd::Json::parse(r.out);
    CHECK(j.contains("hypergraph"));
    CHECK(j["hypergraph"]["edges"].size() == 2);
  }
  TEST_CASE("minimum budget prints the number") {
    Run r = run({"min-budget", "--premises", data("pad_folders.txt"), "--from", "{}", "--to", "{b}"});
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
    Run a = run({"min-budget", "--premises", data("pad_folders.txt"), "--from", "{a}", "--to", "{b}"});
    CHECK(a.out == "4\n");
  }
  TEST_CASE("unreachable minimum is negative") {
    Run r = run({"min-budget", "--premises", data("chain.txt"), "--from", "{c}", "--to", "{a}"});
    CHECK(r.code == 1);
  }
  TEST_CASE("satisfiable and valid formulas") {
    Scratch s;
    std::string aug = s.write("aug.txt", "attrs: a,b,c\n{a} |2 {b} => {a,c} |2 {b,c}\n");
    CHECK(run({"valid", aug}).code == 0);
    CHECK(run({"sat", aug}).code == 0);
    std::string contra = s.write("contra.txt", "attrs: a,b,c\n{a} |1 {b} & {b} |1 {c} & !{a} |2 {c}\n");
    CHECK(run({"sat", contra}).code == 1);
    CHECK(run({"sat", data("four_folder_formula.txt")}).code == 0);
  }
}

TEST_SUITE("cli certificates") {
  TEST_CASE("emitted proofs re-check, tampered ones do not") {
    Scratch s;
    std::string proof = s.path("proof.json");
    Run r = run({"prove", "--premises", data("four_folders.txt"), "--goal", "{b} |5 {a}", "--emit-proof", proof});
    REQUIRE(r.code == 0);
    CHECK(run({"check-proof", "--premises", data("four_folders.txt"), "--proof", proof, "--goal", "{b} |5 {a}"}).code == 0);
    CHECK(run({"check-proof", "--premises", data("four_folders.txt"), "--proof", proof, "--goal", "{b} |4 {a}"}).code == 1);
    CHECK(run({"check-proof", "--premises", data("chain.txt"), "--proof", proof}).code != 0);

    bcfd::Json j = bcfd::Json::parse(slurp(proof));
    j["concludes"] = "{b} |4 {a}";
    std::string tampered = s.write("tampered.json", j.dump());
    Run bad = run({"--json", "check-proof", "--premises", data("four_folders.txt"), "--proof", tampered});
    CHECK(bad.code == 1);
    CHECK(bcfd::Json::parse(bad.out)["failing_path"] == "root");
  }
  TEST_CASE("refutations and counterexample packages are written") {
    Scratch s;
    std::string counter = s.path("counter.json");
    CHECK(run({"prove", "--premises", data("pad_folders.txt"), "--goal", "{} |4 {b}", "--emit-counter", counter}).code == 1);
    CHECK(bcfd::Json::parse(slurp(counter))["cuts"].size() == 2);
    std::string pkg = s.path("pkg.json");
    CHECK(run({"valid", data("four_folder_formula.txt"), "--emit-counter", pkg}).code == 1);
    CHECK(bcfd::Json::parse(slurp(pkg)).contains("atoms"));
  }
  TEST_CASE("counterexample with a materialized model") {
    Scratch s;
    std::string f = s.write("f.txt", "attrs: a,b\n{a} |4 {b} => {} |4 {b}\n");
    Run r = run({"--json", "counterexample", f, "--materialize"});
    CHECK(r.code == 1);
    auto j = bcfd::Json::parse(r.out);
    CHECK(j["model"]["formula_value"] == false);
    Run valid = run({"counterexample", "--formula", s.write("v.txt", "attrs: a\n{a} |0 {a}\n")});
    CHECK(valid.code == 0);
  }
  TEST_CASE("models, tables and mining") {
    Scratch s;
    std::string model = s.write("pad.json", bcfd::model_to_json(fixture::pad_model()).dump());
    std::string f = s.write("f.txt", "attrs: a,b,c\n{a} |4 {b} => {} |4 {b}\n");
    std::string g = s.write("g.txt", "attrs: a,b,c\n{a} |4 {b}\n");
    CHECK(run({"check-model", "--model", model, "--formula", f}).code == 1);
    CHECK(run({"check-model", "--model", model, "--formula", g}).code == 0);
    std::string csv = s.write("t.csv", "a,b,c\n0,0,0\n1,1,0\n1,0,1\n0,1,1\n");
    std::string costs = s.write("t.costs", "a=3\nb=5\nc=4\n");
    CHECK(run({"check-model", "--csv", csv, "--costs", costs, "--formula", g}).code == 0);
    Run mined = run({"--json", "mine", "--csv", csv, "--costs", costs, "--cap", "5"});
    CHECK(mined.code == 0);
    std::string text = mined.out;
    CHECK(text.find("{a} |4 {b}") != std::string::npos);
    CHECK(text.find("{} |5 {b}") != std::string::npos);
    std::string other = s.write("o.txt", "attrs: a,b\n{a} |4 {b}\n");
    CHECK(run({"check-model", "--model", model, "--formula", other}).code == 2);
  }
}

TEST_SUITE("cli contract") {
  TEST_CASE("usage and parse errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"prove", "--premises", data("chain.txt")}).code == 2);
    CHECK(run({"prove", "--premises", data("chain.txt"), "--goal", "{a} | {c}"}).code == 2);
    CHECK(run({"prove", "--premises", data("missing.txt"), "--goal", "{a} |1 {c}"}).code == 2);
    Run bad = run({"prove", "--premises", data("chain.txt"), "--goal", "{a} |1 {z}"});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
    CHECK(run({"--attrs", "a,b", "valid", data("four_folder_formula.txt")}).code == 2);
  }
  TEST_CASE("help is affirmative") { CHECK(run({"--help"}).code == 0); }
  TEST_CASE("caps exit 3") {
    CHECK(run({"--cap-atoms", "4", "valid", data("four_folder_formula.txt")}).code == 3);
    CHECK(run({"--cap-edges", "1", "prove", "--premises", data("chain.txt"), "--goal", "{a} |3 {c}"}).code == 3);
  }
  TEST_CASE("attrs flag declares the universe for headerless files") {
    Scratch s;
    std::string f = s.write("f.txt", "{a} |1 {b} => {a} |2 {b}\n");
    CHECK(run({"--attrs", "a,b", "valid", f}).code == 0);
    CHECK(run({"valid", f}).code == 2);
  }
  TEST_CASE("json output is deterministic") {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"--json", "valid", data("four_folder_formula.txt")},
          std::vector<std::string>{"--json", "counterexample", data("four_folder_formula.txt")},
          std::vector<std::string>{"--json", "--seed", "5", "counterexample", data("four_folder_formula.txt")},
          std::vector<std::string>{"--json", "prove", "--premises", data("four_folders.txt"), "--goal", "{} |5 {a}"}}) {
      Run a = run(args), b = run(args);
      CHECK(a.code == b.code);
      CHECK(a.out == b.out);
    }
  }
}
