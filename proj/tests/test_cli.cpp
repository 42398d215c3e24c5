/*
 * Copyright (c) 2026, the belent authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <doctest.h>

#include <cstdio>
#include <string>

#include "helpers.hpp"

using test_helpers::run_command;
using test_helpers::slurp;
using test_helpers::spit;

namespace {

const std::string cli = BELENT_CLI_PATH;
const std::string data = BELENT_DATA_DIR;

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("entropy subcommand reports the requested measures") {
  const auto result = run_command(cli + " entropy --bpa " + data +
                                  "/example6.json --measures deng");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "\"measure\":\"deng\""));
  CHECK(contains(result.out, "\"value\":2.3219"));
  CHECK(contains(result.out, "\"k\":null"));
  CHECK(contains(result.out, "\"bpa_digest\":\""));
}

TEST_CASE("entropy subcommand: fb of the vacuous BPA") {
  const auto result = run_command(cli + " entropy --bpa " + data +
                                  "/vacuous2.json --measures fb");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "\"value\":1.5850"));
}

TEST_CASE("entropy subcommand: tfb carries its order") {
  const auto result = run_command(cli + " entropy --bpa " + data +
                                  "/example6.json --measures tfb,deng --k 3");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "\"measure\":\"tfb\",\"k\":3"));
}

TEST_CASE("entropy subcommand usage and validation failures exit 2") {
  const auto no_k = run_command(cli + " entropy --bpa " + data +
                                "/example6.json --measures tfb");
  CHECK(no_k.exit_code == 2);
  CHECK(!no_k.err.empty());

  const auto bad = run_command(cli + " entropy --bpa " + data +
                               "/bad_sum.json --measures deng");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.err, "SumNotOne"));

  const auto missing = run_command(cli + " entropy --bpa does_not_exist.json "
                                         "--measures deng");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("table 1 reproduces the maximum-entropy grid") {
  const auto result = run_command(cli + " table --which 1");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "k,n,dimension,value\n"));
  CHECK(contains(result.out, "1,2,5,2.3219\n"));
  CHECK(contains(result.out, "2,4,175,7.4512\n"));
  CHECK(contains(result.out, "3,5,2101,11.0369\n"));
  CHECK(contains(result.out, "4,5,4651,12.1833\n"));
}

TEST_CASE("table 2 reproduces the iterative-volume comparison") {
  const auto result = run_command(cli + " table --which 2");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "k,deng_method,hoivmf\n"));
  CHECK(contains(result.out, "1,2.3219,2.3219\n"));
  CHECK(contains(result.out, "7,3.3758,4.0875\n"));
  // log2(13) prints as 3.7004
  CHECK(contains(result.out, "5,3.2841,3.7004\n"));
  CHECK(contains(result.out, "14,3.4259,4.9542\n"));
}

TEST_CASE("split counts: vacuous 4-element frame at order 4 has 369 leaves") {
  const auto result = run_command(cli + " split --bpa " + data +
                                  "/vacuous4.json --k 4 --emit counts");
  CHECK(result.exit_code == 0);
  CHECK(result.out == "origin,count\n\"A,B,C,D\",369\n");
}

TEST_CASE("split counts of the nine-leaf example") {
  const auto result = run_command(cli + " split --bpa " + data +
                                  "/example1.json --k 3 --emit counts");
  CHECK(result.exit_code == 0);
  CHECK(result.out ==
        "origin,count\n\"A\",1\n\"B\",1\n\"A,B\",7\n");
}

TEST_CASE("split leaves of the vacuous BPA at order 1") {
  const auto result = run_command(cli + " split --bpa " + data +
                                  "/vacuous2.json --k 1 --emit leaves");
  CHECK(result.exit_code == 0);
  CHECK(result.out ==
        "origin,subset,round,mass\n"
        "\"A,B\",\"A\",1,0.3333\n"
        "\"A,B\",\"B\",1,0.3333\n"
        "\"A,B\",\"A,B\",1,0.3333\n");
}

TEST_CASE("split guard exits 3 when the tree would explode") {
  std::string frame = "[";
  std::string key;
  for (int i = 0; i < 25; ++i) {
    if (i > 0) {
      frame += ",";
      key += ",";
    }
    frame += "\"L" + std::to_string(i) + "\"";
    key += "L" + std::to_string(i);
  }
  frame += "]";
  spit("huge_frame.json",
       "{\"frame\":" + frame + ",\"masses\":{\"" + key + "\":1.0}}");
  const auto result = run_command(cli + " split --bpa huge_frame.json --k 1 "
                                        "--emit counts");
  CHECK(result.exit_code == 3);
  CHECK(contains(result.err, "TreeTooLarge"));
  std::remove("huge_frame.json");
}

TEST_CASE("trajectory endpoints") {
  const auto result = run_command(cli + " trajectory --ratio 0.5 --steps 5");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "t,shannon,fb,deng,tfb_k1,tfb_k2,tfb_k3\n"));
  // t = 0: vacuous; shannon over the single unit mass is 0, fb hits log2 3
  CHECK(contains(result.out,
                 "0.0000,0.0000,1.5850,1.5850,1.5850,2.3219,2.8074\n"));
  // t = 1, r = 0.5: uniform Bayesian; everything is 1 bit
  CHECK(contains(result.out,
                 "1.0000,1.0000,1.0000,1.0000,1.0000,1.0000,1.0000\n"));

  const auto certain = run_command(cli + " trajectory --ratio 1 --steps 2");
  CHECK(certain.exit_code == 0);
  CHECK(contains(certain.out,
                 "1.0000,0.0000,0.0000,0.0000,0.0000,0.0000,0.0000\n"));
}

TEST_CASE("surface emits one file per order plus a summary") {
  const auto result = run_command(cli + " surface --k-min 1 --k-max 2 "
                                        "--step 0.05 --out-dir surf_tmp");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "k,argmax_mA,argmax_mB,argmax_mAB,max_value\n"));
  CHECK(contains(result.out, "1,0.2000,0.2000,0.6000,2.3219\n"));

  const std::string file = slurp("surf_tmp/surface_k1.csv");
  CHECK(contains(file, "mA,mB,mAB,value\n"));
  CHECK(contains(file, "0.0000,0.0000,1.0000,1.5850\n"));
  const std::string file2 = slurp("surf_tmp/surface_k2.csv");
  CHECK(contains(file2, "0.0000,0.0000,1.0000,2.3219\n"));

  const auto bad_step = run_command(cli + " surface --k-min 1 --k-max 1 --step 0");
  CHECK(bad_step.exit_code == 2);
}

TEST_CASE("deng-volume subcommand renders the sequence") {
  const auto result = run_command(cli + " deng-volume --bpa " + data +
                                  "/example6.json --epsilon 1e-9 --max-iter 14");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "iteration,value,is_final\n"));
  CHECK(contains(result.out, "1,2.3219,0\n"));
  CHECK(contains(result.out, "14,3.4259,1\n"));
  CHECK(contains(result.out, "# warning"));  // increase at 14 still > 1e-9

  const auto converged = run_command(cli + " deng-volume --bpa " + data +
                                     "/example6.json --epsilon 1e-3 --max-iter 100");
  CHECK(converged.exit_code == 0);
  CHECK(contains(converged.out, "14,3.4259,1\n"));
  CHECK(!contains(converged.out, "# warning"));
}

TEST_CASE("--out writes the same bytes a stdout run prints") {
  const auto to_stdout = run_command(cli + " table --which 2");
  const auto to_file = run_command(cli + " table --which 2 --out table2_tmp.csv");
  CHECK(to_file.exit_code == 0);
  CHECK(slurp("table2_tmp.csv") == to_stdout.out);
  std::remove("table2_tmp.csv");
}

TEST_CASE("repeated runs are byte-identical") {
  const std::string command = cli + " trajectory --ratio 0.25 --steps 21";
  const auto first = run_command(command);
  const auto second = run_command(command);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("--precision widens the printed values") {
  const auto result = run_command(cli + " entropy --bpa " + data +
                                  "/vacuous2.json --measures fb --precision 10");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "\"value\":1.5849625007"));
}
