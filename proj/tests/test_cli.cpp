#include "fracint/cli_run.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "fracint/serialize.hpp"

using namespace fracint;
using nlohmann::json;

namespace {

struct RunOut {
  int code;
  std::string out, err;
};

RunOut run(const json& cfg) {
  json copy = cfg;
  std::ostringstream os, es;
  int code = run_config(copy, os, es);
  return {code, os.str(), es.str()};
}

}  // namespace

TEST_CASE("rl-apply of the unit preset returns the node values") {
  json cfg{{"verb", "rl-apply"},
           {"grid", {{"kind", "uniform"}, {"n", 65}}},
           {"function", {{"preset", "one"}}},
           {"op", {{"z_re", 1.0}, {"z_im", 0.0}}},
           {"format", "json"}};
  RunOut r = run(cfg);
  REQUIRE(r.code == kExitOk);
  json doc = json::parse(r.out);
  SampledFunction f = function_from_json(doc["result"]["function"]);
  for (std::size_t i = 0; i < f.size(); ++i)
    CHECK(std::abs(f.values[i] - f.grid.nodes[i]) < 1e-13);
  // every default echoed
  CHECK(doc["config"].contains("seed"));
  CHECK(doc["config"]["function"].contains("beta"));
}

TEST_CASE("replay: the echoed config reproduces the output bitwise") {
  json cfg{{"verb", "rl-defect"},
           {"grid", {{"kind", "uniform"}, {"n", 257}}},
           {"function", {{"preset", "hat"}}},
           {"op", {{"z_re", 0.4}, {"z_im", 0.3}, {"z2_re", 0.6}, {"z2_im", -0.3}}},
           {"format", "json"}};
  RunOut first = run(cfg);
  REQUIRE(first.code == kExitOk);
  json echoed = json::parse(first.out)["config"];
  RunOut second = run(echoed);
  CHECK(second.code == kExitOk);
  CHECK(first.out == second.out);
}

TEST_CASE("exit codes: validation, verdict, success") {
  CHECK(run(json{{"format", "json"}}).code == kExitValidation);  // no verb
  CHECK(run(json{{"verb", "no-such-verb"}}).code == kExitValidation);
  CHECK(run(json{{"verb", "rl-apply"},
                 {"norm", {{"kind", "bogus"}}},
                 {"op", {{"z_re", -1.0}}}})
            .code == kExitValidation);

  // a two-point schedule cannot be classified: inconclusive demands exit 3
  json bnd{{"verb", "rl-boundary"},
           {"grid", {{"kind", "uniform"}, {"n", 129}}},
           {"function", {{"preset", "linear"}}},
           {"op", {{"s", 1.0}}},
           {"sigma_schedule", {0.04, 0.02}},
           {"format", "json"}};
  RunOut r = run(bnd);
  CHECK(r.code == kExitVerdict);
  // but an explicit opt-out reports the verdict with exit 0
  bnd["require_convergence"] = false;
  CHECK(run(bnd).code == kExitOk);

  json nonsplit{{"verb", "spectral-split"},
                {"matrix", {{"inline", {{{0.5, 0.0}, {0.0, 0.0}},
                                        {{0.0, 0.0}, {3.0, 0.0}}}}}},
                {"op", {{"delta", 1.0}}}};
  CHECK(run(nonsplit).code == kExitValidation);
}

TEST_CASE("spectral-split on the diag(-2,3) fixture emits P = diag(1,0)") {
  json cfg{{"verb", "spectral-split"},
           {"matrix", {{"inline", {{{-2.0, 0.0}, {0.0, 0.0}},
                                   {{0.0, 0.0}, {3.0, 0.0}}}}}},
           {"op", {{"delta", 1.0}}},
           {"format", "json"}};
  RunOut r = run(cfg);
  REQUIRE(r.code == kExitOk);
  json doc = json::parse(r.out);
  auto P = doc["result"]["projection"];
  CHECK(std::abs(P[0][0][0].get<double>() - 1.0) <= 1e-8);
  CHECK(std::abs(P[1][1][0].get<double>()) <= 1e-8);
  CHECK(doc["result"]["idempotency_defect"].get<double>() <= 1e-8);
  CHECK(doc["result"]["dim1"].get<int>() == 1);
  CHECK(doc["result"]["spectrum1"][0][0].get<double>() ==
        doctest::Approx(-2.0).epsilon(1e-7));
}

TEST_CASE("sweep over sigma reports the -1 slope of the sup norm") {
  json cfg{{"verb", "sweep"},
           {"sweep",
            {{"axis", "op.z_re"},
             {"values", {0.1, 0.05, 0.025}},
             {"verb", "rl-norm-sup"}}},
           {"op", {{"z_im", 1.0}}},
           {"format", "json"}};
  RunOut r = run(cfg);
  REQUIRE(r.code == kExitOk);
  json rows = json::parse(r.out)["result"]["rows"];
  REQUIRE(rows.size() == 3);
  double slope = rows[2]["slope"].get<double>();
  CHECK(std::abs(slope + 1.0) <= 0.05);
}

TEST_CASE("diag-example verb emits verdicts") {
  json cfg{{"verb", "diag-example"},
           {"diag", {{"preset", "polynomial"}, {"t", 2.0}}},
           {"format", "json"}};
  RunOut r = run(cfg);
  REQUIRE(r.code == kExitOk);
  json doc = json::parse(r.out);
  CHECK(doc["result"]["membership"] == "non_member");

  cfg["diag"]["preset"] = "exponential";
  json doc2 = json::parse(run(cfg).out);
  CHECK(doc2["result"]["membership"] == "member");
}

TEST_CASE("csv artifacts round-trip through the readers") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> nd;
  Grid g = Grid::closed_uniform(33);
  std::vector<cplx> v(g.size());
  for (auto& c : v) c = cplx(nd(rng), nd(rng));
  SampledFunction f(g, v);
  std::stringstream ss;
  write_function_csv(ss, f, "round trip");
  SampledFunction back = read_function_csv(ss, GridKind::closed_unit);
  REQUIRE(back.size() == f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(back.grid.nodes[i] == f.grid.nodes[i]);
    CHECK(back.values[i] == f.values[i]);
  }

  std::size_t n = 4;
  std::vector<cplx> m(n * n);
  for (auto& c : m) c = cplx(nd(rng), nd(rng));
  std::stringstream ms;
  write_matrix_csv(ms, m, n);
  std::size_t n2 = 0;
  auto m2 = read_matrix_csv(ms, n2);
  REQUIRE(n2 == n);
  for (std::size_t i = 0; i < m.size(); ++i) CHECK(m2[i] == m[i]);

  // json route as well
  std::size_t n3 = 0;
  auto m3 = matrix_from_json(matrix_to_json(m, n), n3);
  REQUIRE(n3 == n);
  for (std::size_t i = 0; i < m.size(); ++i) CHECK(m3[i] == m[i]);
}

TEST_CASE("csv format embeds the replayable config") {
  json cfg{{"verb", "rl-apply"},
           {"grid", {{"kind", "uniform"}, {"n", 17}}},
           {"function", {{"preset", "linear"}}},
           {"op", {{"z_re", 0.5}, {"z_im", 0.0}}},
           {"format", "csv"}};
  RunOut r = run(cfg);
  REQUIRE(r.code == kExitOk);
  REQUIRE(r.out.rfind("# config: ", 0) == 0);
  std::string line = r.out.substr(10, r.out.find('\n') - 10);
  json echoed = json::parse(line);
  echoed["format"] = "json";
  CHECK(run(echoed).code == kExitOk);
}

TEST_CASE("hadamard verbs run end to end") {
  json cfg{{"verb", "hadamard-apply"},
           {"grid", {{"kind", "geometric"}, {"n", 512}, {"a", 1.0}, {"x_min", 1e-8}}},
           {"function", {{"preset", "linear"}}},
           {"op", {{"alpha_re", 1.0}, {"alpha_im", 0.0}, {"mu_re", 1.0}}},
           {"format", "json"}};
  RunOut r = run(cfg);
  REQUIRE(r.code == kExitOk);
  json doc = json::parse(r.out);
  CHECK(doc["result"].contains("max_tail_bound"));

  json bad = cfg;
  bad["op"]["mu_re"] = 0.2;  // below c: Hardy-type threshold diagnostic
  RunOut rb = run(bad);
  CHECK(rb.code == kExitValidation);
  CHECK(rb.err.find("Re mu > c") != std::string::npos);
}
