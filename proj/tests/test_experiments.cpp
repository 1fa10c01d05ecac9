#include <clocale>
#include <cmath>
#include <locale>
#include <map>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "qent/entanglement.hpp"
#include "qent/errors.hpp"
#include "qent/analysis.hpp"
#include "qent/experiments.hpp"

using namespace qent;

namespace {

ExperimentSpec spec(ExperimentName name, ScalarKind kind, std::uint64_t count = 20000, std::uint32_t workers = 2,
                    std::uint64_t seed = 42) {
  ExperimentSpec s;
  s.name = name;
  s.config = SampleConfig{kind, seed, count, workers};
  s.bins = default_bins(name);
  return s;
}

struct CommaDecimal : std::numpunct<char> {
  char do_decimal_point() const override { return ','; }
};

}  // namespace

TEST_CASE("experiment names and defaults") {
  for (auto n : {ExperimentName::Fig1RDist, ExperimentName::Fig2EDist, ExperimentName::Fig3C2Pure,
                 ExperimentName::Fig4QuaterbitSurface, ExperimentName::BoundaryScan})
    CHECK(parse_experiment(to_string(n)) == n);
  CHECK_FALSE(parse_experiment("fig5").has_value());
  CHECK(default_bins(ExperimentName::Fig1RDist) == 60);
  CHECK(default_bins(ExperimentName::Fig3C2Pure) == 50);
}

TEST_CASE("experiments reject incompatible kinds") {
  CHECK_THROWS_AS(run_experiment(spec(ExperimentName::Fig4QuaterbitSurface, ScalarKind::Real)), DomainError);
  CHECK_THROWS_AS(run_experiment(spec(ExperimentName::Fig1RDist, ScalarKind::Quaternion)), DomainError);
  CHECK_THROWS_AS(run_experiment(spec(ExperimentName::Fig3C2Pure, ScalarKind::Quaternion)), DomainError);
  CHECK_THROWS_AS(run_experiment(spec(ExperimentName::BoundaryScan, ScalarKind::Complex)), DomainError);
  auto few_bins = spec(ExperimentName::Fig3C2Pure, ScalarKind::Real);
  few_bins.bins = 1;
  CHECK_THROWS_AS(run_experiment(few_bins), DomainError);
}

TEST_CASE("every table carries the metadata header") {
  const auto t = run_experiment(spec(ExperimentName::Fig3C2Pure, ScalarKind::Real, 1000, 3, 7));
  for (const char* key : {"name", "kind", "seed", "count", "workers", "bins", "version"}) CHECK(t.find_meta(key));
  CHECK(std::get<std::string>(*t.find_meta("name")) == "fig3_c2_pure");
  CHECK(std::get<std::string>(*t.find_meta("kind")) == "rebit");
  CHECK(t.meta_number("seed") == 7);
  CHECK(t.meta_number("workers") == 3);
  CHECK_THROWS_AS(t.meta_number("missing"), Error);
}

TEST_CASE("fig1: R density and the separability wall") {
  const auto t = run_experiment(spec(ExperimentName::Fig1RDist, ScalarKind::Complex));
  CHECK(t.columns == std::vector<std::string>{"r_lo", "r_hi", "density", "r_ge_3"});
  CHECK(t.rows.size() == 60);
  double mass = 0.0;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    mass += t.number(r, "density") * (t.number(r, "r_hi") - t.number(r, "r_lo"));
    CHECK(t.number(r, "r_ge_3") == (t.number(r, "r_lo") >= 3.0 ? 1.0 : 0.0));
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(t.meta_number("r_ge_3_count") > 0);
  CHECK(t.meta_number("r_ge_3_zero_concurrence_count") == t.meta_number("r_ge_3_count"));
  CHECK(t.meta_number("r_ge_3_ppt_count") == t.meta_number("r_ge_3_count"));
  CHECK(t.meta_number("r_ge_3_zero_concurrence_fraction") == 1.0);

  const auto real = run_experiment(spec(ExperimentName::Fig1RDist, ScalarKind::Real));
  CHECK(real.find_meta("r_ge_3_zero_rebit_concurrence_count"));
  CHECK(real.meta_number("r_ge_3_zero_concurrence_count") == real.meta_number("r_ge_3_count"));
}

TEST_CASE("fig2: entanglement densities") {
  for (ScalarKind kind : {ScalarKind::Real, ScalarKind::Complex}) {
    const auto t = run_experiment(spec(ExperimentName::Fig2EDist, kind, 50000));
    CHECK(t.columns == std::vector<std::string>{"e_lo", "e_hi", "mixed_density", "pure_density"});
    CHECK(t.rows.size() == 50);
    CHECK(t.meta_number("mixed_spearman") < -0.5);
    CHECK(t.meta_number("pure_mean_e") > t.meta_number("mixed_mean_e"));
  }
}

TEST_CASE("fig3: pure-state C² against the closed form") {
  const auto real = run_experiment(spec(ExperimentName::Fig3C2Pure, ScalarKind::Real, 200000));
  CHECK(real.columns == std::vector<std::string>{"c2_lo", "c2_hi", "empirical_density", "analytic_density"});
  CHECK(real.meta_number("l1_first_bin") == 1);
  CHECK(real.meta_number("l1_distance") < 0.05);
  CHECK(std::abs(real.meta_number("mean_c2") - 1.0 / 3.0) < 0.005);
  CHECK(real.meta_number("bin0_empirical_density") > 5.0);
  CHECK(real.number(real.rows.size() - 1, "analytic_density") == doctest::Approx(0.5).epsilon(0.01));

  const auto complex = run_experiment(spec(ExperimentName::Fig3C2Pure, ScalarKind::Complex, 200000));
  CHECK(complex.meta_number("l1_first_bin") == 0);
  CHECK(std::abs(complex.meta_number("mean_c2") - 0.4) < 0.005);
}

TEST_CASE("fig4: quaterbit surface depends only on x + y") {
  const auto t = run_experiment(spec(ExperimentName::Fig4QuaterbitSurface, ScalarKind::Quaternion, 1, 1));
  CHECK(t.columns == std::vector<std::string>{"x", "y", "E"});
  CHECK(t.rows.size() == 65 * 66 / 2);
  std::map<int, double> by_sum;
  bool found_center = false;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const double x = t.number(r, "x"), y = t.number(r, "y"), e = t.number(r, "E");
    CHECK(x + y <= 1.0);
    if (x == 0.25 && y == 0.25) {
      found_center = true;
      CHECK(e == doctest::Approx(1.0).epsilon(1e-12));
    }
    const int key = static_cast<int>(std::lround((x + y) * 64));
    if (by_sum.count(key)) CHECK(std::abs(by_sum[key] - e) <= 1e-12);
    by_sum[key] = e;
    CHECK(std::abs(e - binary_entropy(x + y)) <= 1e-12);
  }
  CHECK(found_center);
}

TEST_CASE("boundary scan") {
  const auto t = run_experiment(spec(ExperimentName::BoundaryScan, ScalarKind::Real, 20000));
  CHECK(t.columns == std::vector<std::string>{"series", "r", "c2", "max_c2"});
  CHECK(t.meta_number("violations") == 0);
  CHECK(t.meta_number("max_excess") <= 1e-9);
  CHECK(t.meta_number("witness_max_gap") <= 1e-12);
  std::map<std::string, int> series;
  for (const auto& row : t.rows) ++series[std::get<std::string>(row[0])];
  CHECK(series["sample"] == 20000);
  CHECK(series["bound"] == 101);
  CHECK(series["witness"] == 101);
  CHECK(series["plateau_witness"] == 101);
}

TEST_CASE("outputs are deterministic in the full configuration") {
  const auto a = to_csv(run_experiment(spec(ExperimentName::Fig2EDist, ScalarKind::Complex, 5000, 3)));
  const auto b = to_csv(run_experiment(spec(ExperimentName::Fig2EDist, ScalarKind::Complex, 5000, 3)));
  CHECK(a == b);
  const auto other_seed = to_csv(run_experiment(spec(ExperimentName::Fig2EDist, ScalarKind::Complex, 5000, 3, 43)));
  CHECK(a != other_seed);
}

TEST_CASE("worker count changes the draw but not the distribution") {
  const auto one = pure_c2_samples(SampleConfig{ScalarKind::Complex, 42, 50000, 1});
  const auto eight = pure_c2_samples(SampleConfig{ScalarKind::Complex, 42, 50000, 8});
  CHECK(one.size() == eight.size());
  CHECK(one != eight);
  CHECK(ks_two_sample(one, eight) < 0.015);
}

TEST_CASE("number formatting") {
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.25) == "0.25");
  CHECK(format_number(1234567.891011121) == "1234567.89101");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(format_number(std::nan("")) == "nan");

  const std::locale previous = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
  CHECK(format_number(0.5) == "0.5");
  std::locale::global(previous);
}

TEST_CASE("CSV and JSON writers") {
  ResultTable t;
  t.set_meta("name", std::string("demo"));
  t.set_meta("count", std::int64_t{3});
  t.set_meta("count", std::int64_t{4});
  t.columns = {"label", "value"};
  t.rows = {{std::string("a,b"), 0.5}, {std::string("plain"), std::int64_t{2}}};
  CHECK(to_csv(t) == "# name=demo\n# count=4\nlabel,value\n\"a,b\",0.5\nplain,2\n");

  const auto doc = nlohmann::json::parse(to_json(t));
  CHECK(doc["metadata"]["name"] == "demo");
  CHECK(doc["metadata"]["count"] == 4);
  CHECK(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["label"] == "a,b");
  CHECK(doc["rows"][0]["value"] == 0.5);

  ResultTable precise;
  precise.columns = {"v"};
  precise.rows = {{1.0 / 3.0}};
  CHECK(nlohmann::json::parse(to_json(precise))["rows"][0]["v"].get<double>() == 0.333333333333);
}
