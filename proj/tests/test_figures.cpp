#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwalk/bounds.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/figures.hpp"

using namespace qwalk;

TEST_CASE("label conversion") {
  CHECK(vertex_from_label(5, 1) == 0);
  CHECK(vertex_from_label(5, 10) == 9);
  CHECK(vertex_label(0) == 1);
  CHECK_THROWS_AS(vertex_from_label(5, 0), ParameterError);
  CHECK_THROWS_AS(vertex_from_label(5, 11), ParameterError);
}

TEST_CASE("csv round trip") {
  Dataset d;
  d.comment = "qwalk test --n 5";
  d.columns = {"a", "b", "c"};
  d.rows = {{1.0, 0.1, std::nan("")}, {-2.5e-300, 1.0 / 3.0, 1e300}};
  std::stringstream ss;
  write_csv(ss, d);
  const Dataset back = parse_csv(ss);
  CHECK(back.comment == d.comment);
  CHECK(back.columns == d.columns);
  REQUIRE(back.rows.size() == 2);
  CHECK(back.rows[0][0] == 1.0);
  CHECK(back.rows[0][1] == 0.1);
  CHECK(std::isnan(back.rows[0][2]));
  CHECK(back.rows[1] == d.rows[1]);
  std::stringstream bad("x,y\n1,2,3\n");
  CHECK_THROWS_AS(parse_csv(bad), ParameterError);
}

TEST_CASE("svg output") {
  Dataset d;
  d.columns = {"x", "y"};
  d.rows = {{1, 10}, {2, 100}, {3, 1000}};
  std::stringstream ss;
  write_svg(ss, d, "x", {"y"}, true);
  const std::string s = ss.str();
  CHECK(s.find("<svg") == 0);
  CHECK(s.find("<polyline") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);
}

TEST_CASE("figure 1b data") {
  std::vector<long long> ts;
  for (long long t = 0; t <= 200; ++t) ts.push_back(t);
  const std::vector<double> Ts{10.0, 1e3, 1e6};
  const Dataset d = run_figure_1b(101, ts, Ts);
  CHECK(d.rows.size() == 201);
  const double ref = 1.0 / 202.0;
  CHECK(d.rows[0][4] == ref);
  const double endpoint = d.rows[2][1];
  CHECK(std::abs(endpoint - ref) <= 0.1 * ref);
  const auto cls = d.column("classical_P(1,15)");
  const double hi = *std::max_element(cls.begin(), cls.end());
  const double lo = *std::min_element(cls.begin(), cls.end());
  CHECK(hi - lo > std::abs(endpoint - ref));
  CHECK(std::isnan(d.rows[3][0]));
  CHECK_THROWS_AS(run_figure_1b(101, {-1}, Ts), ParameterError);
  CHECK_THROWS_AS(run_figure_1b(101, ts, {0.0}), ParameterError);
}

TEST_CASE("conjecture figure data") {
  for (int residue : {1, 3}) {
    const Dataset d = run_conjecture_figures(301, residue);
    int valid = 0;
    for (int p = 1; 4 * p + residue <= 301; ++p) ++valid;
    CHECK(static_cast<int>(d.rows.size()) == valid);
    for (const auto& r : d.rows) {
      CHECK(r[d.column_index("f_n")] <= r[d.column_index("bound_100n2ln5")]);
      CHECK(r[d.column_index("pass")] == 1.0);
    }
    std::stringstream ss;
    write_csv(ss, d);
    const Dataset back = parse_csv(ss);
    CHECK(back.columns == d.columns);
    CHECK(back.rows == d.rows);
  }
  const Dataset far = run_conjecture_figures(41, 1, 21);
  CHECK(std::isnan(far.rows.back()[far.column_index("Su3")]));
  CHECK_THROWS_AS(run_conjecture_figures(41, 2), ParameterError);
}

TEST_CASE("speedup table") {
  const Dataset d = run_speedup_table({21, 41}, 1.0 / (2.0 * std::exp(1.0)));
  REQUIRE(d.rows.size() == 2);
  for (const auto& r : d.rows) {
    CHECK(r[1] >= r[2]);
    CHECK(r[5] > 0);
    CHECK(r[5] == doctest::Approx(r[1] / r[3]));
  }
}
