#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ftca/config.hpp"

using namespace ftca;

TEST_CASE("square parse and serialize roundtrip") {
  std::string text = "SQ 3\n010\n000\n101\n";
  Configuration c = parse_configuration(text);
  CHECK(c.grid.topology == Topology::Square);
  CHECK(c.grid.rows == 3);
  CHECK(c.at({0, 1}) == 1);
  CHECK(c.at({2, 0}) == 1);
  CHECK(c.active_count() == 3);
  CHECK(serialize(c) == text);
}

TEST_CASE("triangular parse uses 2n columns") {
  Configuration c = parse_configuration("TRI 2\n0110\n0000\n");
  CHECK(c.grid.rows == 2);
  CHECK(c.grid.cols == 4);
  CHECK(c.at({0, 1}) == 1);
  CHECK_FALSE(c.odd_rows_doubled);
}

TEST_CASE("odd triangular row count doubles vertically") {
  Configuration c = parse_configuration("TRI 1\n01\n");
  CHECK(c.grid.rows == 2);
  CHECK(c.odd_rows_doubled);
  CHECK(c.at({0, 1}) == 1);
  CHECK(c.at({1, 1}) == 1);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_configuration("XX 3\n000\n000\n000\n"), BadHeader);
  CHECK_THROWS_AS(parse_configuration("SQ 0\n"), BadDimensions);
  CHECK_THROWS_AS(parse_configuration("SQ 2\n00\n0\n"), BadDimensions);
  CHECK_THROWS_AS(parse_configuration("SQ 2\n00\n00\n\n"), BadDimensions);  // extra blank line
  CHECK_THROWS_AS(parse_configuration("SQ 2\n00\n00"), BadDimensions);      // missing final LF
  CHECK_THROWS_AS(parse_configuration("SQ 2\n02\n00\n"), BadSymbol);
  CHECK_THROWS_AS(parse_configuration("SQ 2\n00\r\n00\n"), BadSymbol);      // CR
  CHECK_THROWS_AS(parse_configuration("SQ 2\n00 \n00\n"), BadSymbol);       // trailing space
  CHECK_THROWS_AS(parse_configuration("TRI 2\n0000\n000\n"), BadDimensions);
}

TEST_CASE("random configurations are deterministic and density-sensitive") {
  Configuration a = random_configuration(Topology::Square, 32, 0.3, 42);
  Configuration b = random_configuration(Topology::Square, 32, 0.3, 42);
  CHECK(a.state == b.state);
  Configuration c = random_configuration(Topology::Square, 32, 0.3, 43);
  CHECK(a.state != c.state);
  Configuration lo = random_configuration(Topology::Square, 64, 0.05, 7);
  Configuration hi = random_configuration(Topology::Square, 64, 0.8, 7);
  CHECK(lo.active_count() < hi.active_count());
  Configuration t = random_configuration(Topology::Triangular, 8, 0.5, 9);
  CHECK(t.grid.cols == 16);
}

TEST_CASE("padded magnification replicates the block with a border") {
  Configuration x = parse_configuration("SQ 3\n010\n000\n101\n");
  Configuration big = build_padded(x);
  int n = 3, m = 2 * n * n + 3 * n;
  CHECK(big.grid.rows == m);
  int copies = (2 * n + 1) * (2 * n + 1);
  CHECK(big.active_count() == x.active_count() * copies);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Cell img = padded_center_image(n, {r, c});
      CHECK(big.at(img) == x.at({r, c}));
    }
  // Border of width n around the copy block stays inactive.
  for (int c = 0; c < m; ++c) CHECK(big.at({0, c}) == 0);
}
