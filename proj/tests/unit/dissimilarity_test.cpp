#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "njcones/dissimilarity.hpp"
#include "njcones/errors.hpp"
#include "njcones/sampling.hpp"

using namespace njcones;

TEST_CASE("validate accepts the worked-example matrix") {
  const DissimilarityMap d = testutil::example_d();
  CHECK_EQ(d.size(), 5);
  CHECK_EQ(d(0, 1), 3.0);
  CHECK_EQ(d(1, 0), 3.0);
  CHECK_EQ(d(2, 2), 0.0);
  CHECK_EQ(d(3, 4), 2.0);
  CHECK_EQ(d.label(0), "a");
}

TEST_CASE("validate accepts the all-zero map") {
  const auto d = validate({{0, 0, 0, 0},
                           {0, 0, 0, 0},
                           {0, 0, 0, 0},
                           {0, 0, 0, 0}});
  CHECK_EQ(d.size(), 4);
  CHECK_EQ(d(1, 2), 0.0);
  CHECK_EQ(d.label(0), "1");
}

TEST_CASE("validate rejects bad input") {
  SUBCASE("asymmetry, exact comparison") {
    std::vector<std::vector<double>> raw(4, std::vector<double>(4, 0.0));
    raw[1][2] = 3.0;
    raw[2][1] = 4.0;
    CHECK_THROWS_AS(validate(raw), AsymmetryError);
  }
  SUBCASE("nonzero diagonal") {
    std::vector<std::vector<double>> raw(4, std::vector<double>(4, 0.0));
    raw[2][2] = 1e-300;
    CHECK_THROWS_AS(validate(raw), NonzeroDiagonalError);
  }
  SUBCASE("negative entry") {
    std::vector<std::vector<double>> raw(4, std::vector<double>(4, 0.0));
    raw[0][3] = raw[3][0] = -0.25;
    CHECK_THROWS_AS(validate(raw), NegativeEntryError);
  }
  SUBCASE("too small") {
    CHECK_THROWS_AS(validate({{0, 1}, {1, 0}}), TooSmallError);
  }
}

TEST_CASE("csv parsing") {
  SUBCASE("worked example with header") {
    const std::string text =
        "a,b,c,d,e\n"
        "0,3,5,4,7\n"
        "3,0,10,3,7\n"
        "5,10,0,6,5\n"
        "4,3,6,0,2\n"
        "7,7,5,2,0\n";
    const DissimilarityMap d = parse_matrix(text, MatrixFormat::Csv);
    const DissimilarityMap want = testutil::example_d();
    CHECK_EQ(d.upper(), want.upper());
    CHECK_EQ(d.labels(), want.labels());
  }
  SUBCASE("headerless input gets default labels") {
    const auto d = parse_matrix("0,1,2\n1,0,3\n2,3,0\n", MatrixFormat::Csv);
    CHECK_EQ(d.labels(), std::vector<std::string>{"1", "2", "3"});
  }
  SUBCASE("ragged row") {
    const std::string text =
        "0,1,2,3,4\n"
        "1,0,5,6,7\n"
        "2,5,0,8,9\n"
        "3,6,8,0\n"
        "4,7,9,1,0\n";
    CHECK_THROWS_AS(parse_matrix(text, MatrixFormat::Csv), ParseError);
  }
  SUBCASE("row count mismatch") {
    CHECK_THROWS_AS(parse_matrix("0,1,2\n1,0,3\n", MatrixFormat::Csv),
                    ParseError);
  }
  SUBCASE("garbage cell reports line and column") {
    try {
      parse_matrix("0,1,2\n1,0,x\n2,2,0\n", MatrixFormat::Csv);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK_EQ(e.line(), 2);
      CHECK_EQ(e.column(), 5);
    }
  }
  SUBCASE("empty input") {
    CHECK_THROWS_AS(parse_matrix("", MatrixFormat::Csv), ParseError);
  }
}

TEST_CASE("phylip parsing") {
  SUBCASE("square matrix with names") {
    const std::string text =
        "4\n"
        "one 0 1 2 3\n"
        "two 1 0 4 5\n"
        "three 2 4 0 6\n"
        "four 3 5 6 0\n";
    const auto d = parse_matrix(text, MatrixFormat::PhylipSquare);
    CHECK_EQ(d.size(), 4);
    CHECK_EQ(d(0, 3), 3.0);
    CHECK_EQ(d.label(2), "three");
  }
  SUBCASE("two taxa is below the minimum") {
    CHECK_THROWS_AS(
        parse_matrix("2\na 0 1\nb 1 0", MatrixFormat::PhylipSquare),
        TooSmallError);
  }
  SUBCASE("value count mismatch") {
    CHECK_THROWS_AS(
        parse_matrix("3\na 0 1\nb 1 0 2\nc 2 2 0", MatrixFormat::PhylipSquare),
        ParseError);
  }
}

TEST_CASE("csv round trip is bit exact") {
  SUBCASE("decimal literals") {
    const std::string text =
        "x,y,z\n"
        "0,0.125,3.141592653589793\n"
        "0.125,0,1e-12\n"
        "3.141592653589793,1e-12,0\n";
    const auto d = parse_matrix(text, MatrixFormat::Csv);
    const auto again = parse_matrix(serialize_csv(d), MatrixFormat::Csv);
    CHECK_EQ(d.upper(), again.upper());
    CHECK_EQ(d.labels(), again.labels());
  }
  SUBCASE("sampled full-precision values") {
    RandomStream rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 4 + trial % 4;
      DissimilarityMap base = sample_uniform(n, rng);
      DissimilarityMap named(n, base.upper(), testutil::make_names(n, 1));
      const auto again = parse_matrix(serialize_csv(named), MatrixFormat::Csv);
      CHECK_EQ(named.upper(), again.upper());
      CHECK_EQ(named.labels(), again.labels());
    }
  }
  SUBCASE("default numeric labels survive a round trip") {
    RandomStream rng(7);
    DissimilarityMap d = sample_uniform(5, rng);
    const auto again = parse_matrix(serialize_csv(d), MatrixFormat::Csv);
    CHECK_EQ(d.upper(), again.upper());
    CHECK_EQ(d.labels(), again.labels());
  }
}

TEST_CASE("permuting taxa commutes with validation") {
  RandomStream rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + trial % 4;
    const DissimilarityMap d = sample_uniform(n, rng);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.next_below(i + 1)]);

    std::vector<std::vector<double>> raw(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) raw[i][j] = d(perm[i], perm[j]);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = d.label(perm[i]);

    const DissimilarityMap validated_then_permuted = d.permuted(perm);
    const DissimilarityMap permuted_then_validated = validate(raw, labels);
    CHECK_EQ(validated_then_permuted.upper(), permuted_then_validated.upper());
    CHECK_EQ(validated_then_permuted.labels(),
             permuted_then_validated.labels());
  }
}
