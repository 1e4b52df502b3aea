#include <gtest/gtest.h>

#include <sstream>

#include "satfrac/io.hpp"
#include "satfrac/saturation.hpp"
#include "support.hpp"

using namespace satfrac;
using testing_support::fraction;

TEST(ParseFraction, GridWithHeader) {
  Fraction f = parse_fraction("3 3\n111\n100\n100\n");
  EXPECT_EQ(f, fraction(3, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}}));
}

TEST(ParseFraction, GridWithoutHeaderAndCrlf) {
  EXPECT_EQ(parse_fraction("1100\r\n0110\r\n0011\r\n"), testing_support::example_fraction());
  EXPECT_EQ(parse_fraction("\n\n  1100\n  0110\n  0011\n\n"), testing_support::example_fraction());
}

TEST(ParseFraction, Json) {
  Fraction f = parse_fraction(R"({"I":3,"J":4,"points":[[1,1],[1,2],[2,2],[2,3],[3,3],[3,4]]})");
  EXPECT_EQ(f, testing_support::example_fraction());
}

TEST(ParseFraction, BadCharacterNamesTheCell) {
  try {
    parse_fraction("3 3\n111\n120\n100\n", "in.txt");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 2);
    EXPECT_NE(std::string(e.what()).find("cell (2,2)"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("in.txt:3:2"), std::string::npos);
  }
}

TEST(ParseFraction, GridErrors) {
  EXPECT_THROW(parse_fraction("110\n11\n"), ParseError);
  EXPECT_THROW(parse_fraction("3 3\n11\n11\n"), ParseError);
  EXPECT_THROW(parse_fraction(""), ParseError);
  EXPECT_THROW(parse_fraction("1\n1\n"), ParseError);
  EXPECT_THROW(parse_fraction("11\n11\n\n11\n11\n"), ParseError);
  try {
    parse_fraction("110\n11\n");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(ParseFraction, JsonErrors) {
  EXPECT_THROW(parse_fraction(R"({"I":3,"J":4,"points":[[4,1]]})"), ParseError);
  EXPECT_THROW(parse_fraction(R"({"I":3,"J":4,"points":[[1,1],[1,1]]})"), ParseError);
  EXPECT_THROW(parse_fraction(R"({"I":3,"points":[]})"), ParseError);
  EXPECT_THROW(parse_fraction(R"({"I":1,"J":4,"points":[]})"), ParseError);
  EXPECT_THROW(parse_fraction(R"({"I":3,"J":4,"points":[[1]]})"), ParseError);
  try {
    parse_fraction("{\"I\":3,\n\"J\":4,,}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 0);
  }
}

TEST(Format, GridAndJson) {
  const Fraction f = testing_support::example_fraction();
  EXPECT_EQ(format_grid(f), "3 4\n1100\n0110\n0011\n");
  EXPECT_EQ(format_json(f), R"({"I":3,"J":4,"points":[[1,1],[1,2],[2,2],[2,3],[3,3],[3,4]]})");
}

TEST(Records, StreamRoundTrip) {
  auto all = enumerate_saturated(DesignSize(3, 3));
  for (RecordFormat fmt : {RecordFormat::grid, RecordFormat::json}) {
    std::ostringstream out;
    for (const Fraction& f : all) write_record(out, f, fmt);
    EXPECT_EQ(parse_fractions(out.str()), all);
  }
}

TEST(Records, EmptyFractionRoundTripsAsJson) {
  const Fraction empty = Fraction::empty(DesignSize(2, 3));
  EXPECT_EQ(parse_fraction(format_json(empty)), empty);
  EXPECT_EQ(parse_fraction(format_grid(empty)), empty);
}

TEST(LevelList, Parses) {
  EXPECT_EQ(parse_level_list("3,1,2"), (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(parse_level_list("7"), (std::vector<int>{7}));
  EXPECT_THROW(parse_level_list(""), ParseError);
  EXPECT_THROW(parse_level_list("3,,1"), ParseError);
  EXPECT_THROW(parse_level_list("3,a"), ParseError);
  EXPECT_THROW(parse_level_list("3,1,"), ParseError);
}
