#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <tradeoff/io.hpp>

#include "oracles.hpp"

using namespace tradeoff;
using io::json;

TEST(Io, ScalarsFromJson) {
  EXPECT_EQ(io::scalar_from_json<Rational>(json("3/8"), 0), Rational(3, 8));
  EXPECT_EQ(io::scalar_from_json<Rational>(json(-4), 0), Rational(-4));
  EXPECT_EQ(io::scalar_from_json<Rational>(json::parse("0.1"), 0), Rational(1, 10));
  EXPECT_DOUBLE_EQ(io::scalar_from_json<Approx>(json("1/4"), 1e-9).value(), 0.25);
  EXPECT_THROW(io::scalar_from_json<Rational>(json(true), 0), input_error);
  EXPECT_THROW(io::scalar_from_json<Rational>(json("half"), 0), input_error);
}

TEST(Io, TableRoundTripIsExact) {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 30; ++trial) {
    const auto t = oracle::random_table(rng, 1 + rng() % 20, 1 + rng() % 3);
    const auto back = io::table_from_json<Rational>(json::parse(io::table_to_json(t).dump()));
    ASSERT_EQ(back.size(), t.size());
    ASSERT_EQ(back.regularizers(), t.regularizers());
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_EQ(back[i].id, t[i].id);
      EXPECT_EQ(back.f(i), t.f(i));
      EXPECT_EQ(back[i].g, t[i].g);
    }
  }
}

TEST(Io, InfiniteObjectiveSurvivesRoundTrip) {
  const auto doc = json::parse(R"({"m":1,"candidates":[{"id":"a","f":"+inf","g":[1]},{"id":"b","f":2,"g":[0]}]})");
  const auto t = io::table_from_json<Rational>(doc);
  EXPECT_FALSE(t.finite(0));
  EXPECT_EQ(io::table_to_json(t)["candidates"][0]["f"], "+inf");
}

TEST(Io, MalformedTablesAreInputErrors) {
  for (const char* text : {R"([1,2])", R"({"candidates":[]})", R"({"m":0,"candidates":[]})",
                           R"({"m":1,"candidates":{}})", R"({"m":1,"candidates":[{"g":[1]}]})",
                           R"({"m":1,"candidates":[{"f":1,"g":[1,2]}]})",
                           R"({"m":1,"candidates":[{"f":"x","g":[1]}]})",
                           R"({"m":1,"candidates":[{"f":1,"g":"1"}]})"})
    EXPECT_THROW(io::table_from_json<Rational>(json::parse(text)), input_error) << text;
  EXPECT_THROW(io::table_backend(json::parse(R"({"backend":"float"})")), input_error);
}

TEST(Io, ReadsFilesAndReportsParseErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "tradeoff_io_test";
  std::filesystem::create_directories(dir);
  const auto bad = dir / "bad.json";
  std::ofstream(bad) << "{ not json";
  EXPECT_THROW(io::read_json_file(bad.string()), input_error);
  EXPECT_THROW(io::read_json_file((dir / "missing.json").string()), input_error);
  const auto t = io::table_from_json<Rational>(io::read_json_file(TRADEOFF_DATA_DIR "/single.json"));
  EXPECT_EQ(t.size(), 1u);
  std::filesystem::remove_all(dir);
}

TEST(Io, RayFileLoads) {
  const auto ray = io::ray_from_json<Rational>(io::read_json_file(TRADEOFF_DATA_DIR "/ray_remark12.json"));
  EXPECT_EQ(ray.slopes.back(), Rational(7, 8));
  EXPECT_THROW(io::ray_from_json<Rational>(json::parse(R"({"breakpoints":[0]})")), input_error);
}

TEST(Io, ExceptionalCsvLayout) {
  const auto t = remark12_fixture(2);
  const auto csv = io::exceptional_csv(exceptional_set(t, build_envelope(t)));
  EXPECT_EQ(csv, "alpha,g_plus,g_minus,spread\n1/2,0,-1,1\n3/4,-1,-2,1\n");
  io::ScalarFormat fmt{3};
  EXPECT_EQ(io::exceptional_csv(exceptional_set(t, build_envelope(t)), fmt),
            "alpha,g_plus,g_minus,spread\n0.500,0.000,-1.000,1.000\n0.750,-1.000,-2.000,1.000\n");
}
