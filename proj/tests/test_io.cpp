#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "test_helpers.hpp"

using namespace fdisc;
using helpers::expect_near_vec;
using helpers::vec;

namespace {

class IoTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("fdisc_io_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }

  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& contents) {
    const std::string p = path(name);
    std::ofstream out(p, std::ios::binary);
    out << contents;
    return p;
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(IoTest, ReadsOneValuePerLine) {
  const std::string p = write("plain.txt", "0.5\n0.25\n0.25\n0\n");
  expect_near_vec(read_values(p), vec({0.5, 0.25, 0.25, 0}), 0.0);
}

TEST_F(IoTest, SkipsCommentsAndBlankLines) {
  const std::string p = write("comments.txt",
                              "# a measure\n\n  0.5\n\t0.5  \n   # trailing comment\n0\n+0\n");
  expect_near_vec(read_values(p), vec({0.5, 0.5, 0, 0}), 0.0);
}

TEST_F(IoTest, HandlesWindowsLineEndings) {
  const std::string p = write("crlf.txt", "1.0\r\n0.0\r\n");
  expect_near_vec(read_values(p), vec({1.0, 0.0}), 0.0);
}

TEST_F(IoTest, ReadsJsonArrays) {
  const std::string p = write("measure.json", "[0.25, 0.25, 0.25, 0.25]");
  expect_near_vec(read_values(p), vec({0.25, 0.25, 0.25, 0.25}), 0.0);
  const std::string q = write("pretty.json", "  [\n    1,\n    0,\n    -1,\n    0\n  ]\n");
  expect_near_vec(read_values(q), vec({1, 0, -1, 0}), 0.0);
}

TEST_F(IoTest, ParsesScientificNotation) {
  const std::string p = write("sci.txt", "1e-3\n9.99e-1\n1e-4\n0\n");
  expect_near_vec(read_values(p), vec({1e-3, 0.999, 1e-4, 0}), 0.0);
}

TEST_F(IoTest, MissingFileRaisesIoError) {
  try {
    read_values(path("nonexistent.txt"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IoError);
    EXPECT_NE(std::string(e.what()).find("cannot open"), std::string::npos);
  }
}

TEST_F(IoTest, EmptyFileRaisesParseError) {
  const std::string p = write("empty.txt", "");
  try {
    read_values(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
  }
  const std::string q = write("only_comments.txt", "# nothing\n# here\n");
  try {
    read_values(q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
  }
}

TEST_F(IoTest, BadTokenReportsLineNumber) {
  const std::string p = write("bad.txt", "0.5\noops\n0.5\n");
  try {
    read_values(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    const std::string what = e.what();
    EXPECT_NE(what.find("line 2"), std::string::npos) << what;
    EXPECT_NE(what.find("oops"), std::string::npos) << what;
  }
}

TEST_F(IoTest, MalformedJsonRaisesParseError) {
  const std::string p = write("broken.json", "[0.5, 0.5,");
  try {
    read_values(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
  }
  const std::string q = write("strings.json", "[\"a\", \"b\"]");
  try {
    read_values(q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
  }
}

TEST_F(IoTest, ReadProbabilityAppliesValidation) {
  const std::string good = write("good.txt", "0.5\n0.5\n0\n0\n");
  EXPECT_NEAR(read_probability(good).weights().sum(), 1.0, 1e-15);
  const std::string heavy = write("heavy.txt", "0.9\n0.9\n0\n0\n");
  try {
    read_probability(heavy);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MassMismatch);
  }
}

TEST_F(IoTest, ReadNullSumAppliesValidation) {
  const std::string good = write("delta.txt", "0.5\n0.3\n-0.2\n-0.6\n");
  EXPECT_DOUBLE_EQ(read_null_sum(good).values().sum(), 0.0);
  const std::string bad = write("skewed.txt", "0.5\n0.5\n0\n0\n");
  try {
    read_null_sum(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonNullSum);
  }
}

TEST_F(IoTest, FormatDoubleRoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, 2.0 / 64.0, 1e-300, 123456.789, 0.0}) {
    const std::string s = format_double(x);
    EXPECT_EQ(std::stod(s), x) << s;
  }
}

TEST_F(IoTest, WriteThenReadRoundTrips) {
  const Vector original = random_probability(GridSize(8), 77).weights();
  std::string contents;
  for (Index i = 0; i < original.size(); ++i) contents += format_double(original[i]) + "\n";
  const std::string p = path("roundtrip.txt");
  write_text_file(p, contents);
  expect_near_vec(read_values(p), original, 0.0);
}

TEST_F(IoTest, WriteToBadPathRaisesIoError) {
  try {
    write_text_file((dir_ / "missing_subdir" / "file.txt").string(), "x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IoError);
  }
}
