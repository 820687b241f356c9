// Copyright 2026 The sidom Authors.
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


#include "sidom/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <functional>
#include <random>
#include <string>

#include "sidom/error.hpp"
#include "sidom/families.hpp"

namespace sidom {
namespace {

ErrorCode CodeOf(const std::function<void()>& f, std::string* message = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

TEST(IoTest, ParsesCommentsAndBlankLines) {
  Digraph d = parse_digraph(
      "# a triangle\n"
      "\n"
      "n 3\n"
      "0 1   # first arc\n"
      "\t1 2\n"
      "2 0\n");
  EXPECT_EQ(d.order(), 3);
  EXPECT_EQ(d.arc_count(), 3u);
  EXPECT_TRUE(d.has_arc(2, 0));
}

TEST(IoTest, CanonicalFormSortsArcs) {
  Digraph d = parse_digraph("n 3\n2 0\n0 1\n1 2\n");
  EXPECT_EQ(format_digraph(d), "n 3\n0 1\n1 2\n2 0\n");
}

TEST(IoTest, RoundTripIsByteIdentical) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Digraph d = random_strong_digraph(2 + i % 6, rng);
    const std::string text = format_digraph(d);
    EXPECT_EQ(format_digraph(parse_digraph(text)), text);
    EXPECT_EQ(parse_digraph(text), d);
  }
}

TEST(IoTest, ParseErrorsCarryLineNumbers) {
  struct Case {
    const char* text;
    const char* fragment;
  };
  const Case cases[] = {
      {"", "missing header"},
      {"# only\nm 3\n", "line 2: expected header"},
      {"n 0\n", "line 1: vertex count must be positive"},
      {"n x\n", "line 1: expected an integer, got 'x'"},
      {"n 3\n0 1\n0 5\n", "line 3: vertex out of range [0, 3)"},
      {"n 3\n\n1 1\n", "line 3: loop at vertex 1"},
      {"n 3\n0 1\n# again\n0 1\n", "line 4: repeated arc"},
      {"n 3\n0 1 2\n", "line 2: expected 'u v'"},
      {"n 3\n0 -\n", "line 2: expected an integer"},
  };
  for (const Case& c : cases) {
    std::string message;
    EXPECT_EQ(CodeOf([&] { parse_digraph(c.text); }, &message),
              ErrorCode::kParse)
        << c.text;
    EXPECT_NE(message.find(c.fragment), std::string::npos)
        << message << " vs " << c.fragment;
  }
}

TEST(IoTest, PartitionRoundTrip) {
  VertexPartition p = parse_partition("# blocks\n3 0\n\n1 2\n", 4);
  EXPECT_EQ(p.block_count(), 2);
  EXPECT_EQ(p.block_of(0), p.block_of(3));
  EXPECT_EQ(format_partition(p), "0 3\n1 2\n");
  EXPECT_EQ(format_partition(parse_partition(format_partition(p), 4)),
            format_partition(p));
}

TEST(IoTest, PartitionErrors) {
  std::string message;
  EXPECT_EQ(CodeOf([] { parse_partition("0 1\n1 2\n", 3); }, &message),
            ErrorCode::kParse);
  EXPECT_NE(message.find("line 2: vertex 1 appears twice"), std::string::npos);
  EXPECT_EQ(CodeOf([] { parse_partition("0 4\n", 3); }, &message),
            ErrorCode::kParse);
  EXPECT_NE(message.find("line 1: vertex 4 out of range"), std::string::npos);
  EXPECT_EQ(CodeOf([] { parse_partition("0 1\n", 3); }, &message),
            ErrorCode::kParse);
  EXPECT_NE(message.find("2"), std::string::npos);
}

TEST(IoTest, ArcPartitionListing) {
  Digraph d = complete_digraph(2);
  ArcPartition q = ArcPartition::from_assignment({0, 0});
  EXPECT_EQ(format_arc_partition(d, q), "0,1 1,0\n");
}

TEST(IoTest, DotUsesLabels) {
  Digraph d = pair_critical_family(3).digraph;
  const std::string dot = to_dot(d, "P");
  EXPECT_EQ(dot.rfind("digraph P {", 0), 0u);
  EXPECT_NE(dot.find("[label=\"u1\"]"), std::string::npos);
  EXPECT_NE(dot.find("3 [label=\"v1\"]"), std::string::npos);
  EXPECT_NE(dot.find("0 -> 1;"), std::string::npos);
}

TEST(IoTest, FileRoundTrip) {
  const auto path =
      (std::filesystem::temp_directory_path() / "sidom_io_test.txt").string();
  write_text_file(path, "n 2\n0 1\n1 0\n");
  EXPECT_EQ(format_digraph(parse_digraph(read_text_file(path))),
            "n 2\n0 1\n1 0\n");
  std::filesystem::remove(path);
  EXPECT_EQ(CodeOf([&] { read_text_file(path); }), ErrorCode::kParse);
}

}  // namespace
}  // namespace sidom
