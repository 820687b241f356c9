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

#include "sidom/laws.hpp"

#include <gtest/gtest.h>

#include "json.hpp"
#include "sidom/families.hpp"

namespace sidom {
namespace {

LawStatus StatusOf(const LawReport& r, const std::string& id) {
  const LawEntry* e = r.find(id);
  EXPECT_NE(e, nullptr) << id;
  return e ? e->status : LawStatus::kViolated;
}

long ValueOf(const LawEntry& e, const std::string& name) {
  for (const auto& [key, value] : e.values) {
    if (key == name) return value;
  }
  ADD_FAILURE() << "no value " << name << " in " << e.id;
  return -1;
}

TEST(LawsTest, CompleteDigraphOfOrderFour) {
  auto r = check_all(complete_digraph(4));
  ASSERT_EQ(r.entries.size(), 16u);
  EXPECT_EQ(r.violations(), 0);
  for (int i = 0; i < 16; ++i) {
    EXPECT_EQ(r.entries[i].id, "L" + std::to_string(i + 1));
  }
  EXPECT_EQ(StatusOf(r, "L10"), LawStatus::kHolds);
  EXPECT_NE(r.find("L10")->details.find("complete of order 4"), std::string::npos);
  EXPECT_EQ(StatusOf(r, "L3"), LawStatus::kNotApplicable);  // semicomplete
  EXPECT_EQ(StatusOf(r, "L5"), LawStatus::kNotApplicable);
  EXPECT_EQ(StatusOf(r, "L6"), LawStatus::kHolds);
  EXPECT_EQ(ValueOf(*r.find("L6"), "gamma_cl"), 1);
}

TEST(LawsTest, FiveCycle) {
  auto r = check_all(directed_cycle(5));
  EXPECT_EQ(r.violations(), 0);
  for (const char* id : {"L1", "L2", "L3", "L4", "L5", "L9", "L13", "L14", "L16"}) {
    EXPECT_EQ(StatusOf(r, id), LawStatus::kHolds) << id;
  }
  EXPECT_EQ(StatusOf(r, "L8"), LawStatus::kNotApplicable);
  EXPECT_EQ(StatusOf(r, "L7"), LawStatus::kNotApplicable);
}

TEST(LawsTest, CompleteDigraphOfOrderTwoSideNote) {
  auto r = check_all(complete_digraph(2));
  const LawEntry* l13 = r.find("L13");
  ASSERT_NE(l13, nullptr);
  EXPECT_EQ(l13->status, LawStatus::kNotApplicable);
  EXPECT_EQ(ValueOf(*l13, "d_s-(L(D))"), 2);
  EXPECT_EQ(ValueOf(*l13, "Lambda"), 1);
  EXPECT_NE(l13->note.find("d_s-(L(D)) = 2, Lambda(D) = 1"), std::string::npos);
  const LawEntry* l15 = r.find("L15");
  ASSERT_NE(l15, nullptr);
  EXPECT_EQ(l15->status, LawStatus::kViolated);
  EXPECT_EQ(ValueOf(*l15, "d_s-(L(D))"), 2);
  EXPECT_EQ(ValueOf(*l15, "d_s-(Q(D))"), 1);
  EXPECT_EQ(r.violations(), 1);
}

TEST(LawsTest, MiddleBoundHoldsFromOrderThree) {
  for (int n = 3; n <= 4; ++n) {
    EXPECT_EQ(StatusOf(check_all(complete_digraph(n)), "L15"), LawStatus::kHolds);
    EXPECT_EQ(StatusOf(check_all(directed_cycle(n)), "L15"), LawStatus::kHolds);
  }
}

TEST(LawsTest, NonStrongDigraphGetsSingleEntry) {
  auto r = check_all(Digraph::create(3, {{0, 1}, {1, 2}}));
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].id, "L1");
  EXPECT_EQ(r.entries[0].status, LawStatus::kHolds);
  EXPECT_EQ(ValueOf(r.entries[0], "strong"), 0);
}

TEST(LawsTest, PlanarValueThree) {
  auto r = check_all(complete_digraph(3));
  EXPECT_EQ(StatusOf(r, "L11"), LawStatus::kHolds);
  EXPECT_NE(r.find("L11")->note.find("symmetric"), std::string::npos);
}

TEST(LawsTest, OrderCapMakesSolverLawsInapplicable) {
  LawOptions options;
  options.max_order = 4;
  auto r = check_all(directed_cycle(5), options);
  EXPECT_EQ(r.violations(), 0);
  EXPECT_EQ(StatusOf(r, "L4"), LawStatus::kNotApplicable);
  EXPECT_NE(r.find("L4")->details.find("exceeds the cap"), std::string::npos);
}

TEST(LawsTest, ArcCap) {
  LawOptions options;
  options.max_arcs = 5;
  auto r = check_all(complete_digraph(3), options);
  EXPECT_EQ(StatusOf(r, "L13"), LawStatus::kNotApplicable);
  EXPECT_EQ(StatusOf(r, "L15"), LawStatus::kNotApplicable);
}

TEST(LawsTest, SuppliedSecondFactor) {
  LawOptions options;
  options.second_factor = directed_cycle(3);
  auto r = check_all(complete_digraph(3), options);
  EXPECT_EQ(StatusOf(r, "L12"), LawStatus::kHolds);
  EXPECT_EQ(ValueOf(*r.find("L12"), "d_s-(H)"), 1);
  EXPECT_GE(ValueOf(*r.find("L12"), "d_s-(DxH)"), 3);
}

TEST(LawsTest, PairCriticalFamily) {
  auto r = check_all(pair_critical_family(3).digraph);
  EXPECT_EQ(r.violations(), 0);
  EXPECT_EQ(StatusOf(r, "L8"), LawStatus::kHolds);
}

TEST(LawsTest, JsonReport) {
  auto r = check_all(directed_cycle(3));
  auto doc = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(doc["digraph"]["order"], 3);
  EXPECT_EQ(doc["digraph"]["arcs"].size(), 3u);
  EXPECT_EQ(doc["entries"].size(), 16u);
  EXPECT_EQ(doc["entries"][0]["id"], "L1");
  EXPECT_EQ(doc["entries"][0]["status"], "holds");
  EXPECT_EQ(doc["summary"]["violated"], 0);
}

TEST(LawsTest, TextReport) {
  auto text = check_all(directed_cycle(3)).to_text();
  EXPECT_NE(text.find("L13 holds  line digraph identity"), std::string::npos);
  EXPECT_NE(text.find("summary: "), std::string::npos);
  EXPECT_NE(text.find(" 0 violated"), std::string::npos);
}

}  // namespace
}  // namespace sidom
