// Copyright 2026 The Framescore Authors.
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

#include "framescore/labels.h"

#include <stdexcept>

#include "gtest/gtest.h"

namespace framescore {
namespace {

TEST(NormalizeLabelTest, LowercasesAndKeepsUnderscores) {
  EXPECT_EQ(NormalizeLabel("Purpose_of_Recipient"), "purpose_of_recipient");
  EXPECT_EQ(NormalizeLabel("Purpose_of_Recipient"), NormalizeLabel("Purpose_of_recipient"));
}

TEST(NormalizeLabelTest, DefaultAliases) {
  EXPECT_EQ(NormalizeLabel("Create_entity"), "created_entity");
  EXPECT_EQ(NormalizeLabel("Cause_of_strength"), "cause_change_of_strength");
  EXPECT_EQ(NormalizeLabel("Neding"), "needing");
  EXPECT_EQ(NormalizeLabel("Created_entity"), "created_entity");
}

TEST(NormalizeLabelTest, CollapsesSeparators) {
  EXPECT_EQ(NormalizeLabel("  Education   teaching "), "education_teaching");
  EXPECT_EQ(NormalizeLabel("Education__teaching"), "education_teaching");
  EXPECT_EQ(NormalizeLabel("Education _\tteaching"), "education_teaching");
}

TEST(NormalizeLabelTest, NoAliasesWithEmptyTable) {
  AliasTable none;
  EXPECT_EQ(NormalizeLabel("Create_entity", none), "create_entity");
}

TEST(NormalizeLabelTest, Idempotent) {
  for (const char *raw : {"Needing", " Bringing ", "CAUSE of STRENGTH", "Neding", "a__b  c"}) {
    const std::string once = NormalizeLabel(raw);
    EXPECT_EQ(NormalizeLabel(once), once) << raw;
  }
}

TEST(NormalizeLabelTest, BlankLabelIsAnError) {
  EXPECT_THROW(NormalizeLabel(""), std::invalid_argument);
  EXPECT_THROW(NormalizeLabel("  \t "), std::invalid_argument);
}

TEST(NormalizeLabelTest, NonAsciiBytesPassThrough) {
  EXPECT_EQ(NormalizeLabel("Ünit"), "Ünit");
}

TEST(AliasTableTest, ChainsResolve) {
  AliasTable t;
  t.Add("A", "b");
  t.Add("b", "C c");
  EXPECT_EQ(NormalizeLabel("a", t), "c_c");
}

TEST(AliasTableTest, RejectsCycles) {
  AliasTable t;
  t.Add("a", "b");
  EXPECT_THROW(t.Add("b", "a"), std::invalid_argument);
  t.Add("c", "C");  // self-alias is a no-op
  EXPECT_EQ(NormalizeLabel("c", t), "c");
  EXPECT_THROW(t.Add("", "x"), std::invalid_argument);
}

}  // namespace
}  // namespace framescore
