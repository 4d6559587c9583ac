#include <gtest/gtest.h>

#include "abeldense/error.hpp"
#include "abeldense/tables.hpp"
#include "oracles.hpp"

using namespace abeldense;

TEST(Tables, CountsFromDimensions) {
  for (GroupClass c : all_group_classes())
    for (std::size_t n = 1; n <= 12; ++n) {
      if (!size_supported(c, n)) {
        EXPECT_THROW(m_of_G(c, n), InputError);
        continue;
      }
      const GroupCount g = m_of_G(c, n);
      EXPECT_EQ(g.m, 1 + g.dim_v - g.dim_t);
    }
}

TEST(Tables, Examples) {
  GroupCount g = m_of_G(GroupClass::gl_complex, 3);
  EXPECT_EQ(g.m, 4u);
  EXPECT_EQ(g.dim_t, 3u);
  EXPECT_EQ(m_of_G(GroupClass::gl_real_even, 4).m, 3u);
  EXPECT_EQ(m_of_G(GroupClass::toeplitz_complex, 2).m, 4u);
  EXPECT_EQ(m_of_G(GroupClass::gl_real_odd, 3).m, 3u);
  EXPECT_THROW(m_of_G(GroupClass::gl_real_even, 3), InputError);
}

TEST(Tables, TableOneCommutingRow) {
  const auto cells = compute_table(1, 2, 6);
  std::vector<std::size_t> got;
  for (const auto& c : cells)
    if (c.label == "Commuting") got.push_back(*c.value);
  EXPECT_EQ(got, (std::vector<std::size_t>{2, 3, 3, 4, 4}));
}

TEST(Tables, TableTwoAtThree) {
  const auto cells = compute_table(2, 3, 3);
  ASSERT_EQ(cells.size(), 4u);
  EXPECT_EQ(*cells[0].value, 4u);
  EXPECT_EQ(*cells[1].value, 4u);
  EXPECT_EQ(*cells[2].value, 5u);
  EXPECT_EQ(*cells[3].value, 6u);
}

TEST(Tables, ParseNames) {
  for (GroupClass c : all_group_classes()) EXPECT_EQ(parse_group_class(to_string(c)), c);
  EXPECT_FALSE(parse_group_class("nope"));
  EXPECT_THROW(table_rows(4), InputError);
}
