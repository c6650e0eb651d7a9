#include <gtest/gtest.h>

#include <set>

#include "likeiper/golden.hpp"

using namespace likeiper;

namespace {

const std::string kData = LIKEIPER_DATA_DIR;

const TableRecompute& recompute() {
  static const TableRecompute rc(load_stieltjes(kData + "/stieltjes.tsv", 50), 50, 15);
  return rc;
}

GoldenTable table(int id) { return load_golden(kData + "/golden/table" + std::to_string(id) + ".tsv"); }

}  // namespace

TEST(Printed, Normalization) {
  EXPECT_EQ(normalize_printed("+ 0.0026"), "0.0026");
  EXPECT_EQ(normalize_printed("0."), "0");
  EXPECT_EQ(normalize_printed(" -1.5 "), "-1.5");
  EXPECT_EQ(printed_decimals("0.0026"), 4);
  EXPECT_EQ(printed_decimals("12"), 0);
}

TEST(Printed, RoundOrTruncate) {
  const BigReal v("0.50526", 30);
  EXPECT_TRUE(printed_agrees(v, "0.5053"));   // rounded
  EXPECT_TRUE(printed_agrees(v, "0.5052"));   // truncated
  EXPECT_FALSE(printed_agrees(v, "0.5054"));
  EXPECT_FALSE(printed_agrees(v, "0.5051"));
  EXPECT_TRUE(printed_agrees(BigReal("-0.00004", 30), "0.0000"));
  EXPECT_TRUE(printed_agrees(BigReal(0L, 30), "0."));
  EXPECT_TRUE(printed_agrees(BigReal("-1.386294361119", 30), "-1.386"));
}

TEST(Printed, ExplicitDecimalsRereadsLiteral) {
  // printed 0.19797 compared at three places: 0.198 or 0.197 on both sides
  EXPECT_TRUE(printed_agrees(BigReal("0.197974", 30), "0.19797", 3));
  EXPECT_FALSE(printed_agrees(BigReal("0.197974", 30), "0.199974", 3));
}

TEST(GoldenParse, Errors) {
  EXPECT_THROW(parse_golden("n\tcolumn\tprinted\texpected_recomputed\treason\n1\tx\t1\t-\t-\n", "g"), ParseError);
  EXPECT_THROW(parse_golden("# table: 1\n1\tx\t1\t-\n", "g"), ParseError);
  EXPECT_THROW(parse_golden("# table: 1\n0\tx\t1\t-\t-\n", "g"), ParseError);
  EXPECT_THROW(parse_golden("# table: 1\n1\tx\t1\t-\t-\n1\tx\t2\t-\t-\n", "g"), ParseError);
  EXPECT_THROW(parse_golden("# table: 9\n1\tx\t1\t-\t-\n", "g"), ParseError);
  EXPECT_THROW(parse_golden("# table: 1\n", "g"), ParseError);
  EXPECT_THROW(load_golden(kData + "/golden/missing.tsv"), ParseError);
  const auto t = parse_golden("# table: 2\n# title: t\n3\torder3\t0.5\t0.6\twhy\n", "g");
  EXPECT_EQ(t.id, 2);
  EXPECT_EQ(t.title, "t");
  ASSERT_NE(t.find(3, "order3"), nullptr);
  EXPECT_EQ(*t.find(3, "order3")->override_value, "0.6");
}

TEST(GoldenTables, ShippedCellCounts) {
  EXPECT_EQ(table(1).cells.size(), 20u);
  EXPECT_EQ(table(2).cells.size(), 19u);
  EXPECT_EQ(table(3).cells.size(), 28u);
  EXPECT_EQ(table(4).cells.size(), 30u);
  EXPECT_EQ(table(5).cells.size(), 64u);
}

TEST(GoldenTables, FirstFourReproduce) {
  for (int id = 1; id <= 4; ++id) {
    const auto rep = verify_golden(table(id), recompute());
    for (const auto& c : rep.cells) {
      EXPECT_TRUE(c.ok) << "table " << id << " n=" << c.cell.n << " " << c.cell.column << " printed " << c.cell.printed
                        << " computed " << c.computed;
      if (c.flagged) {
        EXPECT_FALSE(c.printed_match) << "table " << id << " n=" << c.cell.n;
      }
    }
  }
}

TEST(GoldenTables, TableFiveDriftsFromTwentyOne) {
  const auto rep = verify_golden(table(5), recompute());
  std::set<int> failing;
  for (const auto& c : rep.cells) {
    if (!c.ok) {
      EXPECT_EQ(c.cell.column, "phi1");
      failing.insert(c.cell.n);
    }
  }
  EXPECT_EQ(failing, (std::set<int>{21, 22, 23, 24, 25, 26, 28, 29, 31, 32}));
  EXPECT_EQ(rep.flagged(), 5);
}

TEST(GoldenTables, RecomputeRejectsUnknownCells) {
  EXPECT_THROW(recompute().value(1, 3, "D"), std::out_of_range);
  EXPECT_THROW(recompute().value(2, 2, "order3"), std::out_of_range);
  EXPECT_THROW(recompute().value(3, 16, "C"), std::out_of_range);
  EXPECT_THROW(recompute().value(6, 2, "C"), std::out_of_range);
  EXPECT_THROW(recompute().value(3, 0, "C"), std::out_of_range);
  EXPECT_EQ(recompute().value(4, 1, "E"), recompute().value(4, 1, "F"));
}
