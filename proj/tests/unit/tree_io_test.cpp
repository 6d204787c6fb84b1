#include <gtest/gtest.h>

#include <sstream>

#include "arbor/error.hpp"
#include "arbor/families.hpp"
#include "arbor/random.hpp"
#include "arbor/tree_io.hpp"

using namespace arbor;

TEST(TreeIo, EdgeListWithCommentsAndCommas) {
  const Tree t = parse_tree("# path\n4\n1 2\n\n2,3\n  3 4\n");
  EXPECT_EQ(t, path_tree(4));
}

TEST(TreeIo, PruferLine) {
  EXPECT_EQ(parse_tree("P: 1 1"), star_tree(4));
  EXPECT_EQ(parse_tree("P:"), path_tree(2));
  EXPECT_EQ(parse_tree("1\n").order(), 1);
}

TEST(TreeIo, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Tree t = sample_labeled_tree(50, seed);
    EXPECT_EQ(parse_tree(format_tree(t)), t);
    EXPECT_EQ(parse_tree(format_prufer_line(t)), t);
  }
  EXPECT_EQ(format_prufer_line(path_tree(1)), "1");
  EXPECT_EQ(parse_tree(format_prufer_line(path_tree(1))), path_tree(1));
}

TEST(TreeIo, WriteFormat) {
  EXPECT_EQ(format_tree(path_tree(3)), "3\n1 2\n2 3\n");
  EXPECT_EQ(format_prufer_line(path_tree(3)), "P: 2");
}

TEST(TreeIo, ParseErrors) {
  auto code_of = [](std::string_view text) {
    try {
      parse_tree(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvariantViolation;
  };
  EXPECT_EQ(code_of(""), ErrorCode::kParse);
  EXPECT_EQ(code_of("3\n1 x\n"), ErrorCode::kParse);
  EXPECT_EQ(code_of("3 4\n"), ErrorCode::kParse);
  EXPECT_EQ(code_of("3\n1 2 3\n"), ErrorCode::kParse);
  EXPECT_EQ(code_of("Q: 1"), ErrorCode::kParse);
  EXPECT_EQ(code_of("3\n1 2\n2 1\n"), ErrorCode::kNotATree);
  EXPECT_EQ(code_of("P: 9"), ErrorCode::kBadEntry);
}
