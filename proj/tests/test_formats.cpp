#include <gtest/gtest.h>

#include "test_support.hpp"
#include "veds/errors.hpp"
#include "veds/formats.hpp"

namespace veds {
namespace {

TEST(GraphText, ParsesCommentsAndYorder) {
  const auto f = parse_graph_text("# demo\n\ngraph 3 3\nedge 1 1  # first\nedge 1 2\nedge 2 2\nedge 3 2\nedge 3 3\nyorder 1 2 3\n");
  EXPECT_EQ(f.graph, testing::counterexample());
  EXPECT_EQ(f.yorder, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(GraphText, CanonicalRoundTrip) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = testing::random_instance(seed, 5, 6, 0.4);
    const std::string text = write_graph_text(inst.graph, inst.yperm);
    const auto back = parse_graph_text(text);
    EXPECT_EQ(back.graph, inst.graph);
    EXPECT_EQ(back.yorder, inst.yperm);
    EXPECT_EQ(write_graph_text(back.graph, back.yorder), text);
  }
}

TEST(GraphText, Errors) {
  EXPECT_THROW(parse_graph_text(""), InputError);
  EXPECT_THROW(parse_graph_text("edge 1 1\n"), InputError);
  EXPECT_THROW(parse_graph_text("graph 2 2\nedge 3 1\n"), InputError);
  EXPECT_THROW(parse_graph_text("graph 2 2\nedge 1\n"), InputError);
  EXPECT_THROW(parse_graph_text("graph 2 2\nedge a 1\n"), InputError);
  EXPECT_THROW(parse_graph_text("graph 2 2\nyorder 1\n"), InputError);
  EXPECT_THROW(parse_graph_text("graph 2 2\nfoo\n"), InputError);
  try {
    parse_graph_text("graph 2 2\nedge 1 1\nedge 5 1\n");
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(SetSystemText, RoundTrip) {
  const auto ss = parse_set_system_text("universe 3\nset 1: 1 2\nset 2 : 3 2\nset 3: 3\n");
  EXPECT_EQ(ss, make_set_system(3, {{1, 2}, {2, 3}, {3}}));
  EXPECT_EQ(parse_set_system_text(write_set_system_text(ss)), ss);
}

TEST(SetSystemText, Errors) {
  EXPECT_THROW(parse_set_system_text("set 1: 1\n"), InputError);
  EXPECT_THROW(parse_set_system_text("universe 2\nset 2: 1\n"), InputError);   // set 1 missing
  EXPECT_THROW(parse_set_system_text("universe 2\nset 1: 3\n"), InputError);   // out of range
  EXPECT_THROW(parse_set_system_text("universe 2\nset 1:\n"), InputError);     // empty set
  EXPECT_THROW(parse_set_system_text("universe 2\nset 1 1\n"), InputError);    // no colon
  EXPECT_THROW(parse_set_system_text("universe 2\nset 1: 1\nset 1: 2\n"), InputError);
}

TEST(CertificateText, RoundTrip) {
  const auto star = make_star_certificate(5, 3);
  EXPECT_EQ(write_certificate_text(star), "tree star center=x3\n");
  EXPECT_EQ(parse_certificate_text(write_certificate_text(star), 5), star);
  const auto comb = make_comb_certificate({4, 5, 6}, {1, 2, 7});
  EXPECT_EQ(write_certificate_text(comb), "tree comb backbone=x4,x5,x6 teeth=x1,x2,x7\n");
  EXPECT_EQ(parse_certificate_text(write_certificate_text(comb), 7), comb);
  EXPECT_THROW(parse_certificate_text("tree ring center=x1", 3), InputError);
  EXPECT_THROW(parse_certificate_text("tree star center=y1", 3), InputError);
  EXPECT_THROW(parse_certificate_text("tree comb backbone=x1", 3), InputError);
}

TEST(Files, MissingFileIsInputError) {
  EXPECT_THROW(read_text_file("/nonexistent/veds/file.cbg"), InputError);
}

}  // namespace
}  // namespace veds
