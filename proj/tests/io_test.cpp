#include <gtest/gtest.h>

#include <random>

#include "tuza/generators.hpp"
#include "tuza/io.hpp"

namespace tuza {
namespace {

TEST(Parse, Examples) {
  EXPECT_EQ(parse_graph("p 3\ne 0 1 1\ne 1 2 1\ne 0 2 1"), complete_graph(3));
  auto g = parse_graph("p 2\ne 0 1 2");
  ASSERT_EQ(g.edge_count(), 1);
  EXPECT_EQ(g.weight(0), 2);
}

TEST(Parse, CommentsBlankLinesAndDuplicates) {
  auto g = parse_graph("# header\n\np 3   # three\ne 1 0 1\n  \ne 0 1 2\ne 1 2 0\n");
  EXPECT_EQ(g, Multigraph(3, {{0, 1, 3}, {1, 2, 0}}));
}

int error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(Parse, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("p 2\ne 0 5 1"), 2);
  EXPECT_EQ(error_line("p 2\n\ne 0 1 -1"), 3);
  EXPECT_EQ(error_line("p 2\ne 0 1"), 2);
  EXPECT_EQ(error_line("p 2\ne 0 x 1"), 2);
  EXPECT_EQ(error_line("p 2\ne 1 1 1"), 2);
  EXPECT_EQ(error_line("e 0 1 1\np 2"), 1);
  EXPECT_EQ(error_line("p 2\np 3"), 2);
  EXPECT_EQ(error_line("q 2"), 1);
  EXPECT_EQ(error_line("# nothing"), 0);
  EXPECT_THROW(parse_graph("p 2\ne 0 5 1"), GraphError);
}

TEST(Emit, RoundTrip) {
  std::vector<Multigraph> corpus{complete_graph(4), wheel_graph(5), petersen_graph(),
                                 octahedron_graph(), gen_gk(2).graph, Multigraph(4),
                                 Multigraph(3, {{0, 1, 0}, {1, 2, 5}})};
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) corpus.push_back(gen_random(8, 12, 3, rng()));
  for (const auto& g : corpus) EXPECT_EQ(parse_graph(emit_graph(g)), g);
  EXPECT_EQ(emit_graph(Multigraph(2, {{0, 1, 2}})), "p 2\ne 0 1 2\n");
}

}  // namespace
}  // namespace tuza
