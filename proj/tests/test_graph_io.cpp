#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "alphar/errors.hpp"
#include "alphar/graph_io.hpp"

using namespace alphar;

namespace {

ParseError::Kind kind_of(const std::string& text) {
  try {
    graph6_decode(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ParseError::Kind::kEmpty;
}

std::string random_graph6(std::mt19937_64& rng, int n) {
  std::string s;
  if (n < 63) {
    s.push_back(static_cast<char>(n + 63));
  } else {
    s.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) s.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  const int bits = n * (n - 1) / 2;
  const int bytes = (bits + 5) / 6;
  for (int b = 0; b < bytes; ++b) {
    int v = static_cast<int>(rng() & 63);
    if (b == bytes - 1 && bits % 6 != 0) v &= ~((1 << (6 - bits % 6)) - 1);
    s.push_back(static_cast<char>(v + 63));
  }
  return s;
}

}  // namespace

TEST(Graph6, StarExample) {
  const Graph g = graph6_decode("D?{");
  EXPECT_EQ(g.n(), 5);
  EXPECT_EQ(g.edge_count(), 4);
  for (int v = 0; v < 4; ++v) EXPECT_TRUE(g.has_edge(v, 4));
  EXPECT_EQ(graph6_encode(g), "D?{");
}

TEST(Graph6, SmallestCases) {
  EXPECT_EQ(graph6_encode(Graph(1)), "@");
  EXPECT_EQ(graph6_decode("@").n(), 1);
  EXPECT_EQ(graph6_encode(Graph(0)), "?");
  EXPECT_EQ(graph6_decode("?").n(), 0);
  EXPECT_EQ(graph6_decode(">>graph6<<D?{\n"), graph6_decode("D?{"));
}

TEST(Graph6, FuzzRoundTrip) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 1000; ++t) {
    const int n = t < 900 ? static_cast<int>(rng() % 70) : 63 + static_cast<int>(rng() % 450);
    const std::string s = random_graph6(rng, n);
    ASSERT_EQ(graph6_encode(graph6_decode(s)), s) << s;
  }
}

TEST(Graph6, LargeOrders) {
  for (int n : {62, 63, 100, 512}) {
    const Graph g = graph6_decode(graph6_encode(Graph::cycle(n)));
    EXPECT_EQ(g, Graph::cycle(n));
  }
}

TEST(Graph6, DistinctErrors) {
  EXPECT_EQ(kind_of(""), ParseError::Kind::kEmpty);
  EXPECT_EQ(kind_of("D?"), ParseError::Kind::kBadLength);
  EXPECT_EQ(kind_of("D?{?"), ParseError::Kind::kBadLength);
  EXPECT_EQ(kind_of("D {"), ParseError::Kind::kBadCharacter);
  EXPECT_EQ(kind_of("D?~"), ParseError::Kind::kTrailingBits);  // padding bits set
  EXPECT_EQ(kind_of("~?"), ParseError::Kind::kBadHeader);
  EXPECT_EQ(kind_of("~?G@"), ParseError::Kind::kTooLarge);  // 513
  EXPECT_EQ(kind_of("~~??????"), ParseError::Kind::kTooLarge);
  EXPECT_EQ(kind_of("~??^"), ParseError::Kind::kBadHeader);  // 31 written long
}

TEST(EdgeList, ParsesCommentsAndDeclaredOrder) {
  const Graph g = edge_list_decode("# vertices 7\n0 1\n\n  2 5 # tail\n");
  EXPECT_EQ(g.n(), 7);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(5, 2));
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(edge_list_decode("3 4\n").n(), 5);
  EXPECT_EQ(edge_list_decode(edge_list_encode(Graph::petersen())), Graph::petersen());
}

TEST(EdgeList, RejectsMalformedLines) {
  EXPECT_THROW(edge_list_decode("0 1 2\n"), ParseError);
  EXPECT_THROW(edge_list_decode("0 x\n"), ParseError);
  EXPECT_THROW(edge_list_decode("3 3\n"), ParseError);
  EXPECT_THROW(edge_list_decode("# vertices 2\n0 5\n"), ParseError);
  EXPECT_THROW(edge_list_decode("0 600\n"), ParseError);
}

TEST(ParseGraph, DetectsFormatByFirstByte) {
  EXPECT_EQ(parse_graph("D?{"), graph6_decode("D?{"));
  EXPECT_EQ(parse_graph("0 4\n1 4\n2 4\n3 4\n"), graph6_decode("D?{"));
  EXPECT_EQ(parse_graph("# star\n0 4\n1 4\n2 4\n3 4\n"), graph6_decode("D?{"));
  EXPECT_THROW(parse_graph("   \n"), ParseError);
}

TEST(ParseGraph, ReadsFiles) {
  const auto path = std::filesystem::temp_directory_path() / "alphar_petersen.g6";
  {
    std::ofstream out(path);
    out << graph6_encode(Graph::petersen()) << '\n';
  }
  EXPECT_EQ(read_graph_file(path.string()), Graph::petersen());
  std::filesystem::remove(path);
  EXPECT_THROW(read_graph_file("/nonexistent/graph.g6"), RangeError);
}
