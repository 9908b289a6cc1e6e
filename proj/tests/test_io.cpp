#include <sstream>

#include <gtest/gtest.h>

#include "sepchoose/experiments.hpp"
#include "sepchoose/io.hpp"

using namespace sepchoose;
using io::json;

TEST(FamilyJson, RoundTrip) {
  auto f = c5_family();
  f.partition = PartitionStructure::blocks(5, 1);
  const auto back = io::family_from_json(io::to_json(f));
  EXPECT_EQ(back.num_vertices, 5u);
  EXPECT_EQ(back.uniformity, 2u);
  ASSERT_EQ(back.k(), 2u);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(back.members[i].edges, f.members[i].edges);
  ASSERT_TRUE(back.partition);
  EXPECT_EQ(back.partition->part_of, f.partition->part_of);
}

TEST(FamilyJson, Rejections) {
  EXPECT_THROW(io::family_from_json(json::parse(R"({"n":4,"r":2,"members":[[[1,0]]]})")), ParseError);
  EXPECT_THROW(io::family_from_json(json::parse(R"({"n":4,"r":2,"members":[[[0,4]]]})")), ParseError);
  EXPECT_THROW(io::family_from_json(json::parse(R"({"n":4,"r":2})")), ParseError);
  EXPECT_THROW(io::family_from_json(json::parse(R"({"n":4,"r":2,"members":[[[0,1,2]]]})")), ParseError);
  EXPECT_THROW(io::family_from_json(json::parse(R"({"n":"four","r":2,"members":[]})")), ParseError);
}

TEST(HypergraphJson, RoundTrip) {
  const Hypergraph h{4, 3, {{0, 1, 2}, {1, 2, 3}, {0, 1, 2}}};
  const auto back = io::hypergraph_from_json(io::to_json(h));
  EXPECT_EQ(back.edges, h.edges);
}

TEST(ListText, ParseAndWrite) {
  std::istringstream in(
      "# comment\n"
      "2 2 graph\n"
      "1 0: 10 20\n"
      "2 0: 30 40\n"
      "1 1: 20 30\n");
  const auto [spec, l] = io::read_lists(in);
  EXPECT_EQ(spec.kind, GraphKind::graph);
  EXPECT_EQ(spec.part_sizes, (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(l.num_colors, 4u);
  EXPECT_EQ(l.lists[0][1], (ColorList{1, 2}));
  EXPECT_EQ(l.label(3), 40);

  std::ostringstream out;
  io::write_lists(out, spec, l);
  EXPECT_EQ(out.str(), "2 2 graph\n1 0: 10 20\n1 1: 20 30\n2 0: 30 40\n");
}

TEST(ListText, Errors) {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return io::read_lists(in);
  };
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("2 2 cube\n"), ParseError);
  EXPECT_THROW(parse("2 2 graph\n1 0: 1\n2 0: 3 4\n"), ParseError);
  EXPECT_THROW(parse("2 2 graph\n1 0: 1 2\n1 0: 1 2\n2 0: 3 4\n"), ParseError);
  EXPECT_THROW(parse("2 2 graph\n1 1: 1 2\n2 0: 3 4\n"), ParseError);
  EXPECT_THROW(parse("2 2 graph\n3 0: 1 2\n"), ParseError);
  EXPECT_THROW(parse("2 2 graph\n1 0: 1 x\n2 0: 3 4\n"), ParseError);
}

TEST(ListJson, RoundTrip) {
  auto [spec, l] = lists_from_family(c5_family(), GraphKind::hypergraph);
  const auto [spec2, l2] = io::lists_from_json(io::to_json(spec, l));
  EXPECT_EQ(spec2.kind, GraphKind::hypergraph);
  EXPECT_EQ(spec2.part_sizes, spec.part_sizes);
  EXPECT_EQ(l2.lists, l.lists);
}

TEST(CertificateJson, RoundTrip) {
  const auto res = verify_certificate(c5_family(), Mode::star);
  ASSERT_TRUE(res.accepted);
  const auto j = io::to_json(res.certificate);
  EXPECT_EQ(j.at("claim").at("graph_kind"), "complete_multipartite_graph");
  EXPECT_EQ(j.at("a"), "1/2");
  EXPECT_EQ(io::certificate_from_json(j), res.certificate);

  auto bad = j;
  bad["claim"]["graph_kind"] = "complete_k_partite_k_uniform_hypergraph";
  EXPECT_THROW(io::certificate_from_json(bad), ParseError);
}

TEST(PartitionJson, ClassesAreOneBased) {
  const auto j = io::to_json(ColorPartition{{0, 1, 1}});
  EXPECT_EQ(j.at("classes"), json::parse("[1,2,2]"));
}
