#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "relloc/cats.hpp"
#include "relloc/generators.hpp"
#include "relloc/specs.hpp"

namespace relloc {
namespace {

TEST(ParseSpec, KindAndParameters) {
  const Spec s = parse_spec("grid:n=8,m=3");
  EXPECT_EQ(s.kind, "grid");
  EXPECT_EQ(s.integer("n"), 8);
  EXPECT_EQ(s.integer_or("m", 1), 3);
  EXPECT_EQ(s.integer_or("q", 5), 5);
  EXPECT_FALSE(s.has("q"));
  EXPECT_EQ(parse_spec("greedy").params.size(), 0u);
  EXPECT_EQ(parse_spec("random:seed=18446744073709551615").seed_or("seed", 0), 18446744073709551615ull);
  EXPECT_DOUBLE_EQ(parse_spec("connected:p=0.25").real("p"), 0.25);
}

TEST(ParseSpec, FileKeepsThePathWhole) {
  const Spec s = parse_spec("file:/tmp/a,b=c.txt");
  EXPECT_EQ(s.kind, "file");
  EXPECT_EQ(s.text("path"), "/tmp/a,b=c.txt");
}

TEST(ParseSpec, Errors) {
  EXPECT_THROW(parse_spec(""), SpecError);
  EXPECT_THROW(parse_spec("file:"), SpecError);
  EXPECT_THROW(parse_spec("grid:n"), SpecError);
  EXPECT_THROW(parse_spec("grid:=3"), SpecError);
  EXPECT_THROW(parse_spec("grid:n=3,n=4"), SpecError);
  EXPECT_THROW(parse_spec("grid:n=x").integer("n"), SpecError);
  EXPECT_THROW(parse_spec("grid:m=3").integer("n"), SpecError);
  EXPECT_THROW(parse_spec("random:seed=-1").seed_or("seed", 0), SpecError);
}

TEST(MakeGraph, EveryKind) {
  EXPECT_EQ(make_graph("path:n=9", 0).order(), 9);
  EXPECT_EQ(make_graph("grid:n=4,m=3", 0).order(), 12);
  EXPECT_EQ(make_graph("grid:n=4", 0).order(), 16);
  EXPECT_EQ(make_graph("substar:k=3", 0).order(), 10);
  const Graph t = make_graph("tree:n=30,dmax=3,seed=4", 0);
  EXPECT_TRUE(t.is_tree());
  EXPECT_EQ(t.edges(), gen_random_tree(30, 3, 4).edges());
  EXPECT_EQ(make_graph("connected:n=20,p=0.1,dmax=4,seed=2", 0).edges(),
            gen_random_connected(20, 0.1, 4, 2).edges());

  const auto path = std::filesystem::temp_directory_path() / "relloc_specs_test_graph.txt";
  {
    std::ofstream out(path);
    out << "3 2\n1 2\n2 3\n";
  }
  EXPECT_EQ(make_graph("file:" + path.string(), 0).order(), 3);
  std::filesystem::remove(path);
}

TEST(MakeGraph, Errors) {
  EXPECT_THROW(make_graph("blob:n=3", 0), SpecError);
  EXPECT_THROW(make_graph("path", 0), SpecError);
  EXPECT_THROW(make_graph("path:n=0", 0), SpecError);
  EXPECT_THROW(make_graph("path:n=4,x=1", 0), SpecError);
  EXPECT_THROW(make_graph("tree:n=5,dmax=1,seed=0", 0), SpecError);
  EXPECT_THROW(make_graph("file:/nonexistent/g.txt", 0), SpecError);
}

TEST(MakeCat, EveryKind) {
  const Graph p = make_graph("path:n=20", 0);
  EXPECT_EQ(make_cat("path", p, 0)->name(), "path");
  EXPECT_EQ(make_cat("tree", p, 0)->name(), "tree");
  EXPECT_EQ(make_cat("tree:dmax=4", p, 0)->guaranteed_radius(), 10);
  EXPECT_EQ(make_cat("random:seed=3", p, 0)->name(), "random");
  const auto slow = make_cat("slow", p, 0);
  EXPECT_EQ(required_slowness(*slow), 8);
  EXPECT_EQ(required_slowness(*make_cat("slow:dmax=3", p, 0)), 12);
  EXPECT_FALSE(required_slowness(*make_cat("path", p, 0)));
  EXPECT_EQ(make_cat("grid", make_graph("grid:n=9", 0), 0)->name(), "grid");
  EXPECT_THROW(make_cat("grid", p, 0), SpecError);
  EXPECT_THROW(make_cat("tree", make_graph("grid:n=3", 0), 0), SpecError);
  EXPECT_THROW(make_cat("lion", p, 0), SpecError);
}

TEST(MakeMouse, EveryKind) {
  EXPECT_EQ(make_mouse("stationary:v=2", 0)->name(), "stationary");
  EXPECT_EQ(make_mouse("random:seed=1", 0)->name(), "random");
  EXPECT_EQ(make_mouse("greedy", 0)->name(), "greedy");
  EXPECT_EQ(make_mouse("exhaustive:T=8,d=2", 0)->name(), "exhaustive");
  EXPECT_THROW(make_mouse("stationary:v=x", 0), SpecError);
  EXPECT_THROW(make_mouse("replay:file=/nonexistent/cert.json", 0), SpecError);
  EXPECT_THROW(make_mouse("owl", 0), SpecError);
}

TEST(DefaultSeed, ReadsTheEnvironment) {
  ::setenv("RELLOC_SEED", "123", 1);
  EXPECT_EQ(default_seed(), 123u);
  ::setenv("RELLOC_SEED", "abc", 1);
  EXPECT_EQ(default_seed(), 0u);
  ::unsetenv("RELLOC_SEED");
  EXPECT_EQ(default_seed(), 0u);
}

}  // namespace
}  // namespace relloc
