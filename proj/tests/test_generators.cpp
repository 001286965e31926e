#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "hf/corpus.hpp"
#include "hf/generators.hpp"
#include "hf/moves.hpp"

using namespace hf;

namespace {

std::vector<std::pair<Int, Int>> add_classes(const std::vector<std::pair<Int, Int>>& a,
                                             const std::vector<std::pair<Int, Int>>& b) {
  REQUIRE(a.size() == b.size());
  std::vector<std::pair<Int, Int>> out;
  for (size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].second == b[i].second);
    Int m = a[i].second, s = a[i].first + b[i].first;
    if (m != 0) s = ((s % m) + m) % m;
    out.emplace_back(s, m);
  }
  return out;
}

}  // namespace

TEST_CASE("generator enumeration") {
  auto count = [](const std::string& name) {
    Validated v = validate_diagram(corpus::by_name(name));
    return int(enumerate_generators(v).size());
  };
  CHECK(count("s3_g1") == 1);
  CHECK(count("s2xs1_fig9") == 2);
  CHECK(count("s2xs1_sum_fig10") == 4);
  CHECK(count("lens_2_1") == 2);
  CHECK(count("lens_3_1") == 3);
  CHECK(count("lens_5_1") == 5);
  CHECK(count("non_admissible_fixture") == 0);
  CHECK(count("unknot") == 1);
  CHECK(count("ob_tight_s3") == 1);

  Validated v9 = validate_diagram(corpus::s2xs1_fig9());
  auto g9 = enumerate_generators(v9);
  CHECK(g9[0].name == "x");
  CHECK(g9[1].name == "y");
  CHECK(g9[0].beta_of == std::vector<int>{0});

  Validated v10 = validate_diagram(corpus::s2xs1_sum_fig10());
  auto g10 = enumerate_generators(v10);
  REQUIRE(g10.size() == 4);
  CHECK(g10[0].name == "x1,x2");
  CHECK(g10[1].name == "x1,y2");
  CHECK(g10[2].name == "y1,x2");
  CHECK(g10[3].name == "y1,y2");
  for (const Generator& g : g10) CHECK(g.beta_of == std::vector<int>{0, 1});
}

TEST_CASE("first homology of the closed manifold") {
  auto h1 = [](const Diagram& d) { return first_homology(validate_diagram(d)).h1; };
  CHECK(h1(corpus::s3_g1()).trivial());
  CHECK(h1(corpus::unknot()).trivial());
  CHECK(h1(corpus::s2xs1_fig9()) == AbelianGroup{1, {}});
  CHECK(h1(corpus::s2xs1_sum_fig10()) == AbelianGroup{2, {}});
  for (int p = 2; p <= 5; ++p) CHECK(h1(corpus::lens_p_1(p)) == AbelianGroup{0, {Int(p)}});
  CHECK(h1(corpus::non_admissible_fixture()) == AbelianGroup{1, {}});

  // The group is blind to curve roles and to moves.
  CHECK(h1(swap_roles(corpus::s2xs1_fig9())) == AbelianGroup{1, {}});
  CHECK(h1(swap_roles(corpus::lens_p_1(3))) == AbelianGroup{0, {Int(3)}});
  CHECK(h1(stabilize(corpus::lens_p_1(4), "S1")) == AbelianGroup{0, {Int(4)}});
  CHECK(h1(finger_move(corpus::s2xs1_fig9(), 0, 0, "D1", 0, 0)) == AbelianGroup{1, {}});
  CHECK(h1(finger_move(corpus::lens_p_1(3), 0, 1, "S0", 0, 0)) == AbelianGroup{0, {Int(3)}});
}

TEST_CASE("obstruction classes partition the generators") {
  {
    Validated v = validate_diagram(corpus::s2xs1_fig9());
    H1Data h = first_homology(v);
    auto gens = enumerate_generators(v);
    CHECK(epsilon_zero(epsilon(v, h, gens[0], gens[1])));
    SpincPartition part = partition_classes(v, h, gens);
    CHECK(part.classes == std::vector<std::vector<int>>{{0, 1}});
    CHECK(part.class_of == std::vector<int>{0, 0});
  }
  {
    Validated v = validate_diagram(corpus::s2xs1_sum_fig10());
    H1Data h = first_homology(v);
    auto gens = enumerate_generators(v);
    SpincPartition part = partition_classes(v, h, gens);
    CHECK(part.classes == std::vector<std::vector<int>>{{0, 1, 2, 3}});
  }
  for (int p : {2, 3, 5}) {
    CAPTURE(p);
    Validated v = validate_diagram(corpus::lens_p_1(p));
    H1Data h = first_homology(v);
    auto gens = enumerate_generators(v);
    SpincPartition part = partition_classes(v, h, gens);
    CHECK(int(part.classes.size()) == p);
    for (int i = 0; i < p; ++i) {
      CHECK(part.classes[i] == std::vector<int>{i});
      for (int j = 0; j < p; ++j)
        CHECK(epsilon_zero(epsilon(v, h, gens[i], gens[j])) == (i == j));
    }
  }
  {
    Validated v = validate_diagram(corpus::non_admissible_fixture());
    H1Data h = first_homology(v);
    SpincPartition part = partition_classes(v, h, {});
    CHECK(part.classes.empty());
    CHECK(part.class_of.empty());
  }
}

TEST_CASE("the obstruction is additive") {
  for (const std::string name :
       {"s2xs1_fig9", "s2xs1_sum_fig10", "lens_3_1", "lens_4_1", "ob_s2xs1_trivial"}) {
    CAPTURE(name);
    Validated v = validate_diagram(corpus::by_name(name));
    H1Data h = first_homology(v);
    auto gens = enumerate_generators(v);
    for (const Generator& a : gens) {
      CHECK(epsilon_zero(epsilon(v, h, a, a)));
      for (const Generator& b : gens)
        for (const Generator& c : gens)
          CHECK(epsilon(v, h, a, c) ==
                add_classes(epsilon(v, h, a, b), epsilon(v, h, b, c)));
    }
  }
}
