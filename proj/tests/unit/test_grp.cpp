#include <doctest.h>

#include <numeric>

#include "sttilt/error.hpp"
#include "sttilt/grp/builtin.hpp"
#include "sttilt/grp/subgroup.hpp"

using namespace sttilt::grp;

namespace {

void check_closed(const Group& g) {
  for (std::size_t a = 0; a < g.order(); ++a) {
    CHECK(g.index_of(perm_inverse(g.element(static_cast<int>(a)))) >= 0);
    for (std::size_t b = 0; b < g.order(); ++b)
      CHECK(g.index_of(perm_compose(g.element(static_cast<int>(a)), g.element(static_cast<int>(b)))) ==
            g.mul(static_cast<int>(a), static_cast<int>(b)));
  }
  for (std::size_t i = 1; i < g.order(); ++i) {
    const int gen = g.generators()[g.bfs_gen(static_cast<int>(i))];
    CHECK(g.mul(gen, g.bfs_parent(static_cast<int>(i))) == static_cast<int>(i));
    CHECK(g.bfs_parent(static_cast<int>(i)) < static_cast<int>(i));
  }
}

std::size_t sum_class_sizes(const Group& g) {
  std::size_t s = 0;
  for (const auto& c : g.conjugacy_classes()) {
    CHECK(g.order() % c.size() == 0);
    s += c.size();
  }
  return s;
}

}  // namespace

TEST_CASE("builtin orders and closure") {
  CHECK(builtin("alternating", 4)->order() == 12);
  CHECK(builtin("symmetric", 4)->order() == 24);
  CHECK(builtin("dihedral", 4)->order() == 8);
  CHECK(builtin("klein4", 4)->order() == 4);
  CHECK(builtin("cyclic", 5)->order() == 5);
  CHECK(parse_group("perm:3:(1 2 3)")->order() == 3);
  CHECK(parse_group("perm:12:(1 2 3)(4 5 6),(1 2)(3 4)")->order() > 1);
  for (auto spec : {"builtin:symmetric:4", "builtin:alternating:4", "builtin:dihedral:4", "builtin:symmetric:3", "builtin:cyclic:4"})
    check_closed(*parse_group(spec));
}

TEST_CASE("group parse errors and caps") {
  CHECK_THROWS_AS(parse_group("perm:3:(1 2 4)"), sttilt::ParseError);
  CHECK_THROWS_AS(parse_group("perm:3:(1 2"), sttilt::ParseError);
  CHECK_THROWS_AS(parse_group("builtin:foo:3"), sttilt::ParseError);
  CHECK_THROWS_AS(parse_group("nonsense"), sttilt::ParseError);
  CHECK_THROWS_AS(builtin("symmetric", 8, 1000), sttilt::CapExceededError);
  try {
    parse_group("perm:4:(1 2),(1 x)");
    FAIL("expected a parse error");
  } catch (const sttilt::ParseError& e) {
    CHECK(e.position() == 16);  // the x
  }
}

TEST_CASE("cycle notation composes right to left") {
  // (1 2)(2 3) sends 3 -> 2 -> 1
  Perm p = parse_cycles("(1 2)(2 3)", 3);
  CHECK(p[2] == 0);
  CHECK(perm_to_cycles(p) == "(1 2 3)");
  CHECK(perm_to_cycles(perm_identity(3)) == "()");
}

TEST_CASE("conjugacy classes") {
  auto s4 = builtin("symmetric", 4);
  auto a4 = builtin("alternating", 4);
  CHECK(s4->conjugacy_classes().size() == 5);
  CHECK(a4->conjugacy_classes().size() == 4);
  CHECK(sum_class_sizes(*s4) == 24);
  CHECK(sum_class_sizes(*a4) == 12);
  auto c6 = builtin("cyclic", 6);
  CHECK(c6->conjugacy_classes().size() == 6);
  auto v4 = builtin("klein4", 4);
  CHECK(v4->conjugacy_classes().size() == 4);
  // orbit oracle: class of x is {g x g^-1}
  for (std::size_t x = 0; x < s4->order(); ++x) {
    std::vector<int> orbit;
    for (std::size_t g = 0; g < s4->order(); ++g) orbit.push_back(s4->conj(static_cast<int>(g), static_cast<int>(x)));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    CHECK(orbit == s4->conjugacy_classes()[s4->class_of(static_cast<int>(x))]);
  }
}

TEST_CASE("normal subgroups") {
  auto s4 = builtin("symmetric", 4);
  auto ns = normal_subgroups(s4);
  std::vector<std::size_t> orders;
  for (const auto& n : ns) {
    orders.push_back(n.order());
    CHECK(is_normal(n));
    for (int g : s4->generators())
      for (int x : n.embed) CHECK(n.contains(s4->conj(g, x)));
  }
  CHECK(orders == std::vector<std::size_t>{1, 4, 12, 24});
  CHECK(normal_subgroups(builtin("alternating", 4)).size() == 3);
  CHECK(normal_subgroups(builtin("cyclic", 3)).size() == 2);
  // brute force over all subsets of S3
  auto s3 = builtin("symmetric", 3);
  int brute = 0;
  for (int mask = 1; mask < 64; ++mask) {
    if (!(mask & 1)) continue;
    bool ok = true;
    for (int a = 0; a < 6 && ok; ++a)
      for (int b = 0; b < 6 && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> s3->mul(a, b) & 1)) ok = false;
    for (int a = 0; a < 6 && ok; ++a)
      for (int g = 0; g < 6 && ok; ++g)
        if ((mask >> a & 1) && !(mask >> s3->conj(g, a) & 1)) ok = false;
    brute += ok;
  }
  CHECK(normal_subgroups(s3).size() == static_cast<std::size_t>(brute));
}

TEST_CASE("cosets, quotients, embeddings") {
  auto s4 = builtin("symmetric", 4);
  auto a4 = embed_group(s4, builtin("alternating", 4));
  CHECK(coset_reps(a4).size() == 2);
  auto q = quotient(a4);
  CHECK(q.group->order() == 2);
  for (std::size_t a = 0; a < s4->order(); ++a)
    for (std::size_t b = 0; b < s4->order(); ++b)
      CHECK(q.projection[s4->mul(static_cast<int>(a), static_cast<int>(b))] ==
            q.group->mul(q.projection[a], q.projection[b]));
  for (int x : a4.embed) CHECK(q.projection[x] == 0);

  auto c4 = builtin("cyclic", 4);
  auto c2 = embed_group(c4, parse_group("perm:4:(1 3)(2 4)"));
  CHECK(c2.order() == 2);
  CHECK(quotient(c2).group->order() == 2);
  CHECK_THROWS(embed_group(c4, parse_group("perm:2:(1 2)")));
  auto s3 = builtin("symmetric", 3);
  auto c3 = embed_group(s3, builtin("cyclic", 3));
  CHECK(is_normal(c3));
  auto t = make_subgroup(s3, {s3->index_of(parse_cycles("(1 2)", 3))});
  CHECK_FALSE(is_normal(t));
  CHECK_THROWS(quotient(t));
  // padding a smaller-degree group
  CHECK(embed_group(s4, builtin("cyclic", 3)).order() == 3);
}

TEST_CASE("sylow and subgroups of a p-group") {
  auto s4 = builtin("symmetric", 4);
  auto p = sylow(s4, 2);
  CHECK(p.order() == 8);
  CHECK_FALSE(p.group->is_abelian());
  CHECK(sylow(s4, 3).order() == 3);
  CHECK(sylow(s4, 5).order() == 1);
  CHECK(sylow(builtin("alternating", 4), 2).order() == 4);
  // D8 has 10 subgroups in 8 classes under S4-conjugacy: 1, three of order 2
  // up to S4 (two classes: double transpositions, transpositions), ...
  auto subs = subgroups_up_to_conjugacy(p);
  CHECK(subs.front().order() == 1);
  CHECK(subs.back().order() == 8);
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j) CHECK_FALSE(conjugate_in_parent(subs[i], subs[j]));
  std::vector<std::size_t> orders;
  for (const auto& s : subs) orders.push_back(s.order());
  // 1; <(12)>, <(12)(34)>; V4 normal, V4 non-normal, C4; D8
  CHECK(orders == std::vector<std::size_t>{1, 2, 2, 4, 4, 4, 8});
}

TEST_CASE("exponent") {
  CHECK(builtin("symmetric", 4)->exponent() == 12);
  CHECK(builtin("alternating", 4)->exponent() == 6);
}
