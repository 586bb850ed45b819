#include <doctest.h>

#include "sttilt/grp/builtin.hpp"
#include "sttilt/taut/enumerate.hpp"
#include "sttilt/taut/mutation.hpp"

using namespace sttilt;
using namespace sttilt::taut;

namespace {

Scope scope_for(const char* name, int n, int p, int m, const char* suffix = "") {
  auto a = std::make_shared<rep::GroupAlgebra>(grp::builtin(name, n), ffla::Field::get(p, m), rep::AlgebraOptions{suffix});
  return Scope(std::make_shared<Catalog>(a));
}

}  // namespace

TEST_CASE("poset sizes") {
  auto s4 = scope_for("symmetric", 4, 2, 2, "'");
  auto ps4 = enumerate(s4);
  CHECK(ps4.size() == 8);
  CHECK(ps4.edges.size() == 8);
  for (const auto& t : ps4.nodes) MESSAGE(s4.describe(t));
  auto a4 = scope_for("alternating", 4, 2, 2);
  auto pa4 = enumerate(a4);
  CHECK(pa4.size() == 32);
  MESSAGE("A4 edges " << pa4.edges.size());
  auto c2 = scope_for("cyclic", 2, 2, 1);
  CHECK(enumerate(c2).size() == 2);
}

#include "sttilt/grp/subgroup.hpp"
#include "sttilt/rep/functors.hpp"
#include "sttilt/taut/actions.hpp"

TEST_CASE("A4 in S4 induction") {
  const auto& f = ffla::Field::get(2, 2);
  auto s4 = grp::builtin("symmetric", 4);
  auto n = grp::embed_group(s4, grp::builtin("alternating", 4));
  Scope big(std::make_shared<Catalog>(std::make_shared<rep::GroupAlgebra>(s4, f, rep::AlgebraOptions{"'"})));
  Scope small(std::make_shared<Catalog>(std::make_shared<rep::GroupAlgebra>(n.group, f)));
  auto bp = enumerate(big);
  auto sp = enumerate(small);
  Induction in;
  in.small = &small;
  in.small_poset = &sp;
  in.big = &big;
  in.big_poset = &bp;
  in.normal = n;
  in.invariance = grp::coset_reps(n);
  auto q = grp::quotient(n);
  rep::GroupAlgebra qa(q.group, f);
  for (std::size_t i = 0; i < qa.num_simples(); ++i) in.quotient_simples.push_back(rep::inflate(qa.simple(i), q));
  auto r = analyse_induction(in);
  CHECK(r.invariant.size() == 8);
  CHECK(r.injective);
  CHECK(r.order_embedding);
  CHECK(r.star.size() == 8);
  CHECK(r.image_is_star);
  for (auto& p : r.problems) MESSAGE(p);
  for (int g : grp::coset_reps(n)) CHECK(is_automorphism(sp, conjugation_twist(small, sp, n, g)));
}
