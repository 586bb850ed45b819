#include <doctest.h>

#include "sttilt/grp/builtin.hpp"
#include "sttilt/error.hpp"
#include "sttilt/rep/algebra.hpp"
#include "sttilt/rep/functors.hpp"
#include "sttilt/vtx/vertex.hpp"

using namespace sttilt;

TEST_CASE("relative projectivity against the trace criterion") {
  const auto& f = ffla::Field::get(2, 2);
  auto s4 = grp::builtin("symmetric", 4);
  rep::GroupAlgebra a(s4, f);
  std::vector<rep::GModule> ms{a.trivial(), a.simple(1), a.pim(0), a.pim(1)};
  for (const auto& h : grp::subgroups_up_to_conjugacy(grp::sylow(s4, 2)))
    for (const auto& m : ms) CHECK(vtx::is_rel_projective(m, h) == vtx::higman_rel_projective(m, h));
  // odd index: every module is projective relative to a Sylow 2-subgroup
  const auto syl = grp::sylow(s4, 2);
  for (const auto& m : ms) CHECK(vtx::is_rel_projective(m, syl));
  CHECK(!vtx::is_rel_projective(a.trivial(), grp::trivial_subgroup(s4)));
  CHECK(vtx::is_rel_projective(a.pim(1), grp::trivial_subgroup(s4)));
}

TEST_CASE("vertices") {
  const auto& f = ffla::Field::get(2, 2);
  auto s4 = grp::builtin("symmetric", 4);
  rep::GroupAlgebra a(s4, f);
  CHECK(vtx::vertex(a.trivial()).vertex.order() == 8);
  CHECK(!vtx::vertex(a.trivial()).proper);
  CHECK(vtx::vertex(a.pim(0)).vertex.order() == 1);
  CHECK(vtx::vertex(a.pim(1)).vertex.order() == 1);
  CHECK_THROWS_AS(vtx::vertex(a.regular()), MismatchError);
}

TEST_CASE("vertex theorem") {
  const auto& f = ffla::Field::get(2, 2);
  auto s4 = vtx::verify_vertex_theorem(grp::builtin("symmetric", 4), f);
  CHECK(s4.has_p_normal);
  CHECK(s4.all_proper);
  // 8 indecomposable tau-rigid pairs, two of them (0, P)
  CHECK(s4.rows.size() == 6);
  for (const auto& r : s4.rows) {
    MESSAGE(r.name << " vertex " << r.vertex_order);
    CHECK(r.vertex_order <= 4);
  }
  CHECK(s4.normal_witness->order() == 12);

  auto a4 = vtx::verify_vertex_theorem(grp::builtin("alternating", 4), f);
  CHECK(!a4.has_p_normal);
  CHECK(!a4.all_proper);
  CHECK(a4.agree());
  REQUIRE(a4.full_vertex_witness);
  CHECK(*a4.full_vertex_witness == "1");

  auto c2 = vtx::verify_vertex_theorem(grp::builtin("cyclic", 2), ffla::Field::get(2, 1));
  CHECK(c2.has_p_normal);
  CHECK(c2.all_proper);
  CHECK(c2.rows.size() == 1);
}
