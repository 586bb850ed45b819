#include <doctest.h>

#include "sttilt/blk/covering.hpp"
#include "sttilt/error.hpp"
#include "sttilt/grp/builtin.hpp"
#include "sttilt/rep/functors.hpp"
#include "sttilt/taut/enumerate.hpp"

using namespace sttilt;

namespace {

std::shared_ptr<rep::GroupAlgebra> algebra(const char* name, int n, int p, int m) {
  return std::make_shared<rep::GroupAlgebra>(grp::builtin(name, n), ffla::Field::get(p, m));
}

}  // namespace

TEST_CASE("block counts") {
  // kG for a p'-group is semisimple: one block per simple
  auto c3 = algebra("cyclic", 3, 2, 2);
  auto bc3 = blk::blocks(*c3);
  CHECK(bc3.size() == 3);
  CHECK(blk::audit_blocks(*c3, bc3).empty());
  for (const auto& b : bc3) CHECK(b.defect_zero);

  auto s3 = algebra("symmetric", 3, 2, 1);
  auto bs3 = blk::blocks(*s3);
  REQUIRE(bs3.size() == 2);
  CHECK(blk::audit_blocks(*s3, bs3).empty());
  CHECK(bs3[0].principal);
  CHECK(bs3[0].dim == 2);
  CHECK(bs3[1].defect_zero);
  CHECK(bs3[1].dim == 4);

  auto a4 = algebra("alternating", 4, 2, 2);
  auto ba4 = blk::blocks(*a4);
  CHECK(ba4.size() == 1);
  CHECK(ba4[0].dim == 12);
}

TEST_CASE("block_of and project") {
  auto s3 = algebra("symmetric", 3, 2, 1);
  auto bs = blk::blocks(*s3);
  for (std::size_t i = 0; i < s3->num_simples(); ++i) {
    const auto b = blk::block_of(bs, s3->pim(i));
    CHECK(blk::project(bs[b], s3->pim(i)).dim() == s3->pim(i).dim());
    CHECK(blk::project(bs[1 - b], s3->pim(i)).dim() == 0);
  }
  CHECK_THROWS_AS(blk::block_of(bs, s3->regular()), MismatchError);
}

TEST_CASE("covering C3 in S3") {
  const auto& f = ffla::Field::get(2, 2);
  auto s3g = grp::builtin("symmetric", 3);
  auto normal = grp::embed_group(s3g, grp::builtin("cyclic", 3));
  rep::GroupAlgebra big(s3g, f);
  rep::GroupAlgebra small(normal.group, f);
  auto bb = blk::blocks(big);
  auto sb = blk::blocks(small);
  REQUIRE(bb.size() == 2);
  REQUIRE(sb.size() == 3);
  // the principal blocks cover each other; the defect-zero block of S3
  // covers the two blocks of C3 that conjugation swaps
  CHECK(blk::covers(normal, big, bb[0], sb[0]));
  CHECK(!blk::covers(normal, big, bb[0], sb[1]));
  CHECK(blk::covers(normal, big, bb[1], sb[1]));
  CHECK(blk::covers(normal, big, bb[1], sb[2]));
  CHECK(blk::inertia(normal, sb[0]).order() == 6);
  CHECK(blk::inertia(normal, sb[1]).order() == 3);
  auto d = blk::fong_correspondent(normal, small, sb[1], big, bb[1]);
  CHECK(d.inertia.order() == 3);
  auto rep = blk::verify_fong_morita(d, big);
  CHECK(rep.checked > 0);
  for (const auto& p : rep.problems) MESSAGE(p);
  CHECK(rep.ok());
  CHECK_THROWS_AS(blk::fong_correspondent(normal, small, sb[1], big, bb[0]), MismatchError);
}

TEST_CASE("posets factor over blocks") {
  auto a = algebra("symmetric", 3, 2, 1);
  auto bs = blk::blocks(*a);
  auto cat = std::make_shared<taut::Catalog>(a);
  const auto whole = taut::enumerate(taut::Scope(cat)).size();
  std::size_t product = 1;
  for (const auto& b : bs) product *= taut::enumerate(taut::Scope(cat, b.simples)).size();
  CHECK(whole == product);
  CHECK(whole == 4);
}
