#include <doctest.h>

#include "sttilt/ffla/linalg.hpp"
#include "sttilt/grp/builtin.hpp"
#include "sttilt/rep/decompose.hpp"
#include "sttilt/rep/functors.hpp"
#include "sttilt/rep/hom.hpp"
#include "sttilt/rep/meataxe.hpp"
#include "sttilt/rep/submodule.hpp"

using namespace sttilt;
using namespace sttilt::rep;

TEST_CASE("regular module and free adjunction") {
  const auto& f = ffla::Field::get(2, 2);
  auto g = grp::builtin("alternating", 4);
  auto reg = regular(g, f);
  CHECK(reg.dim() == 12);
  CHECK(reg.verify_relations());
  CHECK(hom_dim(reg, reg) == 12);
  auto t = trivial(g, f);
  CHECK(hom_dim(reg, t) == 1);
  CHECK(hom_dim(t, reg) == 1);
  for (const auto& h : hom_space(reg, t)) CHECK(is_hom(h, reg, t));
}

TEST_CASE("composition factors of kA4") {
  const auto& f = ffla::Field::get(2, 2);
  auto g = grp::builtin("alternating", 4);
  Rng rng(7);
  auto cf = composition_factors(regular(g, f), rng);
  CHECK(cf.size() == 12);
  for (const auto& s : cf) CHECK(s.dim() == 1);
}

TEST_CASE("decompose regular kS4") {
  const auto& f = ffla::Field::get(2, 2);
  auto g = grp::builtin("symmetric", 4);
  auto parts = decompose(regular(g, f));
  std::size_t total = 0;
  for (const auto& s : parts) {
    total += s.module.dim();
    CHECK(s.module.dim() == 8);
  }
  CHECK(total == 24);
  CHECK(parts.size() == 3);
}

#include "sttilt/rep/algebra.hpp"
#include "sttilt/rep/build.hpp"
#include "sttilt/rep/catalog.hpp"

TEST_CASE("algebra quick") {
  const auto& f = ffla::Field::get(2, 2);
  GroupAlgebra a4(grp::builtin("alternating", 4), f);
  CHECK(a4.num_simples() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a4.simple(i).dim() == 1);
    CHECK(a4.pim(i).dim() == 4);
    MESSAGE(a4.stack_name(a4.pim(i)));
  }
  CHECK(a4.ext1_dim(a4.trivial(), a4.trivial()) == 0);
  auto m12 = stack(a4, {0, 1});
  MESSAGE(a4.stack_name(m12));
  GroupAlgebra s4(grp::builtin("symmetric", 4), f, {"'"});
  CHECK(s4.num_simples() == 2);
  CHECK(s4.simple(1).dim() == 2);
  MESSAGE(s4.stack_name(s4.pim(0)) << "  " << s4.stack_name(s4.pim(1)));
  CHECK(s4.tau(s4.pim(0)).dim() == 0);
  GroupAlgebra c2(grp::builtin("cyclic", 2), ffla::Field::get(2, 1));
  CHECK(c2.syzygy(c2.trivial()).dim() == 1);
  CHECK(c2.ext1_dim(c2.trivial(), c2.trivial()) == 1);
}
