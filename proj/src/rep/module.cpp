#include "sttilt/rep/module.hpp"

#include <mutex>

#include "sttilt/error.hpp"
#include "sttilt/ffla/linalg.hpp"

namespace sttilt::rep {

struct GModule::Data {
  GroupPtr group;
  const Field* field;
  std::size_t dim;
  std::vector<Matrix> gens;
  std::once_flag elements_once;
  std::vector<Matrix> elements;
  std::once_flag spin_once;
  SpinBasis spin;
};

GModule::GModule(GroupPtr g, const Field& f, std::vector<Matrix> gens) : d_(std::make_shared<Data>()) {
  if (!g) throw MismatchError("module without a group");
  if (gens.size() != g->num_generators()) throw MismatchError("module needs one matrix per group generator");
  std::size_t n = gens.empty() ? 0 : gens[0].rows();
  for (const auto& m : gens) {
    if (m.rows() != n || m.cols() != n) throw MismatchError("generator matrices must be square of equal size");
    if (n > 0 && &m.field() != &f) throw MismatchError("generator matrix over the wrong field");
    if (n > 0 && !ffla::invertible(m)) throw MismatchError("generator matrix is not invertible");
  }
  d_->group = std::move(g);
  d_->field = &f;
  d_->dim = n;
  d_->gens = std::move(gens);
  for (auto& m : d_->gens)
    if (n == 0) m = Matrix(f, 0, 0);
}

GModule GModule::zero(GroupPtr g, const Field& f) {
  std::vector<Matrix> gens(g->num_generators(), Matrix(f, 0, 0));
  return GModule(std::move(g), f, std::move(gens));
}

const GroupPtr& GModule::group() const { return d_->group; }
const Field& GModule::field() const { return *d_->field; }
std::size_t GModule::dim() const { return d_->dim; }
const std::vector<Matrix>& GModule::generators() const { return d_->gens; }

const Matrix& GModule::act(int element) const {
  std::call_once(d_->elements_once, [this] {
    const auto& g = *d_->group;
    std::vector<Matrix> el(g.order());
    el[0] = Matrix::identity(*d_->field, d_->dim);
    for (std::size_t i = 1; i < g.order(); ++i)
      el[i] = d_->gens[g.bfs_gen(static_cast<int>(i))] * el[g.bfs_parent(static_cast<int>(i))];
    d_->elements = std::move(el);
  });
  return d_->elements[element];
}

const SpinBasis& GModule::spin_basis() const {
  std::call_once(d_->spin_once, [this] {
    const Field& f = *d_->field;
    const std::size_t n = d_->dim;
    const std::size_t ng = d_->gens.size();
    SpinBasis s;
    std::vector<std::vector<Elt>> vecs;
    // incremental reduced basis of the span
    std::vector<std::vector<Elt>> red;
    std::vector<std::size_t> piv;
    auto try_add = [&](std::vector<Elt> v) {
      std::vector<Elt> r = v;
      for (std::size_t i = 0; i < red.size(); ++i)
        if (r[piv[i]]) f.axpy(r.data(), red[i].data(), f.neg(r[piv[i]]), n);
      std::size_t p = 0;
      while (p < n && r[p] == 0) ++p;
      if (p == n) return false;
      f.scale(r.data(), f.inv(r[p]), n);
      red.push_back(std::move(r));
      piv.push_back(p);
      vecs.push_back(std::move(v));
      return true;
    };
    for (std::size_t e = 0; e < n && vecs.size() < n; ++e) {
      std::vector<Elt> unit(n, 0);
      unit[e] = 1;
      const std::size_t start = vecs.size();
      if (!try_add(unit)) continue;
      const int sd = static_cast<int>(s.num_seeds++);
      s.seed.push_back(sd);
      s.parent.push_back(-1);
      s.via.push_back(-1);
      for (std::size_t h = start; h < vecs.size(); ++h)
        for (std::size_t g = 0; g < ng; ++g) {
          if (try_add(d_->gens[g].apply(vecs[h]))) {
            s.seed.push_back(sd);
            s.parent.push_back(static_cast<int>(h));
            s.via.push_back(static_cast<int>(g));
          }
        }
    }
    s.t = Matrix(f, n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) s.t(i, j) = vecs[j][i];
    if (n > 0) {
      s.t_inv = *ffla::inverse(s.t);
      for (std::size_t g = 0; g < ng; ++g) s.coords.push_back(s.t_inv * (d_->gens[g] * s.t));
    } else {
      s.t_inv = s.t;
      s.coords.assign(ng, s.t);
    }
    d_->spin = std::move(s);
  });
  return d_->spin;
}

bool GModule::verify_relations() const {
  const auto& g = *d_->group;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t k = 0; k < g.num_generators(); ++k) {
      const int gx = g.mul(g.generators()[k], static_cast<int>(x));
      if (d_->gens[k] * act(static_cast<int>(x)) != act(gx)) return false;
    }
  return true;
}

bool GModule::same_algebra(const GModule& o) const { return d_->group == o.d_->group && d_->field == o.d_->field; }

void GModule::require_same_algebra(const GModule& o) const {
  if (d_->group != o.d_->group) throw MismatchError("modules over different groups");
  if (d_->field != o.d_->field) throw MismatchError("modules over different fields");
}

}  // namespace sttilt::rep
