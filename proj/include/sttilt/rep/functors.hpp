#pragma once

#include <vector>

#include "sttilt/grp/subgroup.hpp"
#include "sttilt/rep/module.hpp"

namespace sttilt::rep {

GModule trivial(const GroupPtr& g, const Field& f);
/// Left translation on the basis {e_x}: g e_x = e_gx.
GModule regular(const GroupPtr& g, const Field& f);
/// Permutation module on the left cosets of h.
GModule coset_module(const grp::Subgroup& h, const Field& f);

GModule direct_sum(const std::vector<GModule>& ms);
GModule tensor(const GModule& a, const GModule& b);
/// Contragredient: g acts by rho(g^-1)^T.
GModule dual(const GModule& m);

/// Module over h.group.
GModule restrict(const GModule& m, const grp::Subgroup& h);
/// kG (x)_kH V with basis t_i (x) v, t_i the left coset representatives.
GModule induce(const GModule& v, const grp::Subgroup& h);
/// x acts by rho(g^-1 x g); n is the normal subgroup the module lives on,
/// g an element of n.parent.
GModule conjugate(const GModule& m, const grp::Subgroup& n, int g);
/// Pull a module over q.group back to the parent group.
GModule inflate(const GModule& m, const grp::Quotient& q);

/// Image of x under the matrix representation of an element of kG given by
/// its coefficient vector over the group elements.
Matrix algebra_element(const GModule& m, const std::vector<Elt>& coeffs);

}  // namespace sttilt::rep
