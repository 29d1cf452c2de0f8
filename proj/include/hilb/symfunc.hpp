#pragma once

#include "hilb/fock.hpp"
#include "hilb/laurent.hpp"
#include "hilb/partitions.hpp"

// Symmetric functions under the dictionary p_lambda <-> a_{-lambda}|0>.
// The Macdonald parameters (q, t) ride in the t1, t2 coefficient slots; the
// Jack parameter is the alpha slot.
namespace hilb::symf {

enum class IPKind { jack, macdonald };

// <p_la, p_la> for the chosen deformation: z_la alpha^{l(la)} resp.
// z_la prod (1-q^{la_i})/(1-t^{la_i}); the p basis is orthogonal.
RatFunc ip_diag(IPKind kind, const Partition& la);
RatFunc inner(IPKind kind, const FockVector& f, const FockVector& g);

// m_mu expressed in the p basis (cached per degree).
FockVector m_in_p(const Partition& mu);
// Transition p_{la_i} = sum_j R[i][j] m_{mu_j}, rows/cols in enumeration
// order of partitions_of(n).
std::vector<std::vector<Rat>> p_to_m_matrix(int n);

// Monic orthogonal family: P_la = m_la + (dominance-lower m's), orthogonal
// to every P_mu with mu strictly dominated by la.  Cached.  The degree bound
// guards against accidental runaway requests.
FockVector gram_schmidt_P(IPKind kind, const Partition& la, int degree_bound = 8);

// Integral forms.
FockVector jack_J(const Partition& la);       // prod (alpha a + l + 1) * P
FockVector macdonald_J(const Partition& la);  // prod (1 - q^a t^{l+1}) * P

// t^{n(la)} J_la(q, 1/t) with p_k stretched by 1/(1 - t^{-k}).
FockVector transformed_H(const Partition& la);
// Inverse route: t^{n(la)} H(q, 1/t) with p_k shrunk by (1 - t^k).
FockVector macdonald_J_from_H(const Partition& la);

// Substitute the (q,t) slots of every coefficient.
FockVector subst_qt(const FockVector& f, const RatFunc& q_val, const RatFunc& t_val);

// Jack integral form recovered as the constant term in t0 of
// (1-t)^{-|la|} J_la(q,t) at q = e^{alpha t0}, t = e^{t0}; cross-check for
// the Gram-Schmidt route.
FockVector jack_J_via_limit(const Partition& la, int t0_order);

// Fixed-point class: t2^{|la|} t1^{l(.)} applied to jack_J at
// alpha = -t1/t2 (the p_mu coefficient picks up t1^{l(mu)}).
FockVector fixed_point_class(const Partition& la);

// exp(c x) as a series in an auxiliary variable.
Laurent<RatFunc> exp_linear(const RatFunc& c, char tag, int order);

}  // namespace hilb::symf
