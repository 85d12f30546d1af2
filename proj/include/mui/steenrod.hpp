#pragma once

#include "mui/koszul.hpp"

namespace mui {

// Bockstein: odd derivation with beta(dt_i) = t_i, beta(t_i) = 0.
Element bockstein(const Element& x);

// Milnor operation Q_i in closed form: odd derivation dt_j -> t_j^{p^i}.
// Raises degree by 2 p^i - 1.
Element milnor_q(int i, const Element& x);

// Steenrod reduced power P^k, from the multiplicative total power
// t -> t + t^p, dt -> dt.
Element reduced_power(int k, const Element& x);

// Q_i by the commutator recursion Q_0 = beta, Q_{i+1} = P^{p^i} Q_i - Q_i P^{p^i}.
// Test oracle for milnor_q; cost grows quickly with i.
Element milnor_q_recursive(int i, const Element& x);

// Composite Q_I x = Q_{i1} ... Q_{ir} x for strictly increasing I
// (rightmost factor applied first).
Element q_composite(const std::vector<int>& I, const Element& x);

} // namespace mui
