#pragma once

#include <optional>
#include <vector>

#include "skein/polyseq.hpp"
#include "skein/report.hpp"

// Bounded reproductions of the positivity arguments: every verdict is for
// the stated n_max / box only.
namespace skein::positivity {

// T-hat_0..T-hat_{k-1} followed by T-hat_k + sum_i delta[i] T-hat_i.
SeqPtr perturbed_that(int level, const std::vector<int>& delta);

// Searches the witness products for a negative structure constant of the
// perturbed sequence, in this order:
//   P_k((1,0)) P_1((0,1))   torus, reads off delta_i < 0
//   P_1((k,1)) P_1((0,1))   torus, reads off delta_i > 0
//   P_1(z) P_{k-1}(z)       annulus subalgebra R[z]
//   P_2(z) P_{k-2}(z)       annulus subalgebra R[z]
std::optional<Witness> kill_perturbation(int level, const std::vector<int>& delta);

// Every nonzero integer perturbation with |delta_i| <= box at levels
// 2..n_max (lower levels held at T-hat) must be killed, and T-hat itself
// must pass the same products. Violation witnesses are surviving perturbations.
PositivityReport torus_uniqueness(int n_max, int box);

// P_n(a) P_1(b) on the four-punctured sphere for 2 <= n <= n_max; the b_i
// coefficients q^{+-2i} delta_i must be positive, i.e. (T-hat) <= (P).
// Cross-checked against expand_in(P_n, T-hat).
PositivityReport lower_bound_certify(const SeqPtr& p, int n_max);

// (T-hat) <= (P) <= (S) up to n_max.
PositivityReport sandwich_check(const SeqPtr& p, int n_max);

}  // namespace skein::positivity
