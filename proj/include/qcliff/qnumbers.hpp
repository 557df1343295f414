#pragma once

// q-integers, the Clifford parameters Lambda_m and the q-bracket gadgets.
//
// Lambda_m = (q^{2m} - q^{-2m}) / (q^2 - q^{-2}) is invariant under q -> -q and
// q -> 1/q, so it is a polynomial in t = q^2 + q^{-2}. Many computations run in
// the variable t and are moved back to q with t_to_q.

#include "qcliff/ratfunc.hpp"

#include <optional>
#include <utility>

namespace qcliff {

/// [n]_q = (q^n - q^{-n}) / (q - q^{-1}).
RatFunc q_int(long n);
/// Lambda_m as a Laurent polynomial in q.
RatFunc lambda_cap(long m);
/// Lambda_m as a polynomial in t; Lambda_{-m} = -Lambda_m.
Poly lambda_cap_t(long m);

/// ([q^m; n]_q, (q^m; n)_q) = ((q^{m+n} - q^{-m-n})/(q - q^{-1}), (q^{m+n} - 1)/(q - 1)).
std::pair<RatFunc, RatFunc> gadget_values(long m, long n);

/// f(1); throws std::domain_error if q = 1 is a pole.
FieldElement eval_at_one(const RatFunc& f);

/// Substitutes t = q^2 + q^{-2}.
RatFunc t_to_q(const RatFunc& f);
/// Writes f(q) as a function of t when f is invariant under q -> -q and q -> 1/q.
std::optional<RatFunc> q_to_t(const RatFunc& f);

/// f(q) with q replaced by q^k (k may be negative).
RatFunc substitute_power(const RatFunc& f, long k);

}  // namespace qcliff
