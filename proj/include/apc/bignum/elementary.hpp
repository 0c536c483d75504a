#pragma once
// Elementary functions on BigFloat.
//
// Each kernel works internally with two or more guard limbs beyond the
// requested context and rounds once on exit, giving results within one
// ulp at ctx.bits().

#include <cstdint>

#include "apc/bignum/bigfloat.hpp"

namespace apc {

// Throws DomainError for x <= 0.
BigFloat log(const BigFloat& x, const PrecisionContext& ctx);
// Throws RangeError when the result exponent would overflow.
BigFloat exp(const BigFloat& x, const PrecisionContext& ctx);
BigFloat sin(const BigFloat& x, const PrecisionContext& ctx);
BigFloat cos(const BigFloat& x, const PrecisionContext& ctx);

// Natural log of 2.
BigFloat ln2(const PrecisionContext& ctx);

// pi from the Bailey-Borwein-Plouffe series
//   sum_k 16^-k (4/(8k+1) - 2/(8k+4) - 1/(8k+5) - 1/(8k+6)),
// summed until 16^-k drops below the guarded working precision.
BigFloat pi_bbp(const PrecisionContext& ctx);
// Sum of the first `terms` series terms only.
BigFloat pi_bbp_partial(std::uint32_t terms, const PrecisionContext& ctx);

// Complementary error function: power series for |x| <= 3, continued
// fraction beyond.
BigFloat erfc(const BigFloat& x, const PrecisionContext& ctx);

}  // namespace apc
