// SPDX-License-Identifier: Apache-2.0
//
// Instantaneous SINRs of the three SIC stages (decode x2, then x1, then
// the backscatter signal).  The Monte Carlo engine thresholds against
// these and nothing else.

#pragma once

#include "ambcsec/channel.hpp"
#include "ambcsec/iqi.hpp"

namespace ambcsec {

/// SINR of receiver i decoding the far user's signal x2.
double sinr_x2(Receiver i, const FadingSample& s, const ReceiverComposites& c,
               const SystemParams& p);

/// SINR at the far user for its own signal; identical to
/// sinr_x2(far_user, ...).
double sinr_far_x2(const FadingSample& s, const ReceiverComposites& c_df,
                   const SystemParams& p);

/// SINR of receiver i decoding x1 after cancelling x2 (the a2*B + M term
/// is the imbalance-induced cancellation residual).
double sinr_x1(Receiver i, const FadingSample& s, const ReceiverComposites& c,
               const SystemParams& p);

/// SINR of receiver i decoding the backscatter signal after cancelling
/// both x2 and x1.
double sinr_c(Receiver i, const FadingSample& s, const ReceiverComposites& c,
              const SystemParams& p);

} // namespace ambcsec
