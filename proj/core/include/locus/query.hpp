#pragma once

#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "locus/frame.hpp"

namespace locus {

/// Answers one question about a frame, as JSON.
///
///   booleanization, sublocale-count, dense-in-itself?
///   remote-set S=X, star-remote-set S=X, rs S=X, star-rs S=X, nd S=X
///   rare? A=X
///
/// X is "L", "BL" or a label list such as "{0,a,1}". Sublocales come back as
/// sorted label arrays and families as sorted arrays of those.
/// Throws InvalidInput for an unknown question, NotASublocale or NotDense for a bad X.
nlohmann::json answer_query(const FramePtr& frame, std::string_view question);

}  // namespace locus
