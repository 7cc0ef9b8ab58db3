#ifndef FLINTHILLS_CHECKPOINT_HPP
#define FLINTHILLS_CHECKPOINT_HPP

#include <string>

#include "flinthills/series.hpp"

namespace flinthills {

// JSON checkpoint for a resumable partial sum.  All numbers are decimal
// strings; an embedded content hash detects tampering or truncation.
void save_checkpoint(const SeriesState& state, const std::string& path);
SeriesState load_checkpoint(const std::string& path);

std::string state_to_json(const SeriesState& state);
SeriesState state_from_json(const std::string& text);

}  // namespace flinthills

#endif
