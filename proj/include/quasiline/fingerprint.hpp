#pragma once

#include <string>

#include "quasiline/embedding_scheme.hpp"

namespace quasiline {

/// Canonical text code of a connected scheme up to vertex relabeling,
/// reversal of local orientations and the matching signature switches.
/// Computed by breadth-first relabeling from every dart in both directions,
/// keeping the lexicographically least code. Only the rotation and signature
/// enter; labels and the opposite pairing do not. Throws Error(Disconnected).
std::string fingerprint(const EmbeddingScheme& s);

}  // namespace quasiline
