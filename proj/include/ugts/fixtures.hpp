#pragma once

namespace ugts {

/// Distributed dining philosophers on an arbitrary network, the shipped demo
/// system. Same content as fixtures/dining.ugts.
extern const char* const kDiningSpec;

}  // namespace ugts
