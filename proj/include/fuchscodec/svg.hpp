#pragma once

#include <string>

#include "fuchscodec/codebook.hpp"
#include "fuchscodec/domain.hpp"

namespace fuchscodec {

/// Two-panel figure: the disk-model fundamental domain with the codebook
/// tiles on the left, the plane view of the constellation (both signs, tiles
/// projected to the half-plane) on the right. Codeword markers carry
/// class="codeword" and data-im attributes for structural checks.
std::string render_constellation_svg(const FundamentalDomain& domain, const Codebook& cb);

}  // namespace fuchscodec
