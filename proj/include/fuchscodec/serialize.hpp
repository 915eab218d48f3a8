#pragma once

#include <string>

#include "fuchscodec/channel.hpp"
#include "fuchscodec/codebook.hpp"
#include "fuchscodec/domain.hpp"
#include "fuchscodec/quadfield.hpp"
#include "fuchscodec/takeuchi.hpp"

namespace fuchscodec {

inline constexpr const char* kVersion = "0.1.0";

/// Floats print with 17 significant digits so a reload is bit-faithful.
std::string format_double(double v);

std::string quad_to_json(const QuadElement& e);
std::string map_to_json(const UnimodularMap& m);

std::string domain_to_json(const FundamentalDomain& domain);
std::string codebook_to_json(const Codebook& cb);
std::string registry_to_json();

/// Header line carried by every emitted file: version, tolerance, seed,
/// budget (unused fields print as '-').
std::string header_line(const std::string& command, double tol,
                        const std::string& seed = "-",
                        const std::string& budget = "-");

}  // namespace fuchscodec
