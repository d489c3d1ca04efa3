#pragma once

#include <optional>
#include <string>

#include "ktweb/format.hpp"
#include "ktweb/render.hpp"
#include "ktweb/separate.hpp"

namespace ktweb {

/// One input document. `alpha` entries given as integers or "p/q" strings
/// route the tuple to the exact backend; any other number makes it real.
struct InputDoc {
  KTParams alpha;
  std::optional<KTParams> alpha2;
  std::optional<Poly2> potential;
  std::optional<double> tol;
};

/// Parses a JSON document; throws ParseError on malformed input.
InputDoc parse_input(const std::string& text);

// Machine-readable reports, one compact JSON object each (no trailing newline).
std::string classify_json(const KTParams& p);
std::string equivalent_json(const KTParams& p, const KTParams& q, double tol);
std::string frame_json(const KTParams& p);
std::string canonical_json(const KTParams& p);
std::string separate_json(const KTParams& p, const Poly2& V);
std::string render_summary_json(const WebPlot& plot, const std::string& path);
std::string error_json(const std::string& type, const std::string& message);

}  // namespace ktweb
