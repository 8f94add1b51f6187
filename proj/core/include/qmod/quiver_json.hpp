#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qmod/quiver.hpp"

namespace qmod {

/// Contents of a quiver file: {"vertices": k, "arrows": [[s,t], ...]} with an
/// optional "dims" array (present on emitted local quivers).
struct QuiverFile {
  Quiver quiver;
  std::optional<DimVector> dims;
};

QuiverFile parse_quiver_json(std::string_view text);
QuiverFile read_quiver_file(const std::string& path);

/// Compact single-line JSON; repeated [s,t] pairs encode multiplicity.
std::string quiver_to_json(const Quiver& q, const std::optional<DimVector>& dims = std::nullopt);

}  // namespace qmod
