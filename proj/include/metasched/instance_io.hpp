#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metasched/model.hpp"

namespace metasched {

class ParseError : public ModelError {
public:
  using ModelError::ModelError;
};

inline constexpr std::string_view kAoaFormat = "aoa-v1";
inline constexpr std::string_view kTctpFormat = "tctp-v1";

/// Parses an `aoa-v1` document. Record order is preserved.
std::vector<AoaArc> parse_aoa_instance(std::string_view document);

/// Parses a `tctp-v1` document. `indirect_override`, when set, replaces
/// the file's `indirect_cost_per_day`. The result may still lack an
/// indirect cost; callers that evaluate costs must check.
TctpInstance parse_tctp_instance(std::string_view document,
                                 std::optional<Money> indirect_override = std::nullopt);

std::string serialize_aoa(const std::vector<AoaArc>& arcs, std::string_view name = {});
std::string serialize_tctp(const TctpInstance& instance, std::string_view name = {});

/// Reads the `"format"` field of a document without validating the rest.
std::string document_format(std::string_view document);

struct BundledInstance {
  std::string_view name;
  std::string_view format;
  std::size_t activity_count;
  std::string_view provenance;
  std::string_view document;
};

const std::vector<BundledInstance>& bundled_instances();
const BundledInstance* find_bundled(std::string_view name);

/// Returns the text of a bundled instance by name, otherwise reads the file.
std::string load_document(const std::string& reference);

/// Loads an activity network from either format; TCTP instances yield
/// their network with option-1 durations.
ProjectNetwork load_network(const std::string& reference);

}  // namespace metasched
