#pragma once

// Deterministic serialization: JSON documents (stable key order, bignums as
// decimal strings) plus plain CSV and aligned-table renderers shared by all
// subcommands.

#include <cstdint>
#include <gmpxx.h>
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "kloo/char_sums.hpp"
#include "kloo/codes.hpp"
#include "kloo/field.hpp"
#include "kloo/groups.hpp"
#include "kloo/verify.hpp"

namespace kloo {

using Json = nlohmann::ordered_json;

std::string hex_string(std::uint64_t v);

Json json_of(const FieldSpec& spec);
Json json_of(const MomentTable& table);
Json json_of(const TraceDistribution& dist);
Json json_of(const std::map<std::int64_t, std::int64_t>& spectrum);  // weight -> count
Json json_of(const WeightDistribution& wd);
Json json_of(const VerificationReport& report);

// {"schema":"1","kind":...} document shell
Json json_document(const std::string& kind);

// CSV per RFC 4180 (quote only when needed), trailing newline
std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows);

// space-padded columns, header then rows, trailing newline
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

}  // namespace kloo
