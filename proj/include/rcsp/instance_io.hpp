#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rcsp/instance.hpp"

namespace rcsp {

/// Parses the line-based `RCSP 1` text format. Vertex ids must be 0..n-1 (any
/// order); a vertex missing from its own NG list is added. Throws ParseError
/// for syntax problems and ValidationError for violated invariants.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

/// Canonical form: resources, vertices and NG members in ascending id order,
/// edges in input order, explicit Q for every interval resource.
std::string serialize_instance(const Instance& instance);

}  // namespace rcsp
