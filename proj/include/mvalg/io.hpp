#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "mvalg/multigroup.hpp"
#include "mvalg/multiring.hpp"
#include "mvalg/real_semigroup.hpp"
#include "mvalg/sign_space.hpp"
#include "mvalg/special_group.hpp"

namespace mvalg {

using Structure = std::variant<FiniteMultigroup, FiniteMultiring, SpecialGroup, RealSemigroup, SignSpace>;

/// "multigroup", "multiring", "special_group", "real_semigroup", "sign_space".
std::string_view kind_name(const Structure& s);

struct StructureFile {
  std::string name;
  std::string provenance;
  Structure value;
};

/// Parses the JSON structure format. Syntax errors report line and column;
/// semantic errors report the JSON path of the offending value. Always
/// InputError.
StructureFile parse_structure(std::string_view text);
/// Canonical text: fixed key order, one table row per line, trailing newline.
std::string serialize(const StructureFile& f);

StructureFile load_structure(const std::filesystem::path& path);
void save_structure(const std::filesystem::path& path, const StructureFile& f);

}  // namespace mvalg
