#pragma once

#include <string>
#include <variant>

#include "wpm/instance.hpp"

namespace wpm {

using AnyInstance = std::variant<FullInstance, ReducedInstance>;

// Instance file schema, version 1. UTF-8 JSON with exactly these fields:
//   version=1, kind ("full"|"reduced"), m, w1, w2,
//   full:    prefs_a1, prefs_a2   (arrays of permutations of 0..m-1)
//   reduced: f1, s1, f2, s2       (arrays of item ids in [0, m))
// Unknown fields are rejected. Structural/schema problems throw
// InvalidParams; semantic ReducedInstance violations are left to validate().
AnyInstance read_instance(const std::string& path);
AnyInstance parse_instance(const std::string& json_text);

std::string instance_to_json(const FullInstance& inst);
std::string instance_to_json(const ReducedInstance& inst);

void write_instance(const std::string& path, const FullInstance& inst);
void write_instance(const std::string& path, const ReducedInstance& inst);

}  // namespace wpm
