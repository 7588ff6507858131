#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gammafuzz/algebra.hpp"
#include "gammafuzz/error.hpp"
#include "gammafuzz/membership.hpp"

namespace gammafuzz::cli {

/// Malformed document: bad JSON, missing keys, wrong value types, decimal
/// memberships.
class DocError : public Error {
public:
    using Error::Error;
};

/// On-disk form of a structure plus optional named subsets and a default
/// chain.
struct StructureDoc {
    SemiringTables tables;
    std::map<std::string, std::vector<Membership>> subsets;
    std::optional<std::vector<Membership>> default_chain;

    friend bool operator==(const StructureDoc&, const StructureDoc&) = default;
};

/// Throws DocError on malformed input and ShapeError on negative entries.
/// Table shapes are checked when the GammaSemiring is built.
StructureDoc parse_structure_doc(const std::string& text);

/// Canonical form: fixed key order, one key per line, compact values.
/// parse(emit(d)) == d and emit is a fixed point on its own output.
std::string emit_structure_doc(const StructureDoc& doc);

/// Parsed document together with the structure built from it. The structure
/// is heap-allocated so fuzzy subsets can keep pointing at it.
struct LoadedStructure {
    StructureDoc doc;
    std::unique_ptr<GammaSemiring> structure;
};

/// Reads and parses a file and builds the structure (shape checked only).
/// Throws DocError when the file cannot be read.
LoadedStructure load_structure(const std::string& path);

} // namespace gammafuzz::cli
