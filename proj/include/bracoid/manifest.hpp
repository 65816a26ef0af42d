#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "bracoid/bracoid.hpp"
#include "bracoid/cocycle.hpp"
#include "bracoid/groups.hpp"
#include "bracoid/hopf.hpp"

namespace bracoid {

enum class Kind { group, hopf, gskb, bracoid, brace, cocycle, morphism };

std::string_view kind_name(Kind k);

/// A group table as read from a file; it may violate the group axioms.
struct GroupData {
  CayleyTable table;
  std::size_t unit = 0;

  friend bool operator==(const GroupData&, const GroupData&) = default;
};

struct GskbMorphismData {
  GeneralizedSkewBracoid source;
  GeneralizedSkewBracoid target;
  GskbMorphism map;

  friend bool operator==(const GskbMorphismData&, const GskbMorphismData&) = default;
};

struct BracoidMorphismData {
  HopfBracoid source;
  HopfBracoid target;
  BracoidMorphism map;

  friend bool operator==(const BracoidMorphismData&, const BracoidMorphismData&) = default;
};

using Payload = std::variant<GroupData, HopfAlgebraData, GeneralizedSkewBracoid, HopfBracoid, HopfBrace, Cocycle,
                             GskbMorphismData, BracoidMorphismData>;

struct Manifest {
  std::string name;
  std::string notes;
  Payload payload;

  [[nodiscard]] Kind kind() const;
  friend bool operator==(const Manifest&, const Manifest&) = default;
};

/// Largest Hopf algebra dimension accepted when reading or building. Read
/// once from BRACOID_MAX_DIM (default 64) unless set explicitly.
std::size_t max_dim();
void set_max_dim(std::size_t n);
/// Throws BoundExceeded when dim is above max_dim().
void check_dim(std::size_t dim, std::string_view what);

/// Throws ParseError (with a JSON path) on malformed text or fields,
/// ShapeError on inconsistent dimensions or indices, BoundExceeded above
/// max_dim(), and PreconditionError when a bracoid manifest names groups that
/// are not groups.
Manifest parse_manifest(std::string_view text);
Manifest load_manifest(const std::string& path);
/// Canonical text: sorted keys, two-space indentation, arrays of scalars on
/// one line, maps as row-major [row, col, "p/q"] triplets, trailing newline.
std::string serialize_manifest(const Manifest& m);

}  // namespace bracoid
