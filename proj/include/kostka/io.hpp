#pragma once

// JSON encodings, text renderers and fixture persistence.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "kostka/catalan.hpp"
#include "kostka/hardness.hpp"
#include "kostka/kgr.hpp"
#include "kostka/littlewood_richardson.hpp"
#include "kostka/semigroup.hpp"

namespace kostka {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const KostkaPair& p);
Json to_json(const Grid& g);
Json to_json(const CanonicalMatrix& a, bool with_history = true);
Json to_json(const StarMatrix& s);
Json to_json(const ShapeSequence& seq);
Json to_json(const Decomposition& d);
Json to_json(const KgrGraph& g);
Json to_json(const KgrGraph& g, const SubtreeWitness& w);
Json to_json(const RaySpec& s);
Json to_json(const BasisCatalog& c);
Json to_json(const WidthAuditReport& r);
Json to_json(const KimReport& r);
Json to_json(const ReductionReport& r);
Json to_json(const LrTriple& t);
Json to_json(const FamilyReport& r);

Partition partition_from_json(const Json& j);
KostkaPair pair_from_json(const Json& j, int rank);

/// Young diagrams of lambda and mu side by side, one text row per diagram row.
std::string young_pair_text(const KostkaPair& p);

/// Table-style listing of a catalog, several pairs per line.
std::string catalog_text(const BasisCatalog& c, int per_line = 4);

/// 64-bit FNV-1a over the bytes of s.
std::uint64_t fnv1a64(std::string_view s);
std::string hex64(std::uint64_t h);

inline constexpr int kCatalogFormatVersion = 1;

/// Hash of the canonical element listing (rank and pairs only).
std::string catalog_hash(const BasisCatalog& c);

void save_catalog(const BasisCatalog& c, const std::filesystem::path& file);

/// Reads and validates a catalog file: version, hash, cone membership and
/// canonical order. Throws Error on any mismatch.
BasisCatalog load_catalog(const std::filesystem::path& file);

std::filesystem::path catalog_file(const std::filesystem::path& dir, int rank);

/// Structural differences between two JSON documents, one line per
/// differing path. Empty when equal.
std::vector<std::string> json_diff(const Json& expected, const Json& actual, const std::string& path = "$");

/// Element-level differences between catalogs ("missing ..." / "extra ...").
std::vector<std::string> catalog_diff(const BasisCatalog& expected, const BasisCatalog& actual);

}  // namespace kostka
