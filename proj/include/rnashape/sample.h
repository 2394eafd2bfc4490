#ifndef RNASHAPE_SAMPLE_H_
#define RNASHAPE_SAMPLE_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rnashape/diagram.h"
#include "rnashape/enumerate.h"

namespace rnashape {

// Complete, canonically sorted list of shapes for (backbones, genus). For
// two backbones only connected shapes are listed.
struct ShapeTable {
  int backbones = 1;
  int genus = 0;
  std::vector<Diagram> shapes;
  std::string source;  // "enumerated" or "cache"
  std::string digest;  // hex SHA-256 of the canonical codes, one per line
};

struct TableOptions {
  // When set, tables are read from / written to this directory.
  std::optional<std::filesystem::path> cache_dir;
  ShapeEnumOptions enumeration;
};

// Environment variable naming the default table cache directory.
inline constexpr const char* kCacheDirEnv = "RNASHAPE_CACHE_DIR";

std::string TableDigest(const std::vector<Diagram>& shapes);

// Enumerates (or reloads) the table. A reload checks the stored digest, the
// count against the shape polynomial at z = 1, and that every entry is a
// shape of the right genus; any mismatch throws ConsistencyError.
ShapeTable BuildTable(int backbones, int genus,
                      const TableOptions& options = {});

// Seeded 64-bit Mersenne Twister. Stream k of seed s is seeded with
// splitmix64(s + k * golden_gamma), so parallel experiments use distinct
// streams of the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  // Unbiased draw from [0, n): raw words at or above the largest multiple
  // of n below 2^64 are rejected.
  std::uint64_t UniformIndex(std::uint64_t n);
  std::uint64_t Next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Uniform draw from a one-backbone table.
const Diagram& UniformShape(const ShapeTable& table, Rng& rng);

// Draws connected two-backbone shapes of genus g uniformly, from a table of
// one-backbone shapes of genus g+1: draw s; map A-shapes through
// EtaInverse and B-shapes through EtaInverse o ThetaInverse; retry while
// the result is disconnected.
class BishapeSampler {
 public:
  explicit BishapeSampler(const ShapeTable& one_backbone_table);

  int genus() const { return table_.genus - 1; }
  // Optional filter on the total arc count (local sampling). Throws
  // PreconditionError if no shape of genus g has that many arcs.
  Diagram Draw(Rng& rng, std::optional<int> arcs = std::nullopt);

  std::uint64_t attempts() const { return attempts_; }
  std::uint64_t accepted() const { return accepted_; }

 private:
  const ShapeTable& table_;
  std::uint64_t attempts_ = 0;  // one-backbone draws
  std::uint64_t accepted_ = 0;  // connected results
};

// Order-independent accumulator; merging adds sums.
struct SampleStats {
  std::uint64_t samples = 0;
  // Non-plant loops whose arcs all stay on one backbone, and the rest.
  double alpha_sum = 0, alpha_sq = 0;
  double beta_sum = 0, beta_sq = 0;
  std::map<int, std::uint64_t> arc_histogram;
  std::map<int, std::uint64_t> loop_length_histogram;
  std::uint64_t attempts = 0;
  std::uint64_t accepted = 0;

  void Add(const Diagram& shape);
  void Merge(const SampleStats& other);
  double alpha_mean() const;
  double alpha_variance() const;
  double beta_mean() const;
  double beta_variance() const;
  std::string ToCsv() const;
};

struct SamplerConfig {
  std::uint64_t seed = 0;
  int genus = 0;
  std::optional<int> arcs;
  std::uint64_t count = 0;
};

// Draws config.count shapes and accumulates statistics. `each`, if set, sees
// every drawn shape in order.
SampleStats SampleShapes(const SamplerConfig& config,
                         const ShapeTable& one_backbone_table,
                         const std::function<void(const Diagram&)>& each = {});

}  // namespace rnashape

#endif  // RNASHAPE_SAMPLE_H_
