#include "rnashape/sample.h"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "rnashape/bijections.h"
#include "rnashape/errors.h"
#include "rnashape/fatgraph.h"
#include "rnashape/series.h"
#include "rnashape/shape.h"

namespace rnashape {

std::string TableDigest(const std::vector<Diagram>& shapes) {
  std::string text;
  for (const Diagram& d : shapes) {
    text += CanonicalCode(d);
    text += '\n';
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) !=
      1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 15];
  }
  return hex;
}

namespace {

BigInt ExpectedCount(int backbones, int genus) {
  if (backbones == 1) {
    return genus == 0 ? BigInt(0) : ShapePolynomial1(genus).Evaluate(1);
  }
  return ShapePolynomial2(genus).Evaluate(1);
}

std::filesystem::path CachePath(const std::filesystem::path& dir,
                                int backbones, int genus) {
  return dir / ("shapes_b" + std::to_string(backbones) + "_g" +
                std::to_string(genus) + ".txt");
}

void WriteCache(const ShapeTable& t, const std::filesystem::path& path) {
  std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp);
    out << "# rnashape shape table\n";
    out << "# backbones " << t.backbones << " genus " << t.genus << " count "
        << t.shapes.size() << " digest " << t.digest << '\n';
    for (const Diagram& d : t.shapes) out << CanonicalCode(d) << '\n';
    if (!out) throw Error("cannot write table cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

ShapeTable ReadCache(int backbones, int genus,
                     const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  std::istringstream header(line);
  std::string hash, kb, kg, kc, kd, digest;
  int b = -1, g = -1;
  std::size_t count = 0;
  header >> hash >> kb >> b >> kg >> g >> kc >> count >> kd >> digest;
  if (!header || kb != "backbones" || b != backbones || g != genus) {
    throw ConsistencyError("table cache header mismatch in " + path.string());
  }
  ShapeTable t;
  t.backbones = backbones;
  t.genus = genus;
  t.source = "cache";
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      t.shapes.push_back(ParseDiagram(line).AssumePlanted());
    } catch (const Error& e) {
      throw ConsistencyError("corrupt table cache " + path.string() + ": " +
                             e.what());
    }
  }
  t.digest = TableDigest(t.shapes);
  if (t.shapes.size() != count || t.digest != digest) {
    throw ConsistencyError("table cache digest mismatch in " + path.string());
  }
  if (BigInt(t.shapes.size()) != ExpectedCount(backbones, genus)) {
    throw ConsistencyError("table cache cardinality disagrees with the shape "
                           "polynomial in " + path.string());
  }
  for (const Diagram& d : t.shapes) {
    if (d.backbones() != backbones || !IsShape(d) || Genus(d) != genus) {
      throw ConsistencyError("table cache holds a non-shape in " +
                             path.string());
    }
  }
  return t;
}

}  // namespace

ShapeTable BuildTable(int backbones, int genus, const TableOptions& options) {
  if (options.cache_dir) {
    auto path = CachePath(*options.cache_dir, backbones, genus);
    if (std::filesystem::exists(path)) return ReadCache(backbones, genus, path);
  }
  ShapeTable t;
  t.backbones = backbones;
  t.genus = genus;
  t.source = "enumerated";
  t.shapes = EnumerateShapes(backbones, genus, options.enumeration);
  t.digest = TableDigest(t.shapes);
  if (options.cache_dir) {
    WriteCache(t, CachePath(*options.cache_dir, backbones, genus));
  }
  return t;
}

namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : engine_(SplitMix64(seed + stream * 0x9e3779b97f4a7c15ULL)) {}

std::uint64_t Rng::UniformIndex(std::uint64_t n) {
  if (n == 0) throw PreconditionError("cannot draw from an empty range");
  const std::uint64_t rem = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    std::uint64_t x = engine_();
    if (rem == 0 || x < 0 - rem) return x % n;
  }
}

const Diagram& UniformShape(const ShapeTable& table, Rng& rng) {
  if (table.shapes.empty()) throw PreconditionError("shape table is empty");
  return table.shapes[rng.UniformIndex(table.shapes.size())];
}

BishapeSampler::BishapeSampler(const ShapeTable& one_backbone_table)
    : table_(one_backbone_table) {
  if (table_.backbones != 1 || table_.genus < 1) {
    throw PreconditionError(
        "bishape sampling needs a one-backbone table of genus >= 1");
  }
}

Diagram BishapeSampler::Draw(Rng& rng, std::optional<int> arcs) {
  if (arcs && ShapePolynomial2(genus())[*arcs] == 0) {
    throw PreconditionError("no two-backbone shape of genus " +
                            std::to_string(genus()) + " has " +
                            std::to_string(*arcs) + " arcs");
  }
  for (;;) {
    ++attempts_;
    const Diagram& s1 = UniformShape(table_, rng);
    Diagram s2 = ClassifyShape(s1) == ShapeClass::kA
                     ? EtaInverse(s1)
                     : EtaInverse(ThetaInverse(s1));
    if (!IsConnected(s2)) continue;
    ++accepted_;
    if (arcs && s2.arc_count() != *arcs) continue;
    return s2;
  }
}

void SampleStats::Add(const Diagram& shape) {
  ++samples;
  ++arc_histogram[shape.arc_count()];
  LoopProfile p = ClassifyLoops(shape.planted() ? shape : shape.AssumePlanted());
  int alpha = 0, beta = 0;
  for (const Loop& loop : p.loops) {
    if (loop.type == LoopType::kPlant) continue;
    ++loop_length_histogram[loop.length];
    if (loop.alpha) {
      ++alpha;
    } else {
      ++beta;
    }
  }
  alpha_sum += alpha;
  alpha_sq += double(alpha) * alpha;
  beta_sum += beta;
  beta_sq += double(beta) * beta;
}

void SampleStats::Merge(const SampleStats& o) {
  samples += o.samples;
  alpha_sum += o.alpha_sum;
  alpha_sq += o.alpha_sq;
  beta_sum += o.beta_sum;
  beta_sq += o.beta_sq;
  for (auto [k, v] : o.arc_histogram) arc_histogram[k] += v;
  for (auto [k, v] : o.loop_length_histogram) loop_length_histogram[k] += v;
  attempts += o.attempts;
  accepted += o.accepted;
}

namespace {

double Mean(double sum, std::uint64_t n) { return n ? sum / n : 0.0; }

double Variance(double sum, double sq, std::uint64_t n) {
  if (n < 2) return 0.0;
  double m = sum / n;
  return (sq - n * m * m) / (n - 1);
}

}  // namespace

double SampleStats::alpha_mean() const { return Mean(alpha_sum, samples); }
double SampleStats::beta_mean() const { return Mean(beta_sum, samples); }
double SampleStats::alpha_variance() const {
  return Variance(alpha_sum, alpha_sq, samples);
}
double SampleStats::beta_variance() const {
  return Variance(beta_sum, beta_sq, samples);
}

std::string SampleStats::ToCsv() const {
  std::ostringstream out;
  out.precision(10);
  out << "section,key,value\n";
  out << "summary,samples," << samples << '\n';
  out << "summary,attempts," << attempts << '\n';
  out << "summary,accepted," << accepted << '\n';
  out << "summary,alpha_mean," << alpha_mean() << '\n';
  out << "summary,alpha_variance," << alpha_variance() << '\n';
  out << "summary,beta_mean," << beta_mean() << '\n';
  out << "summary,beta_variance," << beta_variance() << '\n';
  for (auto [k, v] : arc_histogram) out << "arcs," << k << ',' << v << '\n';
  for (auto [k, v] : loop_length_histogram) {
    out << "loop_length," << k << ',' << v << '\n';
  }
  return out.str();
}

SampleStats SampleShapes(const SamplerConfig& config,
                         const ShapeTable& one_backbone_table,
                         const std::function<void(const Diagram&)>& each) {
  if (one_backbone_table.genus != config.genus + 1) {
    throw PreconditionError("sampling genus " + std::to_string(config.genus) +
                            " needs the one-backbone table of genus " +
                            std::to_string(config.genus + 1));
  }
  BishapeSampler sampler(one_backbone_table);
  Rng rng(config.seed);
  SampleStats stats;
  for (std::uint64_t i = 0; i < config.count; ++i) {
    Diagram s = sampler.Draw(rng, config.arcs);
    stats.Add(s);
    if (each) each(s);
  }
  stats.attempts = sampler.attempts();
  stats.accepted = sampler.accepted();
  return stats;
}

}  // namespace rnashape
