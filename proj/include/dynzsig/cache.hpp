#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "dynzsig/factor.hpp"

namespace dynzsig {

/// Environment variable naming the default cache file.
inline constexpr const char* kCacheEnvVar = "DYNZSIG_CACHE";

/// Append-only JSON-lines store of factorizations, one object per line:
///   {"composite":"458330","complete":true,"factors":[["2",1],["5",1],...]}
/// Partial entries also carry "cofactor". A later complete line for the same
/// composite upgrades a partial one; nothing ever replaces a complete entry.
///
/// Writers serialize through "<path>.lock" (created exclusively); readers
/// never lock and skip a torn final line like any other corrupt line.
class FactorCache : public FactorMemo {
 public:
  explicit FactorCache(std::string path, std::chrono::milliseconds lock_timeout = std::chrono::seconds(10));

  const Factorization* lookup(const BigInt& n) override;
  void store(const BigInt& n, const Factorization& f) override;

  const std::string& path() const { return path_; }
  /// Diagnostics for skipped lines, in file order.
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::size_t hits() const { return hits_; }
  std::size_t appended() const { return appended_; }
  /// Entries currently loaded, complete or partial.
  std::size_t size() const { return entries_.size(); }
  bool has_partial(const BigInt& n) const;

  /// Re-reads the file from the start.
  void reload();

 private:
  void load_line(const std::string& line, std::size_t lineno);

  std::string path_;
  std::chrono::milliseconds lock_timeout_;
  std::map<BigInt, Factorization> entries_;
  std::vector<std::string> warnings_;
  std::size_t hits_ = 0;
  std::size_t appended_ = 0;
};

/// Serialized cache line for n (no trailing newline).
std::string cache_line(const BigInt& n, const Factorization& f);

}  // namespace dynzsig
