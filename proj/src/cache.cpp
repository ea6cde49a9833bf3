#include "dynzsig/cache.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace dynzsig {
namespace {

class LockFile {
 public:
  LockFile(std::string path, std::chrono::milliseconds timeout) : path_(std::move(path)) {
    const auto deadline = std::chrono::steady_clock::now() + timeout;
    while (true) {
      fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
      if (fd_ >= 0) return;
      if (errno != EEXIST) throw std::runtime_error("cache lock " + path_ + ": " + std::strerror(errno));
      if (std::chrono::steady_clock::now() > deadline)
        throw std::runtime_error("cache lock " + path_ + " held by another writer");
      std::this_thread::sleep_for(std::chrono::milliseconds(20));
    }
  }
  ~LockFile() {
    ::close(fd_);
    ::unlink(path_.c_str());
  }
  LockFile(const LockFile&) = delete;
  LockFile& operator=(const LockFile&) = delete;

 private:
  std::string path_;
  int fd_ = -1;
};

}  // namespace

std::string cache_line(const BigInt& n, const Factorization& f) {
  nlohmann::ordered_json j;
  j["composite"] = to_decimal(n);
  j["complete"] = f.complete();
  auto factors = nlohmann::json::array();
  for (const auto& [p, e] : f.factors) factors.push_back({to_decimal(p), e});
  j["factors"] = factors;
  if (!f.complete()) j["cofactor"] = to_decimal(f.cofactor);
  return j.dump();
}

FactorCache::FactorCache(std::string path, std::chrono::milliseconds lock_timeout)
    : path_(std::move(path)), lock_timeout_(lock_timeout) {
  reload();
}

void FactorCache::reload() {
  entries_.clear();
  warnings_.clear();
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    load_line(line, lineno);
  }
}

void FactorCache::load_line(const std::string& line, std::size_t lineno) {
  const std::string where = path_ + ":" + std::to_string(lineno) + ": ";
  try {
    const auto j = nlohmann::json::parse(line);
    const BigInt n = parse_bigint(j.at("composite").get<std::string>());
    if (n < 2) throw std::invalid_argument("composite must be >= 2");
    Factorization f;
    for (const auto& item : j.at("factors")) {
      const BigInt p = parse_bigint(item.at(0).get<std::string>());
      const unsigned e = item.at(1).get<unsigned>();
      if (p < 2 || e == 0) throw std::invalid_argument("bad factor entry");
      f.factors[p] += e;
    }
    const bool complete = j.at("complete").get<bool>();
    if (!complete) f.cofactor = parse_bigint(j.at("cofactor").get<std::string>());
    if (complete != f.complete() || f.cofactor < 1) throw std::invalid_argument("complete flag disagrees with cofactor");
    if (f.product() != n) throw std::invalid_argument("factors do not reconstruct the composite");
    for (const auto& [p, e] : f.factors)
      if (!is_probable_prime(p)) throw std::invalid_argument("listed factor " + to_decimal(p) + " is not prime");

    auto it = entries_.find(n);
    if (it == entries_.end()) {
      entries_.emplace(n, std::move(f));
    } else if (!it->second.complete() && f.complete()) {
      it->second = std::move(f);
    }
  } catch (const std::exception& e) {
    warnings_.push_back(where + "skipped corrupt cache line (" + e.what() + ")");
  }
}

bool FactorCache::has_partial(const BigInt& n) const {
  const auto it = entries_.find(n);
  return it != entries_.end() && !it->second.complete();
}

const Factorization* FactorCache::lookup(const BigInt& n) {
  const auto it = entries_.find(n);
  if (it == entries_.end() || !it->second.complete()) return nullptr;
  ++hits_;
  return &it->second;
}

void FactorCache::store(const BigInt& n, const Factorization& f) {
  if (n < 2) return;
  const auto it = entries_.find(n);
  if (it != entries_.end() && (it->second.complete() || !f.complete())) return;
  {
    LockFile lock(path_ + ".lock", lock_timeout_);
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to cache " + path_);
    out << cache_line(n, f) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write to cache " + path_ + " failed");
  }
  ++appended_;
  entries_[n] = f;
}

}  // namespace dynzsig
