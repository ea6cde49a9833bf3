#include "dynzsig/place.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "dynzsig/factor.hpp"

namespace dynzsig {

Place Place::finite(const BigInt& p) {
  if (!is_probable_prime(p)) throw std::invalid_argument("place: " + to_decimal(p) + " is not prime");
  Place v;
  v.prime_ = p;
  return v;
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.is_archimedean() || b.is_archimedean()) {
    return static_cast<int>(!a.is_archimedean()) <=> static_cast<int>(!b.is_archimedean());
  }
  const int c = cmp(a.prime(), b.prime());
  return c <=> 0;
}

std::string Place::str() const { return is_archimedean() ? "inf" : to_decimal(*prime_); }

PlaceSet::PlaceSet(std::initializer_list<long> primes) : PlaceSet() {
  for (long p : primes) insert(Place::finite(BigInt(p)));
}

PlaceSet PlaceSet::from_primes(const std::vector<BigInt>& primes) {
  PlaceSet s;
  for (const auto& p : primes) s.insert(Place::finite(p));
  return s;
}

PlaceSet PlaceSet::parse(const std::string& text) {
  PlaceSet s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    if (item == "inf" || item == "infinity") continue;
    s.insert(Place::finite(parse_bigint(item)));
  }
  return s;
}

void PlaceSet::insert(const Place& v) {
  const auto it = std::lower_bound(places_.begin(), places_.end(), v);
  if (it != places_.end() && *it == v) return;
  places_.insert(it, v);
}

bool PlaceSet::contains_prime(const BigInt& p) const {
  return std::any_of(places_.begin(), places_.end(),
                     [&](const Place& v) { return !v.is_archimedean() && v.prime() == p; });
}

std::vector<BigInt> PlaceSet::finite_primes() const {
  std::vector<BigInt> out;
  for (const auto& v : places_)
    if (!v.is_archimedean()) out.push_back(v.prime());
  return out;
}

std::string PlaceSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < places_.size(); ++i) {
    if (i) out += ", ";
    out += places_[i].str();
  }
  return out + "}";
}

}  // namespace dynzsig
