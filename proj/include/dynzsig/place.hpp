#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "dynzsig/bigint.hpp"

namespace dynzsig {

/// A place of Q: the archimedean absolute value or a p-adic one.
/// Over Q every local degree d_v is 1.
class Place {
 public:
  static Place infinity() { return Place(); }
  /// Throws std::invalid_argument unless p is prime.
  static Place finite(const BigInt& p);

  bool is_archimedean() const { return !prime_.has_value(); }
  /// Only meaningful for finite places.
  const BigInt& prime() const { return *prime_; }

  friend bool operator==(const Place& a, const Place& b) { return a.prime_ == b.prime_; }
  /// Infinity sorts first, then primes ascending.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);

  std::string str() const;

 private:
  Place() = default;
  std::optional<BigInt> prime_;
};

/// Finite set of places that always contains infinity.
class PlaceSet {
 public:
  PlaceSet() : places_{Place::infinity()} {}
  PlaceSet(std::initializer_list<long> primes);
  static PlaceSet from_primes(const std::vector<BigInt>& primes);
  /// Parses "2,3,5" (empty string gives {infinity}). Throws on non-primes.
  static PlaceSet parse(const std::string& text);

  void insert(const Place& v);
  bool contains_prime(const BigInt& p) const;
  /// #S, counting the archimedean place.
  std::size_t size() const { return places_.size(); }
  const std::vector<Place>& places() const { return places_; }
  std::vector<BigInt> finite_primes() const;

  auto begin() const { return places_.begin(); }
  auto end() const { return places_.end(); }

  friend bool operator==(const PlaceSet& a, const PlaceSet& b) = default;
  std::string str() const;

 private:
  std::vector<Place> places_;  // sorted, unique
};

}  // namespace dynzsig
