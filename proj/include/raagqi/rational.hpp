// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace raagqi {

// Exact positive rational in lowest terms; used for stretch factors.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (num <= 0 || den <= 0) throw std::invalid_argument("stretch factors are positive");
    auto g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator*(Rational a, Rational b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }
  friend Rational operator/(Rational a, Rational b) { return Rational(a.num_ * b.den_, a.den_ * b.num_); }
  friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator<(Rational a, Rational b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }

  std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

}  // namespace raagqi
