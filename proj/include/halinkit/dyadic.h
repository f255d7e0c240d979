// Copyright 2026 The Halinkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Exact nonnegative dyadic rationals m / 2^e.

#ifndef HALINKIT_DYADIC_H_
#define HALINKIT_DYADIC_H_

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace halinkit {

class Dyadic {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Dyadic() = default;
  // numerator / 2^exponent; normalized so the numerator is odd or zero.
  Dyadic(Integer numerator, int exponent)
      : num_(std::move(numerator)), exp_(exponent) {
    Normalize();
  }
  // 2^-k.
  static Dyadic PowerOfHalf(int k) { return Dyadic(1, k); }

  const Integer& numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    const int e = std::max(a.exp_, b.exp_);
    return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
  }
  friend Dyadic operator*(const Dyadic& a, int k) {
    return Dyadic(a.num_ * k, a.exp_);
  }
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const int e = std::max(a.exp_, b.exp_);
    const Integer x = a.num_ << (e - a.exp_);
    const Integer y = b.num_ << (e - b.exp_);
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "0", "1", "3/4", "1/1024".
  std::string ToString() const {
    if (exp_ <= 0) return Integer(num_ << -exp_).str();
    return num_.str() + "/" + Integer(Integer(1) << exp_).str();
  }

 private:
  void Normalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
      num_ >>= 1;
      --exp_;
    }
  }

  Integer num_ = 0;
  int exp_ = 0;
};

}  // namespace halinkit

#endif  // HALINKIT_DYADIC_H_
