#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bds {

/// Exact rational used for root coordinates, bounds and anything non-integral.
using Rational = boost::multiprecision::cpp_rational;

/// Arbitrary-precision integer used for multiplicities and dimensions.
using BigInt = boost::multiprecision::cpp_int;

using QVec = std::vector<Rational>;

std::string to_string(const Rational& q);
std::string to_string(const BigInt& n);

inline constexpr int kMaxRank = 16;

/// Integral vector of fixed small capacity.
///
/// Used both for Dynkin labels (weights) and for simple-root coordinates
/// (roots).  Kept trivially copyable so it can serve as a hash-map key in the
/// character kernels without allocation.
class IVec {
 public:
  IVec() = default;
  explicit IVec(int rank) : rank_(static_cast<std::uint8_t>(check_rank(rank))) {}
  IVec(std::initializer_list<int> xs);
  static IVec from(std::span<const int> xs);

  int rank() const { return rank_; }
  int operator[](int i) const { return v_[i]; }
  int& operator[](int i) { return v_[i]; }

  std::vector<int> to_vector() const { return {v_.begin(), v_.begin() + rank_}; }
  bool is_zero() const;

  IVec& operator+=(const IVec& o);
  IVec& operator-=(const IVec& o);
  IVec& operator*=(int s);
  friend IVec operator+(IVec a, const IVec& b) { return a += b; }
  friend IVec operator-(IVec a, const IVec& b) { return a -= b; }
  friend IVec operator*(int s, IVec a) { return a *= s; }
  IVec operator-() const;

  friend bool operator==(const IVec& a, const IVec& b) {
    return a.rank_ == b.rank_ && a.v_ == b.v_;
  }
  /// Lexicographic order on coordinates; rank first.
  friend bool operator<(const IVec& a, const IVec& b);

  std::size_t hash() const;
  std::string str() const;

 private:
  static int check_rank(int r) {
    if (r < 0 || r > kMaxRank) throw std::invalid_argument("IVec rank out of range");
    return r;
  }
  std::array<std::int32_t, kMaxRank> v_{};
  std::uint8_t rank_ = 0;
};

struct IVecHash {
  std::size_t operator()(const IVec& v) const noexcept { return v.hash(); }
};

/// Dynkin labels with respect to the fundamental weights of an ambient algebra.
using Weight = IVec;

/// Coordinates in the basis of simple roots (integral for roots).
using RootVec = IVec;

std::vector<int> parse_int_list(const std::string& text);

}  // namespace bds
