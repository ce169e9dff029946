#include "bds/arith.hpp"

#include <sstream>

namespace bds {

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& n) { return n.str(); }

IVec::IVec(std::initializer_list<int> xs) : rank_(static_cast<std::uint8_t>(check_rank(static_cast<int>(xs.size())))) {
  int i = 0;
  for (int x : xs) v_[i++] = x;
}

IVec IVec::from(std::span<const int> xs) {
  IVec out(static_cast<int>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) out.v_[i] = xs[i];
  return out;
}

bool IVec::is_zero() const {
  for (int i = 0; i < rank_; ++i)
    if (v_[i] != 0) return false;
  return true;
}

IVec& IVec::operator+=(const IVec& o) {
  for (int i = 0; i < rank_; ++i) v_[i] += o.v_[i];
  return *this;
}

IVec& IVec::operator-=(const IVec& o) {
  for (int i = 0; i < rank_; ++i) v_[i] -= o.v_[i];
  return *this;
}

IVec& IVec::operator*=(int s) {
  for (int i = 0; i < rank_; ++i) v_[i] *= s;
  return *this;
}

IVec IVec::operator-() const {
  IVec out = *this;
  for (int i = 0; i < rank_; ++i) out.v_[i] = -out.v_[i];
  return out;
}

bool operator<(const IVec& a, const IVec& b) {
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  for (int i = 0; i < a.rank_; ++i)
    if (a.v_[i] != b.v_[i]) return a.v_[i] < b.v_[i];
  return false;
}

std::size_t IVec::hash() const {
  // FNV-1a over the active coordinates.
  std::uint64_t h = 1469598103934665603ull ^ rank_;
  for (int i = 0; i < rank_; ++i) {
    h ^= static_cast<std::uint32_t>(v_[i]);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string IVec::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < rank_; ++i) {
    if (i) os << ',';
    os << v_[i];
  }
  os << ')';
  return os.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("not an integer: '" + token + "'");
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '[' || c == ']') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

}  // namespace bds
