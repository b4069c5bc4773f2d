#include "heun/params.hpp"

#include <sstream>

namespace heun {

HalfInt HalfInt::parse(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (c != ' ') text += c;
  if (text.empty()) fail(ErrorCode::invalid_tuple, "empty parameter");
  auto parse_int = [&](const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      fail(ErrorCode::invalid_tuple, "not a number: " + raw);
    }
    if (pos != s.size()) fail(ErrorCode::invalid_tuple, "not a number: " + raw);
    return v;
  };
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    int num = parse_int(text.substr(0, slash));
    int den = parse_int(text.substr(slash + 1));
    if (den == 1) return HalfInt(num);
    if (den != 2) fail(ErrorCode::invalid_tuple, "parameter not in ½ℤ: " + raw);
    return from_twice(num);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string frac = text.substr(dot + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    bool neg = !text.empty() && text[0] == '-';
    std::string whole = text.substr(0, dot);
    int w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
    if (frac.empty()) return HalfInt(w);
    if (frac != "5") fail(ErrorCode::invalid_tuple, "parameter not in ½ℤ: " + raw);
    int t = 2 * w + (neg ? -1 : 1);
    return from_twice(t);
  }
  return HalfInt(parse_int(text));
}

int HalfInt::to_int() const {
  if (!is_integer()) fail(ErrorCode::precondition, "half-integer where an integer is required");
  return twice / 2;
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

Quad parse_quad(const std::string& text) {
  Quad q;
  std::stringstream ss(text);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 4) fail(ErrorCode::invalid_tuple, "expected four comma-separated values: " + text);
    q[i++] = HalfInt::parse(item);
  }
  if (i != 4) fail(ErrorCode::invalid_tuple, "expected four comma-separated values: " + text);
  return q;
}

std::string to_string(const Quad& q) {
  return "(" + q[0].to_string() + "," + q[1].to_string() + "," + q[2].to_string() + "," +
         q[3].to_string() + ")";
}

Quad canonical(const Quad& q) {
  return {canonical(q[0]), canonical(q[1]), canonical(q[2]), canonical(q[3])};
}

HalfInt sum(const Quad& q) { return q[0] + q[1] + q[2] + q[3]; }

ParamTuple::ParamTuple(const Quad& l) : l_(l) {
  int integers = 0;
  for (HalfInt v : l) {
    if (v.twice < -1) fail(ErrorCode::invalid_tuple, "parameter below -1/2 in " + heun::to_string(l));
    integers += v.is_integer();
  }
  if (integers != 0 && integers != 4)
    fail(ErrorCode::mixed_parity, "mixed integer/half-integer tuple " + heun::to_string(l));
  parity_ = integers == 4 ? Parity::integer : Parity::half_integer;
}

ParamTuple ParamTuple::from_n(const std::array<int, 4>& n) {
  Quad l;
  for (int i = 0; i < 4; ++i) l[i] = HalfInt::from_twice(2 * n[i] - 1);
  return ParamTuple(l);
}

std::array<int, 4> ParamTuple::n() const {
  if (is_integer()) fail(ErrorCode::precondition, "n is defined for half-integer tuples only");
  std::array<int, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = (l_[i].twice + 1) / 2;
  return out;
}

std::array<int, 4> ParamTuple::ints() const {
  std::array<int, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = l_[i].to_int();
  return out;
}

AlphaTuple::AlphaTuple(const Quad& a) : a_(a) {
  int t = heun::sum(a).twice;
  if (t % 4 != 0)
    fail(ErrorCode::invalid_tuple, "sum(alpha)/2 is not an integer for " + heun::to_string(a));
  d_ = -t / 4;
}

Quad AlphaTuple::owner() const {
  Quad l;
  for (int i = 0; i < 4; ++i) l[i] = canonical(a_[i] - HalfInt(1));
  return l;
}

bool AlphaTuple::admissible_for(const Quad& l) const {
  for (int i = 0; i < 4; ++i)
    if (a_[i] != -l[i] && a_[i] != l[i] + HalfInt(1)) return false;
  return true;
}

AlphaTuple AlphaTuple::reflected() const {
  Quad b;
  for (int i = 0; i < 4; ++i) b[i] = HalfInt(1) - a_[i];
  return AlphaTuple(b);
}

AlphaTuple AlphaTuple::transposed() const {
  Quad b;
  for (int i = 0; i < 4; ++i) b[i] = -a_[i] - HalfInt(d_);
  return AlphaTuple(b);
}

Quad AlphaTuple::target() const {
  Quad b;
  for (int i = 0; i < 4; ++i) b[i] = a_[i] + HalfInt(d_);
  return b;
}

void AlphaTuple::require_nonnegative_d() const {
  if (d_ < 0)
    fail(ErrorCode::precondition, "d = " + std::to_string(d_) + " < 0 for alpha " + to_string());
}

}  // namespace heun
