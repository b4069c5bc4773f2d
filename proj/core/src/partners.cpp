#include "heun/partners.hpp"

#include <algorithm>

#include "heun/darboux.hpp"
#include "heun/quasi.hpp"

namespace heun {

namespace {

constexpr std::array<std::array<int, 4>, 4> kPerms = {{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};

Quad permute(const Quad& q, const std::array<int, 4>& p) { return {q[p[0]], q[p[1]], q[p[2]], q[p[3]]}; }

Quad from_n(const std::array<int, 4>& n) {
  Quad q;
  for (int i = 0; i < 4; ++i) q[i] = HalfInt::from_twice(2 * n[i] - 1);
  return q;
}

std::array<int, 4> sorted_desc(std::array<int, 4> k) {
  std::sort(k.begin(), k.end(), std::greater<>());
  return k;
}

}  // namespace

Quad even_dual(const ParamTuple& l) {
  if (!l.is_integer()) fail(ErrorCode::mixed_parity, "even dual needs an integer tuple");
  const auto k = l.ints();
  const int s = k[0] + k[1] + k[2] + k[3];
  if (s % 2) fail(ErrorCode::precondition, "even dual needs an even parameter sum");
  Quad q;
  for (int i = 0; i < 4; ++i) q[i] = HalfInt::from_twice(s - 2 * k[i]);
  return q;
}

Quad odd_dual(const ParamTuple& l) {
  if (!l.is_integer()) fail(ErrorCode::mixed_parity, "odd dual needs an integer tuple");
  const auto k = l.ints();
  if ((k[0] + k[1] + k[2] + k[3]) % 2 == 0) fail(ErrorCode::precondition, "odd dual needs an odd parameter sum");
  return {HalfInt::from_twice(k[0] + k[1] + k[2] + k[3] + 1), HalfInt::from_twice(k[0] + k[1] - k[2] - k[3] - 1),
          HalfInt::from_twice(k[0] - k[1] + k[2] - k[3] - 1), HalfInt::from_twice(k[0] - k[1] - k[2] + k[3] - 1)};
}

ParamTuple sorted(const ParamTuple& l) {
  Quad q = l.l();
  std::sort(q.begin(), q.end(), std::greater<>());
  return ParamTuple(q);
}

ParamTuple canonical_partner(const ParamTuple& l) {
  const ParamTuple s = sorted(l);
  const int sum = s.sum().twice / 2;
  Quad p;
  if (sum % 2 == 0) {
    const Quad e = even_dual(s);
    p = {e[3], e[2], e[1], canonical(e[0])};
  } else {
    const Quad o = odd_dual(s);
    p = {o[0], o[1], o[2], canonical(o[3])};
  }
  return sorted(ParamTuple(canonical(p)));
}

bool is_self_dual(const ParamTuple& l) {
  if (!l.is_integer()) fail(ErrorCode::mixed_parity, "self-duality is defined for integer tuples");
  const auto k = sorted_desc(l.ints());
  if ((k[0] + k[1] + k[2] + k[3]) % 2 == 0) return k[0] + k[3] == k[1] + k[2];
  return k[0] == k[1] + k[2] + k[3] + 1;
}

HalfIntegerDuals half_integer_duals(const std::array<int, 4>& raw) {
  const auto n = sorted_desc(raw);
  if (n[3] < 0) fail(ErrorCode::invalid_tuple, "n entries must be nonnegative");
  if ((n[0] + n[1] + n[2] + n[3]) % 2)
    fail(ErrorCode::no_quasi_solvable_space, "sum of n is odd: no quasi-solvable space exists");
  HalfIntegerDuals r;
  r.n1 = {(n[0] + n[1] + n[2] + n[3]) / 2, (n[0] + n[1] - n[2] - n[3]) / 2, (n[0] - n[1] + n[2] - n[3]) / 2,
          (n[0] - n[1] - n[2] + n[3]) / 2};
  r.n2 = {(-n[0] + n[1] + n[2] + n[3]) / 2, (n[0] - n[1] + n[2] + n[3]) / 2, (n[0] + n[1] - n[2] + n[3]) / 2,
          (n[0] + n[1] + n[2] - n[3]) / 2};
  std::array<int, 4> a, b;
  if (n[0] >= n[1] + n[2] + n[3]) {
    r.regime = 1;
    a = r.n1;
    b = {r.n2[3], r.n2[2], r.n2[1], -r.n2[0]};
  } else if (n[0] >= n[1] + n[2] - n[3]) {
    r.regime = 2;
    a = r.n1;
    b = {r.n2[3], r.n2[2], r.n2[1], r.n2[0]};
  } else {
    r.regime = 3;
    a = {r.n1[0], r.n1[1], r.n1[2], -r.n1[3]};
    b = {r.n2[3], r.n2[2], r.n2[1], r.n2[0]};
  }
  r.first = ParamTuple(canonical(from_n(a)));
  r.second = ParamTuple(canonical(from_n(b)));
  return r;
}

std::string FamilyMember::describe() const {
  if (witness) return "tilde_L" + witness->to_string();
  if (shift) return "shift x -> x + omega_" + std::to_string(shift);
  return "identity";
}

PartnerFamily family(const ParamTuple& l) {
  PartnerFamily f{l, {}, false, std::nullopt};
  auto add = [&](const Quad& raw, std::optional<AlphaTuple> w, int shift) {
    f.members.push_back({raw, ParamTuple(canonical(raw)), std::move(w), shift});
  };
  const Quad& q = l.l();
  if (l.is_integer()) {
    const auto k = l.ints();
    auto alpha = [&](std::array<bool, 4> plus) {
      Quad a;
      for (int i = 0; i < 4; ++i) a[i] = plus[i] ? HalfInt(k[i] + 1) : HalfInt(-k[i]);
      return AlphaTuple(a);
    };
    if ((k[0] + k[1] + k[2] + k[3]) % 2 == 0) {
      const Quad e = even_dual(l);
      static const std::array<std::array<bool, 4>, 4> signs = {
          {{false, false, false, false}, {false, false, true, true}, {false, true, false, true}, {false, true, true, false}}};
      for (int m = 0; m < 4; ++m) add(permute(e, kPerms[m]), alpha(signs[m]), 0);
    } else {
      const Quad o = odd_dual(l);
      static const std::array<std::array<bool, 4>, 4> signs = {
          {{true, false, false, false}, {false, true, false, false}, {false, false, true, false}, {false, false, false, true}}};
      for (int m = 0; m < 4; ++m) add(permute(o, kPerms[m]), alpha(signs[m]), 0);
    }
    f.self_dual = is_self_dual(l);
  } else {
    const auto n = l.n();
    if ((n[0] + n[1] + n[2] + n[3]) % 2) {
      f.note = "sum of n is odd: no quasi-solvable space, only half-period shifts link this operator";
    } else {
      const std::array<int, 4> n1 = {(n[0] + n[1] + n[2] + n[3]) / 2, (n[0] + n[1] - n[2] - n[3]) / 2,
                                     (n[0] - n[1] + n[2] - n[3]) / 2, (n[0] - n[1] - n[2] + n[3]) / 2};
      const std::array<int, 4> n2 = {(-n[0] + n[1] + n[2] + n[3]) / 2, (n[0] - n[1] + n[2] + n[3]) / 2,
                                     (n[0] + n[1] - n[2] + n[3]) / 2, (n[0] + n[1] + n[2] - n[3]) / 2};
      static const std::array<std::array<int, 4>, 4> s1 = {
          {{1, -1, -1, -1}, {-1, 1, -1, -1}, {-1, -1, 1, -1}, {-1, -1, -1, 1}}};
      static const std::array<std::array<int, 4>, 4> s2 = {
          {{-1, -1, -1, -1}, {-1, -1, 1, 1}, {-1, 1, -1, 1}, {-1, 1, 1, -1}}};
      for (int m = 0; m < 4; ++m) add(permute(from_n(n1), kPerms[m]), alpha_from_signs(n, s1[m]), 0);
      for (int m = 0; m < 4; ++m) add(permute(from_n(n2), kPerms[m]), alpha_from_signs(n, s2[m]), 0);
    }
  }
  for (int m = 0; m < 4; ++m) add(permute(q, kPerms[m]), std::nullopt, m);
  return f;
}

DiffOp witness_residual(const ParamTuple& source, const FamilyMember& m) {
  const DiffOp H = hamiltonian(source);
  const DiffOp Hm = hamiltonian(m.member);
  if (m.witness) {
    const DiffOp L = tilde_L(*m.witness);
    return compose(Hm, L) - compose(L, H);
  }
  if (m.shift == 0) return Hm - H;
  const EllipticFn u = potential(source);
  return DiffOp::multiplication(potential(m.member) - shift_half_period(u, m.shift));
}

}  // namespace heun
