#include "marf/mcg.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "marf/error.hpp"

namespace marf {

namespace {

struct StateSpace {
  int m;
  int len;
  std::uint64_t size;

  std::uint64_t encode(std::span<const int> t) const {
    std::uint64_t idx = 0;
    for (int v : t) idx = idx * m + static_cast<std::uint64_t>(v);
    return idx;
  }
  void decode(std::uint64_t idx, std::span<int> t) const {
    for (int i = len - 1; i >= 0; --i) {
      t[i] = static_cast<int>(idx % m);
      idx /= m;
    }
  }
};

StateSpace make_space(const Signature& sig, int m, std::uint64_t budget) {
  std::uint64_t size = 0;
  try {
    size = checked_pow(static_cast<std::uint64_t>(m), 2 * sig.genus);
  } catch (const Error&) {
    throw Error(ErrorCode::BudgetExceeded, "state space does not fit in 64 bits");
  }
  if (size > budget || size > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(size) + " states exceed budget " + std::to_string(budget));
  }
  return {m, 2 * sig.genus, size};
}

std::vector<int> gammas(const Signature& sig, int m) {
  std::vector<int> g;
  for (int p : sig.orders) g.push_back(elliptic_level(p, m));
  return g;
}

}  // namespace

std::string TwistMove::to_string() const {
  std::string s = "T" + std::to_string(static_cast<int>(kind) + 1);
  if (kind == MoveKind::T4 || kind == MoveKind::T5) s += "(" + std::to_string(k) + ")";
  if (inverse) s += "^-1";
  return s;
}

std::string word_to_string(const std::vector<TwistMove>& word) {
  std::string s;
  for (const auto& t : word) {
    if (!s.empty()) s += " ";
    s += t.to_string();
  }
  return s;
}

TwistMove inverse(const TwistMove& t) {
  TwistMove r = t;
  if (t.kind != MoveKind::T4 && t.kind != MoveKind::T5) r.inverse = !t.inverse;
  return r;
}

bool is_applicable(const Signature& sig, const TwistMove& t) {
  const int g = sig.genus;
  const int n = g + sig.r();
  switch (t.kind) {
    case MoveKind::T1: return g >= 1;
    case MoveKind::T2: return g >= 2;
    case MoveKind::T3: return g >= 1;
    case MoveKind::T4: return g >= 2 && t.k >= 1 && t.k <= g - 1;
    case MoveKind::T5:
      return t.k >= g + 1 && t.k <= n - 1 && sig.orders[t.k - g - 1] == sig.orders[t.k - g];
  }
  return false;
}

std::vector<TwistMove> applicable_moves(const Signature& sig) {
  std::vector<TwistMove> out;
  for (auto kind : {MoveKind::T1, MoveKind::T2, MoveKind::T3}) {
    for (bool inv : {false, true}) {
      TwistMove t{kind, 0, inv};
      if (is_applicable(sig, t)) out.push_back(t);
    }
  }
  const int n = sig.genus + sig.r();
  for (int k = 1; k < sig.genus; ++k) out.push_back({MoveKind::T4, k, false});
  for (int k = sig.genus + 1; k < n; ++k) {
    TwistMove t{MoveKind::T5, k, false};
    if (is_applicable(sig, t)) out.push_back(t);
  }
  return out;
}

void apply_to_tuple(std::span<int> s, const TwistMove& t, const std::vector<int>& gamma, int m) {
  const int g = static_cast<int>(s.size() / 2);
  switch (t.kind) {
    case MoveKind::T1:
      s[0] = residue(t.inverse ? s[0] - s[1] : s[0] + s[1], m);
      break;
    case MoveKind::T2: {
      const long long c = static_cast<long long>(s[0]) + s[2] + 1;
      const long long d = t.inverse ? c : -c;
      s[1] = residue(s[1] + d, m);
      s[3] = residue(s[3] + d, m);
      break;
    }
    case MoveKind::T3: {
      // without cone points c_{g+1} is the trivial contour, sigma = -1
      const int a = s[2 * g - 2], b = s[2 * g - 1], c = gamma.empty() ? -1 : gamma[0];
      if (!t.inverse) {
        s[2 * g - 2] = residue(-static_cast<long long>(b), m);
        s[2 * g - 1] = residue(static_cast<long long>(a) - c - 1, m);
      } else {
        s[2 * g - 2] = residue(static_cast<long long>(b) + c + 1, m);
        s[2 * g - 1] = residue(-static_cast<long long>(a), m);
      }
      break;
    }
    case MoveKind::T4:
      std::swap(s[2 * t.k - 2], s[2 * t.k]);
      std::swap(s[2 * t.k - 1], s[2 * t.k + 1]);
      break;
    case MoveKind::T5:
      // equal orders force equal cone residues
      break;
  }
}

ArfFunction apply_twist(const ArfFunction& f, const TwistMove& t) {
  if (!is_applicable(f.signature, t)) {
    throw Error(ErrorCode::NotApplicable, t.to_string() + " on " + f.signature.to_string());
  }
  auto tuple = f.tuple();
  apply_to_tuple(tuple, t, f.gamma, f.m);
  ArfFunction out = f;
  for (int i = 0; i < f.signature.genus; ++i) {
    out.alpha[i] = tuple[2 * i];
    out.beta[i] = tuple[2 * i + 1];
  }
  if (t.kind == MoveKind::T5) std::swap(out.gamma[t.k - f.signature.genus - 1], out.gamma[t.k - f.signature.genus]);
  return out;
}

ArfFunction apply_word(const ArfFunction& f, const std::vector<TwistMove>& word) {
  ArfFunction out = f;
  for (const auto& t : word) out = apply_twist(out, t);
  return out;
}

std::vector<std::vector<int>> orbit(const ArfFunction& f, std::uint64_t budget) {
  const auto space = make_space(f.signature, f.m, budget);
  const auto moves = applicable_moves(f.signature);
  std::vector<bool> seen(space.size, false);
  std::vector<std::uint64_t> members;
  std::deque<std::uint64_t> queue;

  const auto start = f.tuple();
  const auto s0 = space.encode(start);
  seen[s0] = true;
  queue.push_back(s0);
  std::vector<int> cur(space.len), next(space.len);
  while (!queue.empty()) {
    const auto idx = queue.front();
    queue.pop_front();
    members.push_back(idx);
    space.decode(idx, cur);
    for (const auto& t : moves) {
      next = cur;
      apply_to_tuple(next, t, f.gamma, f.m);
      const auto j = space.encode(next);
      if (!seen[j]) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  std::sort(members.begin(), members.end());
  std::vector<std::vector<int>> out;
  out.reserve(members.size());
  for (auto idx : members) {
    space.decode(idx, cur);
    out.push_back(cur);
  }
  return out;
}

std::vector<OrbitInfo> classify_orbits(const Signature& sig, int m, std::uint64_t budget) {
  const auto types = admissible_types(sig, m);
  if (types.empty()) {
    throw Error(ErrorCode::NotLiftable, sig.to_string() + " at m=" + std::to_string(m));
  }
  const auto space = make_space(sig, m, budget);
  const auto gamma = gammas(sig, m);
  const auto moves = applicable_moves(sig);

  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(space.size, kUnseen);
  std::vector<OrbitInfo> orbits;
  std::vector<std::uint64_t> stack;
  std::vector<int> cur(space.len), next(space.len);

  for (std::uint64_t start = 0; start < space.size; ++start) {
    if (label[start] != kUnseen) continue;
    const auto id = static_cast<std::uint32_t>(orbits.size());
    space.decode(start, cur);
    OrbitInfo info{{sig, arf_invariant(sig, m, cur)}, 0, cur};
    label[start] = id;
    stack.assign(1, start);
    while (!stack.empty()) {
      const auto idx = stack.back();
      stack.pop_back();
      ++info.size;
      space.decode(idx, cur);
      if (arf_invariant(sig, m, cur) != info.type.delta) {
        throw Error(ErrorCode::ClassificationMismatch, "Arf invariant not constant on an orbit");
      }
      for (const auto& t : moves) {
        next = cur;
        apply_to_tuple(next, t, gamma, m);
        const auto j = space.encode(next);
        if (label[j] == kUnseen) {
          label[j] = id;
          stack.push_back(j);
        }
      }
    }
    orbits.push_back(std::move(info));
  }

  if (orbits.size() != types.size()) {
    throw Error(ErrorCode::ClassificationMismatch,
                std::to_string(orbits.size()) + " orbits vs " + std::to_string(types.size()) + " types");
  }
  std::vector<OrbitInfo> ordered;
  for (const auto& t : types) {
    auto it = std::find_if(orbits.begin(), orbits.end(), [&](const OrbitInfo& o) { return o.type == t; });
    if (it == orbits.end()) {
      throw Error(ErrorCode::ClassificationMismatch, "no orbit of type delta=" + std::to_string(t.delta));
    }
    ordered.push_back(*it);
  }
  return ordered;
}

std::vector<int> normal_form_tuple(const Signature& sig, int m, int delta) {
  const int g = sig.genus;
  if (g == 0) return {};
  if (g == 1) return {residue(delta, m), 0};
  std::vector<int> t(2 * g, residue(1, m));
  t[0] = 0;
  t[1] = (m % 2 == 0) ? residue(1 - delta, m) : residue(1, m);
  return t;
}

NormalForm normal_form(const ArfFunction& f, std::uint64_t budget) {
  if (f.signature.genus < 1) throw Error(ErrorCode::NotApplicable, "normal form needs g >= 1");
  const auto space = make_space(f.signature, f.m, budget);
  const auto moves = applicable_moves(f.signature);
  const auto target = normal_form_tuple(f.signature, f.m, arf_invariant(f));
  const auto goal = space.encode(target);

  // parent[j] = (index of predecessor, move index)
  constexpr std::uint64_t kUnseen = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> parent(space.size, kUnseen);
  std::vector<std::uint16_t> via(space.size, 0);
  const auto s0 = space.encode(f.tuple());
  parent[s0] = s0;
  std::deque<std::uint64_t> queue{s0};
  std::vector<int> cur(space.len), next(space.len);
  while (!queue.empty() && parent[goal] == kUnseen) {
    const auto idx = queue.front();
    queue.pop_front();
    space.decode(idx, cur);
    for (std::size_t mi = 0; mi < moves.size(); ++mi) {
      next = cur;
      apply_to_tuple(next, moves[mi], f.gamma, f.m);
      const auto j = space.encode(next);
      if (parent[j] == kUnseen) {
        parent[j] = idx;
        via[j] = static_cast<std::uint16_t>(mi);
        queue.push_back(j);
      }
    }
  }
  if (parent[goal] == kUnseen) {
    throw Error(ErrorCode::NormalFormUnreachable, "normal form not in the orbit of the input");
  }
  std::vector<TwistMove> word;
  for (auto j = goal; j != s0; j = parent[j]) word.push_back(moves[via[j]]);
  std::reverse(word.begin(), word.end());

  NormalForm out{apply_word(f, word), std::move(word)};
  if (out.form.tuple() != target) {
    throw Error(ErrorCode::NormalFormUnreachable, "witness word does not reach the normal form");
  }
  return out;
}

}  // namespace marf
