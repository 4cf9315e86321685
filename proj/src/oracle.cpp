#include "msetord/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace msetord {

namespace {

uint64_t count_assignments(const Domains& doms, uint64_t cap) {
  uint64_t total = 1;
  for (const auto& d : doms) {
    if (d.empty()) return 0;
    if (total > cap / d.size()) throw CapExceeded("enumeration exceeds cap");
    total *= d.size();
  }
  if (total > cap) throw CapExceeded("enumeration exceeds cap");
  return total;
}

// Calls f on every total assignment until f returns false.
template <class F>
void enumerate(const Domains& doms, uint64_t cap, F&& f) {
  if (count_assignments(doms, cap) == 0) return;
  const size_t n = doms.size();
  std::vector<size_t> idx(n, 0);
  std::vector<int> a(n);
  for (size_t i = 0; i < n; ++i) a[i] = doms[i][0];
  while (true) {
    if (!f(std::span<const int>(a), idx)) return;
    size_t i = n;
    while (true) {
      if (i == 0) return;
      --i;
      if (++idx[i] < doms[i].size()) {
        a[i] = doms[i][idx[i]];
        break;
      }
      idx[i] = 0;
      a[i] = doms[i][0];
    }
  }
}

}  // namespace

std::optional<Domains> brute_force_gac(const Checker& check, const Domains& doms, uint64_t cap) {
  std::vector<std::vector<char>> seen;
  for (const auto& d : doms) seen.emplace_back(d.size(), 0);
  bool any = false;
  enumerate(doms, cap, [&](std::span<const int> a, const std::vector<size_t>& idx) {
    if (check(a)) {
      any = true;
      for (size_t i = 0; i < idx.size(); ++i) seen[i][idx[i]] = 1;
    }
    return true;
  });
  if (!any) return std::nullopt;
  Domains out(doms.size());
  for (size_t i = 0; i < doms.size(); ++i)
    for (size_t k = 0; k < doms[i].size(); ++k)
      if (seen[i][k]) out[i].push_back(doms[i][k]);
  return out;
}

Checker split_checker(PairChecker check, size_t nx) {
  return [check = std::move(check), nx](std::span<const int> a) {
    return check(a.first(nx), a.subspan(nx));
  };
}

std::optional<Domains> brute_force_gac(const PairChecker& check, const Domains& x,
                                       const Domains& y, uint64_t cap) {
  Domains all(x);
  all.insert(all.end(), y.begin(), y.end());
  return brute_force_gac(split_checker(check, x.size()), all, cap);
}

bool brute_force_disentailed(const Checker& check, const Domains& doms, uint64_t cap) {
  bool any = false;
  enumerate(doms, cap, [&](std::span<const int> a, const std::vector<size_t>&) {
    any = check(a);
    return !any;
  });
  return !any;
}

bool brute_force_entailed(const Checker& check, const Domains& doms, uint64_t cap) {
  bool all = true;
  enumerate(doms, cap, [&](std::span<const int> a, const std::vector<size_t>&) {
    all = check(a);
    return all;
  });
  return all;
}

InstanceSpec random_instance(uint64_t seed, const GeneratorLimits& lim) {
  std::mt19937_64 rng(seed);
  auto draw = [&](int k) { return static_cast<int>(rng() % static_cast<uint64_t>(k)); };
  InstanceSpec s;
  s.seed = seed;
  s.d = 1 + draw(lim.max_values);
  int nx = 1 + draw(lim.max_len);
  int ny = lim.equal_lengths ? nx : 1 + draw(lim.max_len);
  auto domain = [&] {
    int size = 1 + draw(std::min(lim.max_domain, s.d));
    std::vector<int> pool(s.d);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < size; ++i) std::swap(pool[i], pool[i + draw(s.d - i)]);
    std::vector<int> d(pool.begin(), pool.begin() + size);
    std::sort(d.begin(), d.end());
    return d;
  };
  for (int i = 0; i < nx; ++i) s.x.push_back(domain());
  for (int i = 0; i < ny; ++i) s.y.push_back(domain());
  return s;
}

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// First value of b missing from a.
std::optional<int> extra(const std::vector<int>& a, const std::vector<int>& b) {
  for (int v : b)
    if (!std::binary_search(a.begin(), a.end(), v)) return v;
  return std::nullopt;
}

}  // namespace

FixpointRelation classify_fixpoints(const std::optional<Domains>& left,
                                    const std::optional<Domains>& right) {
  FixpointRelation r;
  if (!left && !right) return r;
  auto witness_any = [&](const Domains& d, FixpointRelation::Kind k) {
    r.kind = k;
    for (size_t i = 0; i < d.size(); ++i)
      if (!d[i].empty()) {
        r.var = static_cast<int>(i);
        r.value = d[i][0];
        break;
      }
    return r;
  };
  if (!left) return witness_any(*right, FixpointRelation::LeftStrictlyStronger);
  if (!right) return witness_any(*left, FixpointRelation::RightStrictlyStronger);
  if (left->size() != right->size()) throw std::logic_error("fixpoint shapes differ");

  bool l_in_r = true, r_in_l = true;
  for (size_t i = 0; i < left->size(); ++i) {
    l_in_r = l_in_r && subset((*left)[i], (*right)[i]);
    r_in_l = r_in_l && subset((*right)[i], (*left)[i]);
  }
  if (l_in_r && r_in_l) return r;
  if (!l_in_r && !r_in_l) {
    r.kind = FixpointRelation::Incomparable;
    return r;
  }
  const Domains& strong = l_in_r ? *left : *right;
  const Domains& weak = l_in_r ? *right : *left;
  r.kind = l_in_r ? FixpointRelation::LeftStrictlyStronger : FixpointRelation::RightStrictlyStronger;
  for (size_t i = 0; i < weak.size(); ++i) {
    if (auto v = extra(strong[i], weak[i])) {
      r.var = static_cast<int>(i);
      r.value = *v;
      break;
    }
  }
  return r;
}

}  // namespace msetord
