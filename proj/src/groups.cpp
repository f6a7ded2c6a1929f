#include "qpr/groups.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qpr/numtheory.hpp"

namespace qpr {

namespace {
constexpr long long kMaxOrder = 100000;  // desk scale: full enumeration stays auditable

long long mod_pos(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}
}  // namespace

FinAbGroup::FinAbGroup(std::vector<long long> invariant_factors) : a_(std::move(invariant_factors)) {
  if (a_.empty()) throw std::invalid_argument("FinAbGroup: need at least one invariant factor");
  for (long long a : a_) {
    if (a < 1) throw std::invalid_argument("FinAbGroup: invariant factors must be >= 1");
    exponent_ = lcm_ll(exponent_, a);
    order_ *= a;
    if (order_ > kMaxOrder) throw std::invalid_argument("FinAbGroup: group order exceeds 10^5");
  }
}

GroupElement FinAbGroup::element(std::vector<long long> exps) const {
  if (exps.size() != a_.size())
    throw std::invalid_argument("FinAbGroup::element: exponent vector has wrong length");
  for (size_t u = 0; u < exps.size(); ++u) exps[u] = mod_pos(exps[u], a_[u]);
  return GroupElement{std::move(exps)};
}

Character FinAbGroup::character(std::vector<long long> exps) const {
  if (exps.size() != a_.size())
    throw std::invalid_argument("FinAbGroup::character: exponent vector has wrong length");
  for (size_t u = 0; u < exps.size(); ++u) exps[u] = mod_pos(exps[u], a_[u]);
  return Character{std::move(exps)};
}

GroupElement FinAbGroup::add(const GroupElement& x, const GroupElement& y) const {
  std::vector<long long> e(a_.size());
  for (size_t u = 0; u < a_.size(); ++u) e[u] = mod_pos(x.e[u] + y.e[u], a_[u]);
  return GroupElement{std::move(e)};
}

GroupElement FinAbGroup::neg(const GroupElement& x) const {
  std::vector<long long> e(a_.size());
  for (size_t u = 0; u < a_.size(); ++u) e[u] = mod_pos(-x.e[u], a_[u]);
  return GroupElement{std::move(e)};
}

GroupElement FinAbGroup::scale(long long n, const GroupElement& x) const {
  std::vector<long long> e(a_.size());
  for (size_t u = 0; u < a_.size(); ++u) e[u] = mod_pos(n % a_[u] * x.e[u], a_[u]);
  return GroupElement{std::move(e)};
}

Character FinAbGroup::char_mul(const Character& x, const Character& y) const {
  std::vector<long long> e(a_.size());
  for (size_t u = 0; u < a_.size(); ++u) e[u] = mod_pos(x.e[u] + y.e[u], a_[u]);
  return Character{std::move(e)};
}

Character FinAbGroup::char_inv(const Character& x) const {
  std::vector<long long> e(a_.size());
  for (size_t u = 0; u < a_.size(); ++u) e[u] = mod_pos(-x.e[u], a_[u]);
  return Character{std::move(e)};
}

Character FinAbGroup::char_pow(const Character& x, long long n) const {
  std::vector<long long> e(a_.size());
  for (size_t u = 0; u < a_.size(); ++u) e[u] = mod_pos(n % a_[u] * x.e[u], a_[u]);
  return Character{std::move(e)};
}

long long FinAbGroup::char_eval_exp(const Character& chi, const GroupElement& g) const {
  long long k = 0;
  for (size_t u = 0; u < a_.size(); ++u) {
    long long w = exponent_ / a_[u];
    k = mod_pos(k + w % exponent_ * mod_pos(chi.e[u] * g.e[u], a_[u]), exponent_);
  }
  return k;
}

long long FinAbGroup::element_order(const GroupElement& g) const {
  long long n = 1;
  for (size_t u = 0; u < a_.size(); ++u) n = lcm_ll(n, a_[u] / gcd_ll(a_[u], g.e[u]));
  return n;
}

long long FinAbGroup::character_order(const Character& chi) const {
  long long n = 1;
  for (size_t u = 0; u < a_.size(); ++u) n = lcm_ll(n, a_[u] / gcd_ll(a_[u], chi.e[u]));
  return n;
}

std::vector<GroupElement> FinAbGroup::all_elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<size_t>(order_));
  std::vector<long long> e(a_.size(), 0);
  while (true) {
    out.push_back(GroupElement{e});
    size_t u = a_.size();
    while (u > 0) {
      --u;
      if (++e[u] < a_[u]) break;
      e[u] = 0;
      if (u == 0) return out;
    }
  }
}

std::vector<Character> FinAbGroup::all_characters() const {
  std::vector<Character> out;
  for (const auto& g : all_elements()) out.push_back(Character{g.e});
  return out;
}

bool FinAbGroup::valid_element(const GroupElement& g) const {
  if (g.e.size() != a_.size()) return false;
  for (size_t u = 0; u < a_.size(); ++u)
    if (g.e[u] < 0 || g.e[u] >= a_[u]) return false;
  return true;
}

bool FinAbGroup::valid_character(const Character& chi) const {
  return valid_element(GroupElement{chi.e});
}

bool Subgroup::contains(const GroupElement& g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

long long Subgroup::index_of(const GroupElement& g) const {
  auto it = std::lower_bound(members.begin(), members.end(), g);
  if (it == members.end() || !(*it == g)) return -1;
  return it - members.begin();
}

Subgroup compute_lambda(const FinAbGroup& G, const std::vector<Character>& chars) {
  if (chars.empty()) throw std::invalid_argument("compute_lambda: need at least one character");
  Subgroup sub;
  for (const auto& g : G.all_elements()) {
    bool in = true;
    for (const auto& chi : chars) {
      if (G.char_eval_exp(chi, g) != 0) {
        in = false;
        break;
      }
    }
    if (in) sub.members.push_back(g);
  }
  std::sort(sub.members.begin(), sub.members.end());
  return sub;
}

bool subgroup_is_closed(const FinAbGroup& G, const Subgroup& sub) {
  if (!sub.contains(G.identity())) return false;
  for (const auto& a : sub.members)
    for (const auto& b : sub.members)
      if (!sub.contains(G.add(a, b))) return false;
  return true;
}

SubgroupChar restrict_character(const FinAbGroup& G, const Subgroup& sub, const Character& chi) {
  SubgroupChar xi;
  xi.values.reserve(sub.members.size());
  for (const auto& g : sub.members) xi.values.push_back(G.char_eval_exp(chi, g));
  return xi;
}

bool subgroup_char_is_homomorphism(const FinAbGroup& G, const Subgroup& sub,
                                   const SubgroupChar& xi) {
  if (xi.values.size() != sub.members.size()) return false;
  long long N = G.exponent();
  for (size_t i = 0; i < sub.members.size(); ++i) {
    for (size_t j = 0; j < sub.members.size(); ++j) {
      long long k = sub.index_of(G.add(sub.members[i], sub.members[j]));
      if (k < 0) return false;  // not even closed
      if (mod_pos(xi.values[i] + xi.values[j], N) != xi.values[k]) return false;
    }
  }
  return true;
}

long long subgroup_char_eval(const Subgroup& sub, const SubgroupChar& xi, const GroupElement& g) {
  long long i = sub.index_of(g);
  if (i < 0) throw std::invalid_argument("subgroup_char_eval: element not in subgroup");
  return xi.values[i];
}

SubgroupChar subgroup_char_mul(const FinAbGroup& G, const SubgroupChar& a, const SubgroupChar& b) {
  if (a.values.size() != b.values.size())
    throw std::invalid_argument("subgroup_char_mul: size mismatch");
  SubgroupChar out;
  out.values.resize(a.values.size());
  for (size_t i = 0; i < a.values.size(); ++i)
    out.values[i] = mod_pos(a.values[i] + b.values[i], G.exponent());
  return out;
}

SubgroupChar subgroup_char_inv(const FinAbGroup& G, const SubgroupChar& a) {
  SubgroupChar out;
  out.values.resize(a.values.size());
  for (size_t i = 0; i < a.values.size(); ++i)
    out.values[i] = mod_pos(-a.values[i], G.exponent());
  return out;
}

std::vector<Character> fiber(const FinAbGroup& G, const Subgroup& sub, const SubgroupChar& xi) {
  if (!subgroup_char_is_homomorphism(G, sub, xi))
    throw std::invalid_argument("fiber: xi is not a character of the subgroup");
  std::vector<Character> out;
  for (const auto& eta : G.all_characters()) {
    if (restrict_character(G, sub, eta) == xi) out.push_back(eta);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubgroupChar> subgroup_dual(const FinAbGroup& G, const Subgroup& sub) {
  std::map<SubgroupChar, bool> seen;
  for (const auto& eta : G.all_characters()) seen[restrict_character(G, sub, eta)] = true;
  std::vector<SubgroupChar> out;
  for (auto& [xi, _] : seen) out.push_back(xi);
  return out;  // map iteration is already sorted by value list
}

std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < g.e.size(); ++i) os << (i ? "," : "") << g.e[i];
  os << ")";
  return os.str();
}

std::string to_string(const Character& chi) { return to_string(GroupElement{chi.e}); }

}  // namespace qpr
