#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qpr {

// Element of a finite abelian group given by invariant factors; exponent
// vectors are normalized (entry u reduced mod a_u) on construction, so
// equality is plain vector equality.
struct GroupElement {
  std::vector<long long> e;
  bool operator==(const GroupElement&) const = default;
  bool operator<(const GroupElement& o) const { return e < o.e; }
};

// Character of the same group, also an exponent vector (c_1,...,c_t) with
// chi(h_u) = zeta_N^((N/a_u) c_u).
struct Character {
  std::vector<long long> e;
  bool operator==(const Character&) const = default;
  bool operator<(const Character& o) const { return e < o.e; }
};

class FinAbGroup {
 public:
  FinAbGroup() : FinAbGroup(std::vector<long long>{1}) {}  // trivial group
  explicit FinAbGroup(std::vector<long long> invariant_factors);

  const std::vector<long long>& invariant_factors() const { return a_; }
  int rank() const { return static_cast<int>(a_.size()); }
  long long exponent() const { return exponent_; }
  long long order() const { return order_; }

  GroupElement element(std::vector<long long> exps) const;
  Character character(std::vector<long long> exps) const;
  GroupElement identity() const { return GroupElement{std::vector<long long>(a_.size(), 0)}; }
  Character trivial_character() const { return Character{std::vector<long long>(a_.size(), 0)}; }

  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement neg(const GroupElement& x) const;
  GroupElement scale(long long n, const GroupElement& x) const;

  Character char_mul(const Character& x, const Character& y) const;
  Character char_inv(const Character& x) const;
  Character char_pow(const Character& x, long long n) const;

  // k with chi(g) = zeta_N^k, k = sum_u (N/a_u) c_u e_u mod N
  long long char_eval_exp(const Character& chi, const GroupElement& g) const;

  long long element_order(const GroupElement& g) const;
  long long character_order(const Character& chi) const;

  std::vector<GroupElement> all_elements() const;
  std::vector<Character> all_characters() const;

  bool valid_element(const GroupElement& g) const;
  bool valid_character(const Character& chi) const;

 private:
  std::vector<long long> a_;
  long long exponent_ = 1;
  long long order_ = 1;
};

// subgroup as an explicit sorted member list
struct Subgroup {
  std::vector<GroupElement> members;  // sorted lexicographically

  bool contains(const GroupElement& g) const;
  long long index_of(const GroupElement& g) const;  // -1 if absent
  long long order() const { return static_cast<long long>(members.size()); }
};

// Lambda = { g : chi_i(g) = 1 for all i }, by full enumeration
Subgroup compute_lambda(const FinAbGroup& G, const std::vector<Character>& chars);

// sanity: closed under addition, contains identity
bool subgroup_is_closed(const FinAbGroup& G, const Subgroup& sub);

// Character of a subgroup, given by its value list (root-of-unity exponents
// mod N) aligned with Subgroup::members.
struct SubgroupChar {
  std::vector<long long> values;
  bool operator==(const SubgroupChar&) const = default;
  bool operator<(const SubgroupChar& o) const { return values < o.values; }
};

SubgroupChar restrict_character(const FinAbGroup& G, const Subgroup& sub, const Character& chi);

bool subgroup_char_is_homomorphism(const FinAbGroup& G, const Subgroup& sub,
                                   const SubgroupChar& xi);

long long subgroup_char_eval(const Subgroup& sub, const SubgroupChar& xi, const GroupElement& g);

SubgroupChar subgroup_char_mul(const FinAbGroup& G, const SubgroupChar& a, const SubgroupChar& b);
SubgroupChar subgroup_char_inv(const FinAbGroup& G, const SubgroupChar& a);

// F(xi) = all characters of G restricting to xi on sub, sorted by exponent
// vector; throws std::invalid_argument if xi is not a homomorphism
std::vector<Character> fiber(const FinAbGroup& G, const Subgroup& sub, const SubgroupChar& xi);

// all characters of the subgroup, obtained as deduplicated restrictions,
// sorted by value list
std::vector<SubgroupChar> subgroup_dual(const FinAbGroup& G, const Subgroup& sub);

std::string to_string(const GroupElement& g);
std::string to_string(const Character& chi);

}  // namespace qpr
