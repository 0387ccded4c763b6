#pragma once

// Arithmetic in the metacyclic family
//   G(k, p) = < s, r : r^(2^k p) = s^2 = e, s r s^-1 = r^(2^(k-1) p - 1) >
// with elements kept in the normal form s^eps r^i.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgspec {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParameterMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::int64_t n);

/// Validated (k, p) together with the derived quantities used everywhere else.
class GroupParams {
 public:
  /// Throws ParameterError unless k >= 2 and p is an odd prime.
  static GroupParams make(int k, int p);

  int k() const { return k_; }
  int p() const { return p_; }
  /// Order of the rotation r, 2^k p.
  int rotation_order() const { return rot_; }
  /// Group order 2^(k+1) p.
  int order() const { return 2 * rot_; }
  /// Conjugation multiplier m = 2^(k-1) p - 1; satisfies m^2 = 1 mod 2^k p.
  int multiplier() const { return mult_; }
  /// Exponent of the central involution u = r^(2^(k-1) p).
  int half() const { return rot_ / 2; }
  int quarter() const { return rot_ / 4; }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  GroupParams(int k, int p, int rot, int mult) : k_(k), p_(p), rot_(rot), mult_(mult) {}
  int k_;
  int p_;
  int rot_;
  int mult_;
};

/// s^eps r^i, 0 <= i < 2^k p.
struct GroupElement {
  int eps = 0;
  int i = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

inline constexpr GroupElement identity_element{0, 0};

GroupElement rotation(int i, const GroupParams& params);
GroupElement reflection(int i, const GroupParams& params);

/// Throws ParameterMismatch if the element is not a normal form for params.
void check_element(const GroupElement& a, const GroupParams& params);

GroupElement multiply(const GroupElement& a, const GroupElement& b, const GroupParams& params);
GroupElement inverse(const GroupElement& a, const GroupParams& params);
GroupElement power(const GroupElement& a, std::uint64_t t, const GroupParams& params);
int order(const GroupElement& a, const GroupParams& params);
/// {a^t : t >= 0} in generation order e, a, a^2, ...
std::vector<GroupElement> cyclic_subgroup(const GroupElement& a, const GroupParams& params);

/// Canonical element order: e, r, ..., r^(N-1), then s r^even ascending, then s r^odd ascending.
std::vector<GroupElement> canonical_elements(const GroupParams& params);
/// Position of an element in canonical_elements().
std::size_t canonical_index(const GroupElement& a, const GroupParams& params);

/// "e", "r^3", "s", "s r^5".
std::string to_string(const GroupElement& a);
/// Parses the forms emitted by to_string ("s^1 r^3" is also accepted).
std::optional<GroupElement> parse_element(const std::string& text, const GroupParams& params);

/// Multiplication table built by rewriting words in s and r under the defining
/// relations. Independent of multiply(); used to validate it.
class CayleyTable {
 public:
  static constexpr int default_cap = 120;

  /// Throws ParameterError when the group order exceeds cap.
  static CayleyTable build(const GroupParams& params, int cap = default_cap);

  const GroupParams& params() const { return params_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  /// Index of the product of elements[a] and elements[b].
  std::size_t product(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }

  struct Audit {
    bool latin_square = true;
    bool identity = true;
    bool inverses = true;
    bool associative = true;
    bool exhaustive_associativity = true;
    std::size_t triples_checked = 0;
    bool agrees_with_multiply = true;
    std::size_t pairs_checked = 0;

    bool ok() const { return latin_square && identity && inverses && associative && agrees_with_multiply; }
  };

  /// Associativity is checked on all triples when the order is at most
  /// exhaustive_limit, otherwise on `samples` seeded random triples.
  Audit audit(std::uint64_t seed = 1, std::size_t exhaustive_limit = 48, std::size_t samples = 10000) const;

 private:
  CayleyTable(GroupParams params, std::vector<GroupElement> elements, std::vector<std::size_t> table)
      : params_(params), elements_(std::move(elements)), table_(std::move(table)) {}

  GroupParams params_;
  std::vector<GroupElement> elements_;
  std::vector<std::size_t> table_;
};

/// Reduces a word over {'s','r'} to normal form using only r^N = s^2 = e and
/// r s = s r^m. Exposed for tests.
GroupElement reduce_word(const std::string& word, const GroupParams& params);

}  // namespace pgspec
