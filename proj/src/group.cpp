#include "pgspec/group.hpp"

#include <algorithm>
#include <random>
#include <regex>

namespace pgspec {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

GroupParams GroupParams::make(int k, int p) {
  if (k < 2) throw ParameterError("k must be at least 2 (got " + std::to_string(k) + ")");
  if (k > 20) throw ParameterError("k too large (got " + std::to_string(k) + ", limit 20)");
  if (p == 2 || !is_prime(p)) throw ParameterError("p must be an odd prime (got " + std::to_string(p) + ")");
  const std::int64_t rot = (std::int64_t{1} << k) * p;
  if (rot > (std::int64_t{1} << 24)) throw ParameterError("group order too large");
  const auto r = static_cast<int>(rot);
  const int m = (r / 2 - 1) % r;
  // m^2 = 2^(2k-2)p^2 - 2^k p + 1 = 1 mod 2^k p because k >= 2.
  if ((static_cast<std::int64_t>(m) * m) % r != 1) throw ParameterError("conjugation multiplier is not an involution");
  return GroupParams(k, p, r, m);
}

GroupElement rotation(int i, const GroupParams& params) {
  const int n = params.rotation_order();
  return {0, ((i % n) + n) % n};
}

GroupElement reflection(int i, const GroupParams& params) {
  const int n = params.rotation_order();
  return {1, ((i % n) + n) % n};
}

void check_element(const GroupElement& a, const GroupParams& params) {
  if ((a.eps != 0 && a.eps != 1) || a.i < 0 || a.i >= params.rotation_order()) {
    throw ParameterMismatch("element (" + std::to_string(a.eps) + "," + std::to_string(a.i) +
                            ") is not a normal form for 2^k p = " + std::to_string(params.rotation_order()));
  }
}

GroupElement multiply(const GroupElement& a, const GroupElement& b, const GroupParams& params) {
  check_element(a, params);
  check_element(b, params);
  const std::int64_t n = params.rotation_order();
  // r^i s = s r^(i m)
  const std::int64_t shifted = b.eps ? (static_cast<std::int64_t>(a.i) * params.multiplier()) % n : a.i;
  return {a.eps ^ b.eps, static_cast<int>((shifted + b.i) % n)};
}

GroupElement inverse(const GroupElement& a, const GroupParams& params) {
  check_element(a, params);
  if (a.eps == 0) return rotation(-a.i, params);
  // (s r^i)^-1 = r^-i s = s r^(-i m)
  const std::int64_t n = params.rotation_order();
  return reflection(static_cast<int>((n - (a.i * static_cast<std::int64_t>(params.multiplier())) % n) % n), params);
}

GroupElement power(const GroupElement& a, std::uint64_t t, const GroupParams& params) {
  check_element(a, params);
  GroupElement result = identity_element;
  GroupElement base = a;
  while (t > 0) {
    if (t & 1U) result = multiply(result, base, params);
    base = multiply(base, base, params);
    t >>= 1U;
  }
  return result;
}

int order(const GroupElement& a, const GroupParams& params) {
  check_element(a, params);
  int t = 1;
  GroupElement x = a;
  while (x != identity_element) {
    x = multiply(x, a, params);
    ++t;
  }
  return t;
}

std::vector<GroupElement> cyclic_subgroup(const GroupElement& a, const GroupParams& params) {
  check_element(a, params);
  std::vector<GroupElement> out{identity_element};
  GroupElement x = a;
  while (x != identity_element) {
    out.push_back(x);
    x = multiply(x, a, params);
  }
  return out;
}

std::vector<GroupElement> canonical_elements(const GroupParams& params) {
  const int n = params.rotation_order();
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(params.order()));
  for (int i = 0; i < n; ++i) out.push_back({0, i});
  for (int i = 0; i < n; i += 2) out.push_back({1, i});
  for (int i = 1; i < n; i += 2) out.push_back({1, i});
  return out;
}

std::size_t canonical_index(const GroupElement& a, const GroupParams& params) {
  check_element(a, params);
  const auto n = static_cast<std::size_t>(params.rotation_order());
  const auto i = static_cast<std::size_t>(a.i);
  if (a.eps == 0) return i;
  if (i % 2 == 0) return n + i / 2;
  return n + n / 2 + i / 2;
}

std::string to_string(const GroupElement& a) {
  if (a.eps == 0) {
    if (a.i == 0) return "e";
    if (a.i == 1) return "r";
    return "r^" + std::to_string(a.i);
  }
  if (a.i == 0) return "s";
  if (a.i == 1) return "s r";
  return "s r^" + std::to_string(a.i);
}

std::optional<GroupElement> parse_element(const std::string& text, const GroupParams& params) {
  static const std::regex pattern(R"(^\s*(e|(s(\^([01]))?)?\s*(r(\^(\d+))?)?)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern) || m[1].str().empty()) return std::nullopt;
  if (m[1] == "e") return identity_element;
  GroupElement out;
  if (m[2].matched) out.eps = m[4].matched ? std::stoi(m[4].str()) : 1;
  if (m[5].matched) {
    const long long i = m[7].matched ? std::stoll(m[7].str()) : 1;
    if (i >= params.rotation_order()) return std::nullopt;
    out.i = static_cast<int>(i);
  }
  return out;
}

namespace {

struct Token {
  bool is_s;
  int count;  // exponent of r; unused for s
};

void normalize(std::vector<Token>& w, int n) {
  std::vector<Token> out;
  out.reserve(w.size());
  for (const Token& t : w) {
    if (t.is_s) {
      if (!out.empty() && out.back().is_s) {
        out.pop_back();  // s^2 = e
      } else {
        out.push_back(t);
      }
      continue;
    }
    const int c = t.count % n;
    if (c == 0) continue;
    if (!out.empty() && !out.back().is_s) {
      out.back().count = (out.back().count + c) % n;
      if (out.back().count == 0) out.pop_back();
    } else {
      out.push_back({false, c});
    }
  }
  w = std::move(out);
}

}  // namespace

GroupElement reduce_word(const std::string& word, const GroupParams& params) {
  const int n = params.rotation_order();
  const int m = params.multiplier();
  std::vector<Token> w;
  for (char c : word) {
    if (c == 's') {
      w.push_back({true, 0});
    } else if (c == 'r') {
      w.push_back({false, 1});
    } else if (c != ' ') {
      throw std::invalid_argument(std::string("unexpected letter in word: ") + c);
    }
  }
  normalize(w, n);
  // Move every s to the front one letter at a time with r s -> s r^m.
  for (;;) {
    auto it = std::adjacent_find(w.begin(), w.end(), [](const Token& a, const Token& b) { return !a.is_s && b.is_s; });
    if (it == w.end()) break;
    const auto pos = static_cast<std::size_t>(it - w.begin());
    w[pos].count -= 1;
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, Token{false, m});
    normalize(w, n);
  }
  GroupElement out;
  for (const Token& t : w) {
    if (t.is_s) {
      out.eps ^= 1;
    } else {
      out.i = (out.i + t.count) % n;
    }
  }
  return out;
}

CayleyTable CayleyTable::build(const GroupParams& params, int cap) {
  if (params.order() > cap) {
    throw ParameterError("Cayley table refused: order " + std::to_string(params.order()) + " exceeds cap " +
                         std::to_string(cap));
  }
  auto elements = canonical_elements(params);
  const std::size_t n = elements.size();
  auto word_of = [](const GroupElement& a) { return std::string(static_cast<std::size_t>(a.eps), 's') + std::string(static_cast<std::size_t>(a.i), 'r'); };
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const GroupElement c = reduce_word(word_of(elements[a]) + word_of(elements[b]), params);
      table[a * n + b] = canonical_index(c, params);
    }
  }
  return CayleyTable(params, std::move(elements), std::move(table));
}

CayleyTable::Audit CayleyTable::audit(std::uint64_t seed, std::size_t exhaustive_limit, std::size_t samples) const {
  Audit a;
  const std::size_t n = size();
  const std::size_t e = canonical_index(identity_element, params_);

  for (std::size_t x = 0; x < n; ++x) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    bool has_inverse = false;
    for (std::size_t y = 0; y < n; ++y) {
      row_seen[product(x, y)] = 1;
      col_seen[product(y, x)] = 1;
      if (product(x, y) == e && product(y, x) == e) has_inverse = true;
    }
    if (std::count(row_seen.begin(), row_seen.end(), 1) != static_cast<std::ptrdiff_t>(n) ||
        std::count(col_seen.begin(), col_seen.end(), 1) != static_cast<std::ptrdiff_t>(n)) {
      a.latin_square = false;
    }
    if (product(e, x) != x || product(x, e) != x) a.identity = false;
    if (!has_inverse) a.inverses = false;
  }

  auto check_triple = [&](std::size_t x, std::size_t y, std::size_t z) {
    ++a.triples_checked;
    if (product(product(x, y), z) != product(x, product(y, z))) a.associative = false;
  };
  if (n <= exhaustive_limit) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) check_triple(x, y, z);
  } else {
    a.exhaustive_associativity = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < samples; ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      ++a.pairs_checked;
      if (elements_[product(x, y)] != multiply(elements_[x], elements_[y], params_)) a.agrees_with_multiply = false;
    }
  }
  return a;
}

}  // namespace pgspec
