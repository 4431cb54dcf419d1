#include "hsc/weyl.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "hsc/errors.hpp"

namespace hsc {

bool WeylMonomial::is_constant() const {
  return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

unsigned WeylMonomial::degree() const {
  unsigned d = 0;
  for (unsigned e : exps_) d += e;
  return d;
}

WeylOperator WeylOperator::constant(std::size_t n, const GaussianRational& c) {
  WeylOperator out(n);
  out.add_term(WeylMonomial(n), c);
  return out;
}

WeylOperator WeylOperator::generator(std::size_t n, Gen g, std::size_t j) {
  if (j >= n) throw IndexOutOfRange("generator index " + std::to_string(j + 1) + " exceeds n = " + std::to_string(n));
  WeylMonomial m(n);
  m.exp(g, j) = 1;
  WeylOperator out(n);
  out.add_term(m, 1);
  return out;
}

void WeylOperator::add_term(const WeylMonomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WeylOperator WeylOperator::operator-() const {
  WeylOperator out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

namespace {

void require_same_n(std::size_t a, std::size_t b) {
  if (a != b)
    throw DimensionMismatch("operators act on different dimensions: n = " + std::to_string(a) +
                            " vs n = " + std::to_string(b));
}

}  // namespace

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  require_same_n(n_, o.n_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  require_same_n(n_, o.n_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylOperator& WeylOperator::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

WeylOperator operator+(WeylOperator a, const GaussianRational& c) {
  a.add_term(WeylMonomial(a.n()), c);
  return a;
}

namespace {

constexpr std::array<std::pair<Gen, Gen>, 3> kPairs{{{Gen::Z, Gen::Dz}, {Gen::Zb, Gen::Dzb}, {Gen::Q, Gen::Dq}}};

// Reorders (derivatives of `left`) past (multiplications of `right`) one
// conjugate pair at a time:  d^a v^b = sum_k C(a,k) C(b,k) k! v^(b-k) d^(a-k).
void reorder(const WeylMonomial& left, const WeylMonomial& right, std::size_t pair_index, WeylMonomial& acc,
             const Integer& weight, const GaussianRational& coeff, WeylOperator& out) {
  const std::size_t n = left.n();
  if (pair_index == 3 * n) {
    out.add_term(acc, coeff * GaussianRational(Rational(weight)));
    return;
  }
  const auto [mult, deriv] = kPairs[pair_index / n];
  const std::size_t j = pair_index % n;
  const unsigned a = left.exp(deriv, j);
  const unsigned b = right.exp(mult, j);
  const unsigned kmax = std::min(a, b);
  for (unsigned k = 0; k <= kmax; ++k) {
    acc.exp(mult, j) = left.exp(mult, j) + b - k;
    acc.exp(deriv, j) = a - k + right.exp(deriv, j);
    Integer w = weight;
    if (k > 0) w *= binomial(a, k) * binomial(b, k) * factorial(k);
    reorder(left, right, pair_index + 1, acc, w, coeff, out);
  }
}

}  // namespace

WeylOperator compose(const WeylOperator& a, const WeylOperator& b) {
  require_same_n(a.n(), b.n());
  WeylOperator out(a.n());
  WeylMonomial acc(a.n());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) reorder(ma, mb, 0, acc, Integer(1), ca * cb, out);
  return out;
}

WeylOperator commutator(const WeylOperator& a, const WeylOperator& b) { return compose(a, b) - compose(b, a); }

WeylOperator linear_combine(std::span<const GaussianRational> coeffs, std::span<const WeylOperator> ops) {
  if (coeffs.size() != ops.size()) throw std::invalid_argument("linear_combine: coefficient/operator count mismatch");
  if (ops.empty()) throw std::invalid_argument("linear_combine: empty operator list");
  WeylOperator out(ops.front().n());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    require_same_n(out.n(), ops[i].n());
    for (const auto& [m, c] : ops[i].terms()) out.add_term(m, coeffs[i] * c);
  }
  return out;
}

WeylOperator power(const WeylOperator& a, unsigned k) {
  WeylOperator out = WeylOperator::identity(a.n());
  for (unsigned i = 0; i < k; ++i) out = compose(a, out);
  return out;
}

// --- text serialization -----------------------------------------------------

namespace {

constexpr std::string_view kMiddleDot = "\xC2\xB7";

struct FactorName {
  Gen gen;
  std::string_view name;
};

// Printing order of factors inside a term.
constexpr std::array<FactorName, 6> kFactorOrder{{{Gen::Z, "z"},
                                                  {Gen::Zb, "zb"},
                                                  {Gen::Q, "q"},
                                                  {Gen::Dq, "dq"},
                                                  {Gen::Dz, "dz"},
                                                  {Gen::Dzb, "dzb"}}};

std::string term_string(const WeylMonomial& m, const GaussianRational& c) {
  std::string out = "(" + c.str() + ")";
  for (const auto& [gen, name] : kFactorOrder) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      unsigned e = m.exp(gen, j);
      if (e == 0) continue;
      out += kMiddleDot;
      out += name;
      out += std::to_string(j + 1);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in operator text");
  parts.push_back(s.substr(start));
  return parts;
}

std::vector<std::string_view> split_factors(std::string_view term) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < term.size(); ++i) {
    if (term[i] == '(') ++depth;
    else if (term[i] == ')') --depth;
    if (depth != 0) continue;
    if (term.substr(i, kMiddleDot.size()) == kMiddleDot) {
      out.push_back(term.substr(start, i - start));
      i += kMiddleDot.size() - 1;
      start = i + 1;
    } else if (term[i] == '*') {
      out.push_back(term.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(term.substr(start));
  return out;
}

unsigned parse_unsigned(std::string_view s, std::string_view context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("malformed number in factor '" + std::string(context) + "'");
  return static_cast<unsigned>(std::stoul(std::string(s)));
}

void apply_factor(std::string_view f, WeylMonomial& m) {
  std::size_t letters = 0;
  while (letters < f.size() && std::isalpha(static_cast<unsigned char>(f[letters]))) ++letters;
  const std::string_view name = f.substr(0, letters);
  const Gen* gen = nullptr;
  for (const auto& entry : kFactorOrder)
    if (entry.name == name) gen = &entry.gen;
  if (gen == nullptr) throw ParseError("unknown generator '" + std::string(f) + "'");
  std::string_view rest = f.substr(letters);
  unsigned e = 1;
  if (auto caret = rest.find('^'); caret != std::string_view::npos) {
    e = parse_unsigned(rest.substr(caret + 1), f);
    rest = rest.substr(0, caret);
  }
  const unsigned idx = parse_unsigned(rest, f);
  if (idx < 1 || idx > m.n()) throw ParseError("generator index out of range in '" + std::string(f) + "'");
  m.exp(*gen, idx - 1) += e;
}

}  // namespace

std::string to_string(const WeylOperator& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += term_string(it->first, it->second);
  }
  return out;
}

WeylOperator parse_operator(std::string_view text, std::size_t n) {
  text = trim(text);
  WeylOperator out(n);
  if (text == "0") return out;
  if (text.empty()) throw ParseError("empty operator text");
  for (auto raw_term : split_top_level(text, '+')) {
    auto term = trim(raw_term);
    if (term.empty()) throw ParseError("empty term in operator text");
    WeylMonomial m(n);
    GaussianRational coeff = 1;
    for (auto raw_factor : split_factors(term)) {
      auto f = trim(raw_factor);
      if (f.empty()) throw ParseError("empty factor in term '" + std::string(term) + "'");
      if (f.front() == '(') {
        if (f.back() != ')') throw ParseError("unterminated coefficient in '" + std::string(f) + "'");
        coeff *= GaussianRational::parse(f.substr(1, f.size() - 2));
      } else {
        apply_factor(f, m);
      }
    }
    out.add_term(m, coeff);
  }
  return out;
}

}  // namespace hsc
