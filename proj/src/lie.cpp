#include "hsc/lie.hpp"

#include <algorithm>
#include <map>

#include "hsc/errors.hpp"

namespace hsc {

LieClosureReport lie_closure_check(const std::vector<WeylOperator>& gens) {
  if (gens.empty()) throw std::invalid_argument("lie_closure_check: empty generator list");
  const std::size_t n = gens.front().n();
  for (const auto& g : gens)
    if (g.n() != n) throw DimensionMismatch("lie_closure_check: generators act on different n");

  // Generators as columns over the monomials they use.
  std::map<WeylMonomial, std::size_t> row_of;
  for (const auto& g : gens)
    for (const auto& [m, c] : g.terms()) row_of.try_emplace(m, 0);
  std::size_t next = 0;
  for (auto& [m, idx] : row_of) idx = next++;
  ExactMatrix span(row_of.size(), gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (const auto& [m, c] : gens[k].terms()) span.set(row_of.at(m), k, c);

  LieClosureReport report;
  const std::size_t g = gens.size();
  report.constants.assign(g, std::vector<Vector>(g, Vector(g)));
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i + 1; j < g; ++j) {
      ++report.pairs_checked;
      const WeylOperator br = commutator(gens[i], gens[j]);
      Vector rhs(row_of.size());
      bool in_support = true;
      for (const auto& [m, c] : br.terms()) {
        auto it = row_of.find(m);
        if (it == row_of.end()) {
          in_support = false;
          break;
        }
        rhs[it->second] = c;
      }
      std::optional<Vector> sol = in_support ? solve(span, rhs) : std::nullopt;
      if (!sol) {
        report.closes = false;
        report.failing_pair = std::make_pair(i, j);
        report.constants.clear();
        return report;
      }
      report.constants[i][j] = *sol;
      for (std::size_t k = 0; k < g; ++k) report.constants[j][i][k] = -(*sol)[k];
    }
  }
  report.closes = true;
  return report;
}

LieClosureReport lie_closure_check(const std::vector<NamedOperator>& gens) {
  std::vector<WeylOperator> ops;
  ops.reserve(gens.size());
  for (const auto& g : gens) ops.push_back(g.op);
  return lie_closure_check(ops);
}

// Rows and columns ordered H1, H2, X1, X2, X3, Y1, Y2, Y3.
// Each entry lists coefficients over the same basis.
const std::array<std::array<Su12Entry, 8>, 8> kSu12Table = [] {
  enum { H1, H2, X1, X2, X3, Y1, Y2, Y3 };
  std::array<std::array<Su12Entry, 8>, 8> t{};
  auto set = [&](int row, int col, std::initializer_list<std::pair<int, int>> terms) {
    Su12Entry e{};
    for (auto [basis, coeff] : terms) e[basis] = coeff;
    t[row][col] = e;
  };
  set(H1, X1, {{X1, 1}});  set(H1, X2, {{X2, 1}});  set(H1, X3, {{X3, 2}});
  set(H1, Y1, {{Y1, -1}}); set(H1, Y2, {{Y2, -1}}); set(H1, Y3, {{Y3, -2}});

  set(H2, X1, {{X2, 3}});  set(H2, X2, {{X1, -3}});
  set(H2, Y1, {{Y2, -3}}); set(H2, Y2, {{Y1, 3}});

  set(X1, H1, {{X1, -1}}); set(X1, H2, {{X2, -3}}); set(X1, X2, {{X3, 2}});
  set(X1, Y1, {{H1, 1}});  set(X1, Y2, {{H2, 1}});  set(X1, Y3, {{Y2, -1}});

  set(X2, H1, {{X2, -1}}); set(X2, H2, {{X1, 3}});  set(X2, X1, {{X3, -2}});
  set(X2, Y1, {{H2, 1}});  set(X2, Y2, {{H1, -1}}); set(X2, Y3, {{Y1, -1}});

  set(X3, H1, {{X3, -2}}); set(X3, Y1, {{X2, -1}}); set(X3, Y2, {{X1, -1}}); set(X3, Y3, {{H1, -1}});

  set(Y1, H1, {{Y1, 1}});  set(Y1, H2, {{Y2, 3}});  set(Y1, X1, {{H1, -1}});
  set(Y1, X2, {{H2, -1}}); set(Y1, X3, {{X2, 1}});  set(Y1, Y2, {{Y3, -2}});

  set(Y2, H1, {{Y2, 1}});  set(Y2, H2, {{Y1, -3}}); set(Y2, X1, {{H2, -1}});
  set(Y2, X2, {{H1, 1}});  set(Y2, X3, {{X1, 1}});  set(Y2, Y1, {{Y3, 2}});

  set(Y3, H1, {{Y3, 2}});  set(Y3, X1, {{Y2, 1}});  set(Y3, X2, {{Y1, 1}});  set(Y3, X3, {{H1, 1}});
  return t;
}();

std::string su12_entry_string(const Su12Entry& e) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty() && e[k] > 0) out += "+";
    if (e[k] == -1) out += "-";
    else if (e[k] != 1) out += std::to_string(e[k]);
    out += kSu12Names[k];
  }
  return out.empty() ? "0" : out;
}

std::size_t Su12Report::passed() const {
  return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.ok; }));
}

Su12Report verify_su12_table(std::size_t n) {
  if (n == 0) throw std::invalid_argument("verify_su12_table: n must be positive");
  const auto images = su12_images(n);
  Su12Report report;
  report.n = n;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      const Su12Entry& entry = kSu12Table[i][j];
      WeylOperator expected = WeylOperator::zero(n);
      for (std::size_t k = 0; k < entry.size(); ++k)
        if (entry[k] != 0) expected += GaussianRational(entry[k]) * images[k].op;
      const WeylOperator actual = commutator(images[i].op, images[j].op);
      Su12PairCheck check{i, j, actual == expected, su12_entry_string(entry), {}};
      if (!check.ok) check.actual = to_string(actual);
      report.pairs.push_back(std::move(check));
    }
  }
  return report;
}

}  // namespace hsc
