#include "hsc/catalog.hpp"

#include <array>

#include "hsc/errors.hpp"

namespace hsc {

namespace {

const GaussianRational I = GaussianRational::i();
const GaussianRational Half = Rational(1, 2);

// Coordinate operators with one-based indices.
class Coords {
 public:
  explicit Coords(std::size_t n) : n_(n) {}

  WeylOperator gen(Gen g, unsigned j) const { return WeylOperator::generator(n_, g, j - 1); }
  WeylOperator z(unsigned j) const { return gen(Gen::Z, j); }
  WeylOperator zb(unsigned j) const { return gen(Gen::Zb, j); }
  WeylOperator q(unsigned j) const { return gen(Gen::Q, j); }
  WeylOperator dz(unsigned j) const { return gen(Gen::Dz, j); }
  WeylOperator dzb(unsigned j) const { return gen(Gen::Dzb, j); }
  WeylOperator dq(unsigned j) const { return gen(Gen::Dq, j); }

  WeylOperator x(unsigned j) const { return Half * (z(j) + zb(j)); }
  WeylOperator y(unsigned j) const { return (-Half * I) * (z(j) - zb(j)); }
  WeylOperator dx(unsigned j) const { return dz(j) + dzb(j); }
  WeylOperator dy(unsigned j) const { return I * (dz(j) - dzb(j)); }

  // Spinor ladder operators.
  WeylOperator L(unsigned j) const { return q(j) + dq(j); }
  WeylOperator R(unsigned j) const { return q(j) - dq(j); }

  WeylOperator zero() const { return WeylOperator::zero(n_); }
  WeylOperator one() const { return WeylOperator::identity(n_); }
  std::size_t n() const { return n_; }

  template <class F>
  WeylOperator sum(F&& term) const {
    WeylOperator out = zero();
    for (unsigned j = 1; j <= n_; ++j) out += term(j);
    return out;
  }

 private:
  std::size_t n_;
};

GaussianRational delta(unsigned j, unsigned k) { return j == k ? 1 : 0; }

WeylOperator ds(const Coords& c) {
  return c.sum([&](unsigned j) { return I * c.q(j) * c.dy(j) - c.dq(j) * c.dx(j); });
}
WeylOperator dt(const Coords& c) {
  return c.sum([&](unsigned j) { return I * c.q(j) * c.dx(j) + c.dy(j) * c.dq(j); });
}
WeylOperator xs(const Coords& c) {
  return c.sum([&](unsigned j) { return c.y(j) * c.dq(j) + I * c.q(j) * c.x(j); });
}
WeylOperator xt(const Coords& c) {
  return c.sum([&](unsigned j) { return c.x(j) * c.dq(j) - I * c.y(j) * c.q(j); });
}
WeylOperator closing_o(const Coords& c) {
  return c.sum([&](unsigned j) {
    return I * (c.x(j) * c.dy(j) - c.y(j) * c.dx(j)) + c.dq(j) * c.dq(j) - c.q(j) * c.q(j);
  });
}
WeylOperator laplacian(const Coords& c) {
  return c.sum([&](unsigned j) { return c.dx(j) * c.dx(j) + c.dy(j) * c.dy(j); });
}
WeylOperator rsq(const Coords& c) {
  return c.sum([&](unsigned j) { return c.x(j) * c.x(j) + c.y(j) * c.y(j); });
}
WeylOperator euler(const Coords& c) {
  return c.sum([&](unsigned j) { return c.x(j) * c.dx(j) + c.y(j) * c.dy(j); });
}

WeylOperator dolbeault_dz(const Coords& c) {
  return c.sum([&](unsigned j) { return -(c.L(j) * c.dz(j)); });
}
WeylOperator dolbeault_dz_dag(const Coords& c) {
  return c.sum([&](unsigned j) { return c.R(j) * c.dzb(j); });
}
WeylOperator dolbeault_xz(const Coords& c) {
  return (Half * I) * c.sum([&](unsigned j) { return c.L(j) * c.zb(j); });
}
WeylOperator dolbeault_xz_dag(const Coords& c) {
  return (Half * I) * c.sum([&](unsigned j) { return c.R(j) * c.z(j); });
}

// (E + n - 2) Xz + (i/2)|z|^2 Dz  and  (E + n - 2) Xz^dag - (i/2)|z|^2 Dz^dag
WeylOperator xhat_z(const Coords& c) {
  const auto shifted_euler = euler(c) + GaussianRational(static_cast<long>(c.n()) - 2);
  return shifted_euler * dolbeault_xz(c) + (Half * I) * (rsq(c) * dolbeault_dz(c));
}
WeylOperator xhat_z_dag(const Coords& c) {
  const auto shifted_euler = euler(c) + GaussianRational(static_cast<long>(c.n()) - 2);
  return shifted_euler * dolbeault_xz_dag(c) - (Half * I) * (rsq(c) * dolbeault_dz_dag(c));
}

// First sp(2n) realisation; Ds commutes with all of it.
WeylOperator sp_x(const Coords& c, unsigned j, unsigned k) {
  return c.x(j) * c.dx(k) - c.y(k) * c.dy(j) - (c.q(k) * c.dq(j) + delta(j, k) * Half * c.one());
}
WeylOperator sp_y(const Coords& c, unsigned j, unsigned k) {
  if (j == k) return c.x(j) * c.dy(j) + (Half * I) * (c.dq(j) * c.dq(j));
  return c.x(j) * c.dy(k) + c.x(k) * c.dy(j) + I * c.dq(j) * c.dq(k);
}
WeylOperator sp_z(const Coords& c, unsigned j, unsigned k) {
  if (j == k) return c.y(j) * c.dx(j) + (Half * I) * (c.q(j) * c.q(j));
  return c.y(j) * c.dx(k) + c.y(k) * c.dx(j) + I * c.q(j) * c.q(k);
}

// Second realisation; Dt commutes with all of it. The spinor part of X~_jk is
// q_j dq_k (not q_k dq_j): only this index order commutes with Dt and closes.
WeylOperator sp_xt(const Coords& c, unsigned j, unsigned k) {
  return c.x(j) * c.dx(k) - c.y(k) * c.dy(j) + c.q(j) * c.dq(k) + delta(j, k) * Half * c.one();
}
WeylOperator sp_yt(const Coords& c, unsigned j, unsigned k) {
  if (j == k) return c.x(j) * c.dy(j) - (Half * I) * (c.q(j) * c.q(j));
  return c.x(j) * c.dy(k) + c.x(k) * c.dy(j) - I * c.q(j) * c.q(k);
}
WeylOperator sp_zt(const Coords& c, unsigned j, unsigned k) {
  if (j == k) return c.y(j) * c.dx(j) - (Half * I) * (c.dq(j) * c.dq(j));
  return c.y(j) * c.dx(k) + c.y(k) * c.dx(j) - I * c.dq(j) * c.dq(k);
}

WeylOperator un_a(const Coords& c, unsigned j, unsigned k) {
  return c.y(j) * c.dx(k) - c.x(k) * c.dy(j) + c.y(k) * c.dx(j) - c.x(j) * c.dy(k) +
         I * (c.q(j) * c.q(k) - c.dq(j) * c.dq(k));
}
WeylOperator un_b(const Coords& c, unsigned j) {
  return c.y(j) * c.dx(j) - c.x(j) * c.dy(j) + (Half * I) * (c.q(j) * c.q(j) - c.dq(j) * c.dq(j));
}
WeylOperator un_c(const Coords& c, unsigned j, unsigned k) {
  return c.x(j) * c.dx(k) - c.x(k) * c.dx(j) + c.y(j) * c.dy(k) - c.y(k) * c.dy(j) + c.q(j) * c.dq(k) -
         c.q(k) * c.dq(j);
}

enum class Range { None, All, Upper, Strict, Diagonal };

Range range_of(OperatorTag tag) {
  switch (tag) {
    case OperatorTag::SpX:
    case OperatorTag::SpXt:
      return Range::All;
    case OperatorTag::SpY:
    case OperatorTag::SpZ:
    case OperatorTag::SpYt:
    case OperatorTag::SpZt:
      return Range::Upper;
    case OperatorTag::UnA:
    case OperatorTag::UnC:
    case OperatorTag::PosRoot:
      return Range::Strict;
    case OperatorTag::UnB:
    case OperatorTag::CartanH:
      return Range::Diagonal;
    default:
      return Range::None;
  }
}

void validate(const OperatorName& name, std::size_t n) {
  const Range range = range_of(name.tag);
  if (range == Range::None) {
    if (name.indices) throw IndexOutOfRange(name.str() + " takes no indices");
    return;
  }
  if (!name.indices) throw IndexOutOfRange(name.str() + " requires indices");
  const auto [j, k] = *name.indices;
  const bool in_box = j >= 1 && k >= 1 && j <= n && k <= n;
  bool ok = in_box;
  if (range == Range::Upper) ok = ok && j <= k;
  if (range == Range::Strict) ok = ok && j < k;
  if (range == Range::Diagonal) ok = ok && j == k;
  if (!ok) throw IndexOutOfRange(name.str() + " is outside the family's index range for n = " + std::to_string(n));
}

constexpr std::array<const char*, 33> kTagNames{
    "Ds",   "Dt",   "Xs",    "Xt",      "O",      "Delta",  "Rsq",    "Euler",  "Dz",     "DzDag",  "Xz",
    "XzDag", "XhatZ", "XhatZDag", "SpX", "SpY",    "SpZ",    "SpXt",   "SpYt",   "SpZt",   "UnA",    "UnB",
    "UnC",  "CartanH", "PosRoot", "Su12.H1", "Su12.H2", "Su12.X1", "Su12.X2", "Su12.X3", "Su12.Y1", "Su12.Y2", "Su12.Y3"};

}  // namespace

std::string OperatorName::str() const {
  std::string out = kTagNames[static_cast<std::size_t>(tag)];
  if (indices) out += "(" + std::to_string(indices->first) + "," + std::to_string(indices->second) + ")";
  return out;
}

WeylOperator catalog(const OperatorName& name, std::size_t n) {
  if (n == 0) throw IndexOutOfRange("n must be positive");
  validate(name, n);
  const Coords c(n);
  const unsigned j = name.indices ? name.indices->first : 0;
  const unsigned k = name.indices ? name.indices->second : 0;
  const auto nn = GaussianRational(static_cast<long>(n));
  switch (name.tag) {
    case OperatorTag::Ds: return ds(c);
    case OperatorTag::Dt: return dt(c);
    case OperatorTag::Xs: return xs(c);
    case OperatorTag::Xt: return xt(c);
    case OperatorTag::O: return closing_o(c);
    case OperatorTag::Delta: return laplacian(c);
    case OperatorTag::Rsq: return rsq(c);
    case OperatorTag::Euler: return euler(c);
    case OperatorTag::Dz: return dolbeault_dz(c);
    case OperatorTag::DzDag: return dolbeault_dz_dag(c);
    case OperatorTag::Xz: return dolbeault_xz(c);
    case OperatorTag::XzDag: return dolbeault_xz_dag(c);
    case OperatorTag::XhatZ: return xhat_z(c);
    case OperatorTag::XhatZDag: return xhat_z_dag(c);
    case OperatorTag::SpX: return sp_x(c, j, k);
    case OperatorTag::SpY: return sp_y(c, j, k);
    case OperatorTag::SpZ: return sp_z(c, j, k);
    case OperatorTag::SpXt: return sp_xt(c, j, k);
    case OperatorTag::SpYt: return sp_yt(c, j, k);
    case OperatorTag::SpZt: return sp_zt(c, j, k);
    case OperatorTag::UnA: return un_a(c, j, k);
    case OperatorTag::UnB: return un_b(c, j);
    case OperatorTag::UnC: return un_c(c, j, k);
    case OperatorTag::CartanH: return I * un_b(c, j);
    case OperatorTag::PosRoot: return un_c(c, j, k) + I * un_a(c, j, k);
    case OperatorTag::Su12H1: return euler(c) + nn;
    case OperatorTag::Su12H2: return I * closing_o(c);
    case OperatorTag::Su12X1: return I * xt(c);
    case OperatorTag::Su12X2: return I * xs(c);
    case OperatorTag::Su12X3: return (-Half * I) * rsq(c);
    case OperatorTag::Su12Y1: return -dt(c);
    case OperatorTag::Su12Y2: return ds(c);
    case OperatorTag::Su12Y3: return (Half * I) * laplacian(c);
  }
  throw IndexOutOfRange("unknown operator tag");
}

WeylOperator catalog(OperatorTag tag, std::size_t n) { return catalog(OperatorName{tag, std::nullopt}, n); }

WeylOperator catalog(OperatorTag tag, unsigned j, unsigned k, std::size_t n) {
  return catalog(OperatorName{tag, std::make_pair(j, k)}, n);
}

namespace {

std::vector<NamedOperator> realisation(std::size_t n, OperatorTag x, OperatorTag y, OperatorTag z) {
  std::vector<NamedOperator> out;
  const auto push = [&](OperatorTag tag, unsigned j, unsigned k) {
    OperatorName name{tag, std::make_pair(j, k)};
    out.push_back({name, catalog(name, n)});
  };
  for (unsigned j = 1; j <= n; ++j)
    for (unsigned k = 1; k <= n; ++k) push(x, j, k);
  for (unsigned j = 1; j <= n; ++j)
    for (unsigned k = j; k <= n; ++k) push(y, j, k);
  for (unsigned j = 1; j <= n; ++j)
    for (unsigned k = j; k <= n; ++k) push(z, j, k);
  return out;
}

}  // namespace

std::vector<NamedOperator> sp_first_realisation(std::size_t n) {
  return realisation(n, OperatorTag::SpX, OperatorTag::SpY, OperatorTag::SpZ);
}

std::vector<NamedOperator> sp_second_realisation(std::size_t n) {
  return realisation(n, OperatorTag::SpXt, OperatorTag::SpYt, OperatorTag::SpZt);
}

std::vector<NamedOperator> un_realisation(std::size_t n) {
  std::vector<NamedOperator> out;
  const auto push = [&](OperatorTag tag, unsigned j, unsigned k) {
    OperatorName name{tag, std::make_pair(j, k)};
    out.push_back({name, catalog(name, n)});
  };
  for (unsigned j = 1; j <= n; ++j)
    for (unsigned k = j + 1; k <= n; ++k) push(OperatorTag::UnA, j, k);
  for (unsigned j = 1; j <= n; ++j) push(OperatorTag::UnB, j, j);
  for (unsigned j = 1; j <= n; ++j)
    for (unsigned k = j + 1; k <= n; ++k) push(OperatorTag::UnC, j, k);
  return out;
}

std::vector<NamedOperator> su12_images(std::size_t n) {
  std::vector<NamedOperator> out;
  for (auto tag : {OperatorTag::Su12H1, OperatorTag::Su12H2, OperatorTag::Su12X1, OperatorTag::Su12X2,
                   OperatorTag::Su12X3, OperatorTag::Su12Y1, OperatorTag::Su12Y2, OperatorTag::Su12Y3})
    out.push_back({OperatorName{tag, std::nullopt}, catalog(tag, n)});
  return out;
}

}  // namespace hsc
