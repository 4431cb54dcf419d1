#include "hsc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "hsc/catalog.hpp"
#include "hsc/errors.hpp"
#include "hsc/fischer.hpp"
#include "hsc/lie.hpp"
#include "hsc/linalg.hpp"

namespace hsc::cli {

using json = nlohmann::ordered_json;

namespace {

struct CommandSpec {
  const char* name;
  const char* help;
  bool needs_slice;  // needs --a --b --r in addition to --n
};

constexpr CommandSpec kCommands[] = {
    {"verify-algebra", "core commutator relations and Lie closure of the sp(2n) and u(n) realisations", false},
    {"verify-invariance", "commutation of Ds and Dt with the symmetry generators", false},
    {"verify-su12", "su(1,2) bracket table on the operator images", false},
    {"dims", "dimension formulas for harmonics, spinors and h-monogenics", true},
    {"kernel", "basis of ker Ds ∩ ker Dt on a slice", true},
    {"hwv", "highest weight vector and its checks", true},
    {"decompose", "Fischer decomposition of the harmonic slice", true},
    {"pair-gram", "Fischer Gram matrices between embedded summands and the slice's h-monogenics", true},
};

}  // namespace

CommandConfig parse_config(const std::vector<std::string>& argv) {
  CLI::App app{"Exact computations for Hermitian symplectic Clifford analysis", "hsc"};
  app.require_subcommand(1);

  CommandConfig cfg;
  std::string format = "text";
  std::string output;
  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--n", cfg.n, "dimension parameter n (R^{2n})")->required();
    auto* a = sub->add_option("--a", cfg.a, "degree in z");
    auto* b = sub->add_option("--b", cfg.b, "degree in zb");
    auto* r = sub->add_option("--r", cfg.r, "spinor grade");
    if (c.needs_slice) {
      a->required();
      b->required();
      r->required();
    }
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", output, "write the report to this path");
    sub->add_option("--max-slice-dim", cfg.max_slice_dim, "refuse slices larger than this")->check(CLI::PositiveNumber);
  }

  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (const auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  cfg.format = format == "json" ? Format::Json : (format == "csv" ? Format::Csv : Format::Text);
  if (!output.empty()) cfg.output = output;
  return cfg;
}

std::string resolve_output_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("HSC_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p.string();
}

// --- report assembly ----------------------------------------------------------------

namespace {

struct Report {
  json doc = json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;  // text-only lines after the table
  bool pass = true;
};

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string join(const MultiIndex& m, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(m[i]);
  }
  return out;
}

json polynomial_json(const SpinorPolynomial& u) {
  json out = json::array();
  for (const auto& [s, c] : u.terms())
    out.push_back({{"alpha", s.alpha}, {"beta", s.beta}, {"kappa", s.kappa}, {"coeff", c.str()}});
  return out;
}

std::string polynomial_text(const SpinorPolynomial& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : u.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ") z^[" + join(s.alpha, ",") + "] zb^[" + join(s.beta, ",") + "] h[" +
           join(s.kappa, ",") + "]";
  }
  return out;
}

json slice_json(const SliceIndex& s) { return {{"n", s.n}, {"a", s.a}, {"b", s.b}, {"r", s.r}}; }

json weight_json(const Weight& w) {
  json out = json::array();
  for (const auto& e : w.entries) out.push_back(e.str());
  return out;
}

std::string weight_text(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.entries.size(); ++i) {
    if (i) out += " ";
    out += w.entries[i].str();
  }
  return out;
}

json matrix_json(const ExactMatrix& m) {
  json entries = json::array();
  for (const auto& [ij, c] : m.entries()) entries.push_back({ij.first, ij.second, c.str()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

const char* yes_no(bool v) { return v ? "true" : "false"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string emit(const Report& rep, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      os << rep.doc.dump(2) << "\n";
      break;
    case Format::Csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
        os << "\n";
      };
      line(rep.header);
      for (const auto& row : rep.rows) line(row);
      break;
    }
    case Format::Text: {
      std::vector<std::size_t> width(rep.header.size(), 0);
      auto measure = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i)
          width[i] = std::max(width[i], cells[i].size());
      };
      measure(rep.header);
      for (const auto& row : rep.rows) measure(row);
      auto line = [&](const std::vector<std::string>& cells) {
        std::string l;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) l += "  ";
          l += cells[i];
          if (i + 1 < cells.size()) l.append(width[i] - cells[i].size(), ' ');
        }
        os << l << "\n";
      };
      if (!rep.header.empty()) {
        line(rep.header);
        for (const auto& row : rep.rows) line(row);
      }
      for (const auto& note : rep.notes) os << note << "\n";
      break;
    }
  }
  return os.str();
}

// --- commands ------------------------------------------------------------------------

struct Check {
  std::string name;
  bool ok;
};

Report checks_report(const std::string& command, std::size_t n, const std::vector<Check>& checks) {
  Report rep;
  rep.header = {"check", "ok"};
  json arr = json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"ok", c.ok}});
    rep.rows.push_back({c.name, yes_no(c.ok)});
    passed += c.ok;
  }
  rep.pass = passed == checks.size();
  rep.doc = {{"command", command}, {"n", n}, {"checks", arr}, {"passed", passed}, {"total", checks.size()},
             {"pass", rep.pass}};
  rep.notes.push_back(std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks pass");
  return rep;
}

Report verify_algebra(std::size_t n) {
  auto op = [n](OperatorTag t) { return catalog(t, n); };
  const GaussianRational i = GaussianRational::i();
  std::vector<Check> checks;
  checks.push_back({"[Ds,Dt] = -i Delta", commutator(op(OperatorTag::Ds), op(OperatorTag::Dt)) ==
                                              -i * op(OperatorTag::Delta)});
  checks.push_back({"[Xs,Xt] = -i |z|^2", commutator(op(OperatorTag::Xs), op(OperatorTag::Xt)) ==
                                              -i * op(OperatorTag::Rsq)});
  checks.push_back({"[Delta,|z|^2] = 4(E+n)",
                    commutator(op(OperatorTag::Delta), op(OperatorTag::Rsq)) ==
                        GaussianRational(4) * (op(OperatorTag::Euler) + GaussianRational(static_cast<long>(n)))});
  auto closure = [&](const std::string& name, const std::vector<NamedOperator>& gens) {
    const auto rep = lie_closure_check(gens);
    std::string label = name + " closes (" + std::to_string(gens.size()) + " generators)";
    if (rep.failing_pair)
      label += ", first failure [" + gens[rep.failing_pair->first].name.str() + "," +
               gens[rep.failing_pair->second].name.str() + "]";
    checks.push_back({label, rep.closes});
  };
  closure("sp(2n) first realisation", sp_first_realisation(n));
  closure("sp(2n) second realisation", sp_second_realisation(n));
  closure("u(n) realisation", un_realisation(n));
  return checks_report("verify-algebra", n, checks);
}

Report verify_invariance(std::size_t n) {
  const WeylOperator ds = catalog(OperatorTag::Ds, n);
  const WeylOperator dt = catalog(OperatorTag::Dt, n);
  std::vector<Check> checks;
  for (const auto& g : un_realisation(n)) {
    checks.push_back({"[Ds," + g.name.str() + "] = 0", commutator(ds, g.op).is_zero()});
    checks.push_back({"[Dt," + g.name.str() + "] = 0", commutator(dt, g.op).is_zero()});
  }
  for (const auto& g : sp_first_realisation(n))
    checks.push_back({"[Ds," + g.name.str() + "] = 0", commutator(ds, g.op).is_zero()});
  for (const auto& g : sp_second_realisation(n))
    checks.push_back({"[Dt," + g.name.str() + "] = 0", commutator(dt, g.op).is_zero()});
  return checks_report("verify-invariance", n, checks);
}

Report verify_su12(std::size_t n) {
  const Su12Report su = verify_su12_table(n);
  Report rep;
  rep.header = {"left", "right", "expected", "ok"};
  json arr = json::array();
  for (const auto& p : su.pairs) {
    json e = {{"left", kSu12Names[p.left]}, {"right", kSu12Names[p.right]}, {"expected", p.expected}, {"ok", p.ok}};
    if (!p.ok) e["actual"] = p.actual;
    arr.push_back(e);
    rep.rows.push_back({kSu12Names[p.left], kSu12Names[p.right], p.expected, yes_no(p.ok)});
  }
  rep.pass = su.all_pass();
  rep.doc = {{"command", "verify-su12"}, {"n", n},        {"pairs", arr},
             {"passed", su.passed()},    {"total", su.pairs.size()}, {"pass", rep.pass}};
  rep.notes.push_back(std::to_string(su.passed()) + "/" + std::to_string(su.pairs.size()) + " bracket pairs pass");
  return rep;
}

Report dims(const SliceIndex& s) {
  const Integer h = dim_harmonics(s.n, s.a, s.b);
  const Integer sp = dim_spinor(s.n, s.r);
  const Integer m = dim_monogenics(s.n, s.a, s.b, s.r);
  Report rep;
  rep.header = {"n", "a", "b", "r", "dimH", "dimS", "dimM"};
  rep.rows.push_back({std::to_string(s.n), std::to_string(s.a), std::to_string(s.b), std::to_string(s.r),
                      h.get_str(), sp.get_str(), m.get_str()});
  rep.doc = {{"n", s.n}, {"a", s.a}, {"b", s.b}, {"r", s.r}, {"dimH", integer_json(h)}, {"dimS", integer_json(sp)},
             {"dimM", integer_json(m)}};
  return rep;
}

Report kernel(const SliceIndex& s) {
  const VectorBasis basis = monogenic_basis(s);
  std::optional<Integer> formula;
  if (s.n >= 3 && s.b <= s.r) formula = dim_monogenics(s.n, s.a, s.b, s.r);
  Report rep;
  // Beyond b <= r no formula applies; the kernel is expected to vanish there.
  const Integer expected = formula ? *formula : Integer(0);
  const bool check_applies = formula || (s.n >= 3 && s.b > s.r);
  rep.pass = !check_applies || Integer(static_cast<unsigned long>(basis.dim())) == expected;

  json vectors = json::array();
  rep.header = {"vector", "alpha", "beta", "kappa", "coeff"};
  const auto elems = basis.elements();
  for (std::size_t v = 0; v < elems.size(); ++v) {
    vectors.push_back(polynomial_json(elems[v]));
    for (const auto& [st, c] : elems[v].terms())
      rep.rows.push_back({std::to_string(v), join(st.alpha, " "), join(st.beta, " "), join(st.kappa, " "), c.str()});
  }
  rep.doc = {{"slice", slice_json(s)},
             {"sliceDim", integer_json(s.dimension())},
             {"dim", basis.dim()},
             {"formulaDim", formula ? integer_json(*formula) : json(nullptr)},
             {"basis", vectors},
             {"pass", rep.pass}};
  if (basis.dim() == 0) {
    rep.header.clear();
    rep.rows.clear();
    rep.notes.push_back("dim = 0 (no h-monogenics in this slice)");
  } else {
    rep.notes.push_back("dim = " + std::to_string(basis.dim()));
  }
  if (formula) rep.notes.push_back("formula dim = " + formula->get_str());
  if (!rep.pass) rep.notes.push_back("MISMATCH between kernel and expected dimension");
  return rep;
}

Report hwv_report(const SliceIndex& s) {
  const SpinorPolynomial w = hwv(s.n, s.a, s.b, s.r);
  const HwvReport chk = verify_hwv(s.n, s.a, s.b, s.r);
  Report rep;
  rep.pass = chk.pass();
  json eig = json::array();
  std::string eig_text;
  for (const auto& e : chk.eigenvalues) {
    eig.push_back(e ? json(e->str()) : json(nullptr));
    eig_text += (eig_text.empty() ? "" : " ") + (e ? e->str() : std::string("none"));
  }
  json roots = json::array();
  for (const auto& [j, k] : chk.failing_roots) roots.push_back({j, k});
  rep.doc = {{"slice", slice_json(s)},
             {"hwv", polynomial_json(w)},
             {"checks",
              {{"Dz", chk.dz_ok}, {"DzDagger", chk.dz_dagger_ok}, {"positiveRoots", chk.roots_ok},
               {"cartan", chk.cartan_ok}}},
             {"failingRoots", roots},
             {"expectedWeight", weight_json(chk.expected)},
             {"eigenvalues", eig},
             {"pass", rep.pass}};
  rep.header = {"check", "ok"};
  rep.rows = {{"Dz w = 0", yes_no(chk.dz_ok)},
              {"DzDagger w = 0", yes_no(chk.dz_dagger_ok)},
              {"positive roots annihilate w", yes_no(chk.roots_ok)},
              {"Cartan eigenvalues", yes_no(chk.cartan_ok)}};
  rep.notes.push_back("w = " + polynomial_text(w));
  rep.notes.push_back("expected weight: " + weight_text(chk.expected));
  rep.notes.push_back("eigenvalues:     " + eig_text);
  return rep;
}

Report decompose_report(const SliceIndex& s) {
  const DecompositionReport d = decompose(s);
  Report rep;
  rep.pass = d.all_pass();
  rep.header = {"i", "j", "k", "l", "sourceA", "sourceB", "sourceR", "weight", "predictedDim", "computedDim",
                "independent"};
  json summands = json::array();
  for (const auto& sr : d.summands) {
    const auto& sd = sr.descriptor;
    summands.push_back({{"i", sd.i},
                        {"j", sd.j},
                        {"k", sd.k},
                        {"l", sd.l},
                        {"sourceSlice", {sd.source.a, sd.source.b, sd.source.r}},
                        {"weight", weight_json(sd.weight)},
                        {"predictedDim", integer_json(sd.predicted_dim)},
                        {"computedDim", sr.computed_dim},
                        {"independent", sr.independent}});
    rep.rows.push_back({std::to_string(sd.i), std::to_string(sd.j), std::to_string(sd.k), std::to_string(sd.l),
                        std::to_string(sd.source.a), std::to_string(sd.source.b), std::to_string(sd.source.r),
                        weight_text(sd.weight), sd.predicted_dim.get_str(), std::to_string(sr.computed_dim),
                        yes_no(sr.independent)});
  }
  rep.doc = {{"slice", slice_json(s)},
             {"harmonicDim", d.harmonic_dim},
             {"summands", summands},
             {"completenessRank", d.completeness_rank},
             {"orthogonalityOk", d.orthogonality_ok},
             {"complete", d.complete()},
             {"verdicts",
              {{"dimsMatch", d.dims_ok},
               {"countMatches", d.count_ok},
               {"fullRank", d.full_rank},
               {"orthogonal", d.orthogonality_ok},
               {"imagesHarmonic", d.harmonic_ok}}}};
  rep.notes = {"harmonic dim      = " + std::to_string(d.harmonic_dim),
               "embedded total    = " + std::to_string(d.total_embedded),
               "completeness rank = " + std::to_string(d.completeness_rank),
               std::string("dims match        = ") + yes_no(d.dims_ok),
               std::string("orthogonality     = ") + yes_no(d.orthogonality_ok),
               std::string("images harmonic   = ") + yes_no(d.harmonic_ok),
               std::string("complete          = ") + yes_no(d.complete())};
  return rep;
}

Report pair_gram(const SliceIndex& s) {
  const DecompositionReport d = decompose(s);
  const VectorBasis mono = monogenic_basis(s);
  const auto mono_elems = mono.elements();
  const ExactMatrix self = gram(mono_elems, mono_elems);
  const bool self_ok = rank(self) == mono.dim();

  Report rep;
  rep.header = {"k", "l", "rows", "cols", "nonzero"};
  json blocks = json::array();
  bool cross_ok = true;
  for (const auto& sr : d.summands) {
    const auto& sd = sr.descriptor;
    if (sd.k == 0 && sd.l == 0) continue;
    const ExactMatrix g = gram(sr.embedded.elements(), mono_elems);
    cross_ok = cross_ok && g.is_zero();
    blocks.push_back({{"k", sd.k}, {"l", sd.l}, {"gram", matrix_json(g)}});
    rep.rows.push_back({std::to_string(sd.k), std::to_string(sd.l), std::to_string(g.rows()),
                        std::to_string(g.cols()), std::to_string(g.entries().size())});
  }
  rep.pass = self_ok && cross_ok;
  rep.doc = {{"slice", slice_json(s)},
             {"monogenicDim", mono.dim()},
             {"monogenicGram", matrix_json(self)},
             {"monogenicGramNondegenerate", self_ok},
             {"crossBlocks", blocks},
             {"orthogonalityOk", cross_ok},
             {"pass", rep.pass}};
  rep.notes = {"monogenic dim = " + std::to_string(mono.dim()),
               std::string("monogenic Gram nondegenerate = ") + yes_no(self_ok),
               std::string("cross blocks vanish = ") + yes_no(cross_ok)};
  return rep;
}

// --- validation ------------------------------------------------------------------------

unsigned non_negative(const std::optional<long>& v, const char* flag) {
  if (*v < 0) throw UsageError(std::string(flag) + " must be non-negative, got " + std::to_string(*v));
  return static_cast<unsigned>(*v);
}

void guard(const SliceIndex& s, std::size_t max_dim) {
  const Integer d = s.dimension();
  if (d > Integer(static_cast<unsigned long>(max_dim)))
    throw UsageError("slice (n=" + std::to_string(s.n) + ", a=" + std::to_string(s.a) + ", b=" +
                     std::to_string(s.b) + ", r=" + std::to_string(s.r) + ") has dimension " + d.get_str() +
                     ", above --max-slice-dim " + std::to_string(max_dim));
}

}  // namespace

RunResult run(const CommandConfig& cfg) {
  if (!cfg.n) throw UsageError("--n is required");
  if (*cfg.n < 1) throw UsageError("--n must be at least 1, got " + std::to_string(*cfg.n));
  const std::size_t n = static_cast<std::size_t>(*cfg.n);

  const auto spec = std::find_if(std::begin(kCommands), std::end(kCommands),
                                 [&](const CommandSpec& c) { return cfg.command == c.name; });
  if (spec == std::end(kCommands)) throw UsageError("unknown command '" + cfg.command + "'");

  Report rep;
  if (!spec->needs_slice) {
    if (cfg.command == "verify-algebra") rep = verify_algebra(n);
    else if (cfg.command == "verify-invariance") rep = verify_invariance(n);
    else rep = verify_su12(n);
  } else {
    if (!cfg.a || !cfg.b || !cfg.r) throw UsageError(cfg.command + " requires --a, --b and --r");
    const SliceIndex s{static_cast<unsigned>(n), non_negative(cfg.a, "--a"), non_negative(cfg.b, "--b"),
                       non_negative(cfg.r, "--r")};
    const bool m_labelled = cfg.command != "kernel";
    if (m_labelled && n < 3)
      throw UsageError(cfg.command + ": h-monogenic spaces M_{a,b}^(r) are defined for n >= 3 only, got n = " +
                       std::to_string(n));
    if ((cfg.command == "dims" || cfg.command == "hwv") && s.b > s.r)
      throw UsageError(cfg.command + ": requires b <= r, got b = " + std::to_string(s.b) +
                       ", r = " + std::to_string(s.r));
    if (cfg.command != "dims") guard(s, cfg.max_slice_dim);
    if (cfg.command == "decompose" || cfg.command == "pair-gram")
      for (const auto& d : predicted_summands(s.n, s.a, s.b, s.r)) guard(d.source, cfg.max_slice_dim);

    if (cfg.command == "dims") rep = dims(s);
    else if (cfg.command == "kernel") rep = kernel(s);
    else if (cfg.command == "hwv") rep = hwv_report(s);
    else if (cfg.command == "decompose") rep = decompose_report(s);
    else rep = pair_gram(s);
  }
  return {rep.pass ? kExitPass : kExitFail, emit(rep, cfg.format)};
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  try {
    const CommandConfig cfg = parse_config(argv);
    const RunResult res = run(cfg);
    if (cfg.output) {
      const std::string path = resolve_output_path(*cfg.output);
      std::ofstream f(path, std::ios::binary);
      if (!f) {
        err << "error: cannot open output file '" << path << "'\n";
        return kExitUsage;
      }
      f << res.report;
      if (!f.flush()) {
        err << "error: failed writing output file '" << path << "'\n";
        return kExitUsage;
      }
    } else {
      out << res.report;
    }
    return res.exit_code;
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitPass;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hsc::cli
