#pragma once

// Command implementations behind the `vknot` executable. Each command writes
// to the given streams and returns the process exit code:
//   0 success, 1 invariant violation, 2 input error, 3 search exhausted.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vknot/affine.hpp"
#include "vknot/biquandle.hpp"
#include "vknot/checks.hpp"
#include "vknot/diagram.hpp"
#include "vknot/laurent.hpp"
#include "vknot/moves.hpp"

namespace vknot::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2, kNotFound = 3 };

enum class Format { Human, KeyValue };

enum class Which { Affine, Sawollek, ASawollek, Delta, Gamma, All };

inline std::optional<Which> parse_which(const std::string& s) {
  static const std::map<std::string, Which> names{{"affine", Which::Affine},     {"sawollek", Which::Sawollek},
                                                  {"asawollek", Which::ASawollek}, {"delta", Which::Delta},
                                                  {"gamma", Which::Gamma},       {"all", Which::All}};
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

struct InvariantReport {
  std::string name;
  std::size_t crossings = 0;
  int writhe = 0;
  std::vector<long> weights;
  Invariants inv;
  bool mellor_exact = false;
  bool mellor_up_to_unit = false;
};

inline InvariantReport make_report(const Diagram& d, std::string name) {
  InvariantReport r;
  r.name = std::move(name);
  r.crossings = d.crossing_count();
  r.writhe = writhe(d);
  for (const auto& cw : crossing_weights(d)) r.weights.push_back(cw.w);
  r.inv = compute_invariants(d);
  r.mellor_exact = r.inv.delta_at_unity == r.inv.affine;
  r.mellor_up_to_unit = eq_up_to_unit(r.inv.delta_at_unity, r.inv.affine);
  return r;
}

inline void print_report(std::ostream& out, const InvariantReport& r, Which which, Format format) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::string weights;
  for (long w : r.weights) weights += (weights.empty() ? "" : " ") + std::to_string(w);
  rows.emplace_back("knot", r.name);
  rows.emplace_back("crossings", std::to_string(r.crossings));
  rows.emplace_back("writhe", std::to_string(r.writhe));
  rows.emplace_back("weights", weights.empty() ? "-" : weights);
  const bool all = which == Which::All;
  if (all || which == Which::Affine) rows.emplace_back("P", to_string(r.inv.affine));
  if (all || which == Which::ASawollek) rows.emplace_back("ASawollek", to_string(r.inv.asawollek));
  if (all || which == Which::Sawollek) rows.emplace_back("Sawollek", to_string(r.inv.sawollek));
  if (all || which == Which::Delta) {
    rows.emplace_back("Delta", to_string(r.inv.delta));
    rows.emplace_back("Delta(1/t,t)", to_string(r.inv.delta_at_unity));
  }
  if (all || which == Which::Gamma) rows.emplace_back("Gamma(1/t,t)", to_string(r.inv.gamma_at_unity));
  if (all) {
    rows.emplace_back("mellor", r.mellor_up_to_unit ? (r.mellor_exact ? "PASS exact" : "PASS up to unit") : "FAIL");
  }
  for (const auto& [key, value] : rows) {
    if (format == Format::KeyValue) {
      out << key << '\t' << value << '\n';
    } else {
      out << key << ": " << value << '\n';
    }
  }
}

inline std::optional<Diagram> load_knot(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read '" << path << "'\n";
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_knot(buf.str());
  } catch (const Error& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

inline std::string stem_of(const std::string& path) { return std::filesystem::path(path).stem().string(); }

inline int cmd_compute(const std::string& path, Which which, Format format, std::ostream& out, std::ostream& err) {
  auto d = load_knot(path, err);
  if (!d) return kInputError;
  print_report(out, make_report(*d, stem_of(path)), which, format);
  return kOk;
}

struct RandomBatch {
  int max_crossings = 6;
  int count = 500;
  std::uint64_t seed = 42;
};

inline int cmd_check_mellor(const std::optional<std::string>& path, const std::optional<RandomBatch>& batch,
                            std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, Diagram>> work;
  if (path) {
    auto d = load_knot(*path, err);
    if (!d) return kInputError;
    work.emplace_back(stem_of(*path), *d);
  }
  if (batch) {
    if (batch->max_crossings < 1 || batch->count < 0) {
      err << "error: --random needs max crossings >= 1 and count >= 0\n";
      return kInputError;
    }
    for (int i = 0; i < batch->count; ++i) {
      const std::uint64_t s = batch->seed + static_cast<std::uint64_t>(i);
      work.emplace_back("random#" + std::to_string(i), random_knot_upto(batch->max_crossings, s));
    }
  }
  int passed = 0;
  int exact = 0;
  for (const auto& [name, d] : work) {
    const MellorReport r = mellor_check(d);
    if (r.equal_up_to_unit) ++passed;
    if (r.equal_exact) ++exact;
    if (path || !r.equal_up_to_unit) {
      out << name << ": " << (r.equal_up_to_unit ? (r.equal_exact ? "PASS (exact)" : "PASS (up to unit)") : "FAIL")
          << "  Delta(1/t,t) = " << to_string(r.delta_at_unity) << "  P = " << to_string(r.affine) << '\n';
      if (!r.equal_up_to_unit) out << to_knot_text(d);
    }
  }
  out << passed << "/" << work.size() << " PASS (" << exact << " exact)\n";
  return passed == static_cast<int>(work.size()) ? kOk : kViolation;
}

struct FuzzOptions {
  int knots = 100;
  int moves = 10;
  int max_crossings = 5;
  std::uint64_t seed = 1;
  std::optional<std::string> reproducer_dir;
  bool check_gamma = true;    // Gamma(1/t,t) is not invariant under R1; see README
  bool inject_fault = false;  // harness self-test: P ignores crossing signs
};

namespace detail {

inline LaurentPoly faulty_affine(const Diagram& d) {
  std::vector<Term> terms;
  for (const auto& cw : crossing_weights(d)) {
    terms.push_back({Monomial{0, 0, static_cast<int>(cw.w_plus)}, Integer(cw.sign)});
    terms.push_back({Monomial{}, Integer(-cw.sign)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

inline void write_reproducer(const FuzzOptions& opt, const Diagram& start, const Diagram& bad,
                             const std::vector<MoveRecord>& moves, std::ostream& out) {
  std::string log;
  for (const auto& m : moves) log += "# " + m.describe() + "\n";
  if (opt.reproducer_dir) {
    std::filesystem::create_directories(*opt.reproducer_dir);
    const auto dir = std::filesystem::path(*opt.reproducer_dir);
    std::ofstream(dir / "fuzz_start.knot") << "# fuzz start diagram\n" << to_knot_text(start);
    std::ofstream(dir / "fuzz_failure.knot") << "# after moves:\n" << log << to_knot_text(bad);
    out << "reproducer written to " << (dir / "fuzz_failure.knot").string() << '\n';
  } else {
    out << "--- start diagram\n" << to_knot_text(start) << "--- moves\n" << log << "--- failing diagram\n"
        << to_knot_text(bad);
  }
}

}  // namespace detail

/// Random knots pushed through random R1/R2 moves; every intermediate diagram
/// must satisfy the structural checks and keep P exactly and S, Gamma up to units.
inline int cmd_fuzz(const FuzzOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.knots < 0 || opt.moves < 0 || opt.max_crossings < 1) {
    err << "error: --knots and --moves must be >= 0, --max-crossings >= 1\n";
    return kInputError;
  }
  out << "fuzz: knots=" << opt.knots << " moves=" << opt.moves << " max-crossings=" << opt.max_crossings
      << " seed=" << opt.seed << (opt.check_gamma ? "" : " (gamma not checked)") << '\n';
  auto affine = [&](const Diagram& d) { return opt.inject_fault ? detail::faulty_affine(d) : affine_index_polynomial(d); };
  long diagrams = 0;
  for (int k = 0; k < opt.knots; ++k) {
    const std::uint64_t trial_seed = opt.seed + static_cast<std::uint64_t>(k);
    const Diagram start = random_knot_upto(opt.max_crossings, trial_seed);
    std::mt19937_64 rng(trial_seed * 0x2545F4914F6CDD1DULL + 7);
    const Invariants base = compute_invariants(start);
    const LaurentPoly base_p = affine(start);
    Diagram current = start;
    std::vector<MoveRecord> history;
    for (int step = 0; step <= opt.moves; ++step) {
      if (step > 0) {
        MoveRecord rec;
        current = random_move(current, rng, rec);
        history.push_back(rec);
      }
      ++diagrams;
      std::vector<std::string> problems;
      Invariants inv;
      try {
        inv = compute_invariants(current);
        problems = structural_violations(current, inv);
      } catch (const Error& e) {
        problems.push_back(std::string("invariant computation failed: ") + e.what());
      }
      if (problems.empty()) {
        const LaurentPoly p = affine(current);
        if (p != base_p) problems.push_back("P changed: " + to_string(base_p) + " -> " + to_string(p));
        if (!eq_up_to_unit(inv.sawollek, base.sawollek))
          problems.push_back("Sawollek changed: " + to_string(base.sawollek) + " -> " + to_string(inv.sawollek));
        if (opt.check_gamma && !eq_up_to_unit(inv.gamma_at_unity, base.gamma_at_unity))
          problems.push_back("Gamma(1/t,t) changed: " + to_string(base.gamma_at_unity) + " -> " +
                             to_string(inv.gamma_at_unity));
      }
      if (!problems.empty()) {
        out << "VIOLATION knot " << k << " (seed " << trial_seed << ") after " << step << " moves\n";
        for (const auto& p : problems) out << "  " << p << '\n';
        detail::write_reproducer(opt, start, current, history, out);
        return kViolation;
      }
    }
    out << "knot " << k << ": m=" << start.crossing_count() << " -> " << current.crossing_count() << " ok\n";
  }
  out << "CLEAN: " << opt.knots << " knots, " << diagrams << " diagrams checked\n";
  return kOk;
}

enum class Transform { Mirror, Reverse };

inline int cmd_transform(const std::string& in_path, Transform op, const std::string& out_path, std::ostream& err) {
  auto d = load_knot(in_path, err);
  if (!d) return kInputError;
  const Diagram t = op == Transform::Mirror ? mirror(*d) : reverse(*d);
  std::ofstream out(out_path);
  if (!out) {
    err << "error: cannot write '" << out_path << "'\n";
    return kInputError;
  }
  out << "# " << (op == Transform::Mirror ? "mirror" : "reverse") << " of " << stem_of(in_path) << '\n'
      << to_knot_text(t);
  return out ? kOk : kInputError;
}

struct SearchOptions {
  int max_crossings = 6;
  int trials = 20000;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  bool allow_zero_p = false;
  bool accept_gamma_only = false;
};

struct GammaPair {
  Diagram first;
  Diagram second;
  bool sawollek_differs = false;
  bool gamma_differs = false;
};

/// Two knots with equal P that differ in Sawollek or in Gamma(1/t,t), if any.
inline std::optional<GammaPair> distinguishes(const Diagram& a, const Diagram& b) {
  const Invariants ia = compute_invariants(a);
  const Invariants ib = compute_invariants(b);
  if (ia.affine != ib.affine) return std::nullopt;
  GammaPair pair{a, b, !eq_up_to_unit(ia.sawollek, ib.sawollek), !eq_up_to_unit(ia.gamma_at_unity, ib.gamma_at_unity)};
  if (!pair.sawollek_differs && !pair.gamma_differs) return std::nullopt;
  return pair;
}

inline std::optional<GammaPair> search_gamma_pair(const SearchOptions& opt) {
  struct Seen {
    LaurentPoly sawollek;
    LaurentPoly gamma;
    Diagram diagram;
  };
  std::map<std::string, std::vector<Seen>> by_p;
  for (int i = 0; i < opt.trials; ++i) {
    const Diagram d = random_knot_upto(opt.max_crossings, opt.seed + static_cast<std::uint64_t>(i));
    const LaurentPoly p = affine_index_polynomial(d);
    if (p.is_zero() && !opt.allow_zero_p) continue;
    const Invariants inv = compute_invariants(d);
    auto& bucket = by_p[to_string(p)];
    for (const auto& s : bucket) {
      const bool ds = !eq_up_to_unit(s.sawollek, inv.sawollek);
      const bool dg = !eq_up_to_unit(s.gamma, inv.gamma_at_unity);
      // A Gamma difference alone can come from two diagrams of the same knot.
      if (ds || (dg && opt.accept_gamma_only)) return GammaPair{s.diagram, d, ds, dg};
    }
    bucket.push_back({inv.sawollek, inv.gamma_at_unity, d});
  }
  return std::nullopt;
}

inline int cmd_search_gamma_pair(const SearchOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.max_crossings < 1 || opt.trials < 0) {
    err << "error: --max-crossings must be >= 1 and --trials >= 0\n";
    return kInputError;
  }
  auto found = search_gamma_pair(opt);
  if (!found) {
    out << "NOT_FOUND after " << opt.trials << " trials\n";
    return kNotFound;
  }
  const auto dir = std::filesystem::path(opt.out_dir);
  std::filesystem::create_directories(dir);
  const auto a_path = (dir / "pair_a.knot").string();
  const auto b_path = (dir / "pair_b.knot").string();
  std::ofstream(a_path) << "# equal P, distinct secondary invariants (first)\n" << to_knot_text(found->first);
  std::ofstream(b_path) << "# equal P, distinct secondary invariants (second)\n" << to_knot_text(found->second);

  // Re-verify from the written files.
  auto a = load_knot(a_path, err);
  auto b = load_knot(b_path, err);
  if (!a || !b) return kInputError;
  auto check = distinguishes(*a, *b);
  if (!check) {
    err << "error: written pair does not re-verify\n";
    return kViolation;
  }
  out << "FOUND: " << a_path << " " << b_path << '\n'
      << "sawollek differs: " << (check->sawollek_differs ? "yes" : "no") << '\n'
      << "gamma differs: " << (check->gamma_differs ? "yes" : "no") << '\n';
  print_report(out, make_report(*a, "pair_a"), Which::All, Format::Human);
  print_report(out, make_report(*b, "pair_b"), Which::All, Format::Human);
  return kOk;
}

}  // namespace vknot::cli
