#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmod/betti.hpp"
#include "qmod/cells.hpp"
#include "qmod/errors.hpp"
#include "qmod/framing.hpp"
#include "qmod/hilbert.hpp"
#include "qmod/io.hpp"
#include "qmod/local_quiver.hpp"
#include "qmod/validation.hpp"

namespace qmod::cli {

enum ExitStatus : int { kOk = 0, kInternal = 1, kInput = 2, kDisagreement = 3, kInfeasible = 4 };

/// Missing d, n or part lines for a subcommand.
class MissingFieldError : public InputError {
 public:
  using InputError::InputError;
};

struct Options {
  std::string file;
  std::string method = "all";
  std::vector<int> cap;
  std::vector<int> e;
  bool machine = false;
  bool quiet = false;
  std::size_t count = 200;
  std::uint64_t seed = 20240607;
  unsigned threads = 0;
};

namespace detail {

class Printer {
 public:
  Printer(std::ostream& out, const Options& opt) : out_(out), opt_(opt) {}

  /// Headline: printed bare in human mode, as key=value in machine mode.
  void headline(const std::string& key, const std::string& human, const std::string& machine) const {
    if (opt_.machine)
      out_ << key << "=" << machine << "\n";
    else
      out_ << human << "\n";
  }
  void detail(const std::string& key, const std::string& human_label, const std::string& human,
              const std::string& machine) const {
    if (opt_.machine)
      out_ << key << "=" << machine << "\n";
    else if (!opt_.quiet)
      out_ << human_label << ": " << human << "\n";
  }
  void poly(const std::string& key, const std::string& label, const Poly& p, bool head = false) const {
    if (head)
      headline(key, to_string(p), to_machine_string(p));
    else
      detail(key, label, to_string(p), to_machine_string(p));
  }
  std::ostream& raw() const { return out_; }
  bool machine() const { return opt_.machine; }
  bool quiet() const { return opt_.quiet; }

 private:
  std::ostream& out_;
  const Options& opt_;
};

inline QuiverFile load(const std::string& path) {
  if (path == "-") return parse_quiver(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_quiver(in);
}

inline const DimensionVector& need_d(const QuiverFile& f) {
  if (!f.d) throw MissingFieldError("the quiver file has no 'd' line");
  return *f.d;
}

inline const DimensionVector& need_n(const QuiverFile& f) {
  if (!f.n) throw MissingFieldError("the quiver file has no 'n' line");
  return *f.n;
}

inline DimensionVector vector_option(const QuiverFile& f, const std::vector<int>& v, const char* name) {
  if (v.size() != f.quiver.vertex_count())
    throw InputError(std::string("--") + name + " needs " + std::to_string(f.quiver.vertex_count()) + " entries");
  DimensionVector out(v);
  f.quiver.check_vector(out);
  return out;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline int cmd_euler(const Options& opt, const Printer& p) {
  const QuiverFile f = load(opt.file);
  const Quiver& q = f.quiver;
  const std::size_t nv = q.vertex_count();
  auto delta = [nv](std::size_t i) {
    std::vector<int> x(nv, 0);
    x[i] = 1;
    return DimensionVector(std::move(x));
  };
  if (!p.machine() && !p.quiet()) p.raw() << "Euler matrix <i,j>:\n";
  for (std::size_t i = 0; i < nv; ++i) {
    std::string row;
    for (std::size_t j = 0; j < nv; ++j) row += (j ? " " : "") + std::to_string(euler_form(q, delta(i), delta(j)));
    if (p.machine())
      p.raw() << "euler_row." << q.vertex_name(i) << "=" << row << "\n";
    else if (!p.quiet())
      p.raw() << "  " << q.vertex_name(i) << ": " << row << "\n";
  }
  if (f.d) {
    const auto& d = *f.d;
    p.detail("euler_dd", "<d,d>", std::to_string(euler_form(q, d, d)), std::to_string(euler_form(q, d, d)));
    if (!d.is_zero()) {
      const Stability theta = f.stability();
      const std::string mu = slope(theta, d).get_str();
      p.detail("slope", "slope of d", mu, mu);
      p.detail("coprime", "coprime", yes_no(is_coprime(q, theta, d)), is_coprime(q, theta, d) ? "1" : "0");
    }
    if (f.n) {
      const long dim = dot(*f.n, d) - euler_form(q, d, d);
      p.detail("dimension", "smooth model dimension n.d-<d,d>", std::to_string(dim), std::to_string(dim));
    }
    if (!opt.e.empty()) {
      const DimensionVector e = vector_option(f, opt.e, "e");
      p.detail("euler_de", "<d,e>", std::to_string(euler_form(q, d, e)), std::to_string(euler_form(q, d, e)));
      p.detail("euler_ed", "<e,d>", std::to_string(euler_form(q, e, d)), std::to_string(euler_form(q, e, d)));
    }
  }
  return kOk;
}

inline int cmd_pd(const Options& opt, const Printer& p) {
  const QuiverFile f = load(opt.file);
  const auto& d = need_d(f);
  const Stability theta = f.stability();
  const RationalFunction pd = p_d(f.quiver, theta, d);
  p.headline("pd", to_string(pd), to_machine_string(pd));
  if (!d.is_zero() && is_coprime(f.quiver, theta, d)) {
    const Poly stable = stable_poincare(f.quiver, theta, d);
    p.poly("stable", "stable moduli Poincaré polynomial (q-1)P_d", stable);
  }
  return kOk;
}

inline bool theta_vanishes_on_class(const QuiverFile& f, const DimensionVector& d) {
  return d.is_zero() ? f.stability().is_trivial() : normalize_stability(f.stability(), d).is_trivial();
}

inline int cmd_betti(const Options& opt, const Printer& p) {
  static const std::vector<std::string> methods{"recursion", "summation", "series", "multipartitions", "cells"};
  const QuiverFile f = load(opt.file);
  const auto& d = need_d(f);
  const auto& n = need_n(f);
  const Quiver& q = f.quiver;
  const Stability theta = f.stability();
  const bool hilbert = theta_vanishes_on_class(f, d);

  if (!opt.cap.empty()) {
    if (opt.method != "series") throw InputError("--cap is only meaningful with --method series");
    if (d.is_zero()) throw InputError("--cap needs a non-zero d to fix the slope class");
    const DimensionVector cap = vector_option(f, opt.cap, "cap");
    const auto table = series_engine(q, theta, slope(theta, d), cap, n);
    for (const auto& [e, poly] : table) {
      if (p.machine())
        p.raw() << "series." << format_vector(e) << "=" << to_machine_string(poly) << "\n";
      else
        p.raw() << to_string(e) << "\t" << to_string(poly) << "\n";
    }
    return kOk;
  }

  auto compute = [&](const std::string& m) -> Poly {
    if (m == "recursion") return smooth_model_poincare_recursion(q, theta, d, n);
    if (m == "summation") return smooth_model_poincare_summation(q, theta, d, n);
    if (m == "series") return smooth_model_poincare_series(q, theta, d, n);
    if (!hilbert) throw PreconditionError("method '" + m + "' needs Theta to vanish on the slope class of d");
    if (m == "multipartitions") return hilb_poincare_multipartitions(q, d, n);
    return hilb_poincare_cells(q, d, n);
  };

  if (opt.method != "all") {
    p.poly("poincare", "", compute(opt.method), true);
    return kOk;
  }
  std::vector<std::pair<std::string, Poly>> results;
  for (const auto& m : methods) {
    if (!hilbert && (m == "multipartitions" || m == "cells")) continue;
    results.emplace_back(m, compute(m));
  }
  const bool agree = std::all_of(results.begin(), results.end(), [&](const auto& r) { return r.second == results[0].second; });
  if (!agree) {
    if (p.machine()) {
      p.raw() << "agreement=0\n";
      for (const auto& [m, poly] : results) p.raw() << "method." << m << "=" << to_machine_string(poly) << "\n";
    } else {
      p.raw() << "engines disagree:\n";
      for (const auto& [m, poly] : results) p.raw() << "  " << m << ": " << to_string(poly) << "\n";
    }
    return kDisagreement;
  }
  p.poly("poincare", "", results[0].second, true);
  std::string used;
  for (const auto& r : results) used += (used.empty() ? "" : ",") + r.first;
  p.detail("methods", "agreeing methods", used, used);
  return kOk;
}

inline int cmd_hilb(const Options& opt, const Printer& p) {
  const QuiverFile f = load(opt.file);
  const auto& d = need_d(f);
  const auto& n = need_n(f);
  if (!theta_vanishes_on_class(f, d)) throw PreconditionError("hilb needs Theta to vanish on the slope class of d");
  const Quiver& q = f.quiver;
  const bool crit = hilb_nonempty(q, d, n);
  const auto parts = multipartitions(q, d, n);
  const Poly poly = hilb_poincare_multipartitions(q, d, n);
  p.poly("poincare", "", poly, true);
  p.detail("nonempty", "non-empty", yes_no(crit), crit ? "1" : "0");
  p.detail("multipartitions", "multipartitions", std::to_string(parts.size()), std::to_string(parts.size()));
  if (p.machine()) {
    for (const auto& m : parts) p.raw() << "multipartition=" << to_string(m) << " " << m.weight() << "\n";
  } else if (!p.quiet()) {
    for (const auto& m : parts) p.raw() << "  " << to_string(m) << "\tweight " << m.weight() << "\n";
  }
  return kOk;
}

inline int cmd_nonempty(const Options& opt, const Printer& p) {
  const QuiverFile f = load(opt.file);
  const auto& d = need_d(f);
  const Quiver& q = f.quiver;
  const Stability theta = f.stability();
  if (f.n) {
    const auto& n = *f.n;
    bool result = false;
    if (theta_vanishes_on_class(f, d)) {
      result = hilb_nonempty(q, d, n);
      p.headline("smooth_model", result ? "nonempty" : "empty", result ? "nonempty" : "empty");
      bool inequalities = true;
      for (std::size_t i = 0; i < q.vertex_count(); ++i)
        inequalities = inequalities && n[i] >= euler_with_vertex(q, d, i);
      const auto reach = support_reachable(q, d, n);
      bool reached = true;
      for (std::size_t i = 0; i < q.vertex_count(); ++i) reached = reached && (d[i] == 0 || reach[i]);
      p.detail("criterion", "criterion", "Hilbert scheme", "hilbert");
      p.detail("inequalities", "n_i >= <d,i> at every vertex", yes_no(inequalities), inequalities ? "1" : "0");
      p.detail("reachable", "support reached from the framing", yes_no(reached), reached ? "1" : "0");
    } else {
      const FramedDatum framed(q, d, theta, n);
      result = d.is_zero() || sst_nonempty(framed.extended_quiver(), framed.explicit_hat_stability(), framed.extended_d());
      p.headline("smooth_model", result ? "nonempty" : "empty", result ? "nonempty" : "empty");
      p.detail("criterion", "criterion", "semistability of the framed datum", "framed");
    }
    if (!d.is_zero()) {
      const bool sst = sst_nonempty(q, theta, d);
      p.detail("semistable", "semistable representations of dimension d", sst ? "exist" : "none", sst ? "1" : "0");
    }
    return kOk;
  }
  if (d.is_zero()) throw InputError("the semistable locus needs a non-zero d");
  const bool sst = sst_nonempty(q, theta, d);
  p.headline("semistable", sst ? "nonempty" : "empty", sst ? "nonempty" : "empty");
  p.detail("coprime", "coprime", yes_no(is_coprime(q, theta, d)), is_coprime(q, theta, d) ? "1" : "0");
  return kOk;
}

inline int cmd_cells(const Options& opt, const Printer& p) {
  const QuiverFile f = load(opt.file);
  const auto& d = need_d(f);
  const auto& n = need_n(f);
  if (!theta_vanishes_on_class(f, d)) throw PreconditionError("cells need Theta to vanish on the slope class of d");
  const Quiver& q = f.quiver;
  const auto cells = describe_cells(q, d, n);
  Poly total;
  for (const auto& c : cells) {
    std::string relations;
    for (const auto& r : c.relations) {
      if (r.vacuous) continue;
      relations += (relations.empty() ? "" : "; ") + to_string(q, r);
    }
    if (p.machine()) {
      p.raw() << "cell=" << to_string(q, c.forest) << "\t" << relations << "\t" << to_string(c.multipartition) << "\t"
              << c.dimension << "\n";
    } else {
      p.raw() << to_string(q, c.forest) << "\t" << relations << "\t" << to_string(c.multipartition) << "\t"
              << c.dimension << "\n";
    }
    total += Poly::q_power(static_cast<std::size_t>(c.dimension));
  }
  if (p.machine()) {
    p.raw() << "cells=" << cells.size() << "\n";
    p.raw() << "poincare=" << to_machine_string(total) << "\n";
  } else if (!p.quiet()) {
    p.raw() << "# " << cells.size() << " cells, Poincaré polynomial " << to_string(total) << "\n";
  }
  return kOk;
}

inline int cmd_frame(const Options& opt, const Printer& p) {
  const QuiverFile f = load(opt.file);
  const auto& d = need_d(f);
  const auto& n = need_n(f);
  const FramedDatum framed(f.quiver, d, f.stability(), n);
  p.raw() << format_quiver(framed.extended_quiver(), framed.extended_d(), std::nullopt,
                           framed.explicit_hat_stability());
  return kOk;
}

inline int cmd_local_quiver(const Options& opt, const Printer& p) {
  const QuiverFile f = load(opt.file);
  const auto& n = need_n(f);
  if (f.xi.parts.empty()) throw MissingFieldError("the quiver file has no 'part' lines");
  const LocalQuiverDatum local = local_quiver(f.quiver, n, f.xi);
  if (f.d && !(f.xi.total(f.quiver.vertex_count()) == *f.d))
    throw InputError("the polystable type has total " + to_string(f.xi.total(f.quiver.vertex_count())) +
                     " but d is " + to_string(*f.d));
  p.raw() << format_quiver(local.quiver, local.d, local.n, std::nullopt);
  return kOk;
}

inline int cmd_selftest(const Options& opt, const Printer& p) {
  const auto instances = random_instances(opt.count, opt.seed);
  const SuiteReport report = run_suite(instances, opt.threads);
  const std::size_t failed = report.failed();
  const std::size_t theta_zero = report.count_if([](const auto& r) { return r.theta_zero; });
  const std::size_t coprime = report.count_if([](const auto& r) { return r.coprime; });
  const std::size_t nonempty = report.count_if([](const auto& r) { return r.nonempty; });
  const std::size_t hilb_nonempty_count = report.count_if([](const auto& r) { return r.theta_zero && r.nonempty; });
  const std::size_t zero_in = report.count_if([](const auto& r) { return r.theta_zero && r.nonempty && r.zero_multipartition; });
  for (const auto& r : report.instances)
    for (const auto& msg : r.failures)
      p.raw() << (p.machine() ? "failure=" : "FAIL ") << "#" << r.index << " " << r.description << ": " << msg << "\n";
  p.headline("selftest", failed ? "selftest: " + std::to_string(failed) + " of " + std::to_string(instances.size()) + " instances failed"
                                : "selftest: all " + std::to_string(instances.size()) + " instances passed",
             failed ? "fail" : "pass");
  p.detail("instances", "instances", std::to_string(instances.size()), std::to_string(instances.size()));
  p.detail("seed", "seed", std::to_string(opt.seed), std::to_string(opt.seed));
  p.detail("theta_zero", "Theta = 0 instances", std::to_string(theta_zero), std::to_string(theta_zero));
  p.detail("coprime", "coprime instances", std::to_string(coprime), std::to_string(coprime));
  p.detail("nonempty", "non-empty smooth models", std::to_string(nonempty), std::to_string(nonempty));
  const std::string zm = std::to_string(zero_in) + "/" + std::to_string(hilb_nonempty_count);
  p.detail("zero_multipartition", "non-empty Hilbert schemes containing the zero multipartition", zm, zm);
  return failed ? kDisagreement : kOk;
}

}  // namespace detail

/// Runs one command line (without the program name).  Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Betti numbers, non-emptiness and cell decompositions of smooth models of quiver moduli", "qmod"};
  app.require_subcommand(1);
  app.add_flag("--machine", opt.machine, "line-oriented key=value output");
  app.add_flag("--quiet", opt.quiet, "print only the headline result");

  auto with_file = [&](CLI::App* sub) { sub->add_option("file", opt.file, "quiver file ('-' for stdin)")->required(); };

  auto* euler = app.add_subcommand("euler", "Euler form values");
  with_file(euler);
  euler->add_option("--e", opt.e, "second dimension vector for <d,e> and <e,d>")->delimiter(',');
  auto* pd = app.add_subcommand("pd", "the rational function P_d");
  with_file(pd);
  auto* betti = app.add_subcommand("betti", "Poincaré polynomial of the smooth model");
  with_file(betti);
  betti->add_option("--method", opt.method, "engine")
      ->check(CLI::IsMember({"recursion", "summation", "series", "multipartitions", "cells", "all"}));
  betti->add_option("--cap", opt.cap, "print every series coefficient up to this dimension vector")->delimiter(',');
  auto* hilb = app.add_subcommand("hilb", "Hilbert scheme shortcuts (Theta = 0)");
  with_file(hilb);
  auto* nonempty = app.add_subcommand("nonempty", "non-emptiness of the smooth model or the semistable locus");
  with_file(nonempty);
  auto* cells = app.add_subcommand("cells", "cell decomposition of the Hilbert scheme");
  with_file(cells);
  auto* frame = app.add_subcommand("frame", "print the framed quiver, its dimension vector and stability");
  with_file(frame);
  auto* local = app.add_subcommand("local-quiver", "print the local quiver of the polystable type given by 'part' lines");
  with_file(local);
  auto* selftest = app.add_subcommand("selftest", "run the randomized cross-validation suite");
  selftest->add_option("--count", opt.count, "number of instances");
  selftest->add_option("--seed", opt.seed, "random seed");
  selftest->add_option("--threads", opt.threads, "worker threads (0 = hardware concurrency)");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_flag("--machine", opt.machine, "line-oriented key=value output");
    sub->add_flag("--quiet", opt.quiet, "print only the headline result");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInput;
  }

  const detail::Printer printer(out, opt);
  try {
    if (*euler) return detail::cmd_euler(opt, printer);
    if (*pd) return detail::cmd_pd(opt, printer);
    if (*betti) return detail::cmd_betti(opt, printer);
    if (*hilb) return detail::cmd_hilb(opt, printer);
    if (*nonempty) return detail::cmd_nonempty(opt, printer);
    if (*cells) return detail::cmd_cells(opt, printer);
    if (*frame) return detail::cmd_frame(opt, printer);
    if (*local) return detail::cmd_local_quiver(opt, printer);
    if (*selftest) return detail::cmd_selftest(opt, printer);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const ConsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kDisagreement;
  } catch (const DivisibilityError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kDisagreement;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace qmod::cli
