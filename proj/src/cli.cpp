#include "qheis/cli.hpp"

#include "CLI11.hpp"

#include <ostream>

#include "qheis/expr.hpp"
#include "qheis/json_io.hpp"

namespace qheis {

namespace {

QParam parse_qparam(const std::string& s) {
  if (s == "symbolic" || s == "sym") return QParam::symbolic();
  QParam q = QParam::numeric(rat_parse(s));
  validate_q(q);
  return q;
}

/// Inputs are either inline JSON (leading '{') or DSL expressions.
AlgebraElement parse_element(const std::string& src, const QParam& q) {
  std::string trimmed = src;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\n"));
  if (!trimmed.empty() && trimmed[0] == '{') {
    AlgebraElement e = element_from_json(Json::parse(trimmed));
    if (!(e.qparam() == q))
      fail(Errc::mode_mismatch, "element JSON carries a different q than --q");
    return e;
  }
  return eval_expr(*parse_expr(src), q);
}

UniPoly parse_poly(const std::string& src, const QParam& q) {
  return eval_poly_expr(*parse_expr(src), q);
}

std::string dump(const Json& j) { return j.dump(2); }

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations in the q-deformed Heisenberg algebra"};
  app.name("qheis");
  app.fallthrough(); // global flags remain valid after the subcommand

  std::string q_str = "symbolic";
  bool as_json = false;
  long width = 64;
  app.add_option("--q", q_str, "deformation parameter: a rational like 2 or 1/2, or 'symbolic'");
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--window-width", width, "Laurent window width for windowed commands")
      ->check(CLI::Range(8L, 4096L));

  std::string expr1, expr2, expr3;
  int count = 5, smax = 1;
  std::string alpha_str = "2";
  std::string apply_expr;

  auto* cmd_normalize = app.add_subcommand("normalize", "normal form of an expression");
  cmd_normalize->add_option("expr", expr1)->required();
  auto* cmd_commutes = app.add_subcommand("commutes", "do P and Q commute?");
  cmd_commutes->add_option("P", expr1)->required();
  cmd_commutes->add_option("Q", expr2)->required();
  auto* cmd_eliminant = app.add_subcommand("eliminant", "the eliminant of P and Q");
  cmd_eliminant->add_option("P", expr1)->required();
  cmd_eliminant->add_option("Q", expr2)->required();
  auto* cmd_curves = app.add_subcommand("curves", "annihilating curves of P and Q");
  cmd_curves->add_option("P", expr1)->required();
  cmd_curves->add_option("Q", expr2)->required();
  auto* cmd_verify = app.add_subcommand("verify", "full verification report for P and Q");
  cmd_verify->add_option("P", expr1)->required();
  cmd_verify->add_option("Q", expr2)->required();
  auto* cmd_pair = app.add_subcommand("pair", "commuting pair f(W), g(W)");
  cmd_pair->add_option("W", expr1)->required();
  cmd_pair->add_option("F", expr2)->required();
  cmd_pair->add_option("G", expr3)->required();
  auto* cmd_kernel = app.add_subcommand("kernel-dim", "exact kernel dimension of P");
  cmd_kernel->add_option("P", expr1)->required();
  auto* cmd_spectrum = app.add_subcommand("spectrum", "certified point-spectrum samples");
  cmd_spectrum->add_option("P", expr1)->required();
  cmd_spectrum->add_option("--count", count)->check(CLI::PositiveNumber);
  auto* cmd_laurent = app.add_subcommand("laurent-demo", "print Jordan-chain windows");
  cmd_laurent->add_option("--alpha", alpha_str, "chain eigenvalue");
  cmd_laurent->add_option("--smax", smax, "chain depth")->check(CLI::PositiveNumber);
  cmd_laurent->add_option("--apply", apply_expr, "act with this element on the deepest window");

  app.require_subcommand(1);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help and friends
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    const QParam q = parse_qparam(q_str);

    if (cmd_normalize->parsed()) {
      const AlgebraElement e = parse_element(expr1, q);
      out << (as_json ? dump(element_to_json(e)) : e.str()) << "\n";
      return 0;
    }
    if (cmd_commutes->parsed()) {
      const AlgebraElement p = parse_element(expr1, q), qq = parse_element(expr2, q);
      const AlgebraElement c = commutator(p, qq);
      if (c.is_zero()) {
        out << "commuting\n";
        return 0;
      }
      out << "non-commuting: [P,Q] = " << c.str() << "\n";
      return 1;
    }
    if (cmd_eliminant->parsed()) {
      const TriPoly d = eliminant(parse_element(expr1, q), parse_element(expr2, q));
      out << (as_json ? dump(tripoly_to_json(d)) : d.str()) << "\n";
      return 0;
    }
    if (cmd_curves->parsed()) {
      const CurveSet cs = curves(parse_element(expr1, q), parse_element(expr2, q));
      if (as_json) {
        out << dump(curveset_to_json(cs)) << "\n";
      } else {
        out << "m = " << cs.m << ", n = " << cs.n << ", s = " << cs.s << ", t = " << cs.t << "\n";
        out << "Delta = " << cs.Delta.str() << "\n";
        for (size_t i = 0; i < cs.delta.size(); ++i)
          if (!cs.delta[i].is_zero()) out << "delta_" << i << " = " << cs.delta[i].str() << "\n";
      }
      return 0;
    }
    if (cmd_verify->parsed()) {
      const VerificationReport rep = verify(parse_element(expr1, q), parse_element(expr2, q));
      if (as_json) {
        out << dump(report_to_json(rep)) << "\n";
      } else {
        out << (rep.pass ? "pass" : "fail") << " (commuting = " << (rep.commuting ? "yes" : "no")
            << ", s = " << rep.curves.s << ", t = " << rep.curves.t << ")\n";
        for (const auto& r : rep.residuals)
          if (!r.delta.is_zero())
            out << "delta_" << r.i << "(P,Q) " << (r.zero ? "= 0" : "!= 0") << "  [delta_" << r.i
                << " = " << r.delta.str() << "]\n";
      }
      return rep.pass ? 0 : 1;
    }
    if (cmd_pair->parsed()) {
      const AlgebraElement w = parse_element(expr1, q);
      const auto [p, qq] = make_commuting_pair(w, parse_poly(expr2, q), parse_poly(expr3, q));
      if (as_json) {
        Json j;
        j["P"] = element_to_json(p);
        j["Q"] = element_to_json(qq);
        out << dump(j) << "\n";
      } else {
        out << "P = " << p.str() << "\n";
        out << "Q = " << qq.str() << "\n";
      }
      return 0;
    }
    if (cmd_kernel->parsed()) {
      const KernelReport rep = kernel_dimension(parse_element(expr1, q));
      if (as_json) {
        out << dump(kernel_report_to_json(rep)) << "\n";
      } else {
        out << "dim ker = " << rep.dim << " (bounds " << rep.lower << ".." << rep.upper
            << ", d_max = " << rep.d_max << ", d_min = " << rep.d_min << ", N_max = " << rep.n_max
            << ", N_min = " << rep.n_min << ")\n";
      }
      return 0;
    }
    if (cmd_spectrum->parsed()) {
      const std::vector<Rational> vals = spectrum_sample(parse_element(expr1, q), count);
      if (as_json) {
        Json arr = Json::array();
        for (const auto& v : vals) arr.push_back(rat_str(v));
        Json j;
        j["values"] = std::move(arr);
        out << dump(j) << "\n";
      } else {
        for (size_t i = 0; i < vals.size(); ++i) out << (i ? " " : "") << rat_str(vals[i]);
        out << "\n";
      }
      return 0;
    }
    if (cmd_laurent->parsed()) {
      const long lo = -(width / 2), hi = lo + width - 1;
      const Rational alpha = rat_parse(alpha_str);
      const auto chain = psi_chain(q, alpha, smax, lo, hi);
      for (const auto& w : chain) out << window_to_json(w).dump() << "\n";
      if (!apply_expr.empty()) {
        const LaurentWindow r = act(parse_element(apply_expr, q), chain.back());
        out << window_to_json(r).dump() << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

} // namespace qheis
