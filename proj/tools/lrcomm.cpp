// lrcomm: command-line front end.
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lrcomm/io.hpp"
#include "lrcomm/render.hpp"
#include "lrcomm/verify.hpp"

using namespace lrcomm;

namespace {

int tableau_n(const SkewTableau& t, int n) {
  if (n == 0) return std::max(t.num_rows(), 1);
  if (n < t.num_rows()) throw InvalidInput("n=" + std::to_string(n) + " is smaller than the number of rows");
  return n;
}

struct Args {
  std::string lambda, mu, nu, mode = "tableau", format, input = "-", output = "-", trace, map, to, literal;
  std::string suite = "all", report;
  int n = 0, max_weight = 10, max_n = 4, threads = 0, slack = 3;
  long long seed = -1;
};

int cmd_coeff(const Args& a) {
  CoeffQuery q{io::parse_seq(a.lambda), io::parse_seq(a.mu), io::parse_seq(a.nu), a.n, parse_mode(a.mode)};
  std::cout << coefficient(q) << "\n";
  return 0;
}

int cmd_enumerate(const Args& a) {
  Partition l(io::parse_seq(a.lambda)), m(io::parse_seq(a.mu)), v(io::parse_seq(a.nu));
  int n = a.n ? a.n : std::max(l.length(), 1);
  for (const auto& t : enumerate_lr(l, m, v, n))
    std::cout << (a.format == "text" ? to_string(t) + "\n" : io::dump(io::to_json(t)));
  return 0;
}

int cmd_apply(const Args& a) {
  io::json in = io::read_file(a.input), out, trace = io::json::array();
  if (a.map == "rho" || a.map == "rho-inv" || a.map == "commutor" || a.map == "xi") {
    SkewTableau t = io::tableau_from_json(in);
    int n = tableau_n(t, a.n);
    if (a.map == "rho") {
      require_lr(t);
      CommuterTrace ct;
      out = io::to_json(rho(t, n, a.trace.empty() ? nullptr : &ct));
      trace = io::to_json(ct);
    } else if (a.map == "rho-inv") {
      require_lr(t);
      out = io::to_json(rho_inverse(t, n));
    } else if (a.map == "commutor") {
      out = io::to_json(commutor_hk(t, n));
    } else {
      out = io::to_json(schutzenberger(t, a.n ? a.n : std::max(t.max_letter(), 1)));
    }
  } else if (a.map == "sigma" || a.map == "sigma-inv") {
    Hive h = io::hive_from_json(in);
    if (a.map == "sigma") {
      SigmaTrace st;
      out = io::to_json(sigma(h, a.trace.empty() ? nullptr : &st));
      trace = io::to_json(st);
    } else {
      require_lr_hive(h);
      out = io::to_json(sigma_bar(h));
    }
  } else {
    throw InvalidInput("unknown map '" + a.map + "'");
  }
  io::write_file(a.output, io::dump(out));
  if (!a.trace.empty()) io::write_file(a.trace, io::dump(trace));
  return 0;
}

int cmd_convert(const Args& a) {
  io::json in = io::read_file(a.input);
  if (a.to == "hive") {
    SkewTableau t = io::tableau_from_json(in);
    require_lr(t);
    io::write_file(a.output, io::dump(io::to_json(hive_from_tableau(t, tableau_n(t, a.n)))));
  } else {
    Hive h = io::hive_from_json(in);
    require_lr_hive(h);
    io::write_file(a.output, io::dump(io::to_json(tableau_from_hive(h))));
  }
  return 0;
}

int cmd_usystem(const Args& a) {
  USystem s = parse_usystem(a.literal);
  if (a.map == "sigma") {
    std::cout << to_string(sigma_u(s)) << "\n";
  } else if (a.map == "dress") {
    Hive h = a.seed < 0 ? canonical_dressing(s) : DressingSampler(static_cast<std::uint64_t>(a.seed), a.slack)(s);
    std::cout << io::dump(io::to_json(h));
  } else {
    Seq mu = padded(io::parse_seq(a.mu), s.n()), nu = padded(io::parse_seq(a.nu), s.n());
    Feasibility f = dressing_feasible(s, mu, nu);
    io::json j;
    j["feasible"] = f.feasible;
    j["lambda"] = f.lambda;
    if (!f.feasible) j["reason"] = f.reason;
    std::cout << io::dump(j);
  }
  return 0;
}

int cmd_render(const Args& a) {
  Hive h = io::hive_from_json(io::read_file(a.input));
  if (auto v = rational_hive_violation(h)) throw InvalidInput("invalid hive: " + *v);
  io::write_file(a.output, a.format == "svg" ? render_svg(h) : render_ascii(h));
  return 0;
}

int cmd_verify(const Args& a) {
  VerifyOptions o;
  o.suite = parse_suite(a.suite);
  o.max_weight = a.max_weight;
  o.max_n = a.max_n;
  o.threads = a.threads;
  VerifyReport rep = run_verify(o);
  std::string text = io::dump(rep.to_json());
  if (!a.report.empty()) io::write_file(a.report, text);
  if (a.report != "-") std::cout << text;
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Littlewood-Richardson commutors on tableaux and hives"};
  app.require_subcommand(1);
  Args a;

  auto* coeff = app.add_subcommand("coeff", "count LR tableaux or hives");
  coeff->add_option("--lambda", a.lambda)->required();
  coeff->add_option("--mu", a.mu)->required();
  coeff->add_option("--nu", a.nu)->required();
  coeff->add_option("--n", a.n);
  coeff->add_option("--mode", a.mode)->check(CLI::IsMember({"tableau", "hive", "gz", "bz", "kh", "rational"}));

  auto* en = app.add_subcommand("enumerate", "list LR(lambda/mu, nu)");
  en->add_option("--lambda", a.lambda)->required();
  en->add_option("--mu", a.mu)->required();
  en->add_option("--nu", a.nu)->required();
  en->add_option("--n", a.n);
  en->add_option("--format", a.format)->check(CLI::IsMember({"json", "text"}));

  auto* ap = app.add_subcommand("apply", "apply a map to a tableau or hive JSON file");
  ap->add_option("map", a.map)->required()->check(
      CLI::IsMember({"rho", "rho-inv", "sigma", "sigma-inv", "xi", "commutor"}));
  ap->add_option("--input,-i", a.input);
  ap->add_option("--output,-o", a.output);
  ap->add_option("--trace", a.trace, "write the per-step trace here");
  ap->add_option("--n", a.n);

  auto* cv = app.add_subcommand("convert", "tableau <-> hive");
  cv->add_option("--to", a.to)->required()->check(CLI::IsMember({"hive", "tableau"}));
  cv->add_option("--input,-i", a.input);
  cv->add_option("--output,-o", a.output);
  cv->add_option("--n", a.n);

  auto* us = app.add_subcommand("usystem", "U-system operations");
  us->add_option("op", a.map)->required()->check(CLI::IsMember({"sigma", "dress", "feasible"}));
  us->add_option("system", a.literal, "e.g. \"1;1,2;1,2,1\"")->required();
  us->add_option("--mu", a.mu);
  us->add_option("--nu", a.nu);
  us->add_option("--seed", a.seed, "sample a dressing instead of the canonical one");
  us->add_option("--slack", a.slack);

  auto* rd = app.add_subcommand("render", "draw a hive");
  rd->add_option("--input,-i", a.input);
  rd->add_option("--output,-o", a.output);
  rd->add_option("--format", a.format)->check(CLI::IsMember({"ascii", "svg"}));

  auto* vf = app.add_subcommand("verify", "exhaustive property sweep");
  vf->add_option("--suite", a.suite)->check(
      CLI::IsMember({"involution", "symmetry", "crossmodel", "counts", "crystal", "all"}));
  vf->add_option("--max-weight", a.max_weight)->check(CLI::NonNegativeNumber);
  vf->add_option("--max-n", a.max_n)->check(CLI::PositiveNumber);
  vf->add_option("--threads", a.threads);
  vf->add_option("--report", a.report, "also write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*coeff) return cmd_coeff(a);
    if (*en) return cmd_enumerate(a);
    if (*ap) return cmd_apply(a);
    if (*cv) return cmd_convert(a);
    if (*us) return cmd_usystem(a);
    if (*rd) return cmd_render(a);
    if (*vf) return cmd_verify(a);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
