// Command-line driver: basis enumeration, shifted pictures, semi-infinite
// censuses, the Freudenthal oracle, the verification sweep, condition checks
// on a single monomial, and strip rendering.
//
// Exit codes: 0 success, 1 verify mismatch, 2 parse/usage errors,
// 3 internal invariant violations.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cbasis/enumerate.hpp"
#include "cbasis/freudenthal.hpp"
#include "cbasis/render.hpp"
#include "cbasis/report.hpp"

using namespace cbasis;

namespace {

struct CommonOpts {
  int ell = 0;
  std::vector<int> lambda;
  int depth = 0;
  int m = 0;
  std::string format = "text";
  std::string out_path;
};

HighestWeight lambda_of(const CommonOpts& o) {
  if (static_cast<int>(o.lambda.size()) != o.ell + 1)
    throw std::invalid_argument("--lambda expects ell+1 coefficients");
  HighestWeight L(o.lambda);
  if (L.level() < 1) throw std::invalid_argument("--lambda level must be at least 1");
  return L;
}

std::ostream& out_stream(const CommonOpts& o, std::ofstream& file) {
  if (o.out_path.empty()) return std::cout;
  file.open(o.out_path);
  if (!file) throw std::invalid_argument("cannot open output file");
  return file;
}

void emit_census(const CommonOpts& o, const GradedCharacter& g, std::ostream& os) {
  if (o.format == "json")
    write_census_json(os, o.ell, o.lambda, o.depth, g);
  else if (o.format == "csv")
    write_census_csv(os, o.ell, g);
  else
    write_census_text(os, g);
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_depth, bool with_m) {
  cmd->add_option("--ell", o.ell, "rank")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--lambda", o.lambda, "highest-weight coefficients k_0,...,k_ell")
      ->required()
      ->delimiter(',');
  if (with_depth)
    cmd->add_option("--depth", o.depth, "depth bound")->required()->check(CLI::NonNegativeNumber);
  if (with_m) cmd->add_option("--m", o.m, "shift index")->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
}

int cmd_basis(const CommonOpts& o, int m) {
  HighestWeight L = lambda_of(o);
  const ExtremalWeight ext = extremal_weight(L, m);
  auto basis = enumerate_level_k(L, m, static_cast<long long>(o.depth) - ext.depth);
  GradedCharacter g;
  std::ofstream file;
  std::ostream& os = out_stream(o, file);
  for (const Monomial& p : basis) {
    WeightTag w = weight(p);
    if (w.depth + ext.depth < 0) throw std::logic_error("basis monomial above the highest weight");
    g.add(w.depth + ext.depth, eps_add(w.classical, ext.classical));
  }
  if (o.format == "text") {
    for (const Monomial& p : basis) os << to_string(p) << '\n';
    os << '\n';
  }
  emit_census(o, g, os);
  return 0;
}

int cmd_semiinf(const CommonOpts& o) {
  HighestWeight L = lambda_of(o);
  auto basis = enumerate_semi_infinite(L, o.depth);
  std::ofstream file;
  std::ostream& os = out_stream(o, file);
  if (o.format == "text") {
    for (const SemiInfiniteMonomial& s : basis.items) os << to_string(s) << '\n';
    os << '\n';
  }
  emit_census(o, basis.census, os);
  return 0;
}

int cmd_char(const CommonOpts& o) {
  HighestWeight L = lambda_of(o);
  GradedCharacter g = character_table(L, o.depth);
  std::ofstream file;
  std::ostream& os = out_stream(o, file);
  emit_census(o, g, os);
  if (o.format == "text")
    if (auto dec = first_total_decrease(g))
      os << "note: totals decrease at depth " << *dec << '\n';
  return 0;
}

int cmd_verify(const CommonOpts& o) {
  HighestWeight L = lambda_of(o);
  VerifyResult res = run_verify(L, o.depth);
  std::ofstream file;
  std::ostream& os = out_stream(o, file);
  os << res.report;
  return res.ok ? 0 : 1;
}

int cmd_check(const CommonOpts& o, const std::string& text) {
  HighestWeight L = lambda_of(o);
  Monomial p = parse_monomial(text, o.ell);
  std::ofstream file;
  std::ostream& os = out_stream(o, file);
  os << "monomial: " << to_string(p) << '\n';
  os << "dc_level1: " << (check_dc_level1(p) ? "ok" : "violated") << '\n';
  if (L.level() == 1) {
    const int r = L.parts()[0];
    os << "ic (r=" << r << ", m=" << o.m << "): "
       << (check_ic_shifted(p, r, -o.m) ? "ok" : "violated") << '\n';
  }
  auto w = check_dc_ic_level_k(p, L, o.m);
  if (!w) {
    os << "factorization: none (conditions violated)\n";
  } else {
    os << "factorization: ok\n";
    for (int s = 0; s < L.level(); ++s) {
      std::vector<Variable> sub;
      for (size_t i = 0; i < p.factors().size(); ++i)
        if (w->slot_of_factor[i] == s) sub.push_back(p.factors()[i]);
      os << "  slot " << (s + 1) << " (r=" << w->slot_targets[static_cast<size_t>(s)]
         << "): " << to_string(Monomial(o.ell, std::move(sub))) << '\n';
    }
  }
  return 0;
}

int cmd_render(int ell, const std::string& text, const CommonOpts& o) {
  Monomial p = parse_monomial(text, ell);
  std::ofstream file;
  std::ostream& os = out_stream(o, file);
  os << render_strip(p);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monomial bases of standard modules for the affine symplectic series"};
  app.require_subcommand(1);

  CommonOpts basis_o, shifted_o, semiinf_o, char_o, verify_o, check_o, render_o;
  std::string check_text, render_text;
  int render_ell = 0;

  CLI::App* basis = app.add_subcommand("basis", "enumerate the level-k basis of W(Lambda)");
  add_common(basis, basis_o, true, false);
  CLI::App* shifted = app.add_subcommand("shifted", "enumerate the basis of the 2m-shifted picture");
  add_common(shifted, shifted_o, true, true);
  CLI::App* semiinf =
      app.add_subcommand("semiinf", "enumerate canonical semi-infinite monomials of L(Lambda)");
  add_common(semiinf, semiinf_o, true, false);
  CLI::App* chart = app.add_subcommand("char", "Freudenthal character table of L(Lambda)");
  add_common(chart, char_o, true, false);
  CLI::App* verify =
      app.add_subcommand("verify", "compare the semi-infinite census with the oracle");
  add_common(verify, verify_o, true, false);
  CLI::App* check = app.add_subcommand("check", "report conditions for one monomial");
  add_common(check, check_o, false, true);
  check->add_option("monomial", check_text, "monomial text, e.g. \"x[1,2](-2) x[1,2](-1)\"")
      ->required();
  CLI::App* render = app.add_subcommand("render", "draw the diagonal-path strip of a monomial");
  render->add_option("--ell", render_ell, "rank")->required()->check(CLI::PositiveNumber);
  render->add_option("monomial", render_text, "monomial text")->required();
  render->add_option("--out", render_o.out_path, "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (basis->parsed()) return cmd_basis(basis_o, 0);
    if (shifted->parsed()) return cmd_basis(shifted_o, shifted_o.m);
    if (semiinf->parsed()) return cmd_semiinf(semiinf_o);
    if (chart->parsed()) return cmd_char(char_o);
    if (verify->parsed()) return cmd_verify(verify_o);
    if (check->parsed()) return cmd_check(check_o, check_text);
    if (render->parsed()) return cmd_render(render_ell, render_text, render_o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
