#include <bit>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"

#include "dca/json_io.hpp"
#include "dca/selfcheck.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text << "\n";
}

int run_selftest(const std::string& suite) {
  std::vector<dca::selfcheck::Suite> suites;
  if (suite.empty())
    suites = dca::selfcheck::run_all();
  else
    suites.push_back(dca::selfcheck::run_suite(suite));
  bool all = true;
  for (const auto& s : suites) {
    for (const auto& c : s.checks) {
      std::cout << "[" << (c.pass ? "ok" : "FAIL") << "] " << s.name << ": " << c.name;
      if (!c.pass && !c.detail.empty()) std::cout << " -- " << c.detail;
      std::cout << "\n";
      all &= c.pass;
    }
  }
  std::cout << (all ? "all identities hold" : "identity failure") << "\n";
  return all ? kExitOk : kExitIdentityFailure;
}

// Scalar coefficients evaluated at the given angle; exact JSON otherwise.
dca::Json scalar_out(const dca::Scalar& s, bool numeric, double theta) {
  if (!numeric) return dca::to_json(s);
  const std::vector<double> angles{theta};
  const auto z = s.eval(angles);
  return dca::Json{{"re", z.real()}, {"im", z.imag()}};
}

dca::Json state_out(const dca::PolyState& f, bool numeric, double theta) {
  if (!numeric) return dca::to_json(f);
  dca::Json terms = dca::Json::array();
  for (const auto& [alpha, c] : f.terms()) {
    dca::Json blades = dca::Json::array();
    for (const auto& [blade, s] : c.terms()) {
      dca::Json word = dca::Json::array();
      for (dca::BladeMask rest = blade; rest;) {
        const int gen = std::countr_zero(rest);
        rest &= rest - 1;
        word.push_back(dca::blade_token(gen));
      }
      blades.push_back(dca::Json{{"word", word}, {"coeff", scalar_out(s, true, theta)}});
    }
    dca::Json a = dca::Json::array();
    for (int j = 0; j < f.dim(); ++j) a.push_back(dca::mi::get(alpha, j));
    terms.push_back(dca::Json{{"alpha", a}, {"coeff", dca::Json{{"blades", blades}, {"m", f.dim()}}}});
  }
  return dca::Json{{"m", f.dim()}, {"terms", terms}};
}

dca::Json dist_out(const dca::DistState& d, bool numeric, double theta) {
  if (!numeric) return dca::to_json(d);
  dca::Json terms = dca::Json::array();
  for (const auto& [beta, c] : d.terms()) {
    dca::Json blades = dca::Json::array();
    for (const auto& [blade, s] : c.terms()) {
      dca::Json word = dca::Json::array();
      for (dca::BladeMask rest = blade; rest;) {
        const int gen = std::countr_zero(rest);
        rest &= rest - 1;
        word.push_back(dca::blade_token(gen));
      }
      blades.push_back(dca::Json{{"word", word}, {"coeff", scalar_out(s, true, theta)}});
    }
    dca::Json b = dca::Json::array();
    for (int j = 0; j < d.dim(); ++j) b.push_back(dca::mi::get(beta, j));
    terms.push_back(dca::Json{{"beta", b}, {"coeff", dca::Json{{"blades", blades}, {"m", d.dim()}}}});
  }
  return dca::Json{{"m", d.dim()}, {"terms", terms}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for split Clifford operator calculus and spin actions"};
  app.require_subcommand(1);

  // selftest
  auto* selftest = app.add_subcommand("selftest", "run the identity suites");
  std::string suite;
  selftest->add_option("--suite", suite, "restrict to one suite");

  // rotate / dist-rotate
  std::string angle = "sym", input, output, format = "json", action = "H0";
  int m = 2, k = 0, kmax = 4;
  bool half = false;
  auto add_rotate_opts = [&](CLI::App* cmd, bool with_action) {
    cmd->add_option("--m", m, "dimension")->check(CLI::Range(1, 8));
    if (with_action) cmd->add_option("--action", action, "H0|H1|L|H0perp|H1perp|Lperp");
    cmd->add_option("--angle", angle, "'sym' or a rational multiple of pi, e.g. 1/3pi");
    cmd->add_option("--input", input, "input state file")->required();
    cmd->add_option("--output", output, "output file (stdout when omitted)");
    cmd->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  };
  auto* rotate = app.add_subcommand("rotate", "rotate a polynomial state");
  add_rotate_opts(rotate, true);
  auto* dist_rotate = app.add_subcommand("dist-rotate", "rotate a distribution");
  add_rotate_opts(dist_rotate, false);

  // dims
  auto* dims = app.add_subcommand("dims", "harmonic dimension table");
  dims->add_option("--m", m, "dimension")->check(CLI::Range(1, 8));
  dims->add_option("--kmax", kmax, "largest degree");
  dims->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  dims->add_option("--output", output, "output file (stdout when omitted)");

  // eigenbasis
  auto* eigen = app.add_subcommand("eigenbasis", "two-dimensional mixing eigenstates");
  eigen->add_option("--k", k, "degree")->required();
  eigen->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  eigen->add_option("--output", output, "output file (stdout when omitted)");

  // hw
  auto* hw = app.add_subcommand("hw", "highest-weight state with its torus weight");
  hw->add_option("--m", m, "dimension")->check(CLI::Range(2, 8));
  hw->add_option("--k", k, "degree")->required();
  hw->add_flag("--half", half, "spinor variant (half-integer weight)");
  hw->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  hw->add_option("--output", output, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (selftest->parsed()) return run_selftest(suite);

    if (rotate->parsed() || dist_rotate->parsed()) {
      const dca::AngleSpec spec = dca::parse_angle_spec(angle);
      const double theta =
          spec.symbolic ? 0.0 : static_cast<double>(spec.multiple_of_pi) * std::numbers::pi;
      const dca::Json in = dca::Json::parse(read_file(input));
      const int dim = in.at("m").get<int>();
      const dca::ActionKind kind = dca::action_kind_from_string(action);
      // rotor in the (1,2) plane: cos(t/2) + sin(t/2) G_1 G_2
      const dca::Family fam =
          dca::action_is_perp(kind) && rotate->parsed() ? dca::Family::T : dca::Family::R;
      const dca::SpinElement s = dca::exp_bivector(
          fam, {{1, fam == dca::Family::R ? std::pair<int, int>{2, 1} : std::pair<int, int>{1, 2}}},
          dim);
      dca::Json out_json;
      std::string out_text;
      if (rotate->parsed()) {
        const dca::PolyState f = dca::poly_from_json(in);
        const dca::PolyState g = dca::act(kind, s, f);
        out_json = state_out(g, !spec.symbolic, theta);
        out_text = g.str();
      } else {
        const dca::DistState d = dca::dist_from_json(in);
        const dca::DistState g = dca::rotate_dist(s, d);
        out_json = dist_out(g, !spec.symbolic, theta);
        out_text = g.str();
      }
      write_output(output, format == "json" ? out_json.dump() : out_text);
      return kExitOk;
    }

    if (dims->parsed()) {
      dca::Json rows = dca::Json::array();
      std::string text = "k formula rank\n";
      for (int kk = 0; kk <= kmax; ++kk) {
        const dca::HarmonicDim d = dca::harmonic_dim(m, kk);
        rows.push_back(dca::Json{{"k", kk}, {"formula", d.formula}, {"rank", d.kernel_rank}});
        text += std::to_string(kk) + " " + std::to_string(d.formula) + " " +
                std::to_string(d.kernel_rank) + "\n";
      }
      const dca::Json j{{"m", m}, {"rows", rows}};
      write_output(output, format == "json" ? j.dump() : text);
      return kExitOk;
    }

    if (eigen->parsed()) {
      dca::Json states = dca::Json::array();
      std::string text;
      auto emit = [&](int lambda, const dca::PolyState& f) {
        states.push_back(dca::Json{{"lambda", lambda}, {"state", dca::to_json(f)}});
        text += "lambda " + std::to_string(lambda) + ": " + f.str() + "\n";
      };
      if (k % 2 == 0) {
        for (int i = 0; 2 * i <= k; ++i) {
          emit(2 * i, dca::eigen_state(k, i, +1));
          if (i > 0) emit(-2 * i, dca::eigen_state(k, i, -1));
        }
      } else {
        for (int i = 1; 2 * i - 1 <= k; ++i) {
          emit(2 * i - 1, dca::eigen_state(k, i, +1));
          emit(-(2 * i - 1), dca::eigen_state(k, i, -1));
        }
      }
      const dca::Json j{{"k", k}, {"states", states}};
      write_output(output, format == "json" ? j.dump() : text);
      return kExitOk;
    }

    if (hw->parsed()) {
      const dca::PolyState f = half ? dca::hw_half_state(m, k) : dca::hw_state(m, k);
      // verify the defining property before reporting the weight
      if (half && !dca::dirac(f).is_zero()) return kExitIdentityFailure;
      if (!half && !dca::laplace(f).is_zero()) return kExitIdentityFailure;
      const dca::Scalar w = dca::torus_weight(half ? dca::ActionKind::L : dca::ActionKind::H0, f);
      const dca::Json j{{"m", m},
                        {"k", k},
                        {"half", half},
                        {"state", dca::to_json(f)},
                        {"weight", dca::to_json(w)}};
      write_output(output, format == "json"
                               ? j.dump()
                               : "state: " + f.str() + "\nweight: " + w.str());
      return kExitOk;
    }
  } catch (const dca::Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIdentityFailure;
  }
  return kExitUsage;
}
