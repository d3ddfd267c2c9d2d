#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "subshift/algebra.hpp"
#include "subshift/error.hpp"
#include "subshift/reduction.hpp"
#include "subshift/structure.hpp"
#include "subshift/syntax.hpp"

namespace subshift::cli {

namespace {

struct Options {
  std::string shift_path;
  std::string expr;
  std::string ring = "z";
  std::string set_expr;
  std::string word;
  long degree = 0;
  std::size_t max_len = 3;
  bool verify = false;
  bool trace = false;
  bool check_square = false;
};

Ring parse_ring(const std::string& name) {
  if (name == "z") return Ring::integer();
  if (name == "q") return Ring::rational();
  if (name.rfind("zmod:", 0) == 0) {
    std::string digits = name.substr(5);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::BadScalarForRing, "bad modulus in '" + name + "'");
    return Ring::integer_mod(mpz_class(digits));
  }
  throw Error(ErrorCode::BadScalarForRing, "unknown ring '" + name + "' (use z, q or zmod:N)");
}

Shift load_shift(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read shift file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return build_follower_graph(parse_shift(buf.str()));
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownLetter:
    case ErrorCode::BadScalarForRing:
    case ErrorCode::DuplicateSymbol:
    case ErrorCode::EmptyAlphabet:
    case ErrorCode::IllegalForbiddenWord:
    case ErrorCode::EmptyShift: return true;
    default: return false;
  }
}

std::string describe(const Shift& g, const Cycle& c) { return "A=" + format_set(c.set) + " word=" + g->spell(c.word); }

int cmd_reduce(const Options& o, const AlgebraElement& x, std::ostream& out, std::ostream& err) {
  ReductionWitness w = reduce(x);
  out << "mu: " << format_expr(w.mu) << '\n';
  out << "nu: " << format_expr(w.nu) << '\n';
  out << format_form(w.form) << '\n';
  if (o.trace)
    for (const TraceEntry& t : w.trace)
      out << "trace: " << (t.side == TraceEntry::Side::Left ? "L " : "R ") << t.step << ' ' << format_expr(t.factor)
          << '\n';
  if (o.verify) {
    if (!verify(w, x)) {
      err << "verification failed: mu*x*nu differs from the reduced form\n";
      return kContractViolation;
    }
    out << "verified\n";
  }
  if (o.check_square) {
    if (!square_nonzero_check(x)) {
      err << "reduced element squares to zero\n";
      return kContractViolation;
    }
    out << "square nonzero\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic in algebras of shifts of finite type", "subshift"};
  app.require_subcommand(1);
  Options o;

  auto element_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("shift", o.shift_path, "Shift file")->required();
    sub->add_option("-e,--expr", o.expr, "Algebra expression")->required();
    sub->add_option("--ring", o.ring, "Base ring: z, q or zmod:N")->capture_default_str();
    return sub;
  };

  CLI::App* nf = element_command("nf", "Print the normal form");
  CLI::App* iszero = element_command("iszero", "Exit 0 if the element is zero, 1 otherwise");
  CLI::App* red = element_command("reduce", "Reduce to a projection multiple or a cycle form");
  red->add_flag("--verify", o.verify, "Re-multiply and check the witness");
  red->add_flag("--trace", o.trace, "Print the factor trace");
  red->add_flag("--check-square", o.check_square, "Check that the reduced element does not square to zero");
  CLI::App* grade = element_command("grade", "Print a Z-graded component");
  grade->add_option("-n,--degree", o.degree, "Degree")->required();
  CLI::App* corner = element_command("corner", "Map p_A x p_A to a Laurent polynomial");
  corner->add_option("--set", o.set_expr, "Set expression for A")->required();
  corner->add_option("--word", o.word, "Cycle word c")->required();

  CLI::App* cycles = app.add_subcommand("cycles", "List minimal cycles without exit");
  cycles->add_option("shift", o.shift_path, "Shift file")->required();
  CLI::App* exits = app.add_subcommand("check-exits", "Exit 0 iff every cycle has an exit");
  exits->add_option("shift", o.shift_path, "Shift file")->required();
  CLI::App* selftest = app.add_subcommand("selftest", "Check the defining relations");
  selftest->add_option("shift", o.shift_path, "Shift file")->required();
  selftest->add_option("--max-len", o.max_len, "Longest word to check")->capture_default_str();
  selftest->add_option("--ring", o.ring, "Base ring: z, q or zmod:N")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : kUsageError;
  }

  try {
    Shift g = load_shift(o.shift_path);
    Ring ring = parse_ring(o.ring);
    Algebra alg(g, ring);

    if (*cycles) {
      auto found = find_cycles_without_exit(g);
      if (found.empty()) out << "none\n";
      for (const Cycle& c : found) out << describe(g, c) << '\n';
      return 0;
    }
    if (*exits) {
      auto found = find_cycles_without_exit(g);
      if (found.empty()) {
        out << "all cycles have exits\n";
        return 0;
      }
      for (const Cycle& c : found) out << "cycle without exit: " << describe(g, c) << '\n';
      return 1;
    }
    if (*selftest) {
      SelftestReport report = relations_selftest(g, ring, o.max_len);
      out << "checks: " << report.checks << '\n';
      for (const std::string& r : report.residuals) out << "residual: " << r << '\n';
      out << (report.clean() ? "clean" : "residuals: " + std::to_string(report.residuals.size())) << '\n';
      return report.clean() ? 0 : 1;
    }

    AlgebraElement x = parse_element(o.expr, alg);
    if (*nf) {
      out << format_nf(x);
      return 0;
    }
    if (*iszero) {
      out << (x.is_zero() ? "zero" : "nonzero") << '\n';
      return x.is_zero() ? 0 : 1;
    }
    if (*grade) {
      out << format_nf(z_grade_component(x, o.degree));
      return 0;
    }
    if (*corner) {
      ClopenSet a = parse_set(o.set_expr, g);
      Word c = g->parse_word(o.word);
      out << format_laurent(corner_to_laurent(corner_project(x, a), a, c)) << '\n';
      return 0;
    }
    if (*red) return cmd_reduce(o, x, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.code()) ? kUsageError : kContractViolation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kContractViolation;
  }
  return kUsageError;
}

}  // namespace subshift::cli
