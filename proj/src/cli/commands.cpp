#include "hydrocg/cli.hpp"
#include "hydrocg/hydrogenic.hpp"
#include "hydrocg/hypergeom.hpp"
#include "hydrocg/verify.hpp"
#include "hydrocg/wigner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace hydrocg::cli {

using exactnum::PhasedSurd;
using exactnum::Rational;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using JsonParams = std::vector<std::pair<std::string, nlohmann::ordered_json>>;

class Printer {
 public:
  Printer(OutputMode mode, std::ostream& out) : mode_(mode), out_(out) {}

  void value(const std::string& op, const JsonParams& params, const PhasedSurd& v, const std::string& label = {}) {
    switch (mode_) {
      case OutputMode::exact:
        out_ << label << exactnum::render(v) << '\n';
        break;
      case OutputMode::decimal:
        out_ << label << render_decimal(v) << '\n';
        break;
      case OutputMode::json: {
        nlohmann::ordered_json p = nlohmann::ordered_json::object();
        for (const auto& [k, val] : params) p[k] = val;
        nlohmann::ordered_json j;
        j["op"] = op;
        j["params"] = p;
        j["exact"] = exactnum::render(v);
        j["decimal"] = render_decimal(v);
        out_ << j.dump() << '\n';
        break;
      }
    }
  }

 private:
  OutputMode mode_;
  std::ostream& out_;
};

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const long long v = std::stoll(text, &used);
      if (used != text.size()) throw UsageError("");
      return Rational(v);
    }
    const long long num = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw UsageError("");
    const std::string rest = text.substr(slash + 1);
    const long long den = std::stoll(rest, &used);
    if (used != rest.size() || den == 0) throw UsageError("");
    return Rational(exactnum::Integer(num), exactnum::Integer(den));
  } catch (const std::logic_error&) {
    throw UsageError("not a rational number: '" + text + "'");
  }
}

std::vector<Rational> parse_rational_list(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& s : items) out.push_back(parse_rational(s));
  return out;
}

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "exact | decimal | json")
      ->check(CLI::IsMember({"exact", "decimal", "json"}))
      ->default_val("exact");
}

OutputMode mode_of(const std::string& f) {
  if (f == "decimal") return OutputMode::decimal;
  if (f == "json") return OutputMode::json;
  return OutputMode::exact;
}

}  // namespace

int parse_doubled(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw UsageError("");
      return 2 * v;
    }
    if (text.substr(slash) != "/2") throw UsageError("");
    const int v = std::stoi(text.substr(0, slash), &used);
    if (used != slash) throw UsageError("");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("expected an integer or a half-integer written a/2, got '" + text + "'");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact hydrogenic radial matrix elements and angular-momentum coupling coefficients"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string format = "exact";
  std::function<void(Printer&)> action;

  // me
  int me_n = 1, me_l = 0, me_lp = 0, me_k = 0;
  std::string me_z = "1";
  auto* me = app.add_subcommand("me", "radial matrix element <n l | r^k | n lp>");
  me->add_option("--n", me_n)->required();
  me->add_option("--l", me_l)->required();
  me->add_option("--lp", me_lp)->required();
  me->add_option("--k", me_k)->required();
  me->add_option("--Z", me_z, "nuclear charge (integer or p/q)")->default_val("1");
  add_format(me, format);
  me->callback([&] {
    action = [&](Printer& p) {
      const Rational z = parse_rational(me_z);
      const PhasedSurd v = hydrogenic::me_power(me_n, me_l, me_lp, me_k, z);
      p.value("me", {{"n", me_n}, {"l", me_l}, {"lp", me_lp}, {"k", me_k}, {"Z", me_z}}, v);
    };
  });

  // 3j
  std::vector<std::string> tj_j, tj_m;
  auto* tj = app.add_subcommand("3j", "Wigner 3j symbol (j1 j2 j3; m1 m2 m3)");
  tj->add_option("--j", tj_j, "j1,j2,j3")->required()->delimiter(',')->expected(3);
  tj->add_option("--m", tj_m, "m1,m2,m3")->required()->delimiter(',')->expected(3);
  add_format(tj, format);
  tj->callback([&] {
    action = [&](Printer& p) {
      wigner::ThreeJArgs a;
      a.j1 = {parse_doubled(tj_j[0])};
      a.j2 = {parse_doubled(tj_j[1])};
      a.j3 = {parse_doubled(tj_j[2])};
      a.m1 = parse_doubled(tj_m[0]);
      a.m2 = parse_doubled(tj_m[1]);
      a.m3 = parse_doubled(tj_m[2]);
      try {
        p.value("3j", {{"j", tj_j}, {"m", tj_m}}, wigner::three_j(a));
      } catch (const exactnum::DomainError& e) {
        throw exactnum::DomainError(std::string(e.what()) + "; use the 3jx command for continued symbols");
      }
    };
  });

  // cg
  std::string cg_j1, cg_m1, cg_j2, cg_m2, cg_j, cg_m;
  auto* cg = app.add_subcommand("cg", "Clebsch-Gordan coefficient C_{j1 m1, j2 m2}^{j m}");
  cg->add_option("--j1", cg_j1)->required();
  cg->add_option("--m1", cg_m1)->required();
  cg->add_option("--j2", cg_j2)->required();
  cg->add_option("--m2", cg_m2)->required();
  cg->add_option("--j", cg_j)->required();
  cg->add_option("--m", cg_m)->required();
  add_format(cg, format);
  cg->callback([&] {
    action = [&](Printer& p) {
      try {
        const PhasedSurd v = wigner::clebsch_gordan({parse_doubled(cg_j1)}, parse_doubled(cg_m1),
                                                    {parse_doubled(cg_j2)}, parse_doubled(cg_m2),
                                                    {parse_doubled(cg_j)}, parse_doubled(cg_m));
        p.value("cg",
                {{"j1", cg_j1}, {"m1", cg_m1}, {"j2", cg_j2}, {"m2", cg_m2}, {"j", cg_j}, {"m", cg_m}}, v);
      } catch (const exactnum::DomainError& e) {
        throw exactnum::DomainError(std::string(e.what()) + "; use the cgx command for continued coefficients");
      }
    };
  });

  // 3jx
  int x_lp = 0, x_K = 0, x_l = 0, x_n = 1;
  auto* tjx = app.add_subcommand("3jx", "continued 3j symbol (lp K l; -n 0 n)");
  tjx->add_option("--lp", x_lp)->required();
  tjx->add_option("--K", x_K)->required();
  tjx->add_option("--l", x_l)->required();
  tjx->add_option("--n", x_n)->required();
  add_format(tjx, format);
  tjx->callback([&] {
    action = [&](Printer& p) {
      p.value("3jx", {{"lp", x_lp}, {"K", x_K}, {"l", x_l}, {"n", x_n}},
              wigner::regularized_three_j(x_lp, x_K, x_l, x_n));
    };
  });

  // cgx
  int c_l = 0, c_lp = 0, c_n = 1, c_k = 0;
  bool parts = false;
  auto* cgx = app.add_subcommand("cgx", "f^k_{l lp} times the continued C_{lp n, (k+1) 0}^{l n}");
  cgx->add_option("--l", c_l)->required();
  cgx->add_option("--lp", c_lp)->required();
  cgx->add_option("--n", c_n)->required();
  cgx->add_option("--k", c_k)->required();
  cgx->add_flag("--parts", parts, "also print the f and C factors");
  add_format(cgx, format);
  cgx->callback([&] {
    action = [&](Printer& p) {
      const wigner::CgProduct r = wigner::regularized_cg_parts({c_l, c_lp, c_n, c_k});
      const JsonParams params{{"l", c_l}, {"lp", c_lp}, {"n", c_n}, {"k", c_k}};
      p.value("cgx", params, r.product);
      if (parts) {
        p.value("cgx.f", params, r.f, "f = ");
        p.value("cgx.C", params, r.c, "C = ");
      }
    };
  });

  // f3f2
  std::vector<std::string> fa, fb;
  auto* f32 = app.add_subcommand("f3f2", "terminating 3F2(a1,a2,a3; b1,b2; 1)");
  f32->add_option("--a", fa, "a1,a2,a3")->required()->delimiter(',')->expected(3);
  f32->add_option("--b", fb, "b1,b2")->required()->delimiter(',')->expected(2);
  add_format(f32, format);
  f32->callback([&] {
    action = [&](Printer& p) {
      const auto a = parse_rational_list(fa);
      const auto b = parse_rational_list(fb);
      const Rational v = hypergeom::f3f2_terminating({{a[0], a[1], a[2]}, {b[0], b[1]}});
      p.value("f3f2", {{"a", fa}, {"b", fb}}, PhasedSurd(v));
    };
  });

  // verify
  std::string v_suite = "all", v_report;
  int v_nmax = 8, v_lmax = -1, v_jobs = 1;
  int verify_status = exit_code::ok;
  auto* ver = app.add_subcommand("verify", "run identity suites over a parameter grid");
  ver->add_option("--suite", v_suite, "norm | ps | vk | armstrong | rm4 | oracle | all")
      ->check(CLI::IsMember({"norm", "ps", "vk", "armstrong", "rm4", "oracle", "all"}))
      ->default_val("all");
  ver->add_option("--n-max", v_nmax)->check(CLI::PositiveNumber)->default_val(8);
  ver->add_option("--l-max", v_lmax, "cap on l and lp (default: n-max - 1)")->check(CLI::NonNegativeNumber);
  ver->add_option("--jobs", v_jobs, "worker threads for grid evaluation")->check(CLI::PositiveNumber)->default_val(1);
  ver->add_option("--report", v_report, "write one JSON record per line to this file");
  ver->callback([&] {
    action = [&](Printer&) {
      verify::GridSpec g;
      g.n_max = v_nmax;
      g.l_max = v_lmax;
      g.suites = v_suite == "all" ? verify::all_suites() : std::set<verify::Suite>{*verify::parse_suite(v_suite)};
      const verify::VerificationReport rep = verify::run_suite(g, v_jobs);
      if (!v_report.empty()) {
        std::ofstream f(v_report, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot open report file '" + v_report + "'");
        f << verify::serialize(rep);
        f.flush();
        if (!f) throw IoError("failed writing report file '" + v_report + "'");
      }
      const verify::Summary s = rep.summary();
      out << "suite=" << v_suite << " n_max=" << v_nmax << " records=" << rep.records.size()
          << " passed=" << s.passed << " failed=" << s.failed << " skipped=" << s.skipped << '\n';
      for (const auto& c : rep.constants) {
        if (c.suite == "vk") out << "vk " << c.name << " = " << exactnum::render(c.value) << '\n';
      }
      for (const auto& r : rep.records) {
        if (r.pass) continue;
        out << "FAIL " << r.suite;
        for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
        out << " expected=" << r.expected << " actual=" << r.actual << " (" << r.note << ")\n";
      }
      verify_status = rep.ok() ? exit_code::ok : exit_code::verification_failed;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  }

  try {
    Printer printer(mode_of(format), out);
    if (action) action(printer);
    return verify_status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const exactnum::CancellationError& e) {
    err << "cancellation: " << e.what() << "; run `verify --suite oracle` to compare with the numeric oracle\n";
    return exit_code::cancellation;
  } catch (const exactnum::DivergenceError& e) {
    err << "divergent: " << e.what() << '\n';
    return exit_code::domain;
  } catch (const exactnum::DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_code::domain;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return exit_code::io;
  }
}

}  // namespace hydrocg::cli
