// Command line front end: exact ASM counting tables, partition-function
// evaluation by determinant or enumeration, and the identity verification
// suites with machine-readable JSON reports.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sixv/closedform.hpp"
#include "sixv/enumerate.hpp"
#include "sixv/ikdet.hpp"
#include "sixv/verify.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitUsage = 64;

std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Angles are decimal radians or exact rational multiples of pi written
// "<p>pi/<q>" (also "pi", "-pi/3", "2pi").  The exact forms parse through
// integers so that eta = 2pi/3 survives convention validation.
double parse_angle(const std::string& text) {
  const size_t at = text.find("pi");
  if (at == std::string::npos) return std::stod(text);
  double p = 1.0;
  const std::string head = text.substr(0, at);
  if (head == "-") {
    p = -1.0;
  } else if (!head.empty() && head != "+") {
    p = std::stod(head);
  }
  double q = 1.0;
  const std::string tail = text.substr(at + 2);
  if (!tail.empty()) {
    if (tail[0] != '/') throw CLI::ValidationError("angle", "bad angle syntax: " + text);
    q = std::stod(tail.substr(1));
  }
  return p * kPi / q;
}

std::vector<double> parse_angle_list(const std::string& text) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = text.find(',', pos);
    const std::string tok =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tok.empty()) out.push_back(parse_angle(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Minimal JSON emitter with a fixed field order; doubles carry 17
// significant digits and exact integers travel as decimal strings, so a
// fixed (seed, flags) pair reproduces the byte-identical document.
struct Json {
  static std::string str(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
          } else {
            out += c;
          }
      }
    }
    return out + "\"";
  }
  static std::string num(double v) { return fmt17(v); }
  static std::string num(int v) { return std::to_string(v); }
  static std::string num(uint64_t v) { return std::to_string(v); }
  static std::string boolean(bool v) { return v ? "true" : "false"; }
};

std::string report_json(const sixv::VerifyReport& rep) {
  std::string out = "{";
  out += "\"suite\":" + Json::str(rep.suite);
  out += ",\"n\":" + Json::num(rep.n);
  out += ",\"params\":{\"trials\":" + Json::num(rep.trials) +
         ",\"seed\":" + Json::num(rep.seed) + ",\"tol\":" + Json::num(rep.tol) + "}";
  out += ",\"status\":" + Json::str(rep.pass ? "pass" : "fail");
  out += ",\"exact\":" + Json::boolean(rep.exact);
  out += ",\"max_residual\":" + Json::num(rep.max_residual);
  if (!rep.notes.empty()) {
    out += ",\"notes\":{";
    for (size_t i = 0; i < rep.notes.size(); ++i) {
      if (i) out += ",";
      out += Json::str(rep.notes[i].first) + ":" + Json::str(rep.notes[i].second);
    }
    out += "}";
  }
  out += ",\"failures\":[";
  for (size_t i = 0; i < rep.failures.size(); ++i) {
    if (i) out += ",";
    out += "{\"inputs\":" + Json::str(rep.failures[i].inputs) +
           ",\"observed\":" + Json::str(rep.failures[i].observed) +
           ",\"expected\":" + Json::str(rep.failures[i].expected) + "}";
  }
  out += "]";
  if (!rep.children.empty()) {
    out += ",\"children\":[";
    for (size_t i = 0; i < rep.children.size(); ++i) {
      if (i) out += ",";
      out += report_json(rep.children[i]);
    }
    out += "]";
  }
  return out + "}";
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    std::ofstream f(out_path);
    f << text;
  }
}

struct CountArgs {
  int n = 1;
  std::string stat = "total";
  std::string format = "json";
  std::string out;
  int ceiling = 8;
  int threads = 1;
};

int run_count(const CountArgs& args) {
  using sixv::BigInt;
  if (args.n < 1 || args.n > 50) {
    std::cerr << "count: n must be in [1, 50]\n";
    return kExitUsage;
  }
  const sixv::EnumOptions eopt{args.ceiling, args.threads};
  const bool enumerable = args.n <= args.ceiling;
  std::string body;
  bool agrees = true;
  bool have_agrees = false;

  if (args.stat == "total") {
    const BigInt closed = sixv::a_total(args.n);
    if (enumerable) {
      have_agrees = true;
      agrees = sixv::count_states(args.n, eopt) == closed;
    }
    if (args.format == "csv") {
      body = "n,count\n" + std::to_string(args.n) + "," + closed.to_string() + "\n";
    } else {
      body = "{\"stat\":\"total\",\"n\":" + Json::num(args.n) + ",\"count\":" +
             Json::str(closed.to_string());
      if (have_agrees) body += ",\"agrees\":" + Json::boolean(agrees);
      body += "}\n";
    }
  } else if (args.stat == "refined") {
    std::vector<BigInt> closed;
    for (int r = 1; r <= args.n; ++r) closed.push_back(sixv::a_refined(args.n, r));
    if (enumerable) {
      have_agrees = true;
      const sixv::CountTable t = sixv::refined_top(args.n, eopt);
      for (int r = 1; r <= args.n; ++r) {
        if (t.at(r) != closed[static_cast<size_t>(r - 1)]) agrees = false;
      }
    }
    if (args.format == "csv") {
      body = "r,count\n";
      for (int r = 1; r <= args.n; ++r) {
        body += std::to_string(r) + "," + closed[static_cast<size_t>(r - 1)].to_string() + "\n";
      }
    } else {
      body = "{\"stat\":\"refined\",\"n\":" + Json::num(args.n) + ",\"rows\":[";
      for (int r = 1; r <= args.n; ++r) {
        if (r > 1) body += ",";
        body += "{\"r\":" + Json::num(r) + ",\"count\":" +
                Json::str(closed[static_cast<size_t>(r - 1)].to_string()) + "}";
      }
      body += "]";
      if (have_agrees) body += ",\"agrees\":" + Json::boolean(agrees);
      body += "}\n";
    }
  } else if (args.stat == "top-bottom") {
    const sixv::CountTable t = sixv::double_top_bottom(args.n, eopt);
    if (args.format == "csv") {
      body = "r,rt,count\n";
      for (int r = 1; r <= args.n; ++r) {
        for (int rt = 1; rt <= args.n; ++rt) {
          body += std::to_string(r) + "," + std::to_string(rt) + "," +
                  t.at(r, rt).to_string() + "\n";
        }
      }
    } else {
      body = "{\"stat\":\"top-bottom\",\"n\":" + Json::num(args.n) + ",\"rows\":[";
      bool first = true;
      for (int r = 1; r <= args.n; ++r) {
        for (int rt = 1; rt <= args.n; ++rt) {
          if (!first) body += ",";
          first = false;
          body += "{\"r\":" + Json::num(r) + ",\"rt\":" + Json::num(rt) + ",\"count\":" +
                  Json::str(t.at(r, rt).to_string()) + "}";
        }
      }
      body += "]}\n";
    }
  } else if (args.stat == "top-left") {
    const sixv::CountTable t = sixv::double_top_left(args.n, eopt);
    if (args.format == "csv") {
      // The (1,1) record is the corner count: a top-row 1 in column 1 forces
      // the left-column 1 into row 1.
      body = "r,rt,count\n1,1," + t.corner.to_string() + "\n";
      for (int r = 2; r <= args.n; ++r) {
        for (int rt = 2; rt <= args.n; ++rt) {
          body += std::to_string(r) + "," + std::to_string(rt) + "," +
                  t.at(r, rt).to_string() + "\n";
        }
      }
    } else {
      body = "{\"stat\":\"top-left\",\"n\":" + Json::num(args.n) + ",\"a_n1\":" +
             Json::str(t.corner.to_string()) + ",\"rows\":[";
      bool first = true;
      for (int r = 2; r <= args.n; ++r) {
        for (int rt = 2; rt <= args.n; ++rt) {
          if (!first) body += ",";
          first = false;
          body += "{\"r\":" + Json::num(r) + ",\"rt\":" + Json::num(rt) + ",\"count\":" +
                  Json::str(t.at(r, rt).to_string()) + "}";
        }
      }
      body += "]}\n";
    }
  }

  emit(body, args.out);
  if (have_agrees && !agrees) {
    std::cerr << "count: enumeration and closed form disagree\n";
    return kExitIdentityFailure;
  }
  return kExitPass;
}

struct ZArgs {
  int n = 1;
  std::string eta = "2pi/3";
  std::string xs, ys;
  std::string method = "ik";
  std::string convention = "signed";
  bool both = false;
  int ceiling = 8;
  int threads = 1;
};

int run_z(const ZArgs& args) {
  const double eta = parse_angle(args.eta);
  const std::vector<double> xs = parse_angle_list(args.xs);
  const std::vector<double> ys = parse_angle_list(args.ys);
  if (static_cast<int>(xs.size()) != args.n || static_cast<int>(ys.size()) != args.n) {
    std::cerr << "z: expected " << args.n << " values in --xs and --ys\n";
    return kExitUsage;
  }
  const sixv::SpectralConfig cfg(eta, xs, ys);
  const sixv::WeightConvention conv = args.convention == "counting"
                                          ? sixv::WeightConvention::counting
                                          : sixv::WeightConvention::signed_w;
  const sixv::EnumOptions eopt{args.ceiling, args.threads};
  if (args.both) {
    const double zi = sixv::ik_z(cfg);
    const double zb = sixv::brute_z(cfg, conv, eopt);
    std::cout << "ik " << fmt17(zi) << "\n";
    std::cout << "brute " << fmt17(zb) << "\n";
    std::cout << "rel_discrepancy " << fmt17(std::fabs(zi - zb) / std::fabs(zb)) << "\n";
  } else if (args.method == "brute") {
    std::cout << fmt17(sixv::brute_z(cfg, conv, eopt)) << "\n";
  } else {
    std::cout << fmt17(sixv::ik_z(cfg)) << "\n";
  }
  return kExitPass;
}

struct VerifyArgs {
  std::string suite;
  int n = 3;
  int trials = 20;
  uint64_t seed = 1;
  double tol = 0;
  std::string eta;
  int root_n = 3;
  std::string out;
  int ceiling = 8;
  int threads = 1;
};

int run_verify(const VerifyArgs& args) {
  sixv::VerifyOptions opt;
  opt.n = args.n;
  opt.trials = args.trials;
  opt.seed = args.seed;
  opt.tol = args.tol;
  opt.root_n = args.root_n;
  opt.threads = args.threads;
  opt.ceiling = args.ceiling;
  if (!args.eta.empty()) opt.eta = parse_angle(args.eta);
  const sixv::VerifyReport rep = sixv::run_suite(args.suite, opt);
  emit(report_json(rep) + "\n", args.out);
  return rep.pass ? kExitPass : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"six-vertex model with domain-wall boundaries: exact ASM counts, "
               "determinant evaluation, and identity verification"};
  app.require_subcommand(1);

  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  app.add_option("--threads", threads, "worker threads for enumeration")
      ->envname("SIXVERTEX_THREADS");
  int ceiling = 8;
  app.add_option("--ceiling", ceiling, "largest n the enumerator will attempt");

  CountArgs count;
  CLI::App* cc = app.add_subcommand("count", "exact ASM counting tables");
  cc->add_option("--n", count.n, "matrix order")->required();
  cc->add_option("--stat", count.stat, "total | refined | top-bottom | top-left")
      ->check(CLI::IsMember({"total", "refined", "top-bottom", "top-left"}));
  cc->add_option("--format", count.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cc->add_option("--out", count.out, "write output to this file instead of stdout");

  ZArgs z;
  CLI::App* zc = app.add_subcommand("z", "partition function at given spectral parameters");
  zc->add_option("--n", z.n, "lattice size")->required();
  zc->add_option("--eta", z.eta, "crossing parameter (radians or 'p pi/q', e.g. 2pi/3)");
  zc->add_option("--xs", z.xs, "comma-separated row parameters")->required();
  zc->add_option("--ys", z.ys, "comma-separated column parameters")->required();
  zc->add_option("--method", z.method, "ik | brute")->check(CLI::IsMember({"ik", "brute"}));
  zc->add_option("--convention", z.convention, "signed | counting")
      ->check(CLI::IsMember({"signed", "counting"}));
  zc->add_flag("--both", z.both, "evaluate both methods and report the discrepancy");

  VerifyArgs verify;
  CLI::App* vc = app.add_subcommand("verify", "run an identity verification suite");
  vc->add_option("--suite", verify.suite, "suite name or 'all'")->required();
  vc->add_option("--n", verify.n, "lattice size");
  vc->add_option("--trials", verify.trials, "random configurations per suite");
  vc->add_option("--seed", verify.seed, "random seed");
  vc->add_option("--tol", verify.tol, "override the suite tolerance");
  vc->add_option("--eta", verify.eta, "override the suite crossing parameter");
  vc->add_option("--N", verify.root_n, "the N of eta = 2pi/N for detsum/basic");
  vc->add_option("--out", verify.out, "write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  count.threads = z.threads = verify.threads = threads;
  count.ceiling = z.ceiling = verify.ceiling = ceiling;

  try {
    if (app.got_subcommand("count")) return run_count(count);
    if (app.got_subcommand("z")) return run_z(z);
    if (app.got_subcommand("verify")) {
      if (verify.suite != "all") {
        const auto& names = sixv::suite_names();
        if (std::find(names.begin(), names.end(), verify.suite) == names.end()) {
          std::cerr << "verify: unknown suite '" << verify.suite << "'\n";
          return kExitUsage;
        }
      }
      return run_verify(verify);
    }
  } catch (const sixv::DegenerateParameters& e) {
    std::cerr << "degenerate parameters: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const sixv::DegenerateEta& e) {
    std::cerr << "degenerate eta: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const sixv::InvalidConvention& e) {
    std::cerr << "invalid convention: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sixv::SizeTooLarge& e) {
    std::cerr << e.what() << " (raise --ceiling to insist)\n";
    return kExitUsage;
  } catch (const sixv::OutOfRange& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const sixv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIdentityFailure;
  } catch (const std::invalid_argument&) {
    std::cerr << "malformed numeric argument\n";
    return kExitUsage;
  } catch (const std::out_of_range&) {
    std::cerr << "numeric argument out of range\n";
    return kExitUsage;
  }
  return kExitUsage;
}
