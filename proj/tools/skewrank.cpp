#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewrank/harness.hpp"
#include "skewrank/io.hpp"

using namespace skewrank;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string spec_file;
  std::string series_file;
  std::string ideal_text;
  int precision = 8;
  std::string format = "text";
  std::string oracle = "on";
};

void print_report(const Report& rep, const std::string& format) {
  if (format == "json") {
    std::cout << rep.to_json().dump(2) << "\n";
    return;
  }
  std::cout << "scenario: " << rep.scenario << "\n";
  auto sorted = rep.claims;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Claim& a, const Claim& b) { return a.name < b.name; });
  for (const auto& c : sorted) {
    std::cout << "  [" << c.status << "] " << c.name;
    if (!c.witness.is_null()) std::cout << "  " << c.witness.dump();
    std::cout << "\n";
  }
  std::cout << (rep.all_ok() ? "OK" : "FAILED") << " (" << rep.timing_ms << " ms)\n";
}

int finish(const Report& rep, const std::string& format) {
  print_report(rep, format);
  return rep.all_ok() ? 0 : 1;
}

CtxPtr require_context(const CommonOpts& o) {
  if (o.spec_file.empty()) throw skew_error(errc::bad_input, "--spec FILE is required");
  return context_from_spec(load_ring_spec(o.spec_file));
}

int cmd_validate(const CommonOpts& o) {
  if (o.spec_file.empty()) throw skew_error(errc::bad_input, "--spec FILE is required");
  RingSpec spec = load_ring_spec(o.spec_file);
  json out{{"valid", true},
           {"dim", spec.algebra->dim()},
           {"p", spec.algebra->field().p()},
           {"automorphism_order", spec.alpha.order()},
           {"semiprime", is_semiprime(spec.algebra)}};
  if (o.format == "json")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << "valid ring spec: dim " << spec.algebra->dim() << " over F_"
              << spec.algebra->field().p() << ", automorphism order " << spec.alpha.order()
              << (out["semiprime"].get<bool>() ? ", semiprime" : ", not semiprime") << "\n";
  return 0;
}

int cmd_rank(const CommonOpts& o) {
  CtxPtr ctx = require_context(o);
  Report rep;
  rep.scenario = "rank";
  int r = goldie_rank(ctx->algebra);
  rep.add("rank-computed", true, json{{"rank", r}});
  if (is_semiprime(ctx->algebra)) {
    int N = std::max(2, std::min(o.precision, 64 / ctx->algebra->dim()));
    rep.merge(verify_rank_theorem(ctx, N));
  } else {
    rep.add("coefficient-ring-semiprime", false,
            json{{"note", "rank equality needs a semiprime coefficient ring"}});
  }
  return finish(rep, o.format);
}

int cmd_alpha_prime(const CommonOpts& o) {
  CtxPtr ctx = require_context(o);
  Ideal I = o.ideal_text.empty() ? ideal_closure(ctx->algebra, {})
                                 : parse_ideal_generators(o.ideal_text, ctx->algebra);
  Report rep;
  rep.scenario = "alpha_prime";
  if (!is_alpha_ideal(I, ctx->alpha))
    throw skew_error(errc::not_alpha_ideal, "the given ideal is not stable under the automorphism");
  bool ap = is_alpha_prime(I, ctx->alpha);
  rep.add("alpha-prime-decided", true, json{{"alpha_prime", ap}, {"ideal_dim", I.dim()}});
  if (I.is_zero()) rep.merge(alpha_prime_transfer(ctx, std::min(3, std::max(2, o.precision))));
  return finish(rep, o.format);
}

int cmd_invert(const CommonOpts& o) {
  CtxPtr ctx = require_context(o);
  if (o.series_file.empty()) throw skew_error(errc::bad_input, "--series FILE is required");
  SkewSeries f = load_series(o.series_file, ctx);
  SkewSeries g = invert_unit(f);
  if (o.format == "json")
    std::cout << series_to_json(g).dump(2) << "\n";
  else {
    std::cout << "inverse mod y^" << g.precision << ":\n";
    for (int i = 0; i < g.precision; ++i) {
      std::cout << "  y^" << i << ": [";
      for (size_t s = 0; s < g.coeffs[i].size(); ++s)
        std::cout << (s ? "," : "") << int(g.coeffs[i][s]);
      std::cout << "]\n";
    }
  }
  return 0;
}

int cmd_induced(const CommonOpts& o) {
  CtxPtr ctx = require_context(o);
  if (o.ideal_text.empty()) throw skew_error(errc::bad_input, "--ideal is required");
  Ideal I = parse_ideal_generators(o.ideal_text, ctx->algebra);
  int N = std::max(2, std::min(o.precision, 64 / ctx->algebra->dim()));
  Report rep;
  rep.scenario = "induced";
  TruncationRing T = build_truncation(ctx, N);
  InducedTruncation ind = induced_ideal_truncated(I, T);
  rep.merge(ind.report);
  QuotientAlgebra Q = quotient_algebra(ctx->algebra, I);
  if (!I.is_full() && is_semiprime(Q.alg)) rep.merge(verify_induced_corollary(ctx, I, N));
  return finish(rep, o.format);
}

int cmd_verify(const CommonOpts& o) {
  CtxPtr ctx = require_context(o);
  VerifyOptions vo;
  vo.precision = o.precision;
  return finish(run_verify(ctx, vo), o.format);
}

int cmd_selftest(const CommonOpts& o) {
  VerifyOptions vo;
  vo.precision = o.precision;
  vo.samples = 60;  // keeps the full zoo well under the time budget
  return finish(run_selftest(vo), o.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skewrank: exact invariants of skew power series rings over finite algebras"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string command;
  for (const char* name : {"validate", "rank", "alpha_prime", "invert", "induced", "verify",
                           "selftest"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--spec", o.spec_file, "ring spec JSON file");
    sub->add_option("--series", o.series_file, "series JSON file");
    sub->add_option("--ideal", o.ideal_text, "ideal generators, 'c,c,..;c,c,..'");
    sub->add_option("--precision", o.precision, "working precision / truncation order")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--oracle", o.oracle, "on or off: brute-force cross-checks")
        ->check(CLI::IsMember({"on", "off"}));
    sub->callback([&command, name] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  if (o.oracle == "off") set_oracle_enabled(false);

  try {
    if (command == "validate") return cmd_validate(o);
    if (command == "rank") return cmd_rank(o);
    if (command == "alpha_prime") return cmd_alpha_prime(o);
    if (command == "invert") return cmd_invert(o);
    if (command == "induced") return cmd_induced(o);
    if (command == "verify") return cmd_verify(o);
    if (command == "selftest") return cmd_selftest(o);
  } catch (const skew_error& e) {
    json err{{"error", e.what()}, {"exit", e.exit_code()}};
    if (o.format == "json")
      std::cout << err.dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
