#include "opforge/cli/app.hpp"

#include <fstream>
#include <iostream>
#include <new>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "opforge/catalog/cache.hpp"
#include "opforge/catalog/checks.hpp"
#include "opforge/error.hpp"
#include "opforge/series/parse.hpp"

namespace opforge::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Bad flags, names, or input text.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string preset;
  std::string input;
  std::string order = "pathlex";
  bool reverse_precedence = false;
  std::optional<int> max_arity;
  std::int64_t step_limit = kDefaultStepLimit;
  int threads = 1;
  std::string format = "text";
  std::string output;
};

void add_common(CLI::App& cmd, RunConfig& cfg, bool with_presentation) {
  if (with_presentation) {
    auto* p = cmd.add_option("--preset", cfg.preset, "Preset name");
    auto* i = cmd.add_option("--input", cfg.input, "Presentation JSON file")->check(CLI::ExistingFile);
    p->excludes(i);
    cmd.add_option("--order", cfg.order, "Monomial order")
        ->check(CLI::IsMember({"pathlex", "weighted-pathlex", "xy-augmented"}));
  }
  cmd.add_flag("--reverse-precedence", cfg.reverse_precedence, "Reverse the generator precedence");
  cmd.add_option("--max-arity", cfg.max_arity, "Truncation arity")->check(CLI::Range(1, 8));
  cmd.add_option("--step-limit", cfg.step_limit, "Rewrite steps allowed per element")->check(CLI::PositiveNumber);
  cmd.add_option("--threads", cfg.threads, "Worker threads for completion")->check(CLI::Range(1, 64));
  cmd.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd.add_option("--output", cfg.output, "Write to this file instead of stdout");
}

Presentation load_presentation(const RunConfig& cfg) {
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw UsageError("cannot read " + cfg.input);
    try {
      return presentation_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(cfg.input + ": " + e.what());
    } catch (const Error& e) {
      throw UsageError(cfg.input + ": " + e.what());
    }
  }
  if (cfg.preset.empty()) throw UsageError("one of --preset or --input is required");
  const auto names = preset_names();
  if (std::find(names.begin(), names.end(), cfg.preset) == names.end())
    throw UsageError("unknown preset '" + cfg.preset + "'; known: " + fmt::format("{}", fmt::join(names, ", ")));
  return preset(cfg.preset);
}

OrderSpec order_for(const RunConfig& cfg, const ShuffleSignature& sig) {
  try {
    return make_order(parse_order_name(cfg.order), sig, cfg.reverse_precedence);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

CompletionOptions completion_options(const RunConfig& cfg, int max_arity) {
  return CompletionOptions{max_arity, cfg.step_limit, cfg.threads, true};
}

Json header(const std::string& command, const Presentation& p, const OrderSpec& order, int max_arity) {
  Json j;
  j["tool"] = "operad-forge";
  j["command"] = command;
  j["presentation"] = p.name;
  j["fingerprint"] = p.fingerprint_hex();
  j["order"] = to_json(order);
  j["max_arity"] = max_arity;
  return j;
}

std::string text_header(const Presentation& p, const OrderSpec& order, int max_arity) {
  return fmt::format("# {} fingerprint {} order {} max-arity {}\n", p.name, p.fingerprint_hex(),
                     order_name(order.kind), max_arity);
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(out) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : out_; }

 private:
  std::ostream& out_;
  std::ofstream file_;
};

int cmd_dims(const RunConfig& cfg, std::ostream& out) {
  const Presentation p = load_presentation(cfg);
  const int n = cfg.max_arity.value_or(5);
  const OrderSpec order = order_for(cfg, p.signature());
  CompletionReport rep;
  bool cached = false;
  const RewriteSystem sys = completed(p, order, completion_options(cfg, n), &rep, &cached);
  const auto d = dims(sys, n);
  Sink sink(cfg.output, out);
  auto& os = sink.stream();
  if (cfg.format == "json") {
    Json j = header("dims", p, order, n);
    Json rows = Json::array();
    for (int k = 1; k <= n; ++k) rows.push_back(Json{{"arity", k}, {"dimension", d[k - 1]}});
    j["dims"] = rows;
    j["rules"] = sys.rules.size();
    j["from_cache"] = cached;
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "arity,dimension\n";
    for (int k = 1; k <= n; ++k) os << k << "," << d[k - 1] << "\n";
  } else {
    os << text_header(p, order, n) << fmt::format("{}\n", fmt::join(d, ","));
  }
  return kExitOk;
}

int cmd_normal_form(const RunConfig& cfg, const std::string& text, bool certificate, const std::string& strategy,
                    std::ostream& out) {
  const Presentation p = load_presentation(cfg);
  const ShuffleSignature sig = p.signature();
  Expression expr;
  try {
    expr = parse_expression(text, p.generators);
  } catch (const ParseError& e) {
    throw UsageError(std::string("element: ") + e.what());
  }
  if (expr.arity < 1) throw UsageError("the element must use at least one argument");
  const int n = cfg.max_arity.value_or(expr.arity);
  if (expr.arity > n) throw UsageError("element arity exceeds --max-arity");
  const OrderSpec order = order_for(cfg, sig);
  const RewriteSystem sys = completed(p, order, completion_options(cfg, n));
  const Element e = to_element(expr, sig);
  Certificate cert;
  const auto strat = strategy == "innermost" ? ReduceStrategy::LeftmostInnermost : ReduceStrategy::LeftmostOutermost;
  const Element nf = reduce(e, sys, strat, certificate ? &cert : nullptr, cfg.step_limit);
  Sink sink(cfg.output, out);
  auto& os = sink.stream();
  if (cfg.format == "json") {
    Json j = header("normal-form", p, order, n);
    j["element"] = to_json(e, sig, order);
    j["normal_form"] = to_json(nf, sig, order);
    if (certificate) {
      Json steps = Json::array();
      for (const auto& s : cert)
        steps.push_back(Json{{"rule", s.rule}, {"coeff", to_string(s.coeff)}, {"host", to_json(s.host, sig)},
                             {"at", s.occurrence.root}});
      j["certificate"] = steps;
    }
    os << j.dump(2) << "\n";
  } else {
    if (cfg.format == "text") os << text_header(p, order, n);
    os << to_text(nf, sig, order) << "\n";
    if (certificate)
      for (const auto& s : cert)
        os << fmt::format("# step rule {} coeff {} host {} at node {}\n", s.rule, to_string(s.coeff),
                          to_text(s.host, sig), s.occurrence.root);
  }
  return kExitOk;
}

int cmd_complete(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Presentation p = load_presentation(cfg);
  const int n = cfg.max_arity.value_or(5);
  const OrderSpec order = order_for(cfg, p.signature());
  CompletionReport rep;
  // Always a fresh run here: the dump is the product.
  const RewriteSystem sys = complete(p, order, completion_options(cfg, n), &rep);
  Sink sink(cfg.output, out);
  sink.stream() << dump(sys);
  err << fmt::format("# {} rules, {} overlaps examined, max arity {}\n", sys.rules.size(), rep.pairs_examined,
                     rep.max_arity_reached);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& name, const std::string& series_order_text,
               std::ostream& out) {
  std::vector<std::string> names;
  if (name == "all") {
    names = check_names();
  } else {
    const auto known = check_names();
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw UsageError("unknown check '" + name + "'; known: " + fmt::format("{}", fmt::join(known, ", ")) + ", all");
    names = {name};
  }
  Json reports = Json::array();
  std::ostringstream text;
  bool all_ok = true;
  for (const auto& n : names) {
    CheckOptions opts;
    opts.max_arity = cfg.max_arity.value_or(n == "conjecture-probe" ? 4 : 5);
    opts.threads = cfg.threads;
    opts.step_limit = cfg.step_limit;
    opts.reverse_precedence = cfg.reverse_precedence;
    if (!series_order_text.empty()) opts.series_order = std::stoi(series_order_text);
    const CheckReport r = run_check(n, opts);
    all_ok &= r.ok();
    reports.push_back(to_json(r));
    text << fmt::format("{} {} ({:.3f}s)\n", to_string(r.status), r.name, r.seconds);
    if (!r.dims.empty()) text << "  dims " << r.dims.dump() << "\n";
    if (!r.ok() || r.status == CheckStatus::Info) text << "  witnesses " << r.witnesses.dump() << "\n";
  }
  Sink sink(cfg.output, out);
  auto& os = sink.stream();
  if (cfg.format == "json") {
    Json j;
    j["tool"] = "operad-forge";
    j["command"] = "verify";
    j["order_convention"] = to_json(OrderSpec::path_lex())["convention"];
    Json prints;
    for (const auto& id : preset_names()) prints[id] = preset(id).fingerprint_hex();
    j["preset_fingerprints"] = prints;
    j["reports"] = reports;
    os << j.dump(2) << "\n";
  } else {
    os << text.str();
  }
  return all_ok ? kExitOk : kExitCheckFailed;
}

void print_series(std::ostream& os, const std::string& format, const std::vector<std::pair<std::string, Egf>>& named) {
  if (format == "json") {
    Json j = Json::object();
    for (const auto& [name, f] : named) {
      Json coeffs = Json::array(), dimsj = Json::array();
      for (const auto& c : f.coeffs()) coeffs.push_back(to_string(c));
      try {
        for (const auto& d : f.dims()) dimsj.push_back(d.get_str());
      } catch (const Error&) {
        dimsj = nullptr;
      }
      j[name] = Json{{"order", f.order()}, {"coefficients", coeffs}, {"dims", dimsj}};
    }
    os << j.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    os << "series,n,coefficient,dimension\n";
    for (const auto& [name, f] : named)
      for (int n = 0; n <= f.order(); ++n) {
        Scalar a = f[n];
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), n);
        a *= fact;
        os << name << "," << n << "," << to_string(f[n]) << "," << to_string(a) << "\n";
      }
    return;
  }
  for (const auto& [name, f] : named) os << name << " = " << to_text(f) << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shuffle-operad rewriting: presets, completion, dimension counts and checks", "operad-forge"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* dims_cmd = app.add_subcommand("dims", "Complete a presentation and print dimensions per arity");
  add_common(*dims_cmd, cfg, true);

  std::string element_text, strategy = "outermost";
  bool certificate = false;
  auto* nf_cmd = app.add_subcommand("normal-form", "Reduce an element to normal form");
  add_common(*nf_cmd, cfg, true);
  nf_cmd->add_option("element", element_text, "Element, e.g. \"(a1 o a2) o a3\"")->required();
  nf_cmd->add_flag("--certificate", certificate, "Print the applied rewrite steps");
  nf_cmd->add_option("--strategy", strategy, "Occurrence choice")->check(CLI::IsMember({"outermost", "innermost"}));

  auto* complete_cmd = app.add_subcommand("complete", "Complete a presentation and dump the rewriting system");
  add_common(*complete_cmd, cfg, true);

  std::string check_name, series_order_text;
  auto* verify_cmd = app.add_subcommand("verify", "Run a named check, or all of them");
  add_common(*verify_cmd, cfg, false);
  verify_cmd->add_option("name", check_name, "Check name or 'all'")->required();
  verify_cmd->add_option("--series-order", series_order_text, "Truncation order for series checks");

  auto* series_cmd = app.add_subcommand("series", "Exact generating-function computations");
  series_cmd->require_subcommand(1);
  int series_order = kDefaultSeriesOrder;
  std::string series_input, series_format = "text", series_output;
  auto add_series_opts = [&](CLI::App* c) {
    c->add_option("--order", series_order, "Truncation order")->check(CLI::Range(1, 200));
    c->add_option("--format", series_format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    c->add_option("--output", series_output, "Write to this file instead of stdout");
  };
  auto* tree_cmd = series_cmd->add_subcommand("tree-egf", "Solution of f = t exp(f)");
  add_series_opts(tree_cmd);
  auto* chain_cmd = series_cmd->add_subcommand("euler-chain", "The Euler-characteristic series and their sum");
  add_series_opts(chain_cmd);
  auto* invert_cmd = series_cmd->add_subcommand("invert", "Compositional inverse of a series");
  add_series_opts(invert_cmd);
  invert_cmd->add_option("--input", series_input, "Series expression in t, e.g. \"t*exp(-t)\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dims_cmd) return cmd_dims(cfg, out);
    if (*nf_cmd) return cmd_normal_form(cfg, element_text, certificate, strategy, out);
    if (*complete_cmd) return cmd_complete(cfg, out, err);
    if (*verify_cmd) return cmd_verify(cfg, check_name, series_order_text, out);
    if (*series_cmd) {
      Sink sink(series_output, out);
      auto& os = sink.stream();
      if (*tree_cmd) {
        print_series(os, series_format, {{"tree", tree_egf(series_order)}});
      } else if (*chain_cmd) {
        if (series_order < 2) throw UsageError("euler-chain needs --order of at least 2");
        const EulerSeries e = euler_series(series_order);
        print_series(os, series_format,
                     {{"com_dual", e.com_dual}, {"lie_dual", e.lie_dual}, {"lie_over_com", e.lie_over_com},
                      {"sum", e.sum}});
        const ChainResult r = chain_check(series_order);
        if (series_format == "text") os << (r.passed() ? "# chain holds\n" : "# chain FAILS\n");
        return r.passed() ? kExitOk : kExitCheckFailed;
      } else if (*invert_cmd) {
        Egf f;
        try {
          f = parse_series(series_input, series_order);
        } catch (const Error& e) {
          throw UsageError(std::string("--input: ") + e.what());
        }
        Egf g;
        try {
          g = comp_inverse(f);
        } catch (const Error& e) {
          throw UsageError(e.what());
        }
        print_series(os, series_format, {{"inverse", g}});
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StepLimitExceeded& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return kExitResourceLimit;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("operad-forge");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace opforge::cli
