#pragma once

// braidroot command line. run() parses and dispatches; main() only forwards
// the process streams, so the whole front end can be driven in-process.
//
// Exit codes: 0 success, 1 usage or parse error, 2 no k-th root, 3 the
// generic procedure does not apply, 4 a computed root failed verification
// (a bug, never expected).

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "garside/garside.hpp"

namespace braidroot {

enum ExitCode : int { kOk = 0, kUsage = 1, kNoRoot = 2, kNonGeneric = 3, kInternal = 4 };

using Json = nlohmann::ordered_json;

struct Options {
  int n = 3;
  long long k = 2;
  std::uint64_t seed = 1;
  int count = 100;
  int r = 8;
  std::string model = "SignedArtinWord";
  std::string format = "text";
  std::vector<std::string> words;
  std::vector<int> r_values{4, 8, 16, 32};
  std::vector<int> n_values{8};
  std::vector<int> l_values{8, 16, 32};
};

inline Json factors_json(const garside::CanonicalBraid& x) {
  Json fs = Json::array();
  for (const auto& f : x.factors()) fs.push_back(garside::canonical_word(f));
  return fs;
}

inline Json braid_json(const garside::CanonicalBraid& x) {
  return {{"n", x.strands().value()},
          {"p", x.delta_exponent()},
          {"factors", factors_json(x)},
          {"text", garside::to_string(x)}};
}

class Dispatcher {
 public:
  Dispatcher(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  garside::CanonicalBraid braid(std::size_t i) const {
    return garside::normalize(garside::parse_word(o_.words.at(i), strands()));
  }
  garside::StrandCount strands() const { return garside::StrandCount(o_.n); }
  bool json() const { return o_.format == "json"; }

  int nf() {
    const auto x = braid(0);
    if (json()) {
      out_ << braid_json(x).dump() << '\n';
    } else {
      out_ << garside::to_string(x) << '\n';
    }
    return kOk;
  }

  int invariants() {
    const auto x = braid(0);
    Json j = {{"inf", x.inf()},
              {"sup", x.sup()},
              {"length", x.canonical_length()},
              {"exponentSum", garside::exponent_sum(x)},
              {"rigid", garside::is_rigid(x)},
              {"initial", garside::to_string(garside::initial_factor(x))},
              {"final", garside::to_string(garside::final_factor(x))}};
    if (json()) {
      out_ << j.dump() << '\n';
    } else {
      out_ << "inf=" << x.inf() << " sup=" << x.sup() << " length=" << x.canonical_length()
           << " exponent_sum=" << garside::exponent_sum(x)
           << " rigid=" << (garside::is_rigid(x) ? "true" : "false") << '\n';
    }
    return kOk;
  }

  int slide() {
    const auto x = braid(0);
    const auto result = garside::slide_to_rigid(x);
    if (const auto* c = std::get_if<garside::ConjugationCertificate>(&result)) {
      if (json()) {
        out_ << Json{{"rigid", true},
                     {"target", garside::to_string(c->target)},
                     {"conjugator", garside::to_string(c->conjugator)},
                     {"iterations", c->iterations}}
                    .dump()
             << '\n';
      } else {
        out_ << "target: " << garside::to_string(c->target) << '\n'
             << "conjugator: " << garside::to_string(c->conjugator) << '\n'
             << "iterations: " << c->iterations << '\n';
      }
    } else {
      const auto& e = std::get<garside::ExceededBound>(result);
      if (json()) {
        out_ << Json{{"rigid", false},
                     {"last", garside::to_string(e.last)},
                     {"conjugator", garside::to_string(e.conjugator)},
                     {"iterations", e.iterations}}
                    .dump()
             << '\n';
      } else {
        out_ << "no rigid conjugate within " << e.iterations << " slidings\n"
             << "last: " << garside::to_string(e.last) << '\n'
             << "conjugator: " << garside::to_string(e.conjugator) << '\n';
      }
    }
    return kOk;
  }

  int rigid() {
    const bool r = garside::is_rigid(braid(0));
    out_ << (json() ? Json{{"rigid", r}}.dump() : std::string(r ? "true" : "false")) << '\n';
    return kOk;
  }

  int uss_minimal() {
    const auto y = braid(0);
    if (!garside::is_rigid(y)) {
      err_ << "error: braid is not rigid (use 'slide' first)\n";
      return kUsage;
    }
    const bool minimal = garside::is_uss_minimal(y);
    std::vector<std::string> elems;
    if (y.canonical_length() > 0) {
      for (const auto& s : garside::minimal_simple_elements(y)) elems.push_back(garside::to_string(s));
    }
    if (json()) {
      out_ << Json{{"minimal", minimal}, {"minimalSimpleElements", elems}}.dump() << '\n';
    } else {
      out_ << (minimal ? "true" : "false") << '\n';
      for (const auto& e : elems) out_ << "  " << e << '\n';
    }
    return kOk;
  }

  int orbit() {
    const auto y = braid(0);
    if (!garside::is_rigid(y)) {
      err_ << "error: braid is not rigid (use 'slide' first)\n";
      return kUsage;
    }
    const auto o = garside::cycling_orbit(y);
    if (json()) {
      Json ps = Json::array();
      for (const auto& p : o.conjugators) ps.push_back(garside::to_string(p));
      out_ << Json{{"t", o.t},
                   {"pc", garside::to_string(o.pc)},
                   {"self", o.self_conjugate},
                   {"conjugators", ps}}
                  .dump()
           << '\n';
    } else {
      out_ << garside::to_string(o) << '\n';
    }
    return kOk;
  }

  int root() {
    garside::check_degree(o_.k);
    const auto x = braid(0);
    const auto outcome = garside::extract_root(x, o_.k);
    Json j = {{"outcome", garside::outcome_name(outcome)}};
    int code = kOk;
    std::string text;
    if (const auto* r = std::get_if<garside::Root>(&outcome)) {
      j["root"] = garside::to_string(r->root);
      text = garside::to_string(r->root);
    } else if (std::holds_alternative<garside::NoRoot>(outcome)) {
      j["message"] = garside::kNoRootMessage;
      text = garside::kNoRootMessage;
      code = kNoRoot;
    } else {
      const auto& ng = std::get<garside::NonGeneric>(outcome);
      j["reason"] = ng.reason;
      j["reduced"] = garside::to_string(ng.reduced);
      j["conjugator"] = garside::to_string(ng.conjugator);
      text = "non-generic: " + ng.reason;
      code = kNonGeneric;
    }
    out_ << (json() ? j.dump() : text) << '\n';
    return code;
  }

  int verify() {
    garside::check_degree(o_.k);
    if (o_.words.size() != 2) {
      err_ << "error: verify takes two braid words, x and a\n";
      return kUsage;
    }
    const bool ok = garside::verify_root(braid(0), o_.k, braid(1));
    out_ << (json() ? Json{{"verified", ok}}.dump() : std::string(ok ? "true" : "false")) << '\n';
    return kOk;
  }

  int sample() {
    const garside::lab::SampleSpec spec{strands(), o_.r, garside::lab::parse_model(o_.model),
                                        o_.seed, o_.count};
    const auto words = garside::lab::sample(spec);
    if (json()) {
      Json arr = Json::array();
      for (const auto& w : words) arr.push_back(w.letters());
      out_ << arr.dump() << '\n';
    } else {
      for (const auto& w : words) out_ << garside::to_string(w) << '\n';
    }
    return kOk;
  }

  int experiment() {
    const auto model = garside::lab::parse_model(o_.model);
    const auto rows =
        garside::lab::run_genericity_experiment(strands(), o_.r_values, model, o_.count, o_.seed);
    if (json()) {
      out_ << Json{{"model", garside::lab::to_string(model)},
                   {"rows", garside::lab::to_json(rows)}}
                  .dump()
           << '\n';
    } else {
      out_ << garside::lab::sampling_note(model) << '\n';
      garside::lab::write_csv(out_, rows);
    }
    return kOk;
  }

  int bench() {
    garside::check_degree(o_.k);
    const auto cells =
        garside::lab::benchmark_root(o_.n_values, o_.l_values, o_.k, o_.count, o_.seed);
    if (json()) {
      out_ << garside::lab::to_json(cells).dump() << '\n';
    } else {
      garside::lab::write_csv(out_, cells);
    }
    return kOk;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Garside normal forms, conjugacy tools and k-th roots in the braid groups"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> formats{"text", "json", "csv"};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-n,--strands", o.n, "number of strands")->check(CLI::Range(2, garside::kMaxStrands));
    sub->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember(formats));
  };
  auto add_word = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("word", o.words, "braid word, e.g. \"1 2 -1\"")->required()->expected(1);
  };

  struct Entry {
    const char* name;
    const char* help;
    int (Dispatcher::*fn)();
  };
  const std::vector<Entry> word_commands{
      {"nf", "left normal form", &Dispatcher::nf},
      {"invariants", "inf, sup, canonical length, exponent sum", &Dispatcher::invariants},
      {"slide", "iterated cyclic sliding to a rigid conjugate", &Dispatcher::slide},
      {"rigid", "rigidity test", &Dispatcher::rigid},
      {"uss-minimal", "minimal ultra summit set test for a rigid braid", &Dispatcher::uss_minimal},
      {"orbit", "cycling orbit of a rigid braid", &Dispatcher::orbit},
  };

  std::vector<std::pair<CLI::App*, int (Dispatcher::*)()>> routes;
  for (const auto& e : word_commands) {
    auto* sub = app.add_subcommand(e.name, e.help);
    add_word(sub);
    routes.emplace_back(sub, e.fn);
  }

  auto* root = app.add_subcommand("root", "k-th root");
  add_word(root);
  root->add_option("-k", o.k, "root degree (> 1)")->required();
  routes.emplace_back(root, &Dispatcher::root);

  auto* verify = app.add_subcommand("verify", "check a^k = x");
  add_common(verify);
  verify->add_option("-k", o.k, "root degree (> 1)")->required();
  verify->add_option("words", o.words, "braid words x and a")->required()->expected(2);
  routes.emplace_back(verify, &Dispatcher::verify);

  auto add_lab = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--count", o.count, "samples")->check(CLI::PositiveNumber);
    sub->add_option("--model", o.model, "SignedArtinWord (signed) or PositiveSimpleProduct (positive)");
  };

  auto* sample = app.add_subcommand("sample", "random braid words");
  add_common(sample);
  add_lab(sample);
  sample->add_option("-r,--length", o.r, "letters or simple factors per word")->check(CLI::PositiveNumber);
  routes.emplace_back(sample, &Dispatcher::sample);

  auto* experiment = app.add_subcommand("experiment", "rigidity and USS minimality fractions");
  add_common(experiment);
  add_lab(experiment);
  experiment->add_option("--r-values", o.r_values, "word lengths")->delimiter(',');
  routes.emplace_back(experiment, &Dispatcher::experiment);

  auto* bench = app.add_subcommand("bench", "root extraction runtimes");
  bench->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember(formats));
  add_lab(bench);
  bench->add_option("-k", o.k, "root degree (> 1)");
  bench->add_option("--n-values", o.n_values, "strand counts")->delimiter(',');
  bench->add_option("--l-values", o.l_values, "canonical lengths")->delimiter(',');
  routes.emplace_back(bench, &Dispatcher::bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Dispatcher d(o, out, err);
  try {
    for (const auto& [sub, fn] : routes) {
      if (sub->parsed()) return (d.*fn)();
    }
  } catch (const garside::RootVerificationError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace braidroot
