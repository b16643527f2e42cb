#include "epiword/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "epiword/deciders.hpp"
#include "epiword/errors.hpp"
#include "epiword/factors.hpp"
#include "epiword/oracle.hpp"
#include "epiword/serialization.hpp"

namespace epiword::cli {

WordSource parse_source(std::string_view text, bool ceiling) {
  if (!text.empty() && text.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed episkew JSON: ") + e.what());
    }
    return episkew_spec_from_json(j);
  }
  if (const auto comma = text.find(','); comma != std::string_view::npos) {
    SkewSpec s{Word::parse(text.substr(0, comma)), Word::parse(text.substr(comma + 1))};
    if (s.cycle.empty()) throw InputError("skew spec \"U,V\" needs a non-empty V");
    return s;
  }
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    MechanicalSpec m{Rational::parse(text.substr(0, colon)), Rational::parse(text.substr(colon + 1)),
                     ceiling ? Rounding::ceiling : Rounding::floor};
    m.validate();
    return m;
  }
  const auto d = DirectiveSpec::parse(text);
  if (d.is_finite() && d.preperiod().empty()) throw InputError("empty directive");
  return d;
}

namespace {

struct Options {
  bool json_output = false;

  // generate
  std::string directive, mechanical, episkew, skew;
  bool ceiling = false;
  std::size_t length = 0;

  // word-taking commands
  std::string word;
  std::string order;
  std::size_t k = 0;

  // test
  std::string kind;
  std::size_t fine_k = 10;

  // complexity
  std::string source;
  std::size_t max_n = 0;
  std::size_t prefix_length = 5000;

  // verify
  std::string check;
  std::size_t alphabet = 2;
  std::size_t max_len = 0;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::istream& in) : opt_(opt), out_(out), in_(in) {}

  int generate() {
    const int sources = !opt_.directive.empty() + !opt_.mechanical.empty() + !opt_.episkew.empty() + !opt_.skew.empty();
    if (sources != 1) throw InputError("generate needs exactly one of --directive, --mechanical, --episkew, --skew");
    WordSource source;
    if (!opt_.directive.empty()) {
      source = DirectiveSpec::parse(opt_.directive);
    } else if (!opt_.mechanical.empty()) {
      if (opt_.mechanical.find(':') == std::string::npos) throw InputError("--mechanical expects A:R");
      source = parse_source(opt_.mechanical, opt_.ceiling);
    } else if (!opt_.episkew.empty()) {
      if (opt_.episkew.front() != '{') throw InputError("--episkew expects a JSON object");
      source = parse_source(opt_.episkew);
    } else {
      if (opt_.skew.find(',') == std::string::npos) throw InputError("--skew expects U,V");
      source = parse_source(opt_.skew);
    }
    const Word w = generate_prefix(source, opt_.length);
    if (opt_.json_output) {
      out_ << json{{"source", describe(source)}, {"length", w.size()}, {"word", w.str()}}.dump() << '\n';
    } else {
      out_ << w << '\n';
    }
    return kOk;
  }

  int minmax(const Word& w) {
    const Order ord = opt_.order.empty() ? Order::alphabetical(std::max<std::size_t>(1, alphabet_size_of(w)))
                                        : Order::parse(opt_.order);
    ord.require_covers(w);
    Word lo, hi;
    if (opt_.k > 0) {
      lo = min_factor(w, opt_.k, ord);
      hi = max_factor(w, opt_.k, ord);
    } else {
      if (w.empty()) throw InputError("min(w) is undefined for the empty word");
      lo = min_of(w, ord);
      hi = max_of(w, ord);
    }
    if (opt_.json_output) {
      json j{{"word", w.str()}, {"order", ord.to_string()}};
      if (opt_.k > 0) j["k"] = opt_.k;
      j["min"] = lo.str();
      j["max"] = hi.str();
      out_ << j.dump() << '\n';
    } else {
      out_ << "min=" << lo << '\n' << "max=" << hi << '\n';
    }
    return kOk;
  }

  int episturmian(const Word& w) {
    const Verdict v = is_finite_episturmian(w);
    if (opt_.json_output) {
      json j{{"word", w.str()}};
      j.update(to_json(v));
      out_ << j.dump() << '\n';
    } else {
      out_ << "word=" << w << '\n' << "episturmian=" << (v.accepted ? "yes" : "no") << '\n';
      if (v.certificate) {
        const auto& c = *v.certificate;
        std::string reduction;
        for (Letter a : c.reduction_letters) reduction.push_back(a.to_char());
        out_ << "reduction=" << reduction << '\n'
             << "base=" << c.base_word << '\n'
             << "directive=" << c.embedding_directive.to_string() << '\n'
             << "occurrence=" << c.occurrence_index << '\n'
             << "witness=" << c.witness_u << '\n';
      }
      if (v.reason) out_ << "reason=" << to_string(*v.reason) << '\n';
      if (v.bad_factor) out_ << "bad_factor=" << *v.bad_factor << '\n';
    }
    return v.accepted ? kOk : kRejected;
  }

  int wide(const Word& w) {
    const auto r = wide_sense_check(w);
    if (opt_.json_output) {
      json j{{"word", w.str()}, {"wide", r.ok}};
      if (r.bad_factor) j["bad_factor"] = r.bad_factor->str();
      out_ << j.dump() << '\n';
    } else {
      out_ << "wide=" << (r.ok ? "yes" : "no") << '\n';
      if (r.bad_factor) out_ << "bad_factor=" << *r.bad_factor << '\n';
    }
    return r.ok ? kOk : kRejected;
  }

  int fine(const std::string& spec) {
    const auto source = parse_source(spec);
    const bool ok = check_fine_prefix(source, opt_.fine_k);
    if (opt_.json_output) {
      out_ << json{{"source", describe(source)}, {"k", opt_.fine_k}, {"fine", ok}}.dump() << '\n';
    } else {
      out_ << "fine=" << (ok ? "yes" : "no") << '\n';
    }
    return ok ? kOk : kRejected;
  }

  int eq1(const std::string& spec) {
    const auto d = DirectiveSpec::parse(spec);
    const auto r = eq1_report(d, opt_.fine_k);
    const bool ok = r.inequality_holds && (!r.strict || r.equality_holds);
    if (opt_.json_output) {
      out_ << json{{"directive", d.to_string()},         {"k", opt_.fine_k},
                   {"holds", ok},                        {"inequality", r.inequality_holds},
                   {"strict", r.strict},                 {"equality", r.equality_holds}}
                  .dump()
           << '\n';
    } else {
      out_ << "eq1=" << (ok ? "yes" : "no") << '\n'
           << "inequality=" << (r.inequality_holds ? "yes" : "no") << '\n'
           << "strict=" << (r.strict ? "yes" : "no") << '\n'
           << "equality=" << (r.equality_holds ? "yes" : "no") << '\n';
    }
    return ok ? kOk : kRejected;
  }

  int witness(const Word& w) {
    const auto u = find_witness(w);
    if (opt_.json_output) {
      out_ << json{{"word", w.str()}, {"witness", u ? json(u->str()) : json(nullptr)}}.dump() << '\n';
    } else {
      out_ << "witness=" << (u ? u->str() : std::string("none")) << '\n';
    }
    return u ? kOk : kRejected;
  }

  int balanced(const Word& w) {
    const bool ok = is_balanced(w);
    std::optional<SturmianTest> trace;
    if (alphabet_of(w).size() == 2) trace = cor2_sturmian_test(w);
    if (opt_.json_output) {
      json j{{"word", w.str()}, {"balanced", ok}};
      if (trace) {
        j["min"] = trace->min_word.str();
        j["max"] = trace->max_word.str();
        j["common_prefix"] = trace->common_prefix.str();
        if (!trace->sturmian) j["u"] = trace->common_prefix.str();
      }
      out_ << j.dump() << '\n';
    } else {
      out_ << "balanced=" << (ok ? "yes" : "no") << '\n';
      if (trace) {
        out_ << "min=" << trace->min_word << '\n' << "max=" << trace->max_word << '\n';
        if (trace->sturmian) {
          out_ << "common_prefix=" << trace->common_prefix << '\n';
          if (trace->next_in_min) out_ << "next_in_min=" << trace->next_in_min->to_char() << '\n';
          if (trace->next_in_max) out_ << "next_in_max=" << trace->next_in_max->to_char() << '\n';
        } else {
          out_ << "u=" << trace->common_prefix << '\n';
        }
      }
    }
    return ok ? kOk : kRejected;
  }

  int complexity() {
    const auto source = parse_source(opt_.source);
    const Word prefix = generate_prefix(source, opt_.prefix_length);
    const auto counts = factor_complexity(prefix, opt_.max_n);
    if (opt_.json_output) {
      out_ << json{{"source", describe(source)}, {"length", prefix.size()}, {"counts", counts}}.dump() << '\n';
    } else {
      for (std::size_t n = 1; n <= counts.size(); ++n) out_ << n << ' ' << counts[n - 1] << '\n';
    }
    return kOk;
  }

  int verify() {
    const auto report = sweep(opt_.check, opt_.alphabet, opt_.max_len);
    if (opt_.json_output) {
      out_ << to_json(report).dump() << '\n';
    } else {
      out_ << "check=" << report.check << " alphabet=" << report.alphabet_size << " lengths=1.."
           << report.max_length << " words=" << report.total_words << " mismatches=" << report.mismatches.size()
           << " divergent=" << report.divergent_words << " time=" << std::fixed << std::setprecision(3)
           << report.wall_time.count() << "s\n";
      for (const auto& m : report.mismatches) {
        out_ << "mismatch word=" << m.word << " decider=" << m.decider << " oracle=" << m.oracle << '\n';
      }
      out_ << (report.passed() ? "PASS" : "FAIL") << '\n';
    }
    return report.passed() ? kOk : kRejected;
  }

  // Applies `f` to the word argument, or to every non-empty stdin line.
  template <typename F>
  int for_each_word(F&& f) {
    if (!opt_.word.empty()) return f(Word::parse(opt_.word));
    int worst = kOk;
    bool any = false;
    std::string line;
    while (std::getline(in_, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      any = true;
      worst = std::max(worst, f(Word::parse(line)));
    }
    if (!any) throw InputError("no word given");
    return worst;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::istream& in_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Options opt;
  CLI::App app{"Generate and classify Sturmian, episturmian and episkew words", "epiword"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", opt.json_output, "Machine-readable JSON output");

  auto* gen = app.add_subcommand("generate", "Print a prefix of a generated word");
  gen->add_option("--directive", opt.directive, "Directive word PRE*PERIOD");
  gen->add_option("--mechanical", opt.mechanical, "Mechanical word A:R with rationals p/q");
  gen->add_flag("--ceiling", opt.ceiling, "Use the ceiling variant of the mechanical word");
  gen->add_option("--episkew", opt.episkew, "Episkew spec as JSON");
  gen->add_option("--skew", opt.skew, "Eventually periodic word U,V = U V^omega");
  gen->add_option("--length", opt.length, "Prefix length")->required();

  auto* mm = app.add_subcommand("minmax", "Extremal factors min(w) and max(w)");
  mm->add_option("word", opt.word, "Word (read from stdin when omitted)");
  mm->add_option("--order", opt.order, "Alphabet in increasing order, e.g. bac");
  mm->add_option("--k", opt.k, "Report min(w|k) and max(w|k) instead")->check(CLI::PositiveNumber);

  auto* test = app.add_subcommand("test", "Classify a word or an infinite word given by a spec");
  test->add_option("kind", opt.kind, "episturmian | wide | fine | eq1")
      ->required()
      ->check(CLI::IsMember({"episturmian", "wide", "fine", "eq1"}));
  test->add_option("target", opt.word, "Word, or spec for fine/eq1");
  test->add_option("--k", opt.fine_k, "Factor length for fine/eq1")->check(CLI::PositiveNumber);

  auto* wit = app.add_subcommand("witness", "Find u with a u_{|m|-1} <= min(w) for every acceptable pair");
  wit->add_option("word", opt.word, "Word (read from stdin when omitted)");

  auto* bal = app.add_subcommand("balanced", "Balance test with the aua/bub trace");
  bal->add_option("word", opt.word, "Word (read from stdin when omitted)");

  auto* cx = app.add_subcommand("complexity", "Factor complexity of a generated prefix");
  cx->add_option("spec", opt.source, "Word source")->required();
  cx->add_option("--max-n", opt.max_n, "Largest factor length")->required();
  cx->add_option("--length", opt.prefix_length, "Prefix length to scan");

  auto* ver = app.add_subcommand("verify", "Exhaustive decider-versus-oracle sweep");
  ver->add_option("check", opt.check, "episturmian | cor2 | witness")->required();
  ver->add_option("--alphabet", opt.alphabet, "Alphabet size")->check(CLI::IsMember({2, 3}));
  ver->add_option("--max-len", opt.max_len, "Largest word length")->required();

  std::vector<const char*> argv{"epiword"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  Runner runner(opt, out, in);
  try {
    if (gen->parsed()) return runner.generate();
    if (mm->parsed()) return runner.for_each_word([&](const Word& w) { return runner.minmax(w); });
    if (wit->parsed()) return runner.for_each_word([&](const Word& w) { return runner.witness(w); });
    if (bal->parsed()) return runner.for_each_word([&](const Word& w) { return runner.balanced(w); });
    if (cx->parsed()) return runner.complexity();
    if (ver->parsed()) return runner.verify();
    if (opt.kind == "episturmian") return runner.for_each_word([&](const Word& w) { return runner.episturmian(w); });
    if (opt.kind == "wide") return runner.for_each_word([&](const Word& w) { return runner.wide(w); });
    if (opt.word.empty()) throw InputError("test " + opt.kind + " needs a spec argument");
    if (opt.kind == "fine") return runner.fine(opt.word);
    return runner.eq1(opt.word);
  } catch (const Inconclusive& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace epiword::cli
