#include "epiword/serialization.hpp"

#include "epiword/errors.hpp"

namespace epiword {

namespace {

std::string letters_text(const std::vector<Letter>& letters) {
  std::string s;
  for (Letter a : letters) s.push_back(a.to_char());
  return s;
}

std::vector<Letter> letters_from(const std::string& text) {
  std::vector<Letter> out;
  for (char c : text) out.push_back(Letter::from_char(c));
  return out;
}

// nlohmann reports schema problems as its own exceptions; surface them as
// input errors.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

json to_json(const Verdict& v) {
  json j;
  j["accepted"] = v.accepted;
  j["reason"] = v.reason ? json(std::string(to_string(*v.reason))) : json(nullptr);
  if (v.certificate) {
    const auto& c = *v.certificate;
    j["certificate"] = {
        {"reduction_letters", letters_text(c.reduction_letters)},
        {"base_word", c.base_word.str()},
        {"embedding_directive", c.embedding_directive.to_string()},
        {"occurrence_index", c.occurrence_index},
        {"witness_u", c.witness_u.str()},
    };
  } else {
    j["certificate"] = nullptr;
  }
  if (v.bad_factor) j["bad_factor"] = v.bad_factor->str();
  return j;
}

Verdict verdict_from_json(const json& j) {
  return guarded("verdict", [&] {
    Verdict v;
    v.accepted = j.at("accepted").get<bool>();
    if (!j.at("reason").is_null()) {
      const auto text = j.at("reason").get<std::string>();
      v.reason = reject_reason_from_string(text);
      if (!v.reason) throw InputError("unknown rejection reason \"" + text + "\"");
    }
    if (!j.at("certificate").is_null()) {
      const auto& c = j.at("certificate");
      Certificate cert;
      cert.reduction_letters = letters_from(c.at("reduction_letters").get<std::string>());
      cert.base_word = Word::parse(c.at("base_word").get<std::string>());
      cert.embedding_directive = DirectiveSpec::parse(c.at("embedding_directive").get<std::string>());
      cert.occurrence_index = c.at("occurrence_index").get<std::size_t>();
      cert.witness_u = Word::parse(c.at("witness_u").get<std::string>());
      v.certificate = std::move(cert);
    }
    if (j.contains("bad_factor")) v.bad_factor = Word::parse(j.at("bad_factor").get<std::string>());
    return v;
  });
}

json to_json(const SweepReport& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"word", m.word.str()}, {"decider", m.decider}, {"oracle", m.oracle}});
  }
  return {
      {"check", r.check},
      {"alphabet_size", r.alphabet_size},
      {"min_length", r.min_length},
      {"max_length", r.max_length},
      {"total_words", r.total_words},
      {"divergent_words", r.divergent_words},
      {"passed", r.passed()},
      {"mismatches", std::move(mismatches)},
  };
}

SweepReport sweep_report_from_json(const json& j) {
  return guarded("sweep report", [&] {
    SweepReport r;
    r.check = j.at("check").get<std::string>();
    r.alphabet_size = j.at("alphabet_size").get<std::size_t>();
    r.min_length = j.at("min_length").get<std::size_t>();
    r.max_length = j.at("max_length").get<std::size_t>();
    r.total_words = j.at("total_words").get<std::size_t>();
    r.divergent_words = j.at("divergent_words").get<std::size_t>();
    for (const auto& m : j.at("mismatches")) {
      r.mismatches.push_back({Word::parse(m.at("word").get<std::string>()), m.at("decider").get<std::string>(),
                              m.at("oracle").get<std::string>()});
    }
    return r;
  });
}

json to_json(const EpiskewSpec& e) {
  return {
      {"mu", e.mu.to_string()},
      {"excluded_letter", std::string(1, e.excluded_letter.to_char())},
      {"inner_directive", e.inner_directive.to_string()},
      {"p", e.p},
      {"suffix_index", e.suffix_index},
  };
}

EpiskewSpec episkew_spec_from_json(const json& j) {
  return guarded("episkew spec", [&] {
    EpiskewSpec e;
    e.mu = MorphismComposition::parse(j.value("mu", std::string()));
    const auto x = j.at("excluded_letter").get<std::string>();
    if (x.size() != 1) throw InputError("excluded_letter must be a single letter");
    e.excluded_letter = Letter::from_char(x[0]);
    e.inner_directive = DirectiveSpec::parse(j.at("inner_directive").get<std::string>());
    e.p = j.value("p", std::size_t{0});
    e.suffix_index = j.at("suffix_index").get<std::size_t>();
    e.validate();
    return e;
  });
}

json to_json(const MechanicalSpec& m) {
  return {
      {"alpha", m.alpha.to_string()},
      {"rho", m.rho.to_string()},
      {"variant", m.variant == Rounding::floor ? "floor" : "ceiling"},
  };
}

MechanicalSpec mechanical_spec_from_json(const json& j) {
  return guarded("mechanical spec", [&] {
    MechanicalSpec m;
    m.alpha = Rational::parse(j.at("alpha").get<std::string>());
    m.rho = Rational::parse(j.at("rho").get<std::string>());
    const auto variant = j.value("variant", std::string("floor"));
    if (variant == "floor") {
      m.variant = Rounding::floor;
    } else if (variant == "ceiling") {
      m.variant = Rounding::ceiling;
    } else {
      throw InputError("variant must be \"floor\" or \"ceiling\"");
    }
    m.validate();
    return m;
  });
}

}  // namespace epiword
