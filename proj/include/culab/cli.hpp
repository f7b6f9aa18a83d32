#ifndef CULAB_CLI_HPP
#define CULAB_CLI_HPP

// Command-line front end. cli_main() takes the argument vector without the
// program name and writes to the given streams, so it can be driven from
// tests.
//
// Exit status: 0 success / property holds / no FAIL, 1 property fails or a
// harness FAIL, 2 invalid input, 3 internal error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "culab/axioms.hpp"
#include "culab/corpus.hpp"
#include "culab/divisibility.hpp"
#include "culab/document.hpp"
#include "culab/glimm.hpp"
#include "culab/ideals.hpp"
#include "culab/isomorphism.hpp"
#include "culab/rules.hpp"
#include "culab/verify.hpp"
#include "culab/witnesses.hpp"

namespace culab {

namespace cli {

enum Exit : int { ok = 0, negative = 1, invalid = 2, internal = 3 };

// Parsed --property values.
struct Property {
  std::string text;
  std::function<CheckResult(const FiniteOrderedMonoid&)> run;
};

inline std::size_t parse_size_arg(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw PreconditionFailed(what + ": expected a nonnegative integer, got \"" + s + "\"");
  return static_cast<std::size_t>(std::stoul(s));
}

inline Property parse_property(const std::string& p, AxiomForm form) {
  auto colon = p.find(':');
  const std::string head = p.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : p.substr(colon + 1);
  auto no_arg = [&] {
    if (colon != std::string::npos) throw PreconditionFailed("property " + head + " takes no argument");
  };
  if (auto a = parse_axiom(head)) {
    no_arg();
    return {p, [a = *a, form](const FiniteOrderedMonoid& S) { return check_axiom(S, a, form); }};
  }
  if (head == "dim") {
    auto n = parse_size_arg(arg, "dim:n");
    return {p, [n](const FiniteOrderedMonoid& S) { return check_dim_leq(S, n); }};
  }
  if (head == "div" || head == "wdiv") {
    auto k = parse_size_arg(arg, head + ":k");
    if (k == 0) throw PreconditionFailed(head + ":k needs k >= 1");
    if (head == "div") return {p, [k](const FiniteOrderedMonoid& S) { return is_divisible(S, k); }};
    return {p, [k](const FiniteOrderedMonoid& S) { return is_weakly_divisible(S, k); }};
  }
  if (head == "IF") {
    auto f = IFFormulation::definition;
    if (colon != std::string::npos) {
      auto g = parse_if_formulation(arg);
      if (!g) throw PreconditionFailed("unknown ideal-filteredness formulation \"" + arg + "\"");
      f = *g;
    }
    return {p, [f](const FiniteOrderedMonoid& S) { return is_ideal_filtered(S, f); }};
  }
  if (head == "V") return no_arg(), Property{p, has_property_V};
  if (head == "full-filtered") return no_arg(), Property{p, full_elements_filtered};
  if (head == "stably-finite") {
    if (colon != std::string::npos && arg != "residual")
      throw PreconditionFailed("stably-finite takes only the modifier \"residual\"");
    const bool residual = colon != std::string::npos;
    return {p, [residual](const FiniteOrderedMonoid& S) { return is_stably_finite(S, residual); }};
  }
  if (head == "almost-unperforated") return no_arg(), Property{p, is_almost_unperforated};
  if (head == "refinement") return no_arg(), Property{p, is_refinement_monoid};
  throw PreconditionFailed("unknown property \"" + p + "\"");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionFailed("cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionFailed("cannot write \"" + path + "\"");
  out << bytes;
}

inline FiniteOrderedMonoid load(const std::string& path) { return parse_and_validate(read_file(path)); }

// Labels separated by top-level commas; "(u,0),(0,u)" is two labels.
inline std::vector<Element> parse_labels(const FiniteOrderedMonoid& S, const std::string& list) {
  std::vector<Element> out;
  if (list.empty()) return out;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    out.push_back(S.at(cur));
    cur.clear();
  };
  for (char ch : list) {
    if (ch == '(' || ch == '[' || ch == '{' || ch == '<') ++depth;
    if (ch == ')' || ch == ']' || ch == '}' || ch == '>') --depth;
    if (ch == ',' && depth == 0)
      flush();
    else
      cur += ch;
  }
  flush();
  return out;
}

inline std::string join_labels(const FiniteOrderedMonoid& S, const std::vector<Element>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + S.label(xs[i]);
  return s + "]";
}

inline void emit_or_write(const std::string& bytes, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << bytes;
  else
    write_file(out_path, bytes);
}

// Loads every *.json document of a directory in file-name order.
inline std::vector<FiniteOrderedMonoid> load_corpus_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw PreconditionFailed("corpus directory \"" + dir + "\" does not exist");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<FiniteOrderedMonoid> models;
  for (const auto& f : files) {
    try {
      models.push_back(load(f.string()));
    } catch (const Error& e) {
      throw ParseError(f.string() + ": " + e.what());
    }
  }
  return models;
}

// An existing directory is loaded; otherwise "sizeN" (no such directory)
// enumerates the algebraic corpus up to size N in memory.
inline std::vector<FiniteOrderedMonoid> resolve_corpus(const std::string& arg) {
  if (!std::filesystem::exists(arg) && arg.size() > 4 && arg.compare(0, 4, "size") == 0)
    return enumerate_corpus(parse_size_arg(arg.substr(4), "corpus size"));
  return load_corpus_dir(arg);
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace cli

inline int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli;
  CLI::App app{"cu-lab: finite positively ordered monoids and their Cuntz-semigroup properties", "cu-lab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string file, property, form = "collapsed", ideal_labels, out_path, order = "algebraic", corpus_dir,
                          rules, report, summary_path, lemma, name;
  std::size_t max_size = 0;
  unsigned jobs = 1;
  bool normalize = false, with_builtins = false;
  std::vector<std::string> params;
  std::string a_x, a_z, a_w, a_xs, a_a, a_b1, a_b2, a_c;
  std::size_t a_k = 2, a_m = 2;

  auto* validate_cmd = app.add_subcommand("validate", "validate a model document");
  validate_cmd->add_option("FILE", file, "model document")->required();
  validate_cmd->add_flag("--normalize", normalize, "print the normalized document");

  auto* check_cmd = app.add_subcommand("check", "decide a property of a model");
  check_cmd->add_option("FILE", file, "model document")->required();
  check_cmd->add_option("--property", property,
                        "O5|O6|O7|O8|riesz|dim:n|div:k|wdiv:k|IF[:formulation]|V|full-filtered|"
                        "stably-finite[:residual]|almost-unperforated|refinement")
      ->required();
  check_cmd->add_option("--form", form, "axiom form: collapsed or primed")
      ->check(CLI::IsMember({"collapsed", "primed"}));

  auto* ideals_cmd = app.add_subcommand("ideals", "list the ideals of a model");
  ideals_cmd->add_option("FILE", file, "model document")->required();
  ideals_cmd->add_option("--out", out_path, "directory receiving one document per ideal");

  auto* quotient_cmd = app.add_subcommand("quotient", "quotient of a model by an ideal");
  quotient_cmd->add_option("FILE", file, "model document")->required();
  quotient_cmd->add_option("--ideal", ideal_labels, "comma-separated member labels")->required();
  quotient_cmd->add_option("--out", out_path, "output document (default: stdout)");

  auto* latf_cmd = app.add_subcommand("latf", "the lattice of singly generated ideals");
  latf_cmd->add_option("FILE", file, "model document")->required();
  latf_cmd->add_option("--out", out_path, "output document (default: stdout)");

  auto* witness_cmd = app.add_subcommand("witness", "run a witness search");
  witness_cmd->add_option("LEMMA", lemma, "div-o5|ref-o7|wkdiv-decomposition|wkdiv-pair|refinement-ef")
      ->required()
      ->check(CLI::IsMember({"div-o5", "ref-o7", "wkdiv-decomposition", "wkdiv-pair", "refinement-ef"}));
  witness_cmd->add_option("FILE", file, "model document")->required();
  witness_cmd->add_option("--x", a_x);
  witness_cmd->add_option("--z", a_z);
  witness_cmd->add_option("--w", a_w);
  witness_cmd->add_option("--xs", a_xs, "comma-separated labels");
  witness_cmd->add_option("--k", a_k);
  witness_cmd->add_option("--m", a_m);
  witness_cmd->add_option("--a", a_a);
  witness_cmd->add_option("--b1", a_b1);
  witness_cmd->add_option("--b2", a_b2);
  witness_cmd->add_option("--c", a_c);

  auto* corpus_cmd = app.add_subcommand("corpus", "enumerate models up to isomorphism");
  corpus_cmd->add_option("--max-size", max_size, "largest model size")->required();
  corpus_cmd->add_option("--order", order, "algebraic or all")->check(CLI::IsMember({"algebraic", "all"}));
  corpus_cmd->add_option("--out", out_path, "output directory")->required();

  auto* harness_cmd = app.add_subcommand("harness", "evaluate the rule table over a corpus");
  harness_cmd->add_option("--corpus", corpus_dir, "directory of model documents, or sizeN")->required();
  harness_cmd->add_option("--rules", rules, "comma-separated rule ids (default: all)");
  harness_cmd->add_option("--report", report, "JSON Lines report path")->required();
  harness_cmd->add_option("--jobs", jobs, "worker threads");
  harness_cmd->add_option("--summary", summary_path, "exploration summary path (JSON)");
  harness_cmd->add_flag("--builtins", with_builtins, "also evaluate the builtin models");

  auto* builtin_cmd = app.add_subcommand("builtin", "emit a builtin model");
  builtin_cmd->add_option("NAME", name, "T1|O2|E2|N2|F4|GAP4|NCAP|SPH|product")->required();
  builtin_cmd->add_option("PARAMS", params, "family parameters");
  builtin_cmd->add_option("--out", out_path, "output document (default: stdout)");

  app.add_subcommand("rules", "list the rule table");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return invalid;
  }

  try {
    if (*validate_cmd) {
      auto doc = parse_model(read_file(file));
      auto S = validate(doc);
      if (normalize)
        out << emit_model(doc);
      else
        out << "valid: " << S.name() << " (" << S.size() << (S.size() == 1 ? " element, " : " elements, ") << to_string(S.order_mode())
            << " order" << (S.preorder_ok() ? ", pre-order" : "") << ")\n";
      return ok;
    }

    if (*check_cmd) {
      auto S = load(file);
      auto prop = parse_property(property, form == "primed" ? AxiomForm::primed : AxiomForm::collapsed);
      CheckResult r = prop.run(S);
      out << S.name() << ": " << property << (r.holds ? " holds" : " fails") << "\n";
      if (r.certificate)
        out << (r.holds ? "witness: " : "counterexample: ") << format_bindings(S, *r.certificate) << "\n";
      nlohmann::json j = {{"model", canonical_hash(S)},
                          {"name", S.name()},
                          {"property", property},
                          {"holds", r.holds},
                          {"certificate", r.certificate ? to_json(S, *r.certificate) : nlohmann::json(nullptr)}};
      out << j.dump() << "\n";
      return r.holds ? ok : negative;
    }

    if (*ideals_cmd) {
      auto S = load(file);
      auto ideals = enumerate_ideals(S);
      auto maxdiv = maximal_divisible_ideals(S);
      nlohmann::json list = nlohmann::json::array();
      for (std::size_t i = 0; i < ideals.size(); ++i) {
        out << ideal_label(ideals[i]) << "\n";
        nlohmann::json m = nlohmann::json::array();
        for (auto e : ideals[i].members()) m.push_back(S.label(e));
        list.push_back(m);
        if (!out_path.empty()) {
          std::filesystem::create_directories(out_path);
          write_file((std::filesystem::path(out_path) / ("ideal_" + std::to_string(i) + ".json")).string(),
                     emit_model(restrict_to_ideal(ideals[i])));
        }
      }
      nlohmann::json md = nlohmann::json::array();
      for (const auto& I : maxdiv.ideals) {
        nlohmann::json m = nlohmann::json::array();
        for (auto e : I.members()) m.push_back(S.label(e));
        md.push_back(m);
      }
      out << nlohmann::json{{"ideals", list}, {"maximal_divisible", md}, {"maximal_divisible_unique", maxdiv.unique}}
                 .dump()
          << "\n";
      return ok;
    }

    if (*quotient_cmd) {
      auto S = load(file);
      auto I = make_ideal(S, parse_labels(S, ideal_labels));
      emit_or_write(emit_model(quotient(S, I).model), out_path, out);
      return ok;
    }

    if (*latf_cmd) {
      auto S = load(file);
      emit_or_write(emit_model(latf(S).model), out_path, out);
      return ok;
    }

    if (*witness_cmd) {
      auto S = load(file);
      auto need = [&](const std::string& v, const char* opt) {
        if (v.empty()) throw PreconditionFailed(lemma + " needs --" + opt);
        return S.at(v);
      };
      nlohmann::json j = {{"lemma", lemma}, {"name", S.name()}};
      bool found = false, verified = false;
      std::string text;
      if (lemma == "div-o5") {
        Element x = need(a_x, "x"), z = need(a_z, "z");
        if (auto y = witness_div_o5(S, x, z, a_k)) {
          found = true;
          verified = verify::div_o5(S, x, z, a_k, *y);
          text = "y=" + S.label(*y);
          j["witness"] = {{"y", S.label(*y)}};
        }
      } else if (lemma == "ref-o7") {
        Element w = need(a_w, "w");
        auto xs = parse_labels(S, a_xs);
        if (auto x = witness_ref_o7(S, xs, w)) {
          found = true;
          verified = verify::ref_o7(S, xs, w, *x);
          text = "x=" + S.label(*x);
          j["witness"] = {{"x", S.label(*x)}};
        }
      } else if (lemma == "wkdiv-decomposition") {
        Element x = need(a_x, "x");
        if (auto w = witness_wkdiv_decomposition(S, x)) {
          found = true;
          verified = verify::wkdiv_decomposition(S, x, *w);
          text = "c=" + S.label(w->c) + " d=" + join_labels(S, w->d);
          nlohmann::json d = nlohmann::json::array();
          for (auto e : w->d) d.push_back(S.label(e));
          j["witness"] = {{"c", S.label(w->c)}, {"d", d}};
        }
      } else if (lemma == "wkdiv-pair") {
        Element x = need(a_x, "x");
        if (auto w = witness_wkdiv_pair(S, x, a_m)) {
          found = true;
          verified = verify::wkdiv_pair(S, x, a_m, *w);
          text = "c=" + S.label(w->c) + " d1=" + S.label(w->d1) + " d2=" + S.label(w->d2);
          j["witness"] = {{"c", S.label(w->c)}, {"d1", S.label(w->d1)}, {"d2", S.label(w->d2)}};
        }
      } else {
        Element a = need(a_a, "a"), b1 = need(a_b1, "b1"), b2 = need(a_b2, "b2"), c = need(a_c, "c");
        if (auto w = witness_refinement_ef(S, a, b1, b2, c)) {
          found = true;
          verified = verify::refinement_ef(S, b1, b2, c, *w);
          text = "e=" + S.label(w->e) + " f=" + S.label(w->f);
          j["witness"] = {{"e", S.label(w->e)}, {"f", S.label(w->f)}};
        }
      }
      if (found && !verified) throw InternalError(lemma + ": witness rejected by the verifier");
      out << S.name() << ": " << lemma << (found ? " witness " + text : " not found") << "\n";
      j["found"] = found;
      if (!found) j["witness"] = nullptr;
      out << j.dump() << "\n";
      return found ? ok : negative;
    }

    if (*corpus_cmd) {
      auto models = enumerate_corpus(max_size, order == "all" ? CorpusOrder::all_compatible : CorpusOrder::algebraic);
      std::filesystem::create_directories(out_path);
      for (const auto& S : models)
        write_file((std::filesystem::path(out_path) / (S.name() + ".json")).string(), emit_model(S));
      out << models.size() << " models written to " << out_path << "\n";
      return ok;
    }

    if (*harness_cmd) {
      auto models = resolve_corpus(corpus_dir);
      if (with_builtins)
        for (auto& S : builtin_suite()) models.push_back(std::move(S));
      auto result = run_rules(models, split_commas(rules), jobs);
      write_file(report, to_jsonl(result.reports));
      std::map<std::string, std::array<std::size_t, 3>> tally;
      for (const auto& r : result.reports) ++tally[r.rule][static_cast<std::size_t>(r.status)];
      for (const auto& [id, t] : tally)
        out << id << ": pass=" << t[0] << " vacuous=" << t[1] << " FAIL=" << t[2] << "\n";
      nlohmann::json summary = {{"models", models.size()},
                                {"reports", result.reports.size()},
                                {"failures", result.failures()},
                                {"exploration", result.counters.to_json()}};
      out << summary.dump() << "\n";
      if (!summary_path.empty()) write_file(summary_path, summary.dump(2) + "\n");
      return result.failures() ? negative : ok;
    }

    if (*builtin_cmd) {
      auto S = builtin_model(name, params);
      emit_or_write(emit_model(S), out_path, out);
      return ok;
    }

    for (const auto& r : rule_table()) out << r.id << "  " << r.statement << "\n";
    return ok;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return internal;
  } catch (const ValidationError& e) {
    err << "invalid model (" << e.law() << "): " << e.what() << "\n";
    return invalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return invalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal;
  }
}

}  // namespace culab

#endif  // CULAB_CLI_HPP
