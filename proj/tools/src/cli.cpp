#include "slgen/cli/cli.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "slgen/constructions/frobenius.hpp"
#include "slgen/constructions/genpair.hpp"
#include "slgen/constructions/sidon.hpp"
#include "slgen/error.hpp"
#include "slgen/lie/search.hpp"
#include "slgen/mat/text.hpp"
#include "slgen/poly/phi.hpp"
#include "slgen/poly/text.hpp"

namespace slgen::cli {

namespace {

struct Options {
  std::string output = "json";
  std::string field;
  unsigned n = 0;
  std::string n_list;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> trials;
  unsigned threads = 1;
  std::string strategy = "auto";
  std::string modulus;
  std::string top_modulus;
  std::string target = "sl";
  bool search = false;
  std::uint64_t brute_cap = 6561;
  std::string id_case;
  bool skip_closures = false;
  std::string builder = "greedy";
  std::string input;
};

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || s.front() == '-') throw ParseError("bad " + what + " '" + s + "'");
  return v;
}

GaloisFieldPtr resolve_field(const Options& o) {
  auto field = parse_field_spec(o.field);
  if (o.modulus.empty()) return field;
  std::vector<std::int64_t> coeffs;
  for (const auto& piece : split_top_level(o.modulus, ',')) {
    try {
      std::size_t used = 0;
      coeffs.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("bad modulus coefficient '" + piece + "'");
    }
  }
  return GaloisField::create(static_cast<std::uint32_t>(field->characteristic()), coeffs);
}

Json cmd_genpair(const Options& o, Json& config) {
  config["n"] = o.n;
  config["seed"] = o.seed;
  config["strategy"] = o.strategy;
  config["modulus"] = o.modulus.empty() ? Json(nullptr) : Json(o.modulus);
  config["top_modulus"] = o.top_modulus.empty() ? Json(nullptr) : Json(o.top_modulus);
  config["search"] = o.search;
  if (o.search) {
    config["trials"] = *o.trials;
    config["threads"] = o.threads;
    config["target"] = o.target;
  }
  const auto field = resolve_field(o);
  if (o.search) {
    const auto outcome = random_pair_search(o.n, field, *o.trials, o.seed, o.threads, parse_target(o.target));
    if (!outcome.certificate)
      throw RetryBudgetExhausted("no generating pair within " + std::to_string(*o.trials) + " trials");
    return to_json(*outcome.certificate);
  }
  std::optional<FqPoly> top;
  if (!o.top_modulus.empty()) top = parse_polynomial(field, o.top_modulus);
  const auto cert = construct_genpair(parse_strategy(o.strategy), o.n, field, o.seed, top);
  if (!cert.verdict) throw InternalError("construction did not certify");
  return to_json(cert);
}

Json cmd_search_f2(const Options& o, Json& config) {
  config["n"] = o.n_list;
  config["trials"] = *o.trials;
  config["seed"] = o.seed;
  config["threads"] = o.threads;
  config["target"] = o.target;
  const auto field = parse_field_spec(o.field);
  if (field->characteristic() != 2) throw PreconditionError("search-f2 needs a field of characteristic 2");
  const auto target = parse_target(o.target);
  Json runs = Json::array();
  for (unsigned n : parse_n_list(o.n_list)) {
    const auto outcome = random_pair_search(n, field, *o.trials, o.seed, o.threads, target);
    runs.push_back(Json{{"n", n},
                        {"found", outcome.certificate.has_value()},
                        {"trials_used", outcome.trials_used},
                        {"certificate", outcome.certificate ? to_json(*outcome.certificate) : Json(nullptr)}});
  }
  return Json{{"field_spec", field->spec()}, {"runs", runs}};
}

Json cmd_count_st(const Options& o, Json& config) {
  config["n"] = o.n_list;
  config["brute_cap"] = o.brute_cap;
  const auto field = parse_field_spec(o.field);
  Json rows = Json::array();
  for (unsigned n : parse_n_list(o.n_list)) {
    if (n < 2) throw PreconditionError("count-st needs n >= 2");
    const auto formula = count_st_elements(field, n);
    const auto tower = TowerField::create(field, n);
    const auto brute = count_st_brute(*tower, o.brute_cap);
    Json factors = Json::array();
    for (const auto& f : phi_factorization(field, n).factors)
      factors.push_back(Json{{"pi", format_polynomial(f.pi)}, {"degree", f.pi.degree()}, {"mult", f.mult}});
    rows.push_back(Json{{"n", n},
                        {"formula", formula},
                        {"brute", brute ? Json(*brute) : Json(nullptr)},
                        {"match", brute ? Json(*brute == formula) : Json(nullptr)},
                        {"phi_factors", factors}});
  }
  return Json{{"field_spec", field->spec()}, {"rows", rows}};
}

Json cmd_identity(const Options& o, Json& config) {
  const auto c = parse_identity_case(o.id_case);
  config["case"] = to_string(c);
  config["trials"] = *o.trials;
  config["seed"] = o.seed;
  config["threads"] = o.threads;
  config["closures"] = !o.skip_closures;
  const auto field = parse_field_spec(o.field);
  return to_json(identity_sweep(c, field, *o.trials, o.seed, !o.skip_closures, o.threads));
}

Json cmd_sidon(const Options& o, Json& config) {
  config["n"] = o.n;
  config["builder"] = o.builder;
  SidonSet s;
  if (o.builder == "greedy")
    s = sidon_greedy(o.n);
  else if (o.builder == "erdos-turan")
    s = sidon_erdos_turan(o.n);
  else
    throw ParseError("unknown builder '" + o.builder + "' (expected greedy or erdos-turan)");
  Json result{{"builder", o.builder},
              {"set", s.elems},
              {"distinct_sum", is_distinct_sum_set(s)},
              {"sidon", is_sidon(s)},
              {"diagonal", sidon_diagonal(s)}};
  if (o.field.empty()) {
    result["reduction"] = nullptr;
    return result;
  }
  const auto d = consistent_from_sidon(s, parse_field_spec(o.field));
  Json values = Json::array();
  for (auto v : d.values) values.push_back(d.field->format(v));
  result["reduction"] = Json{{"field_spec", d.field->spec()},
                             {"values", values},
                             {"sum_zero", d.sum_zero},
                             {"all_nonzero", d.all_nonzero},
                             {"consistent", d.consistent}};
  return result;
}

std::vector<std::string> read_matrix_lines(std::istream& is) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    lines.push_back(line.substr(b, line.find_last_not_of(" \t\r") - b + 1));
  }
  return lines;
}

Json cmd_verify(const Options& o, Json& config, std::istream& in) {
  config["target"] = o.target;
  config["input"] = o.input.empty() ? Json("-") : Json(o.input);
  const auto field = parse_field_spec(o.field);
  std::vector<std::string> lines;
  if (o.input.empty() || o.input == "-") {
    lines = read_matrix_lines(in);
  } else {
    std::ifstream file(o.input);
    if (!file) throw ParseError("cannot open '" + o.input + "'");
    lines = read_matrix_lines(file);
  }
  if (lines.empty()) throw ParseError("no matrices in input");
  std::vector<Matrix<GaloisField>> gens;
  for (const auto& l : lines) gens.push_back(parse_matrix(field, l));
  return to_json(is_generating(gens, parse_target(o.target)));
}

struct Classified {
  std::string kind;
  int code;
};

Classified classify(const std::exception& e) {
  if (dynamic_cast<const ExceptionalCase*>(&e)) return {"ExceptionalCase", kPrecondition};
  if (dynamic_cast<const EvenCharacteristic*>(&e)) return {"EvenCharacteristic", kPrecondition};
  if (dynamic_cast<const NotIrreducible*>(&e)) return {"NotIrreducible", kPrecondition};
  if (dynamic_cast<const RootsNotConsistent*>(&e)) return {"RootsNotConsistent", kPrecondition};
  if (dynamic_cast<const ConsistencyLost*>(&e)) return {"ConsistencyLost", kPrecondition};
  if (dynamic_cast<const PreconditionError*>(&e)) return {"PreconditionError", kPrecondition};
  if (dynamic_cast<const RepresentationError*>(&e)) return {"RepresentationError", kPrecondition};
  if (dynamic_cast<const ParseError*>(&e)) return {"ParseError", kUsage};
  if (dynamic_cast<const MismatchError*>(&e)) return {"MismatchError", kUsage};
  if (dynamic_cast<const RetryBudgetExhausted*>(&e)) return {"RetryBudgetExhausted", kInternal};
  if (dynamic_cast<const InternalError*>(&e)) return {"InternalError", kInternal};
  return {"Error", kInternal};
}

void emit(std::ostream& out, const std::string& format, const Json& doc) {
  if (format == "text")
    out << render_text(doc);
  else
    out << doc.dump(2) << '\n';
}

}  // namespace

std::vector<unsigned> parse_n_list(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& piece : split_top_level(text, ',')) {
    const auto dash = piece.find('-');
    if (dash == std::string::npos) {
      out.push_back(static_cast<unsigned>(parse_u64(piece, "n")));
      continue;
    }
    const auto lo = parse_u64(piece.substr(0, dash), "n range");
    const auto hi = parse_u64(piece.substr(dash + 1), "n range");
    if (lo > hi || hi - lo > 100000) throw ParseError("bad n range '" + piece + "'");
    for (auto k = lo; k <= hi; ++k) out.push_back(static_cast<unsigned>(k));
  }
  if (out.empty()) throw ParseError("empty n list");
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Options o;
  CLI::App app{"Generating pairs for sl_n over finite fields", "slgen"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* c) {
    c->add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto* genpair = app.add_subcommand("genpair", "construct and certify a generating pair of sl_n(F_q)");
  genpair->add_option("--field", o.field, "field spec: p, p^m or q, optionally p^m:c0,...,cm")->required();
  genpair->add_option("--n", o.n, "matrix size")->required();
  genpair->add_option("--seed", o.seed, "RNG seed");
  genpair->add_option("--strategy", o.strategy, "consistent, sidon, normal, sharply-traceless or auto");
  genpair->add_option("--modulus", o.modulus, "defining polynomial of F_q over F_p, c0,...,cm");
  genpair->add_option("--top-modulus", o.top_modulus, "defining polynomial of F_q^n over F_q, c0,...,cn");
  genpair->add_flag("--search", o.search, "random search instead of a construction (needed for p = 2)");
  genpair->add_option("--trials", o.trials, "search budget (default 10000)");
  genpair->add_option("--threads", o.threads, "search threads");
  genpair->add_option("--target", o.target, "sl or psl (search only)");
  common(genpair);

  auto* search = app.add_subcommand("search-f2", "random generating-pair search in characteristic 2");
  search->add_option("--n", o.n_list, "sizes, e.g. 2,3,5-12")->required();
  search->add_option("--field", o.field, "field of characteristic 2 (default 2)");
  search->add_option("--trials", o.trials, "budget per n (default 10000)");
  search->add_option("--seed", o.seed, "RNG seed");
  search->add_option("--threads", o.threads, "worker threads");
  search->add_option("--target", o.target, "sl or psl");
  common(search);

  auto* count = app.add_subcommand("count-st", "count sharply traceless elements of F_q^n");
  count->add_option("--field", o.field, "base field F_q")->required();
  count->add_option("--n", o.n_list, "degrees, e.g. 2-5")->required();
  count->add_option("--brute-cap", o.brute_cap, "brute force only when q^n <= cap");
  common(count);

  auto* identity = app.add_subcommand("identity", "sweep the psl3/psl4 pair identities");
  identity->add_option("--case", o.id_case, "psl3 or psl4")->required();
  identity->add_option("--field", o.field, "field (default 3 for psl3, 2 for psl4)");
  identity->add_option("--trials", o.trials, "random pairs (default 2000)");
  identity->add_option("--seed", o.seed, "RNG seed");
  identity->add_option("--threads", o.threads, "worker threads");
  identity->add_flag("--skip-closures", o.skip_closures, "check the identity only");
  common(identity);

  auto* sidon = app.add_subcommand("sidon", "distinct-sum set and its diagonal");
  sidon->add_option("--n", o.n, "the set has n + 1 elements")->required();
  sidon->add_option("--builder", o.builder, "greedy or erdos-turan");
  sidon->add_option("--field", o.field, "reduce the diagonal into this field and check consistency");
  common(sidon);

  auto* verify = app.add_subcommand("verify", "closure check of matrices, one per line");
  verify->add_option("--field", o.field, "field spec")->required();
  verify->add_option("--input", o.input, "file with matrices (default stdin)");
  verify->add_option("--target", o.target, "sl or psl");
  common(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  if (cmd == identity && o.field.empty()) o.field = o.id_case.rfind("psl4", 0) == 0 ? "2" : "3";
  if (cmd == search && o.field.empty()) o.field = "2";
  if (!o.trials) o.trials = cmd == identity ? 2000 : 10000;
  Json config{{"command", cmd->get_name()}, {"output", o.output}, {"field_spec", o.field}};
  try {
    Json result;
    if (cmd == genpair)
      result = cmd_genpair(o, config);
    else if (cmd == search)
      result = cmd_search_f2(o, config);
    else if (cmd == count)
      result = cmd_count_st(o, config);
    else if (cmd == identity)
      result = cmd_identity(o, config);
    else if (cmd == sidon)
      result = cmd_sidon(o, config);
    else
      result = cmd_verify(o, config, in);
    emit(out, o.output, Json{{"config", config}, {"result", result}});
    return kOk;
  } catch (const std::exception& e) {
    const auto c = classify(e);
    err << "error (" << c.kind << "): " << e.what() << '\n';
    emit(out, o.output,
         Json{{"config", config}, {"error", Json{{"kind", c.kind}, {"message", e.what()}, {"exit_code", c.code}}}});
    return c.code;
  }
}

}  // namespace slgen::cli
