#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "hessenpave/adjoint.hpp"
#include "hessenpave/chevalley.hpp"
#include "hessenpave/error.hpp"
#include "hessenpave/fforacle.hpp"
#include "hessenpave/hessenberg.hpp"
#include "hessenpave/lemmata.hpp"
#include "hessenpave/paving.hpp"
#include "hessenpave/witness.hpp"

namespace hessenpave::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string type;
  int rank = 0;
  std::string hess;
  std::string hess_fn;
  std::string format = "json";
  unsigned long long seed = kDefaultSeed;
  int trials = 100;
  int q = 2;
  int n = 0;
  std::string word;
  std::string output;
  bool witness = false;
  bool random_n = false;
};

// Rows of strings rendered either as CSV or as an aligned text table.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string csv() const {
    std::ostringstream out;
    auto field = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char c : s) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
      return quoted + "\"";
    };
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << field(cells[k]);
      out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out.str();
  }

  std::string text() const {
    std::vector<std::size_t> width(header.size());
    for (std::size_t k = 0; k < header.size(); ++k) width[k] = header[k].size();
    for (const auto& r : rows)
      for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t k = 0; k < cells.size(); ++k) {
        s += cells[k];
        if (k + 1 < cells.size()) s += std::string(width[k] - cells[k].size() + 2, ' ');
      }
      s.erase(s.find_last_not_of(' ') + 1);
      out << s << "\n";
    };
    line(header);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& r : rows) line(r);
    return out.str();
  }
};

std::vector<int> parse_ints(const std::string& text, char sep, const std::string& what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    const std::string piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty())
      throw ValidationError("malformed " + what + ": '" + text + "'");
    out.push_back(value);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::string join(const std::vector<int>& values, const std::string& sep, int offset = 0) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) out += (k ? sep : "") + std::to_string(values[k] + offset);
  return out;
}

RootSystemPtr root_system_of(const RunConfig& cfg) {
  if (cfg.type.empty()) throw ValidationError("--type is required");
  return build_root_system(parse_lie_type(cfg.type), cfg.rank);
}

HessenbergSpace function_space(const RootSystemPtr& rs, const std::string& text) {
  if (rs && rs->type() != LieType::A) throw ValidationError("Hessenberg functions describe type A only");
  const auto h = parse_ints(text, ',', "Hessenberg function");
  if (rs && static_cast<int>(h.size()) != rs->rank() + 1)
    throw ValidationError("Hessenberg function needs " + std::to_string(rs->rank() + 1) + " values");
  return from_function(static_cast<int>(h.size()), h);
}

HessenbergSpace hessenberg_of(const RunConfig& cfg, const RootSystemPtr& rs) {
  if (cfg.hess.empty() == cfg.hess_fn.empty()) throw ValidationError("give exactly one of --hess and --hess-fn");
  if (!cfg.hess_fn.empty()) return function_space(rs, cfg.hess_fn);
  const std::string& spec = cfg.hess;
  if (spec == "full") return full_space(rs);
  if (spec == "borel") return borel_space(rs);
  if (spec == "peterson") return peterson_space(rs);
  if (spec.rfind("h=", 0) == 0) return function_space(rs, spec.substr(2));
  if (spec.rfind("neg=", 0) == 0) {
    std::vector<Root> negatives;
    std::string body = spec.substr(4);
    std::size_t start = 0;
    while (start < body.size()) {
      const std::size_t end = body.find(';', start);
      const std::string piece = body.substr(start, end == std::string::npos ? std::string::npos : end - start);
      negatives.push_back(rs->make_root(parse_ints(piece, ',', "root")));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    return from_negative_roots(rs, negatives);
  }
  throw ValidationError("unknown Hessenberg space '" + spec + "' (use full, borel, peterson, h=..., neg=...)");
}

Json root_json(const RootSystem& rs, RootIndex a) { return join(rs.root(a).coeffs(), ","); }

std::string root_text(const RootSystem& rs, RootIndex a) { return join(rs.root(a).coeffs(), ","); }

Json hessenberg_json(const HessenbergSpace& space) {
  const auto& rs = space.root_system();
  Json out;
  out["neg"] = Json::array();
  for (RootIndex a : space.negative_part()) out["neg"].push_back(root_json(rs, a));
  if (rs.type() == LieType::A) out["h"] = to_function(space);
  return out;
}

std::string negatives_text(const HessenbergSpace& space) {
  std::string out;
  for (RootIndex a : space.negative_part()) out += (out.empty() ? "" : ";") + root_text(space.root_system(), a);
  return out;
}

// Words are 1-based and space-separated; the identity is the empty string.
std::string word_text(const std::vector<int>& word) { return join(word, " ", 1); }

std::vector<int> parse_word(const std::string& text, int rank) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) throw ValidationError("malformed word: '" + text + "'");
    if (value < 1 || value > rank) throw ValidationError("word letters must lie in 1.." + std::to_string(rank));
    out.push_back(value - 1);
  }
  return out;
}

Json elements_json(const RootSystem& rs, const NilpotentElement& x) {
  Json out = Json::array();
  for (RootIndex a = 0; a < static_cast<int>(x.coeffs.size()); ++a)
    if (sgn(x[a]) != 0) out.push_back({{"root", root_json(rs, a)}, {"value", x[a].get_str()}});
  return out;
}

std::string render(const RunConfig& cfg, const Json& json, const Table& table) {
  if (cfg.format == "json") return json.dump(2) + "\n";
  if (cfg.format == "csv") return table.csv();
  return table.text();
}

std::uint64_t stream_seed(unsigned long long seed, std::uint32_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), index};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

ChevalleyRealization realization_for(const RootSystemPtr& rs) {
  auto real = build_chevalley(rs);
  return rs->type() == LieType::D ? normalize_type_D(real) : real;
}

// Each command returns its exit code and fills `text`.
int cmd_paving(const RunConfig& cfg, std::string& text) {
  const auto rs = root_system_of(cfg);
  const auto space = hessenberg_of(cfg, rs);
  const auto cells = compute_paving(rs, space);
  const auto betti = betti_from_cells(cells);

  Json json;
  json["type"] = std::string(1, lie_type_letter(rs->type()));
  json["rank"] = rs->rank();
  json["hessenberg"] = hessenberg_json(space);
  json["cells"] = Json::array();
  Table table{{"word", "length", "nonempty", "dim", "row_profile"}, {}};
  for (const auto& c : cells) {
    Json cell;
    cell["word"] = word_text(c.w.word());
    cell["length"] = c.w.length();
    cell["nonempty"] = c.nonempty;
    cell["dim"] = c.dim ? Json(*c.dim) : Json(nullptr);
    cell["row_profile"] = c.row_profile;
    json["cells"].push_back(cell);
    table.rows.push_back({word_text(c.w.word()), std::to_string(c.w.length()),
                          c.nonempty ? "true" : "false", c.dim ? std::to_string(*c.dim) : "",
                          join(c.row_profile, ";")});
  }
  json["betti"] = betti.coefficients;
  text = render(cfg, json, table);
  return kExitOk;
}

int cmd_betti(const RunConfig& cfg, std::string& text) {
  const auto rs = root_system_of(cfg);
  const auto space = hessenberg_of(cfg, rs);
  const auto betti = poincare_polynomial(rs, space);
  Json json;
  json["type"] = std::string(1, lie_type_letter(rs->type()));
  json["rank"] = rs->rank();
  json["hessenberg"] = hessenberg_json(space);
  json["betti"] = betti.coefficients;
  Table table{{"degree", "count"}, {}};
  for (std::size_t k = 0; k < betti.coefficients.size(); ++k)
    table.rows.push_back({std::to_string(k), std::to_string(betti.coefficients[k])});
  text = render(cfg, json, table);
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::string& text) {
  const auto rs = root_system_of(cfg);
  const auto spaces = enumerate_hessenberg(rs);
  Json json;
  json["type"] = std::string(1, lie_type_letter(rs->type()));
  json["rank"] = rs->rank();
  json["count"] = spaces.size();
  json["spaces"] = Json::array();
  Table table{{"index", "size", "negative_roots"}, {}};
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    Json entry = hessenberg_json(spaces[k]);
    entry["index"] = k;
    json["spaces"].push_back(entry);
    table.rows.push_back({std::to_string(k), std::to_string(spaces[k].negative_count()), negatives_text(spaces[k])});
  }
  text = render(cfg, json, table);
  return kExitOk;
}

int cmd_witness(const RunConfig& cfg, std::string& text) {
  const auto rs = root_system_of(cfg);
  const auto space = hessenberg_of(cfg, rs);
  const auto word = parse_word(cfg.word, rs->rank());
  const WeylElement w = from_word(rs, word);
  const auto real = realization_for(rs);
  NilpotentElement n = default_nilpotent(*rs);
  if (cfg.random_n) {
    std::mt19937_64 gen(stream_seed(cfg.seed, 0));
    n = random_nilpotent(*rs, gen, true);
  }
  const auto result = find_witness(real, w, space, n);

  Json json;
  json["type"] = std::string(1, lie_type_letter(rs->type()));
  json["rank"] = rs->rank();
  json["word"] = word_text(w.word());
  json["hessenberg"] = hessenberg_json(space);
  json["nilpotent"] = elements_json(*rs, n);
  json["verified"] = result.verified;
  json["stage_kernel_dims"] = result.stage_kernel_dims;
  json["row_profile"] = row_dimension_profile(w, space);
  json["stages"] = Json::array();
  Table table{{"stage", "kernel_dim", "solution"}, {}};
  for (std::size_t s = 0; s < result.stage_solutions.size(); ++s) {
    json["stages"].push_back({{"stage", s + 1}, {"solution", elements_json(*rs, result.stage_solutions[s])}});
    std::string sol;
    for (RootIndex a = 0; a < rs->num_positive(); ++a)
      if (sgn(result.stage_solutions[s][a]) != 0)
        sol += (sol.empty() ? "" : " ") + std::string("[") + root_text(*rs, a) + "]=" +
               result.stage_solutions[s][a].get_str();
    table.rows.push_back({std::to_string(s + 1), std::to_string(result.stage_kernel_dims[s]), sol});
  }
  json["conjugated"] = elements_json(*rs, result.conjugated);
  text = render(cfg, json, table);
  return kExitOk;
}

int cmd_lemmata(const RunConfig& cfg, std::string& text) {
  const auto rs = root_system_of(cfg);
  const auto report = verify_lemmata(build_chevalley(rs), cfg.trials, cfg.seed);
  Json json;
  json["type"] = std::string(1, lie_type_letter(rs->type()));
  json["rank"] = rs->rank();
  json["checks"] = Json::array();
  Table table{{"name", "status", "detail"}, {}};
  for (const auto& c : report.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["status"] = c.passed ? "pass" : "fail";
    if (c.counterexample) {
      Json ce = Json::object();
      for (const auto& [k, v] : *c.counterexample) ce[k] = v;
      entry["counterexample"] = ce;
    } else {
      entry["counterexample"] = nullptr;
    }
    entry["detail"] = c.detail;
    json["checks"].push_back(entry);
    table.rows.push_back({c.name, c.passed ? "pass" : "fail", c.detail});
  }
  json["seed"] = report.seed;
  json["trials"] = report.trials;
  text = render(cfg, json, table);
  return report.all_passed() ? kExitOk : kExitInconsistent;
}

int cmd_count_points(const RunConfig& cfg, std::string& text) {
  if (cfg.n == 0) throw ValidationError("--n is required");
  std::string fn = cfg.hess_fn;
  if (fn.empty() && cfg.hess.rfind("h=", 0) == 0) fn = cfg.hess.substr(2);
  if (fn.empty()) throw ValidationError("count-points needs --hess-fn");
  const auto h = parse_ints(fn, ',', "Hessenberg function");
  if (static_cast<int>(h.size()) != cfg.n) throw ValidationError("Hessenberg function needs --n values");
  const auto result = tally_points(cfg.n, cfg.q, h);

  Json json;
  json["n"] = result.n;
  json["q"] = result.q;
  json["h"] = result.h;
  json["cells"] = Json::array();
  Table table{{"perm", "count", "predicted"}, {}};
  for (const auto& c : result.cells) {
    const std::string perm = join(c.perm, "", 1);
    json["cells"].push_back({{"perm", perm}, {"count", c.count}, {"predicted", c.predicted}});
    table.rows.push_back({perm, std::to_string(c.count), std::to_string(c.predicted)});
  }
  json["total"] = result.total;
  json["betti_eval"] = result.betti_eval;
  text = render(cfg, json, table);
  return result.consistent() ? kExitOk : kExitInconsistent;
}

int cmd_sweep(const RunConfig& cfg, std::string& text) {
  const auto rs = root_system_of(cfg);
  const auto spaces = enumerate_hessenberg(rs);
  const auto elements = enumerate_weyl(rs);
  const auto row_data = rows(*rs);
  std::optional<ChevalleyRealization> real;
  if (cfg.witness) real.emplace(realization_for(rs));

  Json json;
  json["type"] = std::string(1, lie_type_letter(rs->type()));
  json["rank"] = rs->rank();
  json["seed"] = cfg.seed;
  json["witness"] = cfg.witness;
  json["records"] = Json::array();
  Table table{{"index", "negative_roots", "betti", "nonempty_cells"}, {}};
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    const auto cells = compute_paving(elements, spaces[k], row_data);
    const auto betti = betti_from_cells(cells);
    Json record;
    record["index"] = k;
    record["hessenberg"] = hessenberg_json(spaces[k]);
    record["betti"] = betti.coefficients;
    record["cells"] = Json::array();
    std::mt19937_64 gen(stream_seed(cfg.seed, static_cast<std::uint32_t>(k)));
    for (const auto& c : cells) {
      if (!c.nonempty) continue;
      Json cell;
      cell["word"] = word_text(c.w.word());
      cell["dim"] = *c.dim;
      cell["row_profile"] = c.row_profile;
      if (real) {
        const auto n = random_nilpotent(*rs, gen, true);
        const auto result = find_witness(*real, c.w, spaces[k], n);
        cell["witness_verified"] = result.verified;
        cell["stage_kernel_dims"] = result.stage_kernel_dims;
      }
      record["cells"].push_back(cell);
    }
    json["records"].push_back(record);
    table.rows.push_back({std::to_string(k), negatives_text(spaces[k]),
                          join(std::vector<int>(betti.coefficients.begin(), betti.coefficients.end()), ";"),
                          std::to_string(betti.total_cells())});
  }
  text = render(cfg, json, table);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pavings of regular nilpotent Hessenberg varieties", "hessenpave"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Lie type: A, B, C or D")->required();
    sub->add_option("--rank", cfg.rank, "Rank")->required();
  };
  auto add_hess = [&](CLI::App* sub) {
    sub->add_option("--hess", cfg.hess, "full | borel | peterson | h=2,3,3 | neg=-1,0;0,-1");
    sub->add_option("--hess-fn", cfg.hess_fn, "Type A Hessenberg function, e.g. 2,3,3");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--output", cfg.output, "Write to this file instead of standard output");
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Random seed (HESSENPAVE_SEED overrides)");
  };

  auto* paving = app.add_subcommand("paving", "Cells, dimensions and row profiles");
  add_type(paving);
  add_hess(paving);
  add_format(paving);

  auto* betti = app.add_subcommand("betti", "Betti numbers");
  add_type(betti);
  add_hess(betti);
  add_format(betti);

  auto* enumerate = app.add_subcommand("enumerate-hess", "All Hessenberg spaces");
  add_type(enumerate);
  add_format(enumerate);

  auto* witness = app.add_subcommand("witness", "Constructive point of a nonempty cell");
  add_type(witness);
  add_hess(witness);
  add_format(witness);
  add_seed(witness);
  witness->add_option("--word", cfg.word, "Word in the simple reflections, 1-based, e.g. \"1 2 1\"")->required();
  witness->add_flag("--random-n", cfg.random_n, "Use a seeded random regular N instead of the sum of simple root vectors");

  auto* lemmata = app.add_subcommand("verify-lemmata", "Structural checks on the matrix realization");
  add_type(lemmata);
  add_format(lemmata);
  add_seed(lemmata);
  lemmata->add_option("--trials", cfg.trials, "Random trials per check")->check(CLI::NonNegativeNumber);

  auto* count = app.add_subcommand("count-points", "Finite-field point counts against the paving (type A)");
  count->add_option("--n", cfg.n, "Matrix size")->required();
  count->add_option("--q", cfg.q, "Field size: 2, 3 or 5");
  add_hess(count);
  add_format(count);

  auto* sweep = app.add_subcommand("sweep", "Paving data for every Hessenberg space");
  add_type(sweep);
  add_format(sweep);
  add_seed(sweep);
  sweep->add_flag("--witness", cfg.witness, "Also solve and verify a witness for every nonempty cell");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (const char* env = std::getenv("HESSENPAVE_SEED"); env != nullptr && *env != '\0') {
      const std::string value(env);
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), cfg.seed);
      if (ec != std::errc() || ptr != value.data() + value.size())
        throw ValidationError("HESSENPAVE_SEED is not an unsigned integer");
    }

    std::string text;
    int code = kExitOk;
    if (*paving) code = cmd_paving(cfg, text);
    else if (*betti) code = cmd_betti(cfg, text);
    else if (*enumerate) code = cmd_enumerate(cfg, text);
    else if (*witness) code = cmd_witness(cfg, text);
    else if (*lemmata) code = cmd_lemmata(cfg, text);
    else if (*count) code = cmd_count_points(cfg, text);
    else if (*sweep) code = cmd_sweep(cfg, text);

    if (cfg.output.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw ValidationError("cannot open output file " + cfg.output);
      file << text;
    }
    return code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInconsistent;
  }
}

}  // namespace hessenpave::cli
