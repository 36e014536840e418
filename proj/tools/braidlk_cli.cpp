// braidlk: braid-word invariants, families, slide schedules, distance
// search, and verification sweeps.
//
// Exit codes: 0 success, 1 usage error, 2 invalid domain input,
// 3 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braidlk/braidlk.hpp"
#include "braidlk/serialize.hpp"

namespace {

using namespace braidlk;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_domain = 2;
constexpr int exit_verify = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + out_path);
  out << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::string load_word_text(const std::string& inline_text, const std::string& file_path,
                           bool inline_set) {
  if (inline_set && !file_path.empty())
    throw UsageError("give the word inline or as a file, not both");
  if (!inline_set && file_path.empty())
    throw UsageError("a word is required (inline or from a file)");
  if (inline_set) return inline_text;
  std::ifstream in(file_path, std::ios::binary);
  if (!in) throw UsageError("cannot open word file: " + file_path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

BraidWord parse_or_domain_error(const std::string& text, std::optional<int> n) {
  try {
    return parse_word(text, n);
  } catch (const std::invalid_argument& e) {
    throw DomainError(std::string("bad word: ") + e.what());
  }
}

// ---------------------------------------------------------------- invariant

struct InvariantArgs {
  std::string word, word_file, format = "human", out;
  bool word_set = false;
  int n = 3;
};

int cmd_invariant(const InvariantArgs& args) {
  const std::string text = load_word_text(args.word, args.word_file, args.word_set);
  const BraidWord w = parse_or_domain_error(text, args.n);
  if (w.strand_count() != 3)
    throw DomainError("the invariant is defined on 3-strand words");
  if (!hat(w).knot)
    throw DomainError("the closure of this word is not a knot");
  const FreeAbelianValue value = i_lk(w);
  const std::int64_t g = big_g(w);

  if (args.format == "json") {
    Json j = Json::object();
    j["word"] = format_word(w);
    j["n"] = w.strand_count();
    j["i_lk"] = fav_to_json(value);
    j["G"] = g;
    emit(json_text(j), args.out);
  } else {
    std::string text_out = "word: " + format_word(w) + "\n";
    text_out += "i_lk: " + fav_to_human(value) + "\n";
    text_out += "G: " + std::to_string(g) + "\n";
    emit(text_out, args.out);
  }
  return exit_ok;
}

// ------------------------------------------------------------------ family

struct FamilyArgs {
  std::string kind, format = "human", out;
  int k = 1;
};

int cmd_family(const FamilyArgs& args) {
  Family kind;
  if (args.kind == "V" || args.kind == "v")
    kind = Family::v;
  else if (args.kind == "W" || args.kind == "w")
    kind = Family::w;
  else if (args.kind == "a")
    kind = Family::a;
  else if (args.kind == "b")
    kind = Family::b;
  else
    throw UsageError("family kind must be one of V, W, a, b");
  if (args.k < 1) throw UsageError("family parameter k must be >= 1");
  const BraidWord w = make_family(kind, args.k);

  if (args.format == "json") {
    Json j = Json::object();
    j["kind"] = args.kind;
    j["k"] = args.k;
    j["n"] = w.strand_count();
    j["len"] = w.size();
    j["word"] = format_word(w);
    emit(json_text(j), args.out);
  } else {
    emit(format_word(w) + "\n", args.out);
  }
  return exit_ok;
}

// ------------------------------------------------------------------- slide

struct SlideArgs {
  std::string format = "human", out;
  int k = 0;
};

int cmd_slide(const SlideArgs& args) {
  if (args.k < 1) throw UsageError("slide requires --k >= 1");
  MoveTrace trace = slide_schedule(args.k);
  const std::int64_t g_start = big_g(trace.start);
  std::map<std::int64_t, int> histogram;
  std::int64_t g_prev = g_start;
  for (MoveTrace::Step& step : trace.steps) {
    const std::int64_t g_here = big_g(step.word);
    step.g = g_here;
    ++histogram[g_here - g_prev];
    g_prev = g_here;
  }
  const int expected = 4 * args.k * args.k;
  const bool final_matches = trace.final_word() == make_family(Family::b, args.k);
  const bool counts_match = trace.type1_count == expected &&
                            static_cast<int>(trace.steps.size()) == expected;

  if (args.format == "jsonl") {
    std::string lines;
    for (std::size_t i = 0; i < trace.steps.size(); ++i)
      lines += trace_step_json(static_cast<int>(i) + 1, trace.steps[i]).dump() + "\n";
    emit(lines, args.out);
  } else if (args.format == "json") {
    Json histo = Json::object();
    for (const auto& [delta, count] : histogram) histo[std::to_string(delta)] = count;
    Json j = Json::object();
    j["k"] = args.k;
    j["moves"] = trace.type1_count;
    j["expected_moves"] = expected;
    j["final_matches"] = final_matches;
    j["G_start"] = g_start;
    j["G_final"] = g_prev;
    j["delta_G_histogram"] = std::move(histo);
    emit(json_text(j), args.out);
  } else {
    std::string text = "k: " + std::to_string(args.k) + "\n";
    text += "moves: " + std::to_string(trace.type1_count) + " braid (expected " +
            std::to_string(expected) + ")\n";
    text += std::string("final matches b_k: ") + (final_matches ? "yes" : "no") + "\n";
    text += "G start: " + std::to_string(g_start) + "\n";
    text += "G final: " + std::to_string(g_prev) + "\n";
    text += "dG histogram:";
    for (const auto& [delta, count] : histogram)
      text += " " + std::to_string(delta) + " x" + std::to_string(count);
    text += "\n";
    emit(text, args.out);
  }
  return final_matches && counts_match ? exit_ok : exit_verify;
}

// ---------------------------------------------------------------- distance

struct DistanceArgs {
  std::string a, a_file, b, b_file, format = "human", out;
  bool a_set = false, b_set = false, no_bound = false;
  std::optional<int> n, max_len, max_cost;
};

int cmd_distance(const DistanceArgs& args) {
  const std::string a_text = load_word_text(args.a, args.a_file, args.a_set);
  const std::string b_text = load_word_text(args.b, args.b_file, args.b_set);
  int n;
  if (args.n) {
    n = *args.n;
  } else {
    // joint inference so both words share a strand count
    const BraidWord pa = parse_or_domain_error(a_text, std::nullopt);
    const BraidWord pb = parse_or_domain_error(b_text, std::nullopt);
    n = std::max(pa.strand_count(), pb.strand_count());
  }
  const BraidWord a = parse_or_domain_error(a_text, n);
  const BraidWord b = parse_or_domain_error(b_text, n);

  std::optional<std::int64_t> bound;
  std::string bound_note;
  if (args.no_bound) {
    bound_note = "disabled";
  } else if (n != 3) {
    bound_note = "unavailable (defined on 3-strand words)";
  } else if (!hat(a).knot) {
    bound_note = "unavailable (closure of a is not a knot)";
  } else if (!hat(b).knot) {
    bound_note = "unavailable (closure of b is not a knot)";
  } else {
    bound = lower_bound(a, b);
  }

  const int max_len = args.max_len ? *args.max_len : default_max_len(a, b);
  const int max_cost = args.max_cost ? *args.max_cost : default_max_cost(a, b);
  std::optional<int> search_bound;
  if (bound) search_bound = static_cast<int>(*bound);
  const SearchResult r = search_distance(a, b, max_len, max_cost, search_bound);

  if (args.format == "jsonl") {
    std::string lines;
    for (std::size_t i = 0; i < r.trace.steps.size(); ++i)
      lines += trace_step_json(static_cast<int>(i) + 1, r.trace.steps[i]).dump() + "\n";
    emit(lines, args.out);
  } else if (args.format == "json") {
    Json j = Json::object();
    j["a"] = format_word(a);
    j["b"] = format_word(b);
    j["n"] = n;
    j["max_len"] = max_len;
    j["max_cost"] = max_cost;
    j["lower_bound"] = bound ? Json(*bound) : Json(nullptr);
    j["cost_upper"] = r.cost_upper ? Json(*r.cost_upper) : Json(nullptr);
    j["certified_exact"] = r.certified_exact;
    j["states_visited"] = r.states_visited;
    Json steps = Json::array();
    for (std::size_t i = 0; i < r.trace.steps.size(); ++i)
      steps.push_back(trace_step_json(static_cast<int>(i) + 1, r.trace.steps[i]));
    j["trace"] = std::move(steps);
    emit(json_text(j), args.out);
  } else {
    std::string text = "n: " + std::to_string(n) + "\n";
    text += "caps: max_len=" + std::to_string(max_len) +
            " max_cost=" + std::to_string(max_cost) + "\n";
    text += "lower bound: " + (bound ? std::to_string(*bound) : bound_note) + "\n";
    text += "cost upper: " +
            (r.cost_upper ? std::to_string(*r.cost_upper)
                          : std::string("none found within caps")) +
            "\n";
    text += std::string("certified exact: ") + (r.certified_exact ? "yes" : "no") + "\n";
    text += "states visited: " + std::to_string(r.states_visited) + "\n";
    text += "trace steps: " + std::to_string(r.trace.steps.size()) + "\n";
    emit(text, args.out);
  }
  return exit_ok;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string suite = "all", format = "human", out;
  int trials = 500;
  std::uint64_t seed = 0;
  std::optional<int> k_max;
};

int cmd_verify(const VerifyArgs& args) {
  std::vector<CheckResult> rows;
  if (args.suite == "family") {
    rows = verify_family(args.k_max.value_or(25));
  } else if (args.suite == "formula") {
    rows = verify_formula(args.k_max.value_or(10));
  } else if (args.suite == "moves") {
    rows = verify_moves(args.trials, args.seed);
  } else if (args.suite == "all") {
    const auto append = [&rows](std::vector<CheckResult> more) {
      rows.insert(rows.end(), more.begin(), more.end());
    };
    append(verify_family(25));
    append(verify_formula(10));
    append(verify_lk_tables(10));
    append(verify_slide(8));
    append(verify_search());
    append(verify_moves(args.trials, args.seed));
    append(verify_concat_order(10));
    append(verify_base(1000, args.seed, 25));
    append(verify_pinning());
  } else {
    throw UsageError("suite must be one of moves, formula, family, all");
  }
  const bool ok = all_pass(rows);

  if (args.format == "json") {
    Json j = Json::object();
    j["suite"] = args.suite;
    j["rows"] = check_rows_to_json(rows);
    j["all_pass"] = ok;
    emit(json_text(j), args.out);
  } else if (args.format == "csv") {
    if (args.suite == "family")
      emit(family_rows_to_csv(family_sweep(args.k_max.value_or(25))), args.out);
    else
      emit(check_rows_to_csv(rows), args.out);
  } else {
    std::string text;
    int failed = 0;
    for (const CheckResult& r : rows) {
      if (!r.pass) ++failed;
      text += std::string(r.pass ? "PASS" : "FAIL") + "  " + r.name;
      if (!r.detail.empty()) text += "  [" + r.detail + "]";
      text += "\n";
    }
    text += failed == 0 ? "all " + std::to_string(rows.size()) + " checks passed\n"
                        : std::to_string(failed) + " of " + std::to_string(rows.size()) +
                              " checks failed\n";
    emit(text, args.out);
  }
  return ok ? exit_ok : exit_verify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid-word invariants, rewriting schedules, and distance bounds"};
  app.require_subcommand(1);

  InvariantArgs inv;
  CLI::App* inv_cmd = app.add_subcommand("invariant", "i_lk and G of a 3-strand word");
  inv_cmd->add_option("--word", inv.word, "word as whitespace-separated nonzero integers");
  inv_cmd->add_option("--word-file", inv.word_file, "file holding the word text");
  inv_cmd->add_option("--n", inv.n, "strand count (default 3)");
  inv_cmd->add_option("--format", inv.format, "human or json")
      ->check(CLI::IsMember({"human", "json"}));
  inv_cmd->add_option("--out", inv.out, "write output to this path");

  FamilyArgs fam;
  CLI::App* fam_cmd = app.add_subcommand("family", "emit V, W, a_k, or b_k");
  fam_cmd->add_option("--kind", fam.kind, "V, W, a, or b")->required();
  fam_cmd->add_option("--k", fam.k, "family parameter (default 1)");
  fam_cmd->add_option("--format", fam.format, "human or json")
      ->check(CLI::IsMember({"human", "json"}));
  fam_cmd->add_option("--out", fam.out, "write output to this path");

  SlideArgs slide;
  CLI::App* slide_cmd =
      app.add_subcommand("slide", "run the 4k^2 braid-move schedule from a_k to b_k");
  slide_cmd->add_option("--k", slide.k, "family parameter")->required();
  slide_cmd->add_option("--format", slide.format, "human, json, or jsonl trace")
      ->check(CLI::IsMember({"human", "json", "jsonl"}));
  slide_cmd->add_option("--out", slide.out, "write output to this path");

  DistanceArgs dist;
  CLI::App* dist_cmd =
      app.add_subcommand("distance", "capped search for the braid-relation distance");
  dist_cmd->add_option("--a", dist.a, "first word");
  dist_cmd->add_option("--a-file", dist.a_file, "file holding the first word");
  dist_cmd->add_option("--b", dist.b, "second word");
  dist_cmd->add_option("--b-file", dist.b_file, "file holding the second word");
  dist_cmd->add_option("--n", dist.n, "strand count (default: inferred jointly)");
  dist_cmd->add_option("--max-len", dist.max_len, "word length cap");
  dist_cmd->add_option("--max-cost", dist.max_cost, "braid-move cost cap");
  dist_cmd->add_flag("--no-bound", dist.no_bound, "skip the G lower bound");
  dist_cmd->add_option("--format", dist.format, "human, json, or jsonl trace")
      ->check(CLI::IsMember({"human", "json", "jsonl"}));
  dist_cmd->add_option("--out", dist.out, "write output to this path");

  VerifyArgs ver;
  CLI::App* ver_cmd = app.add_subcommand("verify", "run verification sweeps");
  ver_cmd->add_option("--suite", ver.suite, "moves, formula, family, or all");
  ver_cmd->add_option("--trials", ver.trials, "random trials per move type (default 500)");
  ver_cmd->add_option("--seed", ver.seed, "random seed (default 0)");
  ver_cmd->add_option("--k-max", ver.k_max, "sweep upper bound for family/formula");
  ver_cmd->add_option("--format", ver.format, "human, json, or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  ver_cmd->add_option("--out", ver.out, "write output to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return exit_usage;
  }

  inv.word_set = inv_cmd->count("--word") > 0;
  dist.a_set = dist_cmd->count("--a") > 0;
  dist.b_set = dist_cmd->count("--b") > 0;

  try {
    if (inv_cmd->parsed()) return cmd_invariant(inv);
    if (fam_cmd->parsed()) return cmd_family(fam);
    if (slide_cmd->parsed()) return cmd_slide(slide);
    if (dist_cmd->parsed()) return cmd_distance(dist);
    if (ver_cmd->parsed()) return cmd_verify(ver);
    std::cerr << "no command given\n";
    return exit_usage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return exit_usage;
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return exit_domain;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return exit_domain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_verify;
  }
}
