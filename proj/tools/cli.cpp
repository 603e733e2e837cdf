#include "cli.hpp"

#include "bicumulant/json_io.hpp"
#include "bicumulant/laws.hpp"
#include "bicumulant/sequences.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace bicumulant::cli {

namespace {

enum class Format { text, json, latex };

struct RunConfig {
  std::string command;
  std::string kind;
  std::string shape;
  std::string filter = "all";
  Format format = Format::text;
  bool format_given = false;
  bool unsafe_cap = false;
  std::uint64_t seed = 1;
  std::string law = "main";
  std::optional<int> max_size;
  int arity = 2;
  int max_coord = 4;
  unsigned threads = 0;
  int trials = 20;
  int max_degree = 3;
  bool corrupt_sign = false;
  bool no_timing = false;

  int cap() const { return unsafe_cap ? 255 : default_cap; }
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Shape checked_shape(const RunConfig& cfg) {
  if (cfg.shape.empty()) throw UsageError("--shape is required");
  Shape shape = [&] {
    try {
      return Shape::parse(cfg.shape);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (shape.total() > cfg.cap()) throw CapExceeded(shape.total(), cfg.cap());
  return shape;
}

std::string w_text(const std::optional<int>& w) { return w ? std::to_string(*w) : "inf"; }

std::string partition_text(const SetPartition& nu) {
  std::string out;
  for (const Block& b : nu.blocks()) {
    out += out.empty() ? "{" : " {";
    for (std::size_t i = 0; i < b.size(); ++i) out += (i ? ", " : "") + label(b[i]);
    out += "}";
  }
  return out;
}

std::string sequence_text(const UpwardSequence& w) {
  std::string out = partition_text(w.levels().front());
  for (int i = 1; i < w.length(); ++i) {
    out += " -> ";
    bool first_block = true;
    for (const auto& block : w.grouping(i)) {
      out += first_block ? "{" : " {";
      first_block = false;
      for (std::size_t j = 0; j < block.size(); ++j) out += (j ? ", " : "") + std::to_string(block[j]);
      out += "}";
    }
  }
  return out;
}

std::string colours_text(const Colouring& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.colours.size(); ++i) out += (i ? "," : "") + std::to_string(c.colours[i]);
  return out + "]";
}

void emit_listing(const RunConfig& cfg, const Shape& shape, std::vector<std::string> lines, Json items,
                  std::ostream& out) {
  if (cfg.format == Format::json) {
    Json doc = {{"kind", cfg.kind},
                {"shape", shape.to_string()},
                {"filter", cfg.filter},
                {"count", items.size()},
                {"items", std::move(items)}};
    out << doc.dump(2) << "\n";
    return;
  }
  for (const std::string& line : lines) out << line << "\n";
  out << "count: " << lines.size() << "\n";
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::latex) throw UsageError("enumerate supports text and json output");
  const Shape shape = checked_shape(cfg);
  const auto slots = shape.slots();
  std::vector<std::string> lines;
  Json items = Json::array();
  auto bad_filter = [&](const std::string& allowed) {
    throw UsageError("filter '" + cfg.filter + "' is not valid for " + cfg.kind + " (use " + allowed + ")");
  };

  if (cfg.kind == "partitions") {
    if (cfg.filter != "all" && cfg.filter != "mixing" && cfg.filter != "strongly-mixing")
      bad_filter("all, mixing, strongly-mixing");
    for (const SetPartition& nu : enumerate_set_partitions(slots)) {
      if (cfg.filter == "mixing" && !is_mixing_partition(nu, shape)) continue;
      if (cfg.filter == "strongly-mixing" && !is_strongly_mixing(nu, shape)) continue;
      lines.push_back(partition_text(nu));
      items.push_back(to_json(nu));
    }
  } else if (cfg.kind == "forests" || cfg.kind == "trees") {
    if (cfg.filter != "all" && cfg.filter != "mixing" && cfg.filter != "strongly-mixing")
      bad_filter("all, mixing, strongly-mixing");
    std::vector<ReducedForest> forests;
    if (cfg.kind == "forests") {
      forests = enumerate_reduced_forests(slots);
    } else {
      for (Tree& t : enumerate_reduced_trees(slots)) forests.push_back(ReducedForest({std::move(t)}));
    }
    for (const ReducedForest& f : forests) {
      if (cfg.filter == "mixing" && !is_mixing_forest(f, shape)) continue;
      if (cfg.filter == "strongly-mixing" && !is_strongly_mixing_forest(f, shape)) continue;
      auto w = w_of_forest(f, shape);
      lines.push_back(render_forest_text(f) + "  w=" + w_text(w));
      Json item = {{"forest", to_json(f)}, {"text", render_forest_text(f)}};
      item["w"] = w ? Json(*w) : Json(nullptr);
      items.push_back(std::move(item));
    }
  } else if (cfg.kind == "colourings") {
    ColouringFilter filter = ColouringFilter::gap_free;
    if (cfg.filter == "weakly-mixing")
      filter = ColouringFilter::weakly_mixing;
    else if (cfg.filter != "all" && cfg.filter != "gap-free")
      bad_filter("gap-free, weakly-mixing");
    for (const ReducedForest& f : enumerate_reduced_forests(slots))
      for (const Colouring& c : enumerate_colourings(f, shape, filter)) {
        lines.push_back(render_forest_text(f) + "  colours=" + colours_text(c));
        items.push_back(to_json(f, c));
      }
  } else if (cfg.kind == "sequences") {
    if (cfg.filter != "all" && cfg.filter != "mixing") bad_filter("all, mixing");
    for (const UpwardSequence& w : enumerate_sequences(shape, cfg.filter == "mixing")) {
      lines.push_back(sequence_text(w));
      items.push_back(to_json(w));
    }
  } else {
    throw UsageError("unknown kind '" + cfg.kind + "'");
  }
  emit_listing(cfg, shape, std::move(lines), std::move(items), out);
  return exit_pass;
}

Json expr_json(const Expr& e) {
  Json terms = Json::array();
  for (const auto& [t, c] : e) terms.push_back({{"coefficient", to_string(c)}, {"term", render_text(t)}});
  return terms;
}

int cmd_expand(const RunConfig& cfg, std::ostream& out) {
  const Shape shape = checked_shape(cfg);
  std::vector<Law> laws;
  try {
    laws = parse_laws(cfg.law);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (laws.size() != 1 || !is_expression_law(laws.front()))
    throw UsageError("expand needs a single expression law, not '" + cfg.law + "'");
  const Law law = laws.front();
  CumulantEngine engine;
  const Expr rhs = law_sides(engine, law, shape).rhs;

  // Signed forest terms, for the laws that are forest expansions.
  const bool forest_law =
      law == Law::main || law == Law::ls_analogue || law == Law::dual_main || law == Law::dual_analogue;
  const bool dual = law == Law::dual_main || law == Law::dual_analogue;
  const bool strongly = law == Law::ls_analogue || law == Law::dual_analogue;
  std::vector<std::pair<int, ReducedForest>> forests;
  if (forest_law)
    for (const ReducedForest& f : enumerate_reduced_forests(shape.slots())) {
      if (!(strongly ? is_strongly_mixing_forest(f, shape) : is_mixing_forest(f, shape))) continue;
      forests.emplace_back(*w_of_forest(f, shape) % 2 == 0 ? 1 : -1, f);
    }

  switch (cfg.format) {
    case Format::text:
      out << render_text(rhs) << "\n";
      break;
    case Format::latex:
      if (!forest_law) {
        out << render_latex(rhs) << "\n";
        break;
      }
      for (std::size_t i = 0; i < forests.size(); ++i) {
        const auto& [sign, f] = forests[i];
        if (i == 0)
          out << (sign < 0 ? "-" : "");
        else
          out << (sign < 0 ? " - " : " + ");
        out << render_forest_latex(f, dual);
      }
      out << "\n";
      break;
    case Format::json: {
      Json doc = {{"law", law_name(law)}, {"shape", shape.to_string()}};
      if (forest_law) {
        Json fs = Json::array();
        for (const auto& [sign, f] : forests)
          fs.push_back({{"sign", sign}, {"forest", to_json(f)}, {"text", render_forest_text(f)}});
        doc["forests"] = std::move(fs);
      }
      doc["terms"] = expr_json(rhs);
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return exit_pass;
}

void report_failure(const LawReport& r, std::ostream& err) {
  err << "law " << r.law << " violated at " << r.shape;
  if (r.mismatch)
    err << ": term " << render_text(r.mismatch->term) << " has coefficient " << to_string(r.mismatch->lhs)
        << " on the left, " << to_string(r.mismatch->rhs) << " on the right";
  else if (!r.detail.empty())
    err << ": " << r.detail;
  err << "\n";
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format == Format::latex) throw UsageError("verify supports text and json output");
  std::vector<Law> laws;
  try {
    laws = parse_laws(cfg.law);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<LawReport> reports;
  if (laws.front() == Law::path_fg) {
    if (cfg.arity < 1 || cfg.arity > 16) throw UsageError("--arity must be in 1..16");
    if (cfg.max_coord < 0) throw UsageError("--max-coord must be nonnegative");
    reports.push_back(verify_paths(cfg.arity, cfg.max_coord));
  } else if (cfg.max_size) {
    if (!cfg.shape.empty()) throw UsageError("give either --shape or --max-size, not both");
    if (*cfg.max_size < 1) throw UsageError("--max-size must be positive");
    for (Law law : laws) {
      auto swept = verify_sweep(law, *cfg.max_size, cfg.cap(), cfg.threads);
      reports.insert(reports.end(), std::make_move_iterator(swept.begin()),
                     std::make_move_iterator(swept.end()));
    }
  } else {
    const Shape shape = checked_shape(cfg);
    for (Law law : laws) reports.push_back(verify(law, shape, cfg.cap()));
  }

  bool all_equal = true;
  for (const LawReport& r : reports) {
    if (!r.equal) {
      all_equal = false;
      report_failure(r, err);
    }
  }
  if (cfg.format == Format::json || !cfg.format_given) {
    Json doc = Json::array();
    for (const LawReport& r : reports) {
      Json j = to_json(r);
      if (cfg.no_timing) j["millis"] = nullptr;
      doc.push_back(std::move(j));
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const LawReport& r : reports) {
      out << r.law << " " << r.shape << " " << (r.equal ? "equal" : "UNEQUAL");
      if (!r.detail.empty())
        out << " (" << r.detail << ")";
      else
        out << " lhs_terms=" << r.lhs.size() << " rhs_terms=" << r.rhs.size();
      out << "\n";
    }
  }
  return all_equal ? exit_pass : exit_violated;
}

int cmd_model(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format == Format::latex) throw UsageError("model supports text and json output");
  std::vector<Law> laws;
  try {
    laws = parse_laws(cfg.law);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (Law law : laws)
    if (!is_expression_law(law)) throw UsageError("law '" + law_name(law) + "' has no model interpretation");
  if (cfg.trials < 1) throw UsageError("--trials must be positive");
  if (cfg.max_degree < 0) throw UsageError("--max-degree must be nonnegative");
  const Shape shape = checked_shape(cfg);
  std::vector<ModelReport> reports;
  for (Law law : laws)
    reports.push_back(
        model_check(law, shape, cfg.seed, cfg.trials, cfg.max_degree, cfg.corrupt_sign, cfg.cap()));
  bool all_equal = true;
  for (const ModelReport& r : reports) {
    if (r.equal) continue;
    all_equal = false;
    err << "law " << r.law << " fails in the model at " << r.shape << " (seed " << r.seed << ", trial "
        << r.trials << "):";
    for (const auto& [s, p] : r.assignment) err << " " << label(s) << " = " << p.to_string() << ";";
    err << " left " << r.lhs.to_string() << ", right " << r.rhs.to_string() << "\n";
  }
  if (cfg.format == Format::json || !cfg.format_given) {
    Json doc = Json::array();
    for (const ModelReport& r : reports) {
      Json j = to_json(r);
      if (cfg.no_timing) j["millis"] = nullptr;
      doc.push_back(std::move(j));
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const ModelReport& r : reports)
      out << r.law << " " << r.shape << " seed=" << r.seed << " trials=" << r.trials << " "
          << (r.equal ? "equal" : "UNEQUAL") << "\n";
  }
  return all_equal ? exit_pass : exit_violated;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Cumulants of an algebra with two products: enumeration, expansion, verification"};
  app.name("bicumulant");
  app.require_subcommand(1);

  std::string format_name = "text";
  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"json", Format::json}, {"latex", Format::latex}};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--shape", cfg.shape, "Group sizes k1,k2,...");
    sub->add_option("--format", format_name, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}, CLI::ignore_case).description(""))
        ->each([&](const std::string&) { cfg.format_given = true; });
    sub->add_flag("--unsafe-cap", cfg.unsafe_cap, "Lift the " + std::to_string(default_cap) + "-slot size cap");
  };

  auto* enumerate = app.add_subcommand("enumerate", "List partitions, forests, trees, colourings or sequences");
  enumerate->add_option("kind", cfg.kind, "partitions | forests | trees | colourings | sequences")
      ->required()
      ->check(CLI::IsMember({"partitions", "forests", "trees", "colourings", "sequences"}));
  enumerate->add_option("--filter", cfg.filter,
                        "all | mixing | strongly-mixing (colourings: gap-free | weakly-mixing)");
  add_common(enumerate);

  auto* expand = app.add_subcommand("expand", "Print the right-hand side of an expansion");
  expand->add_option("--law", cfg.law, "Law whose expansion to print")->capture_default_str();
  add_common(expand);

  auto* verify_cmd = app.add_subcommand("verify", "Check a law exactly on one shape or a sweep");
  verify_cmd->add_option("--law", cfg.law, "Law to verify")->capture_default_str();
  verify_cmd->add_option("--max-size", cfg.max_size, "Sweep every shape with at most this many slots");
  verify_cmd->add_option("--arity", cfg.arity, "Dimension for path-fg")->capture_default_str();
  verify_cmd->add_option("--max-coord", cfg.max_coord, "Largest coordinate for path-fg")->capture_default_str();
  verify_cmd->add_option("--threads", cfg.threads, "Worker threads for sweeps (0 = all cores)");
  verify_cmd->add_flag("--no-timing", cfg.no_timing, "Write null in place of elapsed times");
  add_common(verify_cmd);

  auto* model = app.add_subcommand("model", "Check a law in the falling-factorial polynomial model");
  model->add_option("--law", cfg.law, "Law to check")->capture_default_str();
  model->add_option("--seed", cfg.seed, "Seed of the assignment generator")->capture_default_str();
  model->add_option("--trials", cfg.trials, "Random assignments per law")->capture_default_str();
  model->add_option("--max-degree", cfg.max_degree, "Degree bound of assigned polynomials")
      ->capture_default_str();
  model->add_flag("--corrupt-sign", cfg.corrupt_sign)->group("");  // negative-control hook
  model->add_flag("--no-timing", cfg.no_timing, "Write null in place of elapsed times");
  add_common(model);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }
  std::transform(format_name.begin(), format_name.end(), format_name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  cfg.format = formats.at(format_name);

  try {
    if (enumerate->parsed()) return cmd_enumerate(cfg, out);
    if (expand->parsed()) return cmd_expand(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
    return cmd_model(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_cap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace bicumulant::cli
