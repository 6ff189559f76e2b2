#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "metonym/metonym.hpp"

namespace {

int with_resources(const metonym::CliConfig& cfg,
                   int (*run)(const metonym::Resources&, const std::string&, std::ostream&,
                              std::ostream&),
                   const std::string& arg) {
  try {
    const metonym::Resources res = metonym::load_resources(cfg);
    return run(res, arg, std::cout, std::cerr);
  } catch (const metonym::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return metonym::kExitResourceError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"example-based metonymy interpreter over X-no-Y corpus patterns"};
  app.require_subcommand(1);

  metonym::CliConfig cfg;
  app.set_config("--config", "", "config file with the same keys as the long flags")
      ->envname("METONYM_CONFIG");
  app.add_option("--corpus", cfg.corpus, "pre-tokenized corpus file (surface/TAG tokens)");
  app.add_option("--index", cfg.index, "prebuilt index file (output of `index`)");
  app.add_option("--frames", cfg.frames, "case frame dictionary file");
  app.add_option("--hierarchy", cfg.hierarchy, "is-a hierarchy file");
  app.add_option("--lexicon", cfg.lexicon, "word lexicon file");
  app.add_option("--alpha", cfg.alpha, "candidate frequency weight, rational or decimal")
      ->capture_default_str();
  app.add_flag("--unknown-as-source", cfg.unknown_as_source,
               "treat nouns missing from the lexicon as source words");

  auto* index_cmd = app.add_subcommand("index", "build and save the corpus indexes");
  index_cmd->fallthrough();

  std::string interpret_clause;
  auto* interpret_cmd = app.add_subcommand("interpret", "interpret one clause");
  interpret_cmd->fallthrough();
  interpret_cmd->add_option("clause", interpret_clause, "clause in surface/TAG token format")
      ->required();

  std::string batch_path;
  auto* batch_cmd = app.add_subcommand("batch", "interpret a file of clauses, one per line");
  batch_cmd->fallthrough();
  batch_cmd->add_option("clauses", batch_path, "clause file")->required();

  std::string explain_clause;
  auto* explain_cmd = app.add_subcommand("explain", "trace the decision for one clause");
  explain_cmd->fallthrough();
  explain_cmd->add_option("clause", explain_clause, "clause in surface/TAG token format")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (index_cmd->parsed()) {
    if (cfg.index.empty()) {
      std::cerr << "error: index requires --index <output path>\n";
      return metonym::kExitResourceError;
    }
    return metonym::run_index(cfg.corpus, cfg.index, std::cout, std::cerr);
  }
  if (interpret_cmd->parsed()) {
    return with_resources(cfg, metonym::run_interpret, interpret_clause);
  }
  if (batch_cmd->parsed()) {
    return with_resources(cfg, metonym::run_batch_file, batch_path);
  }
  return with_resources(cfg, metonym::run_explain, explain_clause);
}
