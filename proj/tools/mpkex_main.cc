// Copyright 2026 The mpkex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mpkex: keyphrase extraction over pre-tagged documents.
//
//   mpkex extract  docs.jsonl [-o out.jsonl]
//   mpkex evaluate docs.jsonl gold.json
//   mpkex sweep    docs.jsonl gold.json --grid "alpha=0,1.1;cutoff=0.7,0.9"

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "mpkex/cli.hpp"

namespace {

void add_model_flags(CLI::App& app, mpkex::RunConfig& cfg, mpkex::cli::IoOptions& io) {
  const std::map<std::string, mpkex::Model> models = {
      {"multipartite", mpkex::Model::Multipartite},
      {"single_rank", mpkex::Model::SingleRank},
      {"single_rank_normalized", mpkex::Model::SingleRankNormalized},
      {"topic_rank", mpkex::Model::TopicRank},
      {"topic_rank_no_topics", mpkex::Model::TopicRankNoTopics}};
  const std::map<std::string, mpkex::AdjustmentVariant> variants = {
      {"published", mpkex::AdjustmentVariant::Published},
      {"draft", mpkex::AdjustmentVariant::Draft}};
  const std::map<std::string, mpkex::PatternKind> patterns = {
      {"na_plus", mpkex::PatternKind::NaPlus},
      {"adj_star_noun_plus", mpkex::PatternKind::AdjStarNounPlus}};

  app.add_option("--model", cfg.model, "Ranking model")
      ->transform(CLI::CheckedTransformer(models, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--alpha", cfg.alpha, "Weight adjustment strength")->capture_default_str();
  app.add_option("--tau", cfg.tau, "Topic clustering threshold (distance cutoff)")
      ->capture_default_str();
  app.add_flag("--tau-is-similarity", cfg.tau_is_similarity,
               "Read --tau as a minimum similarity (cutoff = 1 - tau)");
  app.add_option("--variant", cfg.variant, "Weight adjustment formula")
      ->transform(CLI::CheckedTransformer(variants, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--pattern", cfg.pattern, "Candidate POS pattern")
      ->transform(CLI::CheckedTransformer(patterns, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--top-n", cfg.top_n, "Keyphrases per document")->capture_default_str();
  app.add_option("--lambda", cfg.lambda, "TextRank damping factor")->capture_default_str();
  app.add_option("--window", cfg.window, "SingleRank co-occurrence window")
      ->capture_default_str();
  app.add_flag("--strict-at-k", cfg.strict_at_k, "Divide precision@k by k");
  app.add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();
  app.add_option("--tag-map", io.tag_map_path, "JSON map from POS tag prefix to N, A or O");
  app.add_option("--dump-graph", io.dump_graph_dir,
                 "Write each multipartite graph as an edge list into this directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multipartite-graph keyphrase extraction"};
  app.require_subcommand(1);

  mpkex::RunConfig cfg;
  mpkex::cli::IoOptions io;
  std::string input, gold, output, grid;

  auto* extract = app.add_subcommand("extract", "Extract keyphrases as JSON lines");
  extract->add_option("input", input, "Documents (JSON lines)")->required();
  extract->add_option("-o,--output", output, "Output file (default: stdout)");
  add_model_flags(*extract, cfg, io);

  auto* evaluate = app.add_subcommand("evaluate", "Score extraction against gold keyphrases");
  evaluate->add_option("input", input, "Documents (JSON lines)")->required();
  evaluate->add_option("gold", gold, "Gold keyphrases (JSON)")->required();
  add_model_flags(*evaluate, cfg, io);

  auto* sweep = app.add_subcommand("sweep", "Grid search over alpha and cutoff");
  sweep->add_option("input", input, "Documents (JSON lines)")->required();
  sweep->add_option("gold", gold, "Gold keyphrases (JSON)")->required();
  sweep->add_option("--grid", grid, "e.g. \"alpha=0,1.1;cutoff=0.7,0.9\"");
  add_model_flags(*sweep, cfg, io);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return mpkex::cli::kConfigError;
  }

  if (extract->parsed()) {
    if (output.empty()) return mpkex::cli::cmd_extract(cfg, input, std::cout, std::cerr, io);
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << output << "'\n";
      return mpkex::cli::kInputError;
    }
    return mpkex::cli::cmd_extract(cfg, input, out, std::cerr, io);
  }
  if (evaluate->parsed()) {
    return mpkex::cli::cmd_evaluate(cfg, input, gold, std::cout, std::cerr, io);
  }
  return mpkex::cli::cmd_sweep(cfg, input, gold, grid, std::cout, std::cerr, io);
}
