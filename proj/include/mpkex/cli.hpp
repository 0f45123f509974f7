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

#ifndef MPKEX_CLI_HPP_
#define MPKEX_CLI_HPP_

// Command implementations behind the mpkex tool. They take paths and
// streams and return the process exit status, so they can run in-process.

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mpkex/corpus.hpp"
#include "mpkex/pipeline.hpp"

namespace mpkex::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kConfigError = 2,
  kIdMismatch = 3,
};

struct IoOptions {
  std::string tag_map_path;  // optional JSON prefix map
  std::string dump_graph_dir;  // optional; multipartite graphs are written here
};

namespace detail {

inline bool open_input(const std::string& path, std::ifstream& in, std::ostream& err) {
  in.open(path, std::ios::binary);
  if (!in) {
    err << "error: cannot open '" << path << "'\n";
    return false;
  }
  return true;
}

// Loads the tag map and documents; prints a diagnostic and returns false on
// failure.
inline bool load_documents(const std::string& path, const IoOptions& io,
                           std::vector<Document>& docs, std::ostream& err) {
  TagMap tags = TagMap::penn();
  if (!io.tag_map_path.empty()) {
    std::ifstream tm;
    if (!open_input(io.tag_map_path, tm, err)) return false;
    try {
      tags = TagMap::from_json(tm);
    } catch (const ParseError& e) {
      err << "error: " << io.tag_map_path << ": " << e.what() << '\n';
      return false;
    }
  }
  std::ifstream in;
  if (!open_input(path, in, err)) return false;
  try {
    docs = parse_documents(in, tags);
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return false;
  }
  return true;
}

inline bool load_gold(const std::string& path, GoldReferences& gold, std::ostream& err) {
  std::ifstream in;
  if (!open_input(path, in, err)) return false;
  try {
    gold = parse_gold(in);
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return false;
  }
  return true;
}

inline std::string file_safe(const std::string& id) {
  std::string out = id;
  for (char& c : out) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
    if (!ok) c = '_';
  }
  return out;
}

inline bool dump_graphs(const std::vector<DocumentResult>& results, const std::string& dir,
                        std::ostream& err) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    err << "error: cannot create '" << dir << "': " << ec.message() << '\n';
    return false;
  }
  for (const auto& r : results) {
    if (!r.graph) continue;
    const auto path = std::filesystem::path(dir) / (file_safe(r.id) + ".graph");
    std::ofstream out(path);
    if (!out) {
      err << "error: cannot write '" << path.string() << "'\n";
      return false;
    }
    dump_graph(*r.graph, r.k_topics(), out);
  }
  return true;
}

inline bool check_ids(const std::vector<Document>& docs, const GoldReferences& gold,
                      std::ostream& err) {
  const auto missing = missing_gold(docs, gold);
  if (missing.empty()) return true;
  err << "error: no gold references for " << missing.size() << " document(s):";
  for (const auto& id : missing) err << ' ' << id;
  err << '\n';
  return false;
}

inline std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

inline void print_summary(const CorpusEvaluation& ev, std::ostream& err) {
  const auto& m = ev.corpus.macro;
  err << "documents  " << ev.corpus.documents << '\n';
  for (const auto& [k, v] : m.precision_at) {
    err << "P@" << k << "  " << fmt("%6.2f", 100 * v) << "  R@" << k << "  "
        << fmt("%6.2f", 100 * m.recall_at.at(k)) << "  F1@" << k << "  "
        << fmt("%6.2f", 100 * m.f1_at.at(k)) << '\n';
  }
  err << "MAP    " << fmt("%6.2f", 100 * m.average_precision) << '\n';
  for (const auto& [k, v] : m.topic_coverage_at) {
    err << "coverage@" << k << "  " << fmt("%6.2f", 100 * v) << '\n';
  }
}

}  // namespace detail

/// Writes one JSON line per document to `out`.
inline int cmd_extract(const RunConfig& cfg, const std::string& input_path, std::ostream& out,
                       std::ostream& err, const IoOptions& io = {}) {
  try {
    validate(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  std::vector<Document> docs;
  if (!detail::load_documents(input_path, io, docs, err)) return kInputError;
  const auto results = run_corpus(docs, cfg);
  if (!io.dump_graph_dir.empty() && !detail::dump_graphs(results, io.dump_graph_dir, err)) {
    return kInputError;
  }
  std::ostringstream buf;
  for (const auto& r : results) buf << extraction_json(r, cfg.top_n).dump() << '\n';
  out << buf.str();
  return kOk;
}

/// Writes the JSON score report to `out` and a summary table to `err`.
inline int cmd_evaluate(const RunConfig& cfg, const std::string& input_path,
                        const std::string& gold_path, std::ostream& out, std::ostream& err,
                        const IoOptions& io = {}) {
  try {
    validate(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  std::vector<Document> docs;
  GoldReferences gold;
  if (!detail::load_documents(input_path, io, docs, err)) return kInputError;
  if (!detail::load_gold(gold_path, gold, err)) return kInputError;
  if (!detail::check_ids(docs, gold, err)) return kIdMismatch;
  const auto results = run_corpus(docs, cfg);
  if (!io.dump_graph_dir.empty() && !detail::dump_graphs(results, io.dump_graph_dir, err)) {
    return kInputError;
  }
  const auto ev = evaluate_results(results, gold, cfg.strict_at_k);
  out << report_json(ev, cfg).dump(2) << '\n';
  detail::print_summary(ev, err);
  return kOk;
}

/// Writes a TSV table (alpha, cutoff, F1@5, F1@10, MAP) to `out`.
inline int cmd_sweep(const RunConfig& cfg, const std::string& input_path,
                     const std::string& gold_path, const std::string& grid_spec,
                     std::ostream& out, std::ostream& err, const IoOptions& io = {}) {
  GridSpec grid;
  try {
    validate(cfg);
    grid = parse_grid(grid_spec);
    for (double a : grid.alpha) {
      RunConfig probe = cfg;
      probe.alpha = a;
      validate(probe);
    }
    for (double c : grid.cutoff) {
      RunConfig probe = cfg;
      probe.tau = c;
      validate(probe);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  std::vector<Document> docs;
  GoldReferences gold;
  if (!detail::load_documents(input_path, io, docs, err)) return kInputError;
  if (!detail::load_gold(gold_path, gold, err)) return kInputError;
  if (!detail::check_ids(docs, gold, err)) return kIdMismatch;
  std::ostringstream buf;
  buf << "alpha\tcutoff\tF1@5\tF1@10\tMAP\n";
  for (const auto& row : sweep(docs, gold, cfg, grid)) {
    buf << detail::fmt("%g", row.alpha) << '\t' << detail::fmt("%g", row.cutoff) << '\t'
        << detail::fmt("%.6f", row.f1_at_5) << '\t' << detail::fmt("%.6f", row.f1_at_10) << '\t'
        << detail::fmt("%.6f", row.map) << '\n';
  }
  out << buf.str();
  return kOk;
}

}  // namespace mpkex::cli

#endif  // MPKEX_CLI_HPP_
