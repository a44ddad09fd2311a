#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgcy/json_io.hpp"

namespace lgcy {

struct CorpusCase {
  std::string name;
  std::string file;
  std::string text;
  std::optional<long> n;
  std::optional<long> d;
  Json golden;
};

// Reads <dir>/corpus/manifest.json and the referenced polynomial and golden
// files.
std::vector<CorpusCase> load_corpus(const std::string& data_dir);

struct CorpusCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CorpusResult {
  std::string name;
  std::vector<CorpusCheck> checks;
  double seconds = 0.0;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

CorpusResult run_corpus_case(const CorpusCase& c);

// Plain-text matrix, one row per case and one column per check name.
std::string corpus_matrix(const std::vector<CorpusResult>& results);
Json corpus_to_json(const std::vector<CorpusResult>& results);

}  // namespace lgcy
