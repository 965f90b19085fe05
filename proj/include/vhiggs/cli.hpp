#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vhiggs/json_io.hpp"

namespace vhiggs::cli {

using json_io::json;

const char* version();

enum ExitCode { kOk = 0, kInvalidInput = 1, kInternalLimit = 2 };

struct Options {
  std::string command;
  std::string input;  // path, "-" for stdin, or inline JSON starting with '{'
  bool strict = false;
  int truncation = 0;  // 0 = default n + 1 per zero
  std::optional<int> genus;
  std::optional<std::string> output;
  std::optional<std::string> batch_dir;
  json flow = json::object();  // overrides from the command line
};

struct JobResult {
  int exit_code;
  json report;
};

/// Runs one command on the given input text. Never throws: errors become
/// {"error": ...} reports with exit code 1 or 2.
JobResult run_job(const Options& options, const std::string& input_text);

/// Runs the command on every *.json file of the directory, in parallel,
/// collecting reports in file-name order.
JobResult run_batch(const Options& options, const std::string& dir);

/// Parses argv, runs, writes the report; returns the process exit code.
int main_entry(int argc, char** argv);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);

}  // namespace vhiggs::cli
