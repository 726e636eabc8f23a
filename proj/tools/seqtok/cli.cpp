// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

#include "seqtok/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "seqtok/config.hpp"
#include "seqtok/stats.hpp"
#include "seqtok/tokenizer.hpp"

namespace seqtok::cli {

namespace fs = std::filesystem;

namespace {

constexpr std::uintmax_t kDefaultInMemoryCap = 64u << 20;

struct Options {
  std::vector<std::string> inputs;
  std::string config_path;
  bool ip = false;
  bool email = false;
  bool url = false;
  bool date = false;
  std::string mode;
  std::string output;
  bool stats = false;
  bool no_stats = false;
  std::string stats_format = "text";
  bool tag = false;
  bool keep_punctuation = false;
  bool emit_text = false;
  std::string strategy = "anchored";
  std::uintmax_t max_in_memory = kDefaultInMemoryCap;
};

struct Job {
  fs::path input;
  fs::path output;
};

// defaults <- config file <- flags
Config effective_config(const Options& opt, Config config) {
  if (opt.ip || opt.email || opt.url || opt.date) {
    config.rule(TokenKind::Ip).enabled = opt.ip;
    config.rule(TokenKind::Email).enabled = opt.email;
    config.rule(TokenKind::Url).enabled = opt.url;
    config.rule(TokenKind::Date).enabled = opt.date;
  }
  if (!opt.mode.empty()) {
    const Action action = opt.mode == "remove" ? Action::Remove : Action::Preserve;
    for (TokenKind kind : kSpecialKinds) config.rule(kind).action = action;
  }
  if (!opt.output.empty()) config.output_path = opt.output;
  if (opt.stats) config.stats_enabled = true;
  if (opt.no_stats) config.stats_enabled = false;
  if (opt.tag) config.tag_output = true;
  if (opt.keep_punctuation) config.keep_punctuation = true;
  return config;
}

fs::path tok_name(const fs::path& input) {
  return fs::path(input.filename().string() + ".tok");
}

class Runner {
 public:
  Runner(const Options& opt, const Config& config, std::ostream& out, std::ostream& err)
      : opt_(opt),
        config_(config),
        strategy_(*strategy_from_name(opt.strategy)),
        format_(opt.stats_format == "json" ? StatsFormat::Json : StatsFormat::Text),
        out_(out),
        err_(err) {}

  // Returns false if the file could not be read or written.
  bool process(const Job& job, bool print_header) {
    std::error_code ec;
    if (!fs::is_regular_file(job.input, ec)) {
      err_ << "seqtok: cannot read input '" << job.input.string()
           << "': no such file\n";
      return false;
    }
    const auto size = fs::file_size(job.input, ec);
    std::ifstream in(job.input, std::ios::binary);
    if (ec || !in) {
      err_ << "seqtok: cannot read input '" << job.input.string() << "'\n";
      return false;
    }

    std::string rendered;
    StatsAccumulator stats;
    if (size > opt_.max_in_memory) {
      stream_file(in, rendered, stats);
    } else {
      std::ostringstream buf;
      buf << in.rdbuf();
      const std::string text = buf.str();
      const auto tokens = tokenize(text, config_, strategy_);
      for (const Token& t : tokens) stats.add(t);
      rendered = opt_.emit_text ? filter_text(text, config_, strategy_)
                                : render_tokens(tokens, config_.tag_output);
    }
    if (in.bad()) {
      err_ << "seqtok: error while reading '" << job.input.string() << "'\n";
      return false;
    }

    std::ofstream file(job.output, std::ios::binary | std::ios::trunc);
    file << rendered;
    file.close();
    if (!file) {
      err_ << "seqtok: cannot write output '" << job.output.string() << "'\n";
      return false;
    }

    if (config_.stats_enabled) {
      if (print_header && format_ == StatsFormat::Text) {
        out_ << "== " << job.input.string() << " ==\n";
      }
      out_ << render_stats(stats.report(), format_);
    }
    return true;
  }

 private:
  void stream_file(std::ifstream& in, std::string& rendered, StatsAccumulator& stats) {
    if (!opt_.emit_text) {
      tokenize_stream(in, config_, strategy_, [&](const Token& t) {
        stats.add(t);
        append_rendered(rendered, t, config_.tag_output);
      });
      return;
    }
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      for (const Token& t : tokenize(line, config_, strategy_)) stats.add(t);
      if (!first) rendered += '\n';
      rendered += filter_text(line, config_, strategy_);
      first = false;
    }
    // getline drops the final newline; restore it when the file had one.
    in.clear();
    in.seekg(-1, std::ios::end);
    char last = 0;
    if (in.get(last) && last == '\n') rendered += '\n';
  }

  const Options& opt_;
  const Config& config_;
  ScanStrategy strategy_;
  StatsFormat format_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Tokenizer pre-filter for IPv4 addresses, emails, URLs and dates", "seqtok"};
  app.add_option("-i,--input,inputs", opt.inputs, "Input text files")->type_name("PATH");
  app.add_option("-c,--config", opt.config_path, "XML configuration file")->type_name("PATH");
  app.add_flag("--ip", opt.ip, "Recognize IPv4 addresses");
  app.add_flag("--email", opt.email, "Recognize email addresses");
  app.add_flag("--url", opt.url, "Recognize web URLs");
  app.add_flag("--date", opt.date, "Recognize dates");
  app.add_option("--mode", opt.mode, "Action for every enabled kind")
      ->check(CLI::IsMember({"preserve", "remove"}));
  app.add_option("-o,--output", opt.output,
                 "Output file, or directory when several inputs are given")
      ->type_name("PATH");
  app.add_flag("--stats", opt.stats, "Print statistics");
  app.add_flag("--no-stats", opt.no_stats, "Do not print statistics");
  app.add_option("--stats-format", opt.stats_format, "Statistics format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--tag", opt.tag, "Prefix special tokens with their kind");
  app.add_flag("--keep-punctuation", opt.keep_punctuation, "Emit punctuation runs as tokens");
  app.add_flag("--emit-text", opt.emit_text, "Write filtered text instead of tokens");
  app.add_option("--strategy", opt.strategy, "Special-sequence scanner")
      ->check(CLI::IsMember({"direct", "anchored"}));
  app.add_option("--max-in-memory", opt.max_in_memory,
                 "Files larger than this many bytes are processed line by line");

  auto usage = [&](const std::string& message) {
    err << "seqtok: " << message << "\n" << app.help("", CLI::AppFormatMode::Normal);
    return kExitUsage;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  if (opt.inputs.empty()) return usage("at least one input file is required");
  if (opt.stats && opt.no_stats) return usage("--stats and --no-stats are exclusive");
  if (opt.emit_text && opt.mode == "preserve") {
    return usage("--emit-text writes filtered text and needs --mode remove");
  }

  Config config = default_config();
  if (!opt.config_path.empty()) {
    try {
      config = load_config_file(opt.config_path);
    } catch (const ConfigError& e) {
      err << "seqtok: " << e.what() << "\n";
      return kExitFailure;
    }
  }
  config = effective_config(opt, config);

  std::vector<Job> jobs;
  std::error_code ec;
  if (config.output_path && opt.inputs.size() > 1) {
    const fs::path dir = *config.output_path;
    if (fs::exists(dir, ec) && !fs::is_directory(dir, ec)) {
      return usage("several inputs need --output to name a directory");
    }
    for (const auto& in : opt.inputs) jobs.push_back({in, dir / tok_name(in)});
  } else {
    for (const auto& in : opt.inputs) {
      fs::path target;
      if (!config.output_path) {
        target = fs::path(in + ".tok");
      } else if (fs::is_directory(*config.output_path, ec)) {
        target = fs::path(*config.output_path) / tok_name(in);
      } else {
        target = *config.output_path;
      }
      jobs.push_back({in, target});
    }
  }
  std::set<fs::path> targets;
  for (const auto& job : jobs) {
    if (!targets.insert(job.output.lexically_normal()).second) {
      return usage("two inputs would write the same output '" + job.output.string() + "'");
    }
  }
  if (config.output_path && opt.inputs.size() > 1) {
    fs::create_directories(*config.output_path, ec);
    if (ec) {
      err << "seqtok: cannot create output directory '" << *config.output_path
          << "': " << ec.message() << "\n";
      return kExitFailure;
    }
  }

  Runner runner(opt, config, out, err);
  int status = kExitOk;
  for (const auto& job : jobs) {
    if (!runner.process(job, jobs.size() > 1)) status = kExitFailure;
  }
  return status;
}

}  // namespace seqtok::cli
