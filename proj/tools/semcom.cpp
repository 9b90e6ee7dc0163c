// Command-line front end: entropy estimation, NCC bounds, channel
// calibration, and the coded-transmission sweep, all emitting CSV.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semcom/channel.hpp"
#include "semcom/markov.hpp"
#include "semcom/ncc.hpp"
#include "semcom/pipeline.hpp"

namespace {

using namespace semcom;

std::vector<double> parse_grid(const std::string& spec) {
  // "start:stop:step" or a comma list "0,2,4".
  std::vector<double> grid;
  if (spec.find(':') != std::string::npos) {
    double start, stop, step;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 || step <= 0)
      throw CLI::ValidationError("--snr-grid", "expected start:stop:step with positive step");
    for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
  } else {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(std::stod(item));
  }
  if (grid.empty()) throw CLI::ValidationError("--snr-grid", "empty grid");
  return grid;
}

Corpus load(const std::string& path, bool lines, bool strict, CorpusRole role) {
  return load_corpus(path, role, lines ? CorpusLayout::lines : CorpusLayout::directory,
                     strict ? AlphabetPolicy::strict : AlphabetPolicy::lenient);
}

std::ostream& open_out(std::ofstream& file, const std::string& out_path) {
  if (out_path.empty()) return std::cout;
  file.open(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + out_path);
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semantic-compression bounds and coded text transmission experiments"};
  app.require_subcommand(1);

  std::string corpus_path, out_path, compressor_name = "deflate", mode_name = "conditioning";
  std::string snr_grid = "0:10:2", schemes_arg = "fixed5+rs,huffman+rs,deflate+rs,context+ldpc";
  std::vector<std::string> corpus_list;
  bool lines = false, strict = false, length_weighted = false, no_table = false;
  int order = 1;
  double test_fraction = 0.1, epsilon = 1e-3;
  uint64_t seed = 1, n_bits = 1000000, trials = 10000;

  auto* entropy_cmd = app.add_subcommand("entropy", "Markov entropy rate of a corpus");
  entropy_cmd->add_option("corpus", corpus_path)->required();
  entropy_cmd->add_option("--order", order, "model order (0, 1 or 2)");
  entropy_cmd->add_flag("--lines", lines, "one document per line instead of per file");
  entropy_cmd->add_flag("--strict", strict, "reject characters outside the alphabet");
  entropy_cmd->add_option("--out", out_path);

  auto* ncc_cmd = app.add_subcommand("ncc", "NCC bound of a held-out split");
  ncc_cmd->add_option("corpus", corpus_path)->required();
  ncc_cmd->add_option("--compressor", compressor_name, "fixed5 | huffman | deflate | context[k]");
  ncc_cmd->add_option("--test-fraction", test_fraction);
  ncc_cmd->add_option("--seed", seed);
  ncc_cmd->add_option("--mode", mode_name, "conditioning | concat | both");
  ncc_cmd->add_flag("--length-weighted", length_weighted, "length-weighted expectation");
  ncc_cmd->add_flag("--no-table", no_table, "exclude Huffman table bits");
  ncc_cmd->add_flag("--lines", lines);
  ncc_cmd->add_flag("--strict", strict);
  ncc_cmd->add_option("--out", out_path);

  auto* ber_cmd = app.add_subcommand("ber", "uncoded BPSK/AWGN calibration sweep");
  ber_cmd->add_option("--snr-grid", snr_grid, "start:stop:step in dB, or comma list");
  ber_cmd->add_option("--bits", n_bits, "bits per point");
  ber_cmd->add_option("--seed", seed);
  ber_cmd->add_option("--out", out_path);

  auto* sweep_cmd = app.add_subcommand("sweep", "coded bits per word vs Eb/N0");
  sweep_cmd->add_option("corpus", corpus_path)->required();
  sweep_cmd->add_option("--schemes", schemes_arg, "comma list of <source>+<rs|ldpc>");
  sweep_cmd->add_option("--snr-grid", snr_grid);
  sweep_cmd->add_option("--eps", epsilon, "target word error rate");
  sweep_cmd->add_option("--trials", trials, "Monte Carlo words per evaluation point");
  sweep_cmd->add_option("--test-fraction", test_fraction);
  sweep_cmd->add_option("--seed", seed);
  sweep_cmd->add_flag("--lines", lines);
  sweep_cmd->add_flag("--strict", strict);
  sweep_cmd->add_option("--out", out_path);

  auto* fig4_cmd = app.add_subcommand("fig4", "per-corpus NCC / achieved / entropy table");
  fig4_cmd->add_option("corpora", corpus_list, "corpus directories")->required();
  fig4_cmd->add_option("--compressor", compressor_name);
  fig4_cmd->add_option("--test-fraction", test_fraction);
  fig4_cmd->add_option("--seed", seed);
  fig4_cmd->add_flag("--lines", lines);
  fig4_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    std::ofstream file;

    if (*entropy_cmd) {
      auto corpus = load(corpus_path, lines, strict, CorpusRole::knowledge);
      double h = markov_entropy(corpus, order);
      auto& out = open_out(file, out_path);
      char buf[64];
      out << "order,bits_per_char\n";
      std::snprintf(buf, sizeof buf, "%d,%.6f\n", order, h);
      out << buf;
    } else if (*ncc_cmd) {
      auto corpus = load(corpus_path, lines, strict, CorpusRole::knowledge);
      auto [knowledge, test] = split_corpus(corpus, test_fraction, seed);
      NccOptions opts;
      opts.length_weighted = length_weighted;
      opts.measure.huffman_include_table = !no_table;
      auto id = CompressorId::parse(compressor_name);
      auto& out = open_out(file, out_path);
      if (mode_name == "conditioning" || mode_name == "both") {
        opts.strategy = JointStrategy::conditioning;
        write_ncc_csv(ncc_bound(id, test, knowledge, opts), out);
      }
      if (mode_name == "concat" || mode_name == "both") {
        opts.strategy = JointStrategy::concatenation;
        write_ncc_csv(ncc_bound(id, test, knowledge, opts), out);
      }
      if (mode_name != "conditioning" && mode_name != "concat" && mode_name != "both") {
        std::cerr << "unknown --mode: " << mode_name << "\n";
        return 1;
      }
    } else if (*ber_cmd) {
      auto grid = parse_grid(snr_grid);
      auto& out = open_out(file, out_path);
      out << "snr_db,trials,bit_errors,ber,stderr\n";
      char buf[160];
      for (double snr : grid) {
        auto est = ber_uncoded(ChannelConfig{snr, seed}, n_bits);
        std::snprintf(buf, sizeof buf, "%.6g,%llu,%llu,%.6g,%.6g\n", snr,
                      static_cast<unsigned long long>(est.bits), static_cast<unsigned long long>(est.errors),
                      est.ber, est.stderr_);
        out << buf;
      }
    } else if (*sweep_cmd) {
      auto corpus = load(corpus_path, lines, strict, CorpusRole::knowledge);
      auto [knowledge, test] = split_corpus(corpus, test_fraction, seed);
      std::vector<SchemeSpec> schemes;
      std::stringstream ss(schemes_arg);
      std::string item;
      while (std::getline(ss, item, ',')) schemes.push_back(SchemeSpec::parse(item));
      SweepOptions opts;
      opts.snr_grid_db = parse_grid(snr_grid);
      opts.epsilon = epsilon;
      opts.min_words = trials;
      opts.seed = seed;
      auto report = sweep(schemes, knowledge, test, opts);
      auto& out = open_out(file, out_path);
      write_sweep_csv(report, seed, out);
      bool any_feasible = false;
      for (const auto& r : report.records) any_feasible = any_feasible || r.feasible;
      if (!any_feasible) return 2;
    } else if (*fig4_cmd) {
      std::vector<std::pair<std::string, Corpus>> corpora;
      for (const auto& path : corpus_list)
        corpora.push_back({path, load(path, lines, strict, CorpusRole::knowledge)});
      auto id = CompressorId::parse(compressor_name);
      auto rows = report_fig4(corpora, id, test_fraction, seed);
      auto& out = open_out(file, out_path);
      write_fig4_csv(rows, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
