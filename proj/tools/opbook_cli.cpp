#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "opbook.h"

namespace {

int fail(opbook_status st) {
  std::cerr << "error: " << opbook_status_message(st) << ": " << opbook_last_error()
            << "\n";
  return 1;
}

int with_seq(const std::string& text, int (*body)(opbook_seq*, void*), void* ctx) {
  opbook_seq* seq = nullptr;
  opbook_status st = opbook_seq_parse(text.c_str(), &seq);
  if (st != OPBOOK_OK) return fail(st);
  int rc = body(seq, ctx);
  opbook_seq_free(seq);
  return rc;
}

int progress_cb(long long done, long long total, void*) {
  std::fprintf(stderr, "\r%lld / %lld", done, total);
  if (done == total) std::fprintf(stderr, "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-sequence outerplanarity classifier and book embedder"};
  app.require_subcommand(1);

  std::string seq_text, dot_file, json_file;
  int oracle_limit = 0, sweep_max_n = 0, sweep_threads = 0;
  bool sweep_progress = false;

  auto* classify = app.add_subcommand("classify", "classify a degree sequence");
  classify->add_option("sequence", seq_text, "degrees in power notation")->required();

  auto* realize = app.add_subcommand("realize", "classify and emit the embedding");
  realize->add_option("sequence", seq_text, "degrees in power notation")->required();
  realize->add_option("--dot", dot_file, "also write a DOT rendering here");

  auto* verify = app.add_subcommand("verify", "re-check a stored classify result");
  verify->add_option("json", json_file, "path to a stored JSON result, - for stdin")
      ->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  oracle->add_option("sequence", seq_text, "degrees in power notation")->required();
  oracle->add_option("--limit", oracle_limit, "vertex cap override");

  auto* sweep = app.add_subcommand("sweep", "audit every sequence up to a size");
  sweep->add_option("--max-n", sweep_max_n, "largest sequence length")->required();
  sweep->add_option("--threads", sweep_threads, "worker count, 0 = hardware");
  sweep->add_flag("--progress", sweep_progress, "report progress on stderr");

  CLI11_PARSE(app, argc, argv);

  if (classify->parsed()) {
    return with_seq(
        seq_text,
        [](opbook_seq* seq, void*) {
          char* out = nullptr;
          opbook_status st = opbook_classify_json(seq, &out);
          if (st != OPBOOK_OK) return fail(st);
          std::cout << out;
          opbook_string_free(out);
          return 0;
        },
        nullptr);
  }

  if (realize->parsed()) {
    return with_seq(
        seq_text,
        [](opbook_seq* seq, void* ctx) {
          const std::string& dot_path = *static_cast<std::string*>(ctx);
          char* out = nullptr;
          opbook_status st = opbook_classify_json(seq, &out);
          if (st != OPBOOK_OK) return fail(st);
          std::cout << out;
          opbook_string_free(out);
          if (!dot_path.empty()) {
            char* dot = nullptr;
            st = opbook_realize_dot(seq, &dot);
            if (st != OPBOOK_OK) return fail(st);
            std::ofstream f(dot_path);
            if (!f) {
              std::cerr << "error: cannot write " << dot_path << "\n";
              opbook_string_free(dot);
              return 1;
            }
            f << dot;
            opbook_string_free(dot);
          }
          return 0;
        },
        &dot_file);
  }

  if (verify->parsed()) {
    std::string stored;
    if (json_file == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      stored = ss.str();
    } else {
      std::ifstream f(json_file);
      if (!f) {
        std::cerr << "error: cannot read " << json_file << "\n";
        return 1;
      }
      std::ostringstream ss;
      ss << f.rdbuf();
      stored = ss.str();
    }
    char* out = nullptr;
    opbook_status st = opbook_verify_json(stored.c_str(), &out);
    if (st != OPBOOK_OK) return fail(st);
    std::cout << out;
    opbook_string_free(out);
    return 0;
  }

  if (oracle->parsed()) {
    return with_seq(
        seq_text,
        [](opbook_seq* seq, void* ctx) {
          char* out = nullptr;
          opbook_status st = opbook_oracle_json(seq, *static_cast<int*>(ctx), &out);
          if (st != OPBOOK_OK) return fail(st);
          std::cout << out;
          opbook_string_free(out);
          return 0;
        },
        &oracle_limit);
  }

  if (sweep->parsed()) {
    char* out = nullptr;
    opbook_status st = opbook_sweep_json(sweep_max_n, sweep_threads,
                                         sweep_progress ? progress_cb : nullptr,
                                         nullptr, &out);
    if (st != OPBOOK_OK) return fail(st);
    std::cout << out;
    opbook_string_free(out);
    return 0;
  }

  return 1;
}
