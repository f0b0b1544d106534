#include "opbook.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "opbook/classifier.hpp"
#include "opbook/json_io.hpp"
#include "opbook/oracle.hpp"
#include "opbook/parse.hpp"
#include "opbook/sweep.hpp"

using opbook::DegreeSequence;

struct opbook_seq {
  DegreeSequence d;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Run op(), translating exceptions into status codes.
template <typename F>
opbook_status guarded(F&& op) {
  try {
    return op();
  } catch (const opbook::TooLarge& e) {
    g_last_error = e.what();
    return OPBOOK_ETOOLARGE;
  } catch (const opbook::PreconditionFailed& e) {
    g_last_error = e.what();
    return OPBOOK_EINVALID;
  } catch (const opbook::InternalError& e) {
    g_last_error = e.what();
    return OPBOOK_EINTERNAL;
  } catch (const opbook::Error& e) {
    g_last_error = e.what();
    return OPBOOK_EPARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OPBOOK_EINTERNAL;
  }
}

}  // namespace

extern "C" {

opbook_status opbook_seq_parse(const char* text, opbook_seq** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return OPBOOK_EPARSE;
  }
  return guarded([&] {
    DegreeSequence d = opbook::parse_sequence(text);
    *out = new opbook_seq{std::move(d)};
    return OPBOOK_OK;
  });
}

void opbook_seq_free(opbook_seq* seq) { delete seq; }

int opbook_seq_len(const opbook_seq* seq) { return seq ? seq->d.n() : 0; }

opbook_status opbook_classify_json(const opbook_seq* seq, char** json_out) {
  if (!seq || !json_out) {
    g_last_error = "null argument";
    return OPBOOK_EINVALID;
  }
  return guarded([&] {
    opbook::Outcome out = opbook::classify(seq->d);
    *json_out = dup_string(opbook::outcome_to_json(seq->d, out));
    return OPBOOK_OK;
  });
}

opbook_status opbook_realize_dot(const opbook_seq* seq, char** dot_out) {
  if (!seq || !dot_out) {
    g_last_error = "null argument";
    return OPBOOK_EINVALID;
  }
  return guarded([&] {
    opbook::Outcome out = opbook::classify(seq->d);
    if (!out.embedding) {
      g_last_error = "sequence has no realization to draw";
      return OPBOOK_EINVALID;
    }
    *dot_out = dup_string(opbook::embedding_to_dot(*out.embedding));
    return OPBOOK_OK;
  });
}

opbook_status opbook_verify_json(const char* stored_json, char** report_out) {
  if (!stored_json || !report_out) {
    g_last_error = "null argument";
    return OPBOOK_EINVALID;
  }
  return guarded([&] {
    *report_out = dup_string(opbook::verify_json(stored_json));
    return OPBOOK_OK;
  });
}

opbook_status opbook_oracle_json(const opbook_seq* seq, int limit, char** json_out) {
  if (!seq || !json_out) {
    g_last_error = "null argument";
    return OPBOOK_EINVALID;
  }
  return guarded([&] {
    std::optional<int> lim;
    if (limit > 0) lim = limit;
    bool outerplanaric = opbook::oracle::is_outerplanaric_bf(seq->d, lim);
    nlohmann::ordered_json j;
    j["input"] = seq->d.degrees();
    j["outerplanaric"] = outerplanaric;
    *json_out = dup_string(j.dump(2) + "\n");
    return OPBOOK_OK;
  });
}

opbook_status opbook_sweep_json(int max_n, int threads, opbook_progress_fn progress,
                                void* user, char** json_out) {
  if (!json_out || max_n < 2) {
    g_last_error = "max_n must be at least 2";
    return OPBOOK_EINVALID;
  }
  return guarded([&] {
    bool aborted = false;
    std::function<bool(long long, long long)> cb;
    if (progress)
      cb = [&](long long done, long long total) {
        if (progress(done, total, user) != 0) {
          aborted = true;
          return false;
        }
        return true;
      };
    opbook::SweepResult res = opbook::run_sweep(max_n, threads, false, cb);
    if (aborted) {
      g_last_error = "sweep aborted by progress callback";
      return OPBOOK_EINVALID;
    }
    nlohmann::ordered_json j;
    j["max_n"] = max_n;
    j["total"] = res.counts.total;
    j["not_graphic"] = res.counts.not_graphic;
    j["forest"] = res.counts.forest;
    j["realized"] = res.counts.realized;
    j["not_outerplanaric"] = res.counts.not_outerplanaric;
    j["oracle_checked"] = res.counts.oracle_checked;
    j["ok"] = res.ok();
    nlohmann::ordered_json viols = nlohmann::ordered_json::array();
    for (const auto& v : res.violations) {
      nlohmann::ordered_json vj;
      vj["degrees"] = v.degrees;
      vj["sequence"] = opbook::power_notation(v.degrees);
      vj["what"] = v.what;
      viols.push_back(std::move(vj));
    }
    j["violations"] = std::move(viols);
    *json_out = dup_string(j.dump(2) + "\n");
    return OPBOOK_OK;
  });
}

void opbook_string_free(char* s) { std::free(s); }

const char* opbook_status_message(opbook_status st) {
  switch (st) {
    case OPBOOK_OK: return "ok";
    case OPBOOK_EPARSE: return "parse error";
    case OPBOOK_EINVALID: return "invalid input";
    case OPBOOK_ETOOLARGE: return "input too large";
    case OPBOOK_EINTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* opbook_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
