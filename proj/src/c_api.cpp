#include "hamfix/hamfix.h"

#include <string>

#include "hamfix/commands.hpp"
#include "hamfix/errors.hpp"

struct hf_report {
  std::string json;
  std::string text;
  bool ok = true;
};

struct hf_novikov {
  hamfix::Novikov value;
  std::string text, valuation;
};

struct hf_ring {
  hamfix::RingPtr ring;
  std::string json;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_kind;

hf_status record(hf_status status, std::string_view kind, const std::string& message) {
  last_kind = kind;
  last_error = message;
  return status;
}

/// Runs f, mapping exceptions to status codes and the thread-local error.
template <class F>
hf_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    last_kind.clear();
    return HF_OK;
  } catch (const hamfix::Error& e) {
    return record(hamfix::is_hypothesis_failure(e.kind()) ? HF_E_HYPOTHESIS : HF_E_INPUT, hamfix::kind_name(e.kind()),
                  e.what());
  } catch (const nlohmann::json::exception& e) {
    return record(HF_E_INPUT, "ParseError", e.what());
  } catch (const std::exception& e) {
    return record(HF_E_INTERNAL, "Internal", e.what());
  } catch (...) {
    return record(HF_E_INTERNAL, "Internal", "unknown failure");
  }
}

hf_status null_argument() { return record(HF_E_INPUT, "InvalidInput", "null argument"); }

hamfix::io::Json parse_request(const char* text) {
  if (!text || !*text) return hamfix::io::Json::object();
  return hamfix::io::Json::parse(text);
}

}  // namespace

extern "C" {

const char* hf_version(void) { return "0.1.0"; }
const char* hf_last_error(void) { return last_error.c_str(); }
const char* hf_last_error_kind(void) { return last_kind.c_str(); }

hf_status hf_run(const char* command, const char* request_json, hf_report** out) {
  if (!command || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    hamfix::Report r = hamfix::run_command(command, parse_request(request_json));
    *out = new hf_report{r.data.dump(2), r.text, r.ok};
  });
}

const char* hf_report_json(const hf_report* report) { return report ? report->json.c_str() : ""; }
const char* hf_report_text(const hf_report* report) { return report ? report->text.c_str() : ""; }
int hf_report_ok(const hf_report* report) { return report && report->ok ? 1 : 0; }
void hf_report_free(hf_report* report) { delete report; }

hf_status hf_novikov_parse(const char* text, hf_novikov** out) {
  if (!text || !out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new hf_novikov{hamfix::parse_novikov(text), {}, {}}; });
}

hf_status hf_novikov_add(const hf_novikov* a, const hf_novikov* b, hf_novikov** out) {
  if (!a || !b || !out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new hf_novikov{a->value + b->value, {}, {}}; });
}

hf_status hf_novikov_mul(const hf_novikov* a, const hf_novikov* b, hf_novikov** out) {
  if (!a || !b || !out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new hf_novikov{a->value * b->value, {}, {}}; });
}

hf_status hf_novikov_exp(const hf_novikov* a, const char* cutoff, hf_novikov** out) {
  if (!a || !cutoff || !out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new hf_novikov{hamfix::exp_truncated(a->value, hamfix::parse_rational(cutoff)), {}, {}}; });
}

hf_status hf_novikov_invert(const hf_novikov* a, const char* cutoff, hf_novikov** out) {
  if (!a || !cutoff || !out) return null_argument();
  *out = nullptr;
  return guarded(
      [&] { *out = new hf_novikov{hamfix::invert_truncated(a->value, hamfix::parse_rational(cutoff)), {}, {}}; });
}

const char* hf_novikov_valuation(hf_novikov* a) {
  if (!a) return "";
  a->valuation = hamfix::to_string(a->value.valuation());
  return a->valuation.c_str();
}

const char* hf_novikov_to_string(hf_novikov* a) {
  if (!a) return "";
  a->text = hamfix::to_string(a->value);
  return a->text.c_str();
}

void hf_novikov_free(hf_novikov* a) { delete a; }

hf_status hf_ring_preset(const char* name, const char* params_json, hf_ring** out) {
  if (!name || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    hamfix::io::Json p = parse_request(params_json);
    std::string preset = name;
    hamfix::RingPtr ring;
    if (preset == "projective") {
      int n = hamfix::io::int_from(hamfix::io::member(p, "n"), "n");
      ring = hamfix::qh_projective(n, p.contains("p") ? hamfix::io::rational_from(p["p"], "p") : hamfix::Rational(n + 1));
    } else if (preset == "grassmannian") {
      int k = hamfix::io::int_from(hamfix::io::member(p, "k"), "k");
      int n = hamfix::io::int_from(hamfix::io::member(p, "n"), "n");
      ring = hamfix::qh_grassmannian(k, n, p.contains("p") ? hamfix::io::rational_from(p["p"], "p") : hamfix::Rational(n));
    } else {
      hamfix::fail(hamfix::ErrorKind::InvalidInput, "unknown ring preset '" + preset + "'");
    }
    *out = new hf_ring{ring, {}};
  });
}

hf_status hf_ring_from_json(const char* json, hf_ring** out) {
  if (!json || !out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new hf_ring{hamfix::io::ring_from_json(hamfix::io::Json::parse(json)), {}}; });
}

const char* hf_ring_to_json(hf_ring* ring) {
  if (!ring) return "";
  ring->json = hamfix::io::ring_to_json(*ring->ring).dump(2);
  return ring->json.c_str();
}

size_t hf_ring_dim(const hf_ring* ring) { return ring ? ring->ring->dim() : 0; }
void hf_ring_free(hf_ring* ring) { delete ring; }

}  // extern "C"
