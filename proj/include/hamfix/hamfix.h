#ifndef HAMFIX_H
#define HAMFIX_H

/* C interface to the hamfix library.  All objects are opaque handles owned by
 * the caller and released with the matching *_free function.  Strings
 * returned by accessors stay valid until the owning handle is freed.  The
 * message of the last failure on the calling thread is available through
 * hf_last_error() and hf_last_error_kind(). */

#include <stddef.h>

#if defined(HAMFIX_BUILDING_LIBRARY)
#define HF_API __attribute__((visibility("default")))
#else
#define HF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hf_status {
  HF_OK = 0,
  HF_E_INPUT = 1,      /* malformed request or domain error */
  HF_E_HYPOTHESIS = 2, /* well-formed input failing a hypothesis of the bound */
  HF_E_INTERNAL = 3
} hf_status;

typedef struct hf_report hf_report;
typedef struct hf_novikov hf_novikov;
typedef struct hf_ring hf_ring;

HF_API const char* hf_version(void);
HF_API const char* hf_last_error(void);
/* e.g. "NotFano", "Parse"; empty when the last call succeeded */
HF_API const char* hf_last_error_kind(void);

/* command: orbit, toric, ring, bound, ls, novikov, selfcheck.
 * request_json: a JSON object (may be NULL for selfcheck). */
HF_API hf_status hf_run(const char* command, const char* request_json, hf_report** out);
HF_API const char* hf_report_json(const hf_report* report);
HF_API const char* hf_report_text(const hf_report* report);
/* 0 when a selfcheck report contains failures, 1 otherwise */
HF_API int hf_report_ok(const hf_report* report);
HF_API void hf_report_free(hf_report* report);

HF_API hf_status hf_novikov_parse(const char* text, hf_novikov** out);
HF_API hf_status hf_novikov_add(const hf_novikov* a, const hf_novikov* b, hf_novikov** out);
HF_API hf_status hf_novikov_mul(const hf_novikov* a, const hf_novikov* b, hf_novikov** out);
HF_API hf_status hf_novikov_exp(const hf_novikov* a, const char* cutoff, hf_novikov** out);
HF_API hf_status hf_novikov_invert(const hf_novikov* a, const char* cutoff, hf_novikov** out);
/* "-inf" for zero */
HF_API const char* hf_novikov_valuation(hf_novikov* a);
HF_API const char* hf_novikov_to_string(hf_novikov* a);
HF_API void hf_novikov_free(hf_novikov* a);

/* name: projective | grassmannian; params_json e.g. {"n": 2} or {"k": 2, "n": 4, "p": 4} */
HF_API hf_status hf_ring_preset(const char* name, const char* params_json, hf_ring** out);
HF_API hf_status hf_ring_from_json(const char* json, hf_ring** out);
HF_API const char* hf_ring_to_json(hf_ring* ring);
HF_API size_t hf_ring_dim(const hf_ring* ring);
HF_API void hf_ring_free(hf_ring* ring);

#ifdef __cplusplus
}
#endif

#endif
