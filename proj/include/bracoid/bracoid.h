#ifndef BRACOID_BRACOID_H
#define BRACOID_BRACOID_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(BRACOID_BUILDING)
#define BRACOID_API __attribute__((visibility("default")))
#else
#define BRACOID_API
#endif

typedef enum bracoid_status {
  BRACOID_OK = 0,
  BRACOID_CHECK_FAILED = 1,
  BRACOID_PARSE_ERROR = 2,
  BRACOID_RESOURCE_BOUND = 3,
  BRACOID_PRECONDITION = 4,
  BRACOID_KERNEL_BUG = 5,
  BRACOID_INVALID_ARGUMENT = 6,
  BRACOID_INTERNAL = 7
} bracoid_status;

/* A parsed manifest: group, hopf, gskb, bracoid, brace, cocycle or morphism. */
typedef struct bracoid_object bracoid_object;
typedef struct bracoid_report bracoid_report;
typedef struct bracoid_listing bracoid_listing;

/* Message for the last non-OK status on the calling thread; never NULL. */
BRACOID_API const char* bracoid_last_error(void);
BRACOID_API void bracoid_string_free(char* s);

/* 0 restores the BRACOID_MAX_DIM default. */
BRACOID_API void bracoid_set_max_dim(size_t n);
BRACOID_API size_t bracoid_max_dim(void);

BRACOID_API bracoid_status bracoid_object_parse(const char* text, bracoid_object** out);
BRACOID_API bracoid_status bracoid_object_load(const char* path, bracoid_object** out);
BRACOID_API void bracoid_object_free(bracoid_object* obj);
/* Static string such as "gskb". */
BRACOID_API const char* bracoid_object_kind(const bracoid_object* obj);
BRACOID_API bracoid_status bracoid_object_serialize(const bracoid_object* obj, char** out);
BRACOID_API int bracoid_object_equal(const bracoid_object* a, const bracoid_object* b);

/* Returns OK whenever a report was produced, whether or not it passes. */
BRACOID_API bracoid_status bracoid_check(const bracoid_object* obj, int full, bracoid_report** out);
BRACOID_API int bracoid_report_passed(const bracoid_report* r);
BRACOID_API bracoid_status bracoid_report_render(const bracoid_report* r, int machine, char** out);
BRACOID_API void bracoid_report_free(bracoid_report* r);

/* functor: L, P, R, T, Tprime, F, G, Q, tensor or opposite. tensor takes two
   inputs, the others one. */
BRACOID_API bracoid_status bracoid_build(const char* functor, const bracoid_object* const* inputs, size_t count,
                                         bracoid_object** out);

/* Both inputs are group manifests. Orders above max_order give
   RESOURCE_BOUND. */
BRACOID_API bracoid_status bracoid_enumerate(const bracoid_object* acting, const bracoid_object* carrier,
                                             size_t max_order, unsigned jobs, int iso_classes,
                                             bracoid_listing** out);
BRACOID_API size_t bracoid_listing_count(const bracoid_listing* l);
/* 0 unless iso classes were requested. */
BRACOID_API size_t bracoid_listing_class_count(const bracoid_listing* l);
BRACOID_API bracoid_status bracoid_listing_get(const bracoid_listing* l, size_t i, bracoid_object** out);
BRACOID_API bracoid_status bracoid_listing_render(const bracoid_listing* l, int machine, char** out);
BRACOID_API void bracoid_listing_free(bracoid_listing* l);

/* pair: "PR" (gskb, bracoid or gskb morphism input) or "FG" (cocycle or
   bracoid input). Refusals give PRECONDITION. */
BRACOID_API bracoid_status bracoid_roundtrip(const char* pair, const bracoid_object* obj, bracoid_report** out);

#ifdef __cplusplus
}
#endif

#endif
