#ifndef APRAC_H
#define APRAC_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#define APR_RENDER_MARK_CROSSINGS 1

#define APR_RENDER_COLOR_BY_FACTOR 2

typedef enum AprStatus {
  APR_STATUS_OK = 0,
  APR_STATUS_NULL_POINTER = 1,
  APR_STATUS_INVALID_UTF8 = 2,
  APR_STATUS_PARSE_ERROR = 3,
  APR_STATUS_INVALID_ARGUMENT = 4,
  APR_STATUS_LAYOUT_FAILED = 5,
  APR_STATUS_PANIC = 6,
} AprStatus;

typedef enum AprMode {
  APR_MODE_RAC = 0,
  APR_MODE_APRAC = 1,
  APR_MODE_SLOPE_RAC = 2,
} AprMode;

typedef enum AprFamily {
  APR_FAMILY_APRAC0 = 0,
  APR_FAMILY_APRAC1 = 1,
  APR_FAMILY_APRAC2 = 2,
} AprFamily;

// Opaque drawing handle.
typedef struct AprDrawing AprDrawing;

// Opaque graph handle.
typedef struct AprGraph AprGraph;

// Summary of a validation run.
typedef struct AprValidation {
  bool passed;
  uint64_t violations;
  // Saturates at `UINT64_MAX`.
  uint64_t crossings;
  bool density_exceeded;
} AprValidation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failure on this thread. Valid until the next call
// into the library from the same thread; never null.
const char *apr_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void apr_string_free(char *s);

// Creates an edgeless graph on `n` vertices.
//
// # Safety
// `out` must be a valid pointer.
enum AprStatus apr_graph_new(uintptr_t n, struct AprGraph **out);

// # Safety
// `g` must be a valid graph handle.
enum AprStatus apr_graph_add_edge(struct AprGraph *g, uintptr_t u, uintptr_t v);

// Parses the text graph format (`n <count>` then `e <u> <v>` lines).
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum AprStatus apr_graph_parse(const char *text, struct AprGraph **out);

// # Safety
// `g` must be a valid graph handle and `out` a valid pointer.
enum AprStatus apr_graph_serialize(const struct AprGraph *g, char **out);

// # Safety
// `g` must be null or a valid graph handle.
uintptr_t apr_graph_vertex_count(const struct AprGraph *g);

// # Safety
// `g` must be null or a valid graph handle.
uintptr_t apr_graph_edge_count(const struct AprGraph *g);

// # Safety
// `g` must be null or a handle from this library, not yet freed.
void apr_graph_free(struct AprGraph *g);

// Draws a graph of maximum degree 8 with at most two bends per edge.
//
// # Safety
// `g` must be a valid graph handle and `out` a valid pointer.
enum AprStatus apr_draw(const struct AprGraph *g, bool keep_augmented, struct AprDrawing **out);

// Parses the text drawing format (`v <id> <x> <y>` and `e <u> <v> [b <x> <y>]...`).
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum AprStatus apr_drawing_parse(const char *text, struct AprDrawing **out);

// # Safety
// `d` must be a valid drawing handle and `out` a valid pointer.
enum AprStatus apr_drawing_serialize(const struct AprDrawing *d, char **out);

// # Safety
// `d` must be null or a valid drawing handle.
uintptr_t apr_drawing_vertex_count(const struct AprDrawing *d);

// # Safety
// `d` must be null or a valid drawing handle.
uintptr_t apr_drawing_edge_count(const struct AprDrawing *d);

// # Safety
// `d` must be null or a handle from this library, not yet freed.
void apr_drawing_free(struct AprDrawing *d);

// Validates a drawing. `slopes` is only read in slope-rac mode, where it is required
// (e.g. `"0;1;-2/3"`). When `report` is non-null it receives the text report.
//
// # Safety
// `d` must be a valid drawing handle, `out` a valid pointer, `slopes` null or a
// NUL-terminated string and `report` null or a valid pointer.
enum AprStatus apr_validate(const struct AprDrawing *d,
                            uintptr_t bends,
                            enum AprMode mode,
                            const char *slopes,
                            bool strict_simple,
                            struct AprValidation *out,
                            char **report);

// Generates a member of a dense family together with its drawing.
//
// # Safety
// `graph` and `drawing` must be valid pointers.
enum AprStatus apr_generate(enum AprFamily family,
                            uintptr_t param,
                            struct AprGraph **graph,
                            struct AprDrawing **drawing);

// Renders a drawing as SVG. `flags` is a combination of the `APR_RENDER_*` bits.
//
// # Safety
// `d` must be a valid drawing handle and `out` a valid pointer.
enum AprStatus apr_render_svg(const struct AprDrawing *d,
                              uint32_t scale,
                              uint32_t flags,
                              char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* APRAC_H */
