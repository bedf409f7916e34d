#ifndef COMPACTUM_H
#define COMPACTUM_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum CmStatus {
  CM_STATUS_OK = 0,
  CM_STATUS_NULL_POINTER = 1,
  CM_STATUS_INVALID_UTF8 = 2,
  CM_STATUS_PARSE_ERROR = 3,
  CM_STATUS_INVALID_GROUP = 4,
  CM_STATUS_INVALID_ARGUMENT = 5,
  CM_STATUS_INFINITE_GROUP = 6,
  CM_STATUS_BUDGET_EXHAUSTED = 7,
  CM_STATUS_GEOMETRY_ERROR = 8,
  CM_STATUS_PANIC = 9,
} CmStatus;

typedef enum CmVerdict {
  CM_VERDICT_PASS = 0,
  CM_VERDICT_FAIL = 1,
  CM_VERDICT_INCONCLUSIVE = 2,
} CmVerdict;

typedef enum CmComponent {
  CM_COMPONENT_V = 0,
  CM_COMPONENT_W = 1,
  CM_COMPONENT_M = 2,
  CM_COMPONENT_K = 3,
} CmComponent;

typedef enum CmAxis {
  CM_AXIS_X1 = 1,
  CM_AXIS_X2 = 2,
  CM_AXIS_X3 = 3,
  CM_AXIS_X4 = 4,
} CmAxis;

/**
 * Opaque group handle.
 */
typedef struct CmGroup CmGroup;

/**
 * Opaque scene handle.
 */
typedef struct CmScene CmScene;

/**
 * Outcome of [`cm_verify_finite`].
 */
typedef struct CmCertificate {
  /**
   * Order of the presented group; meaningful when `closed` is true.
   */
  uint64_t order_presented;
  bool closed;
  uint64_t order_target;
  bool surjective;
  bool relators_trivial;
  enum CmVerdict verdict;
  uint64_t rounds;
  uint64_t generators;
  uint64_t relators;
  uint64_t cosets_defined;
} CmCertificate;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *cm_last_error(void);

/**
 * Static version string.
 */
const char *cm_version(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void cm_string_free(char *s);

/**
 * Parses and validates a group spec in JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` valid for writes.
 */
enum CmStatus cm_group_from_json(const char *json, struct CmGroup **out);

/**
 * # Safety
 * `group` must be null or a handle from [`cm_group_from_json`] not yet freed.
 */
void cm_group_free(struct CmGroup *group);

/**
 * Writes the order of a finite group; `*finite` is false for infinite
 * groups and `*order` is then 0.
 *
 * # Safety
 * `group` must be a live handle; `order` and `finite` valid for writes.
 */
enum CmStatus cm_group_order(const struct CmGroup *group, uint64_t *order, bool *finite);

/**
 * Hex SHA-256 of the canonical spec JSON.
 *
 * # Safety
 * `group` must be a live handle and `out` valid for writes.
 */
enum CmStatus cm_group_hash(const struct CmGroup *group, char **out);

/**
 * Presentation text after `rounds` rounds of the relation stream.
 *
 * # Safety
 * `group` must be a live handle and `out` valid for writes.
 */
enum CmStatus cm_presentation_text(const struct CmGroup *group, size_t rounds, char **out);

/**
 * Certifies that a finite truncation of the presentation presents the
 * group. A completed run returns `CM_STATUS_OK` whatever the verdict.
 *
 * # Safety
 * `group` must be a live handle and `out` valid for writes.
 */
enum CmStatus cm_verify_finite(const struct CmGroup *group,
                               size_t max_cosets,
                               size_t max_rounds,
                               struct CmCertificate *out);

/**
 * Certified `m(n)`: the last relation containing generator `n`.
 *
 * # Safety
 * `group` must be a live handle and `out` valid for writes.
 */
enum CmStatus cm_m_of(const struct CmGroup *group, size_t n, size_t horizon, size_t *out);

/**
 * Builds `V`, `W`, `M` or `K` from the first `relations` relations.
 *
 * # Safety
 * `group` must be a live handle and `out` valid for writes.
 */
enum CmStatus cm_scene_build(const struct CmGroup *group,
                             size_t relations,
                             enum CmComponent component,
                             size_t horizon,
                             struct CmScene **out);

/**
 * Parses scene JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` valid for writes.
 */
enum CmStatus cm_scene_from_json(const char *json, struct CmScene **out);

/**
 * # Safety
 * `scene` must be null or a scene handle not yet freed.
 */
void cm_scene_free(struct CmScene *scene);

/**
 * Number of primitives, 0 for a null handle.
 *
 * # Safety
 * `scene` must be null or a live handle.
 */
size_t cm_scene_len(const struct CmScene *scene);

/**
 * Whether every defining point lies in the unit 4-cube.
 *
 * # Safety
 * `scene` must be a live handle and `out` valid for writes.
 */
enum CmStatus cm_scene_contained(const struct CmScene *scene, bool *out);

/**
 * # Safety
 * `scene` must be a live handle and `out` valid for writes.
 */
enum CmStatus cm_scene_to_json(const struct CmScene *scene, char **out);

/**
 * SVG of the section fixing `axis_a = value_a` and `axis_b = value_b`,
 * values given as `p/q` text.
 *
 * # Safety
 * `scene` must be a live handle, the values NUL-terminated strings and
 * `out` valid for writes.
 */
enum CmStatus cm_scene_slice_svg(const struct CmScene *scene,
                                 enum CmAxis axis_a,
                                 const char *value_a,
                                 enum CmAxis axis_b,
                                 const char *value_b,
                                 char **out);

/**
 * SVG of the projection onto `(axis_u, axis_v)`.
 *
 * # Safety
 * `scene` must be a live handle and `out` valid for writes.
 */
enum CmStatus cm_scene_project_svg(const struct CmScene *scene,
                                   enum CmAxis axis_u,
                                   enum CmAxis axis_v,
                                   char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COMPACTUM_H */
