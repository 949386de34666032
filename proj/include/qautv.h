/*
 * C interface to the prefix-replacement / quasi-automorphism library.
 *
 * Objects are opaque handles created and destroyed by the library.
 * Every function that can fail returns a qv_status; QV_OK is zero.
 * On failure qv_last_error() returns a message for the calling thread.
 * Strings returned through char** outputs are heap-allocated and must
 * be released with qv_string_free.
 */

#ifndef QAUTV_H
#define QAUTV_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qv_velem qv_velem;
typedef struct qv_qelem qv_qelem;

typedef enum qv_status {
  QV_OK = 0,
  QV_EPARSE = 1,
  QV_EINVALID_ANTICHAIN = 2,
  QV_EINCOMPLETE_COVER = 3,
  QV_ENOT_BIJECTION = 4,
  QV_EINCOMPLETE_INPUT = 5,
  QV_ENOT_A_MEMBER = 6,
  QV_EUNDEFINED_ON_VERTEX = 7,
  QV_EMALFORMED_DECOMPOSITION = 8,
  QV_EINVALID_DEPTH = 9,
  QV_EIS_TORSION = 10,
  QV_EHAS_NONTRIVIAL_FINITE_ORBITS = 11,
  QV_EINVALID_ORDER = 12,
  QV_EBOUND_EXCEEDED = 13,
  QV_EINVARIANT_FALSIFIED = 14,
  QV_ELIMIT_EXCEEDED = 15,
  QV_EINVALID_ARGUMENT = 16,
  QV_EINTERNAL = 17
} qv_status;

const char* qv_status_name(qv_status status);
const char* qv_last_error(void);
const char* qv_version(void);
void qv_string_free(char* s);

/* ---- prefix-replacement elements ---- */

qv_status qv_velem_parse_text(const char* text, qv_velem** out);
qv_status qv_velem_parse_json(const char* text, qv_velem** out);
qv_status qv_velem_to_text(const qv_velem* v, char** out);
qv_status qv_velem_to_json(const qv_velem* v, char** out);
qv_status qv_velem_identity(qv_velem** out);
qv_status qv_velem_random(uint64_t seed, size_t carets, qv_velem** out);
qv_status qv_velem_compose(const qv_velem* first, const qv_velem* second,
                           qv_velem** out);
qv_status qv_velem_inverse(const qv_velem* v, qv_velem** out);
qv_status qv_velem_power(const qv_velem* v, long long k, qv_velem** out);
qv_status qv_velem_equals(const qv_velem* a, const qv_velem* b, int* out);
qv_status qv_velem_is_identity(const qv_velem* v, int* out);
qv_status qv_velem_apply(const qv_velem* v, const char* word, char** out);
void qv_velem_free(qv_velem* v);

/* ---- quasi-automorphisms ---- */

qv_status qv_qelem_parse_json(const char* text, qv_qelem** out);
qv_status qv_qelem_to_json(const qv_qelem* q, char** out);
qv_status qv_qelem_identity(qv_qelem** out);
qv_status qv_qelem_random(uint64_t seed, size_t max_level, qv_qelem** out);
qv_status qv_qelem_compose(const qv_qelem* first, const qv_qelem* second,
                           qv_qelem** out);
qv_status qv_qelem_inverse(const qv_qelem* q, qv_qelem** out);
qv_status qv_qelem_equals(const qv_qelem* a, const qv_qelem* b, int* out);
qv_status qv_qelem_is_identity(const qv_qelem* q, int* out);
qv_status qv_qelem_apply(const qv_qelem* q, const char* word, char** out);
qv_status qv_qelem_cutoff_level(const qv_qelem* q, long long* out);
/* Cutoff level, violation set, cross-check set, both estimates. */
qv_status qv_qelem_cutoff_json(const qv_qelem* q, char** out);
/* Minimal decomposition triple (v_min, b, p) plus germ sets. */
qv_status qv_qelem_decompose_json(const qv_qelem* q, char** out);
void qv_qelem_free(qv_qelem* q);

/* ---- embeddings ---- */

qv_status qv_theta(const qv_velem* v, qv_qelem** out);
qv_status qv_phi(const qv_qelem* q, qv_velem** out);
qv_status qv_phi_at_level(const qv_qelem* q, size_t level, qv_velem** out);
qv_status qv_theta_well_defined(const qv_velem* v, size_t expansions,
                                uint64_t seed, int* out);
qv_status qv_phi_well_defined(const qv_qelem* q, size_t extra_levels,
                              int* out);

/* ---- dynamics ---- */

qv_status qv_dyn_fixed_json(const qv_velem* v, char** out);
qv_status qv_dyn_periods_json(const qv_velem* v, char** out);
qv_status qv_dyn_torsion_json(const qv_velem* v, char** out);
/* Stabilizes first; reports m, the exponent set of v^m, and its max. */
qv_status qv_dyn_spectrum_json(const qv_velem* v, char** out);
/* QV_EINVARIANT_FALSIFIED when the relation holds with |r| != |s| for
 * an infinite-order element. */
qv_status qv_dyn_conj_check_json(const qv_velem* v, const qv_velem* w,
                                 long long r, long long s, char** out);

/* ---- Baumslag-Solitar witnesses ---- */

qv_status qv_bs_gen(size_t m, int e, char** a_text, char** b_text,
                    char** report_json);
qv_status qv_bs_verify_json(size_t m, int e, size_t britton_length,
                            char** out);

/* ---- acceptance suite ---- */

qv_status qv_selfcheck(uint64_t seed, long long samples, int as_json,
                       char** report, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* QAUTV_H */
