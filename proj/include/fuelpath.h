/* fuelpath.h - C API for the fuelpath techno-economic modeling engine.
 *
 * The engine is an opaque handle created from a JSON dataset document.
 * All functions return fp_status; on failure, fp_last_error() on the
 * engine (or fp_last_global_error() for creation failures) holds a
 * human-readable message. Strings returned through out-parameters are
 * heap-allocated and must be released with fp_string_free().
 */
#ifndef FUELPATH_H
#define FUELPATH_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fp_engine fp_engine;

typedef enum fp_status {
    FP_OK = 0,
    FP_ERR_IO = 1,
    FP_ERR_PARSE = 2,
    FP_ERR_SCHEMA = 3,
    FP_ERR_INVARIANT = 4,
    FP_ERR_REFERENCE = 5,
    FP_ERR_DOMAIN = 6,
    FP_ERR_VERIFY = 7,
    FP_ERR_BAD_ARGUMENT = 8
} fp_status;

/* ---- engine lifecycle ---- */

/* Create an engine from a JSON dataset document / file / the built-in
 * default dataset. *out is set on FP_OK only. */
fp_status fp_engine_create_from_json(const char* json, fp_engine** out);
fp_status fp_engine_create_from_file(const char* path, fp_engine** out);
fp_status fp_engine_create_builtin(fp_engine** out);
void fp_engine_free(fp_engine* engine);

/* Message for the most recent failed call on this engine. Owned by the
 * engine; valid until the next call on it. */
const char* fp_last_error(const fp_engine* engine);
/* Message for the most recent failed creation call (thread-local). */
const char* fp_last_global_error(void);

const char* fp_version(void);

/* ---- scalar operations ---- */

fp_status fp_crf(double wacc, int years, double* out);
fp_status fp_derating_factor(double wacc, int policy_years, int book_life, double* out);

/* Net LCOF of one pathway under a scenario (options may be NULL or "{}").
 * H2 pathways: USD/kg; SLF pathways: USD/gal. */
fp_status fp_pathway_lcof(fp_engine* engine, const char* pathway_id,
                          const char* options_json, double* out);

/* Lifecycle carbon intensity: kgCO2e/kg for H2, kgCO2e/MMBtu_LHV for SLF. */
fp_status fp_pathway_ci(fp_engine* engine, const char* pathway_id, double* out);

/* ---- reports ----
 *
 * options_json (all keys optional):
 *   {"z45_years": 0..15, "lcfs_price": n, "rin_d5": n, "rin_d3": n,
 *    "rin_d6": n, "fossil_price": n, "p6_dual_credit": bool,
 *    "p6_co2_sale_price": n, "format": "csv"|"json",
 *    "pathways": ["P1", ...]}
 *
 * The result document is JSON: {"files": [{"name": ..., "content": ...}]}.
 */
fp_status fp_report_lcof(fp_engine* engine, const char* options_json, char** out);
fp_status fp_report_sweep(fp_engine* engine, const char* options_json, char** out);
fp_status fp_report_lscm(fp_engine* engine, const char* options_json, char** out);

/* Re-runs the derivation oracles and golden-number checks. The result is
 * {"passed": bool, "failures": n, "checks": [...]}; returns FP_ERR_VERIFY
 * when checks fail (out is still written). */
fp_status fp_report_verify(fp_engine* engine, char** out);

void fp_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FUELPATH_H */
