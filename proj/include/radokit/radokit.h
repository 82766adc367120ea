/*
 * radokit C API.
 *
 * Objects are opaque handles created by rk_*_parse / rk_*_from_* and released
 * with the matching rk_*_free. Every call returns an rk_status; on failure the
 * message is available from rk_last_error() (thread-local, valid until the
 * next call on the same thread). Results are returned as UTF-8 JSON strings
 * that the caller releases with rk_string_free. Exact integers that may exceed
 * 64 bits are passed in and out as decimal strings.
 */
#ifndef RADOKIT_H
#define RADOKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RADOKIT_BUILDING)
#    define RK_API __declspec(dllexport)
#  else
#    define RK_API __declspec(dllimport)
#  endif
#else
#  define RK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rk_status {
    RK_OK = 0,
    RK_BUDGET_EXHAUSTED = 1,
    RK_ERR_INVALID_ARGUMENT = 2,
    RK_ERR_PARSE = 3,
    RK_ERR_OVERFLOW = 4,
    RK_ERR_DOMAIN = 5,
    RK_ERR_IO = 6,
    RK_ERR_VERIFICATION = 7,
    RK_ERR_INTERNAL = 8
} rk_status;

typedef struct rk_equation rk_equation;
typedef struct rk_coloring rk_coloring;

typedef struct rk_search_options {
    uint64_t max_nodes;   /* 0 = unlimited */
    double max_seconds;   /* 0 = unlimited */
    unsigned threads;     /* 0 or 1 = sequential */
    int distinct;         /* only count solutions with distinct values */
    const int * seed;     /* optional colors of 1..seed_len */
    size_t seed_len;
} rk_search_options;

typedef struct rk_fan_budget {
    int64_t max_step;
    int64_t max_base;     /* 0 = coloring domain */
    uint64_t max_checks;  /* 0 = unlimited */
} rk_fan_budget;

RK_API const char * rk_version(void);
RK_API const char * rk_last_error(void);
RK_API const char * rk_status_name(rk_status status);
RK_API void rk_string_free(char * s);

/* Equations */
RK_API rk_status rk_equation_parse(const char * text, rk_equation ** out);
RK_API rk_status rk_equation_from_json(const char * json, rk_equation ** out);
RK_API rk_status rk_equation_family(int n, rk_equation ** out);
RK_API rk_status rk_equation_at(int n, rk_equation ** out);
RK_API void rk_equation_free(rk_equation * eq);
RK_API size_t rk_equation_size(const rk_equation * eq);
RK_API rk_status rk_equation_json(const rk_equation * eq, char ** json);
RK_API rk_status rk_equation_is_regular(const rk_equation * eq, int * regular, char ** json);
/* max_element <= 0 means no restriction; limit 0 means unlimited. */
RK_API rk_status rk_equation_solutions(const rk_equation * eq, int64_t max_value, int64_t max_element, int distinct,
    size_t limit, char ** json);

/* Colorings */
RK_API rk_status rk_coloring_from_spec(const char * spec, int64_t domain_bound, rk_coloring ** out);
RK_API rk_status rk_coloring_from_array(int num_colors, const int * colors, size_t length, rk_coloring ** out);
RK_API rk_status rk_coloring_load(const char * path, rk_coloring ** out);
RK_API rk_status rk_coloring_store(const rk_coloring * c, const char * path);
RK_API void rk_coloring_free(rk_coloring * c);
RK_API int rk_coloring_num_colors(const rk_coloring * c);
RK_API int64_t rk_coloring_domain_bound(const rk_coloring * c);
RK_API rk_status rk_coloring_color_of(const rk_coloring * c, int64_t x, int * color);
/* Coloring file text: "r N\n" followed by the color indices. */
RK_API rk_status rk_coloring_text(const rk_coloring * c, char ** text);
RK_API rk_status rk_coloring_info(const rk_coloring * c, char ** json);
RK_API rk_status rk_coloring_verify(const rk_coloring * c, const rk_equation * eq, int64_t up_to, unsigned threads,
    int distinct, int * avoiding, char ** json);

/* Structures. Searches that run out of budget return RK_BUDGET_EXHAUSTED and
 * still fill *json. */
RK_API rk_status rk_pigeonhole_powers(const rk_coloring * c, int n, char ** json);
RK_API rk_status rk_find_progression(const rk_coloring * c, int64_t length, int64_t search_bound, char ** json);
RK_API rk_status rk_product_coloring(const rk_coloring * c, int64_t multiplier_bound, rk_coloring ** out, char ** json);
/* family_n >= 2 selects the powers-of-two family; otherwise family_eq selects
 * the coefficient-pair family of that equation. */
RK_API rk_status rk_find_fan(const rk_coloring * c, int family_n, const rk_equation * family_eq, int64_t radius,
    int64_t multiplier, const rk_fan_budget * budget, char ** json);
RK_API rk_status rk_fan_chain(const rk_coloring * c, int family_n, const rk_equation * family_eq, int64_t radius,
    int64_t multiplier_bound, int64_t half_length, uint64_t max_progressions, char ** json);

/* Constructions */
RK_API rk_status rk_build_theorem1(int n, int j, const char * b, const char * d, char ** json);
RK_API rk_status rk_build_at(int n, int i, const char * x, char ** json);
/* base: comma-separated solution of eq; extra: comma-separated rationals b1..bk. */
RK_API rk_status rk_build_extension(const rk_equation * eq, const char * base, const char * extra, const char * d,
    char ** json);
/* i < j are 1-based. */
RK_API rk_status rk_build_hyperplane(const rk_equation * eq, size_t i, size_t j, const char * k, const char * d,
    char ** json);
RK_API rk_status rk_prove_theorem1(const rk_coloring * c, int n, const rk_fan_budget * budget, char ** json);
RK_API rk_status rk_prove_at(const rk_coloring * c, int n, char ** json);
RK_API rk_status rk_prove_hyperplane(const rk_coloring * c, const rk_equation * eq, const rk_fan_budget * budget,
    char ** json);

/* Search */
RK_API rk_status rk_search_avoid(const rk_equation * eq, int num_colors, int64_t bound, const rk_search_options * options,
    char ** json);
RK_API rk_status rk_search_rado(const rk_equation * eq, int num_colors, int64_t max_n, const rk_search_options * options,
    char ** json);
RK_API rk_status rk_search_dor(const rk_equation * eq, int r_max, int64_t evidence_bound,
    const rk_search_options * options, char ** json);

#ifdef __cplusplus
}
#endif

#endif
