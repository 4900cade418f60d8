#ifndef OILU_H
#define OILU_H

/*
 * C interface of the OILU numeral toolkit.
 *
 * Every function returns OILU_OK (0) on success or a negative error code.
 * Functions that produce text use a two-call convention: pass NULL (or a
 * too-small buffer) and the required size, including the terminating NUL,
 * is stored in *out_len together with OILU_ERR_INSUFFICIENT_BUFFER. Binary
 * outputs work the same way without the NUL.
 *
 * oilu_last_error_message()/oilu_last_error_detail() describe the most
 * recent failure on the calling thread (detail is a character position,
 * marker level or series iteration where one applies, -1 otherwise).
 *
 * Digit strings are decimal characters '0'..'9', outermost symbol first.
 * Hexadecimal input is accepted case-insensitively and emitted uppercase.
 */

#include <stddef.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#  ifdef OILU_BUILDING
#    define OILU_API __declspec(dllexport)
#  else
#    define OILU_API __declspec(dllimport)
#  endif
#else
#  define OILU_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
    OILU_OK = 0,
    OILU_ERR_INVALID_ARGUMENT = -1,
    OILU_ERR_EMPTY_INPUT = -2,
    OILU_ERR_INVALID_CHARACTER = -3,
    OILU_ERR_UNKNOWN_PAIR = -4,
    OILU_ERR_ODD_LENGTH = -5,
    OILU_ERR_STEP_DOMAIN = -6,
    OILU_ERR_MAX_LENGTH_EXCEEDED = -7,
    OILU_ERR_SIZE_TOO_SMALL = -8,
    OILU_ERR_BAD_IMAGE = -9,
    OILU_ERR_UNREADABLE_LEVEL = -10,
    OILU_ERR_BAD_RULE = -11,
    OILU_ERR_INSUFFICIENT_BUFFER = -12,
    OILU_ERR_IO = -13,
    OILU_ERR_INTERNAL = -99
};

OILU_API const char *oilu_version(void);
OILU_API const char *oilu_error_name(int code); /* e.g. "unknown_pair" */

OILU_API int oilu_last_error_code(void);
OILU_API long oilu_last_error_detail(void);
OILU_API const char *oilu_last_error_message(void);

/* --- digit-string algebra ------------------------------------------------ */

/* Rotate every digit by k counterclockwise quarter turns. */
OILU_API int oilu_facet(const char *digits, int k, char *out, size_t *out_len);

/* Newline-joined facet values in rotation order, duplicates collapsed. */
OILU_API int oilu_related_set(const char *digits, char *out, size_t *out_len);

/* Lexicographically smallest facet; *rotation receives the smallest k
 * reaching it. rotation may be NULL. */
OILU_API int oilu_canonical(const char *digits, char *out, size_t *out_len,
                            int *rotation);

OILU_API int oilu_display_energy(const char *digits, int *energy);
OILU_API int oilu_sevenseg_energy(const char *digits, int *energy);

/* --- seven-segment splitting ---------------------------------------------
 * strategy is 'a' (middle segment shared), 'b' (middle to the upper half)
 * or 'c' (middle to the lower half); base is 10 or 16. */

typedef struct oilu_split_entry {
    char digit;          /* '0'..'9', 'A'..'F' */
    unsigned char upper; /* OILU digits 0..9 */
    unsigned char lower;
    int replaced;        /* 1 when the strategy-a pair was substituted */
} oilu_split_entry;

/* Fills up to *count entries; *count is set to the table size (= base). */
OILU_API int oilu_split_table(char strategy, int base,
                              oilu_split_entry *entries, size_t *count);
OILU_API int oilu_split_digit(char digit, char strategy, int base,
                              oilu_split_entry *entry);
/* *digit receives the unique source digit of the pair, or
 * OILU_ERR_UNKNOWN_PAIR when the pair is not in the table's image. */
OILU_API int oilu_join_pair(int upper, int lower, char strategy, int base,
                            char *digit);
OILU_API int oilu_split_number(const char *digits, char strategy, int base,
                               char *out, size_t *out_len);
OILU_API int oilu_merge_number(const char *digits, char strategy, int base,
                               char *out, size_t *out_len);

/* --- series generation ----------------------------------------------------
 * rule is a comma-separated cyclic program of "split:a|b|c", "merge:a|b|c"
 * and "facet:0..3" steps. Generation stops early when a step leaves its
 * domain or the next value would exceed max_length; the partial series is
 * kept and the stop is reported through the accessors below. */

typedef struct oilu_series_st oilu_series_t;

OILU_API int oilu_series_generate(const char *seed, const char *rule,
                                  int base, int steps, size_t max_length,
                                  oilu_series_t **out);
OILU_API size_t oilu_series_count(const oilu_series_t *series);
OILU_API int oilu_series_value(const oilu_series_t *series, size_t index,
                               char *out, size_t *out_len);
/* OILU_OK when the series ran to completion, otherwise
 * OILU_ERR_STEP_DOMAIN or OILU_ERR_MAX_LENGTH_EXCEEDED. */
OILU_API int oilu_series_stop_code(const oilu_series_t *series);
OILU_API long oilu_series_stop_iteration(const oilu_series_t *series);
OILU_API const char *oilu_series_stop_message(const oilu_series_t *series);
OILU_API void oilu_series_destroy(oilu_series_t *series);

/* --- markers ---------------------------------------------------------------
 * A marker nests one glyph per digit on concentric squares, outermost digit
 * first; ids are 1 to 8 digits long. Rendering is deterministic: equal
 * inputs produce byte-identical SVG and raster output. */

typedef struct oilu_scene_st oilu_scene_t;
typedef struct oilu_raster_st oilu_raster_t;

OILU_API int oilu_scene_create(const char *id_digits, oilu_scene_t **out);
OILU_API size_t oilu_scene_stroke_count(const oilu_scene_t *scene);
/* Stroke rectangle in unit-square coordinates (center and extents). */
OILU_API int oilu_scene_stroke(const oilu_scene_t *scene, size_t index,
                               double *cx, double *cy,
                               double *width, double *height);
OILU_API int oilu_scene_svg(const oilu_scene_t *scene, int size,
                            char *out, size_t *out_len);
OILU_API int oilu_scene_rasterize(const oilu_scene_t *scene, int size,
                                  oilu_raster_t **out);
OILU_API void oilu_scene_destroy(oilu_scene_t *scene);

OILU_API int oilu_raster_width(const oilu_raster_t *raster, int *width);
OILU_API int oilu_raster_height(const oilu_raster_t *raster, int *height);
/* Grayscale byte at (x, y); 0 is ink, 255 is ground. */
OILU_API int oilu_raster_pixel(const oilu_raster_t *raster, int x, int y,
                               int *value);
OILU_API int oilu_raster_to_pgm(const oilu_raster_t *raster,
                                unsigned char *out, size_t *out_len);
OILU_API int oilu_raster_from_pgm(const unsigned char *data, size_t size,
                                  oilu_raster_t **out);
OILU_API int oilu_raster_save_pgm(const oilu_raster_t *raster,
                                  const char *path);
OILU_API int oilu_raster_load_pgm(const char *path, oilu_raster_t **out);
/* Reads `levels` nested glyphs from a clean square raster. */
OILU_API int oilu_raster_decode(const oilu_raster_t *raster, int levels,
                                char *out, size_t *out_len);
OILU_API void oilu_raster_destroy(oilu_raster_t *raster);

#ifdef __cplusplus
}
#endif

#endif /* OILU_H */
