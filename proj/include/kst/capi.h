#ifndef KST_CAPI_H
#define KST_CAPI_H

/* C interface to the knowledge-space library. Handles are opaque; every
 * function returns 0 on success, 1 on invalid input, 2 on an internal error.
 * On failure *error (when given) receives a message to release with
 * kst_string_free; output parameters are untouched. JSON outputs follow the
 * document formats described in the README. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define KST_OK 0
#define KST_ERR_INPUT 1
#define KST_ERR_INTERNAL 2

typedef struct kst_multimap kst_multimap;
typedef struct kst_structure kst_structure;

const char* kst_version(void);
void kst_string_free(char* s);

/* --- parsing and printing ------------------------------------------------ */

int kst_multimap_parse(const char* text, kst_multimap** out, char** error);
void kst_multimap_free(kst_multimap* mm);
int kst_multimap_to_json(const kst_multimap* mm, char** json, char** error);

int kst_structure_parse(const char* text, kst_structure** out, char** error);
void kst_structure_free(kst_structure* ks);
int kst_structure_to_json(const kst_structure* ks, char** json, char** error);

/* --- reports --------------------------------------------------------------
 * max_competencies bounds the enumeration during delineation; pass 0 for the
 * built-in default. */

int kst_validate(const kst_multimap* mm, char** json, char** error);

/* structure_out and json may each be NULL when not wanted. */
int kst_delineate(const kst_multimap* mm, size_t max_competencies,
                  kst_structure** structure_out, char** json, char** error);

int kst_classify(const kst_multimap* mm, size_t max_competencies, char** json,
                 char** error);
int kst_classify_structure(const kst_structure* ks, char** json, char** error);

int kst_separability(const kst_multimap* mm, size_t max_competencies, char** json,
                     char** error);

int kst_quotient(const kst_structure* ks, char** json, char** error);

/* state_items: the names of the items forming the state (may be empty). */
int kst_fringes(const kst_structure* ks, const char* const* state_items,
                size_t n_items, char** json, char** error);
int kst_fringes_with_witnesses(const kst_multimap* mm, size_t max_competencies,
                               const char* const* state_items, size_t n_items,
                               char** json, char** error);

int kst_merge(const kst_multimap* const* parts, size_t n_parts, int permissive,
              size_t max_competencies, char** json, char** error);

int kst_mesh(const kst_structure* parent, const kst_structure* const* parts,
             size_t n_parts, char** json, char** error);

int kst_restrict_skills(const kst_multimap* mm, const char* const* skills,
                        size_t n_skills, char** json, char** error);
int kst_restrict_items(const kst_multimap* mm, const char* const* items,
                       size_t n_items, char** json, char** error);

int kst_report(const kst_multimap* mm, size_t max_competencies, char** json,
               char** error);

#ifdef __cplusplus
}
#endif

#endif /* KST_CAPI_H */
