/* C interface to the degree-sequence book-embedding library.
 *
 * All functions returning opbook_status leave their outputs untouched on
 * failure; a human-readable reason is available from opbook_last_error()
 * (thread-local). Strings returned through char** outputs are heap-allocated
 * and must be released with opbook_string_free().
 */
#ifndef OPBOOK_H
#define OPBOOK_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  OPBOOK_OK = 0,
  OPBOOK_EPARSE = 1,    /* malformed sequence or JSON text */
  OPBOOK_EINVALID = 2,  /* structurally valid input outside an operation's domain */
  OPBOOK_ETOOLARGE = 3, /* oracle size limit exceeded */
  OPBOOK_EINTERNAL = 4
} opbook_status;

typedef struct opbook_seq opbook_seq;

/* Parse power notation ("6^2 5^4 4 3^2 2^6" or comma separated). */
opbook_status opbook_seq_parse(const char* text, opbook_seq** out);
void opbook_seq_free(opbook_seq* seq);
int opbook_seq_len(const opbook_seq* seq);

/* Run the classifier; the JSON carries the verdict, certificate or embedding,
 * and the sequence statistics. */
opbook_status opbook_classify_json(const opbook_seq* seq, char** json_out);

/* DOT rendering of a realized classification; OPBOOK_EINVALID when the
 * verdict carries no embedding. */
opbook_status opbook_realize_dot(const opbook_seq* seq, char** dot_out);

/* Re-verify a stored classify result (as produced by opbook_classify_json). */
opbook_status opbook_verify_json(const char* stored_json, char** report_out);

/* Brute-force ground truth; limit <= 0 means the built-in default. */
opbook_status opbook_oracle_json(const opbook_seq* seq, int limit, char** json_out);

/* Exhaustive audit of every sequence with n <= max_n. progress may be NULL;
 * returning nonzero from it aborts the sweep (OPBOOK_EINVALID). threads <= 0
 * picks the hardware count. */
typedef int (*opbook_progress_fn)(long long done, long long total, void* user);
opbook_status opbook_sweep_json(int max_n, int threads, opbook_progress_fn progress,
                                void* user, char** json_out);

void opbook_string_free(char* s);
const char* opbook_status_message(opbook_status st);
const char* opbook_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* OPBOOK_H */
