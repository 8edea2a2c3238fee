#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stylo/static_features.hpp"

namespace stylo {

enum class GramUnit { Char, Token, Pos };
const char* to_string(GramUnit u);
GramUnit gram_unit_from_string(const std::string& s);

struct VectorizerConfig {
    GramUnit unit = GramUnit::Token;
    int n_lo = 1;
    int n_hi = 3;
    int max_features = 2000;
    double min_df = 0.1;       // fraction of training docs
    bool per_n_budget = false; // top max_features per n instead of pooled

    static VectorizerConfig char_defaults() { return {GramUnit::Char, 3, 6, 2000, 0.1, false}; }
    static VectorizerConfig token_defaults() { return {GramUnit::Token, 1, 3, 2000, 0.1, false}; }
    static VectorizerConfig pos_defaults() { return {GramUnit::Pos, 1, 3, 2000, 0.1, false}; }
    // Character 4-grams only, the PAN verification baseline.
    static VectorizerConfig pangrams() { return {GramUnit::Char, 4, 4, 2000, 0.1, false}; }
};

struct SparseVector {
    std::vector<std::pair<std::uint32_t, double>> entries;  // strictly increasing indices
    std::uint32_t dim = 0;

    double norm() const;
    void l2_normalize();  // zero vector stays zero
};

// N-gram sources for one doc, one line per utterance; n-grams never cross
// utterance boundaries.
struct GramSource {
    std::vector<std::string> char_lines;                  // lowercased raw text
    std::vector<std::vector<std::string>> token_lines;    // lowercased surfaces
    std::vector<std::vector<std::string>> pos_lines;      // UPOS tag names
};

GramSource make_gram_source(const DocAnalysis& doc, const TranscriptDoc& raw);

// All contiguous n-grams with multiplicity. Char grams are substrings;
// token/POS grams are space-joined.
std::map<std::string, int> extract_ngrams(const GramSource& src, GramUnit unit, int n);

struct VectorizerModel {
    VectorizerConfig config;
    std::size_t n_train = 0;
    std::vector<std::string> vocabulary;                  // index -> gram, lexicographic
    std::vector<std::size_t> doc_freq;                    // per column
    std::vector<double> idf;                              // ln((1+N)/(1+df)) + 1
    std::unordered_map<std::string, std::uint32_t> index; // gram -> column

    std::uint32_t dim() const { return static_cast<std::uint32_t>(vocabulary.size()); }
};

// Document frequencies pool every n in [n_lo, n_hi]; grams below
// ceil(min_df * N) are dropped; survivors ranked by total corpus count with
// lexicographic tie-break, top max_features kept.
VectorizerModel fit_vectorizer(std::span<const GramSource> train_docs,
                               const VectorizerConfig& config);

// Raw counts times idf, L2-normalized. Out-of-vocabulary grams are ignored.
SparseVector transform(const GramSource& doc, const VectorizerModel& model);

void save_vectorizer(const VectorizerModel& model, const std::filesystem::path& path);
VectorizerModel load_vectorizer(const std::filesystem::path& path);

}  // namespace stylo
