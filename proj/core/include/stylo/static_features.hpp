#pragma once

#include <string>
#include <vector>

#include "stylo/corpus.hpp"
#include "stylo/feature_lists.hpp"
#include "stylo/textproc.hpp"

namespace stylo {

// Tokenization and tagging of one TranscriptDoc, computed once and shared by
// the feature extractors. Gold tags from the corpus override the default
// tagger when present.
struct DocAnalysis {
    Style style = Style::Normalized;
    std::vector<std::vector<Token>> utt_tokens;
    std::vector<std::vector<PosTag>> utt_tags;
    std::vector<Token> tokens;   // flattened
    std::vector<PosTag> tags;    // flattened
    std::size_t sentence_count = 0;
};

DocAnalysis analyze_doc(const TranscriptDoc& doc);

struct WordStats {
    double avg_word_len = 0.0;
    double short_ratio = 0.0;  // words with < 5 chars
    double long_ratio = 0.0;   // words with >= 8 chars
    double caps_ratio = 0.0;   // initial-uppercase words, TextLike only
};

struct TokenStats {
    double token_count = 0.0;
    double type_count = 0.0;
    double type_token_ratio = 0.0;
};

struct SyntaxStats {
    double sentence_count = 0.0;
    double avg_sentence_len = 0.0;  // tokens per sentence
    std::vector<double> function_word_freqs;
    std::vector<double> function_phrase_freqs;
    std::vector<double> pos_freqs;
};

struct Readability {
    double flesch_reading_ease = 0.0;
    double smog_index = 0.0;
    double flesch_kincaid_grade = 0.0;
    double coleman_liau_index = 0.0;
    double automated_readability_index = 0.0;
    double dale_chall_score = 0.0;
    double difficult_words = 0.0;
    double linsear_write = 0.0;
    double gunning_fog = 0.0;
    bool degenerate = false;  // no words or no sentences
};
inline constexpr int kNumReadability = 9;

struct HapaxRatios {
    double hapax_ratio = 0.0;
    double dis_ratio = 0.0;
};

struct ContractionCounts {
    double contracted = 0.0;
    double noncontracted = 0.0;
};

// Individual extractors. Word predicates differ deliberately: word-level
// stats and Yule's I use alphabetic Word tokens only; hapax ratios and
// readability include Number tokens as words.
std::vector<double> punct_frequencies(const std::vector<Token>& tokens,
                                      const std::vector<std::string>& inventory);
WordStats word_stats(const std::vector<Token>& tokens, Style style);
TokenStats token_stats(const std::vector<Token>& tokens);
SyntaxStats syntax_stats(const DocAnalysis& doc, const FeatureLists& lists);
double yules_i(const std::vector<Token>& tokens);
Readability readability(const DocAnalysis& doc, const FeatureLists& lists);
HapaxRatios hapax_ratios(const std::vector<Token>& tokens);
ContractionCounts contraction_counts(const DocAnalysis& doc, const FeatureLists& lists);

// All non-n-gram features of one doc. Vector layout (517 dims):
//   [0,18)    punctuation mark frequencies
//   [18,22)   avg word length, short/long/caps ratios
//   [22,25)   token count, type count, type:token ratio
//   [25,27)   sentence count, avg sentence length
//   [27,417)  function word frequencies
//   [417,486) function phrase frequencies
//   [486,503) POS tag frequencies
//   503       Yule's I
//   [504,513) readability measures
//   [513,515) hapax and dislegomena ratios
//   [515,517) contracted / non-contracted counts
struct StaticFeatures {
    std::vector<double> punct_freqs;
    WordStats words;
    TokenStats token;
    SyntaxStats syntax;
    double yule = 0.0;
    Readability read;
    HapaxRatios hapax;
    ContractionCounts contraction;
    bool degenerate = false;

    std::vector<double> to_vector() const;
};

StaticFeatures compute_static_features(const DocAnalysis& doc, const FeatureLists& lists);
std::vector<std::string> static_feature_names(const FeatureLists& lists);
std::size_t static_feature_dim(const FeatureLists& lists);

}  // namespace stylo
