#pragma once

#include <filesystem>
#include <string>
#include <unordered_set>
#include <vector>

namespace stylo {

// Editable word/phrase inventories shipped as data files. Sizes are part of
// the contract: 390 function words, 69 function phrases, 61 contracted forms
// with 62 expanded forms, 18 punctuation marks.
struct FeatureLists {
    struct ContractionPair {
        std::string contracted;
        std::vector<std::string> expanded;  // alternatives (e.g. that'd -> that would / that had)
    };

    std::vector<std::string> function_words;
    std::vector<std::string> function_phrases;
    std::vector<ContractionPair> contractions;
    std::vector<std::string> punctuation;  // inventory marks, one string each
    std::unordered_set<std::string> easy_words;

    std::size_t expanded_form_count() const;

    static FeatureLists load(const std::filesystem::path& data_dir);
};

// Build-tree default, overridable at runtime.
std::filesystem::path default_data_dir();

}  // namespace stylo
