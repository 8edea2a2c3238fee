#include "stylo/feature_lists.hpp"

#include <algorithm>
#include <fstream>

#include "stylo/errors.hpp"

#ifndef STYLO_DEFAULT_DATA_DIR
#define STYLO_DEFAULT_DATA_DIR "core/data"
#endif

namespace stylo {

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open data file: " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

void check_size(const char* what, std::size_t got, std::size_t want) {
    if (got != want)
        throw DataError(std::string(what) + ": expected " + std::to_string(want) +
                        " entries, found " + std::to_string(got));
}

}  // namespace

std::size_t FeatureLists::expanded_form_count() const {
    std::size_t n = 0;
    for (const auto& p : contractions) n += p.expanded.size();
    return n;
}

FeatureLists FeatureLists::load(const std::filesystem::path& dir) {
    FeatureLists lists;
    lists.function_words = read_lines(dir / "function_words.txt");
    check_size("function_words.txt", lists.function_words.size(), 390);

    lists.function_phrases = read_lines(dir / "function_phrases.txt");
    check_size("function_phrases.txt", lists.function_phrases.size(), 69);

    for (const auto& line : read_lines(dir / "contractions.tsv")) {
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw DataError("contractions.tsv: expected contracted TAB expanded: " + line);
        ContractionPair pair;
        pair.contracted = line.substr(0, tab);
        std::string rest = line.substr(tab + 1);
        std::size_t pos = 0;
        while (true) {
            std::size_t bar = rest.find('|', pos);
            pair.expanded.push_back(rest.substr(pos, bar - pos));
            if (bar == std::string::npos) break;
            pos = bar + 1;
        }
        lists.contractions.push_back(std::move(pair));
    }
    check_size("contractions.tsv", lists.contractions.size(), 61);
    check_size("contractions.tsv expanded forms", lists.expanded_form_count(), 62);

    lists.punctuation = read_lines(dir / "punctuation.txt");
    check_size("punctuation.txt", lists.punctuation.size(), 18);

    for (auto& w : read_lines(dir / "easy_words.txt")) {
        std::transform(w.begin(), w.end(), w.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        lists.easy_words.insert(std::move(w));
    }
    if (lists.easy_words.empty()) throw DataError("easy_words.txt is empty");

    return lists;
}

std::filesystem::path default_data_dir() { return STYLO_DEFAULT_DATA_DIR; }

}  // namespace stylo
