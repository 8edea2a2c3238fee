#include "stylo/static_features.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "stylo/errors.hpp"

namespace stylo {

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

bool is_word(const Token& t) { return t.kind == TokenKind::Word; }
bool is_lexical(const Token& t) {
    return t.kind == TokenKind::Word || t.kind == TokenKind::Number;
}

bool all_hyphens(const std::string& s) {
    return !s.empty() && s.find_first_not_of('-') == std::string::npos;
}

// Greedy left-to-right non-overlapping matches of `phrase` (already split
// into words) against the lowered token sequence of one utterance.
int count_phrase(const std::vector<Token>& tokens, const std::vector<std::string>& phrase) {
    if (phrase.empty() || tokens.size() < phrase.size()) return 0;
    int count = 0;
    std::size_t i = 0;
    while (i + phrase.size() <= tokens.size()) {
        bool match = true;
        for (std::size_t k = 0; k < phrase.size(); ++k) {
            if (tokens[i + k].lower != phrase[k]) {
                match = false;
                break;
            }
        }
        if (match) {
            ++count;
            i += phrase.size();
        } else {
            ++i;
        }
    }
    return count;
}

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && s[i] == ' ') ++i;
        std::size_t j = s.find(' ', i);
        if (j == std::string::npos) j = s.size();
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

DocAnalysis analyze_doc(const TranscriptDoc& doc) {
    DocAnalysis a;
    a.style = doc.style;
    for (const auto& utt : doc.utterances) {
        std::vector<Token> toks = tokenize(utt.text, doc.style);
        std::vector<PosTag> tags;
        if (!utt.gold_tags.empty()) {
            if (utt.gold_tags.size() != toks.size())
                throw DataError("gold tags for " + doc.key() + " utterance " +
                                std::to_string(utt.index) + " have " +
                                std::to_string(utt.gold_tags.size()) + " entries but tokenization has " +
                                std::to_string(toks.size()));
            tags.reserve(toks.size());
            for (const auto& g : utt.gold_tags) tags.push_back(pos_tag_from_string(g));
        } else {
            tags = pos_tag(toks, doc.style);
        }
        a.sentence_count += split_sentences(utt.text, doc.style).size();
        a.tokens.insert(a.tokens.end(), toks.begin(), toks.end());
        a.tags.insert(a.tags.end(), tags.begin(), tags.end());
        a.utt_tokens.push_back(std::move(toks));
        a.utt_tags.push_back(std::move(tags));
    }
    return a;
}

std::vector<double> punct_frequencies(const std::vector<Token>& tokens,
                                      const std::vector<std::string>& inventory) {
    // Marks are counted inside Punct tokens and inside Word/Number tokens
    // (internal apostrophes, hyphens, number commas). Symbol and Annotation
    // tokens are excluded: "$" is a symbol, not punctuation, and annotation
    // brackets reflect the transcriber, not the speaker.
    std::string scan;
    for (const auto& t : tokens) {
        if (t.kind == TokenKind::Punct) {
            if (t.surface.size() >= 2 && all_hyphens(t.surface))
                scan += "\xE2\x80\x94";  // "--" pause marker counts as one em-dash
            else
                scan += t.surface;
        } else if (t.kind == TokenKind::Word || t.kind == TokenKind::Number) {
            scan += t.surface;
        }
        scan += '\n';
    }
    std::vector<double> freqs(inventory.size(), 0.0);
    for (std::size_t m = 0; m < inventory.size(); ++m) {
        const std::string& mark = inventory[m];
        if (mark.empty()) continue;
        std::size_t pos = 0;
        while ((pos = scan.find(mark, pos)) != std::string::npos) {
            freqs[m] += 1.0;
            pos += mark.size();
        }
    }
    return freqs;
}

WordStats word_stats(const std::vector<Token>& tokens, Style style) {
    WordStats s;
    double n = 0.0, total_len = 0.0, nshort = 0.0, nlong = 0.0, ncaps = 0.0;
    for (const auto& t : tokens) {
        if (!is_word(t)) continue;
        n += 1.0;
        double len = static_cast<double>(t.surface.size());
        total_len += len;
        if (len < 5) nshort += 1.0;
        if (len >= 8) nlong += 1.0;
        if (style == Style::TextLike && std::isupper(static_cast<unsigned char>(t.surface[0])))
            ncaps += 1.0;
    }
    if (n == 0.0) return s;
    s.avg_word_len = total_len / n;
    s.short_ratio = nshort / n;
    s.long_ratio = nlong / n;
    s.caps_ratio = ncaps / n;
    return s;
}

TokenStats token_stats(const std::vector<Token>& tokens) {
    TokenStats s;
    std::unordered_set<std::string> types;
    for (const auto& t : tokens) types.insert(t.lower);
    s.token_count = static_cast<double>(tokens.size());
    s.type_count = static_cast<double>(types.size());
    s.type_token_ratio = tokens.empty() ? 0.0 : s.type_count / s.token_count;
    return s;
}

SyntaxStats syntax_stats(const DocAnalysis& doc, const FeatureLists& lists) {
    SyntaxStats s;
    s.function_word_freqs.assign(lists.function_words.size(), 0.0);
    s.function_phrase_freqs.assign(lists.function_phrases.size(), 0.0);
    s.pos_freqs.assign(kNumPosTags, 0.0);

    s.sentence_count = static_cast<double>(doc.sentence_count);
    if (doc.sentence_count > 0)
        s.avg_sentence_len = static_cast<double>(doc.tokens.size()) / s.sentence_count;

    std::unordered_map<std::string, std::size_t> word_index;
    for (std::size_t i = 0; i < lists.function_words.size(); ++i)
        word_index.emplace(lists.function_words[i], i);
    for (const auto& t : doc.tokens) {
        if (!is_word(t)) continue;
        auto it = word_index.find(t.lower);
        if (it != word_index.end()) s.function_word_freqs[it->second] += 1.0;
    }

    for (std::size_t p = 0; p < lists.function_phrases.size(); ++p) {
        std::vector<std::string> phrase = split_words(lists.function_phrases[p]);
        for (const auto& utt : doc.utt_tokens)
            s.function_phrase_freqs[p] += count_phrase(utt, phrase);
    }

    for (PosTag tag : doc.tags) s.pos_freqs[static_cast<int>(tag)] += 1.0;
    return s;
}

double yules_i(const std::vector<Token>& tokens) {
    std::unordered_map<std::string, int> freq;
    double m1 = 0.0;
    for (const auto& t : tokens) {
        if (!is_word(t)) continue;
        ++freq[t.lower];
        m1 += 1.0;
    }
    double m2 = 0.0;
    for (const auto& [w, f] : freq) m2 += static_cast<double>(f) * f;
    if (m1 == 0.0 || m2 == m1) return 0.0;  // empty or all hapax
    return m1 * m1 / (m2 - m1);
}

Readability readability(const DocAnalysis& doc, const FeatureLists& lists) {
    Readability r;
    double words = 0.0, syllables = 0.0, letters = 0.0, chars_all = 0.0;
    double polysyllables = 0.0;
    std::unordered_set<std::string> difficult;
    std::vector<int> syllable_seq;

    for (const auto& t : doc.tokens) {
        chars_all += static_cast<double>(t.surface.size());
        if (!is_lexical(t)) continue;
        words += 1.0;
        int syl = count_syllables(t.surface);
        syllable_seq.push_back(syl);
        syllables += syl;
        if (syl >= 3) polysyllables += 1.0;
        for (char c : t.surface)
            if (is_alnum(c)) letters += 1.0;
        if (!lists.easy_words.count(t.lower)) difficult.insert(t.lower);
    }
    double sentences = static_cast<double>(doc.sentence_count);
    if (words == 0.0 || sentences == 0.0) {
        r.degenerate = true;
        return r;
    }

    double wps = words / sentences;        // words per sentence
    double spw = syllables / words;        // syllables per word

    r.flesch_reading_ease = 206.835 - 1.015 * wps - 84.6 * spw;
    r.smog_index = 1.0430 * std::sqrt(polysyllables * 30.0 / sentences) + 3.1291;
    r.flesch_kincaid_grade = 0.39 * wps + 11.8 * spw - 15.59;
    r.coleman_liau_index =
        0.058 * (letters / words * 100.0) - 0.296 * (sentences / words * 100.0) - 15.8;
    r.automated_readability_index = 4.71 * (chars_all / words) + 0.5 * wps - 21.43;

    double n_difficult = static_cast<double>(difficult.size());
    double pct_difficult = 100.0 * n_difficult / words;
    r.dale_chall_score = 0.1579 * pct_difficult + 0.0496 * wps;
    if (pct_difficult > 5.0) r.dale_chall_score += 3.6365;
    r.difficult_words = n_difficult;

    // Linsear Write over the first 100 words: easy (<3 syllables) score 1,
    // hard score 3; halve, minus one when the per-sentence rate is <= 20.
    double points = 0.0;
    std::size_t limit = std::min<std::size_t>(100, syllable_seq.size());
    for (std::size_t i = 0; i < limit; ++i) points += syllable_seq[i] < 3 ? 1.0 : 3.0;
    double rate = points / sentences;
    r.linsear_write = rate > 20.0 ? rate / 2.0 : (rate - 2.0) / 2.0;

    r.gunning_fog = 0.4 * (wps + 100.0 * polysyllables / words);
    return r;
}

HapaxRatios hapax_ratios(const std::vector<Token>& tokens) {
    HapaxRatios h;
    std::unordered_map<std::string, int> freq;
    double total = 0.0;
    for (const auto& t : tokens) {
        if (!is_lexical(t)) continue;
        ++freq[t.lower];
        total += 1.0;
    }
    if (total == 0.0) return h;
    double hapax_types = 0.0, dis_tokens = 0.0;
    for (const auto& [w, f] : freq) {
        if (f == 1) hapax_types += 1.0;
        if (f == 2) dis_tokens += 2.0;
    }
    h.hapax_ratio = hapax_types / total;
    h.dis_ratio = dis_tokens / total;
    return h;
}

ContractionCounts contraction_counts(const DocAnalysis& doc, const FeatureLists& lists) {
    ContractionCounts c;
    std::unordered_set<std::string> contracted;
    for (const auto& p : lists.contractions) contracted.insert(p.contracted);
    for (const auto& t : doc.tokens)
        if (contracted.count(t.lower)) c.contracted += 1.0;
    for (const auto& p : lists.contractions) {
        for (const auto& form : p.expanded) {
            std::vector<std::string> phrase = split_words(form);
            for (const auto& utt : doc.utt_tokens) c.noncontracted += count_phrase(utt, phrase);
        }
    }
    return c;
}

StaticFeatures compute_static_features(const DocAnalysis& doc, const FeatureLists& lists) {
    StaticFeatures f;
    f.punct_freqs = punct_frequencies(doc.tokens, lists.punctuation);
    f.words = word_stats(doc.tokens, doc.style);
    f.token = token_stats(doc.tokens);
    f.syntax = syntax_stats(doc, lists);
    f.yule = yules_i(doc.tokens);
    f.read = readability(doc, lists);
    f.hapax = hapax_ratios(doc.tokens);
    f.contraction = contraction_counts(doc, lists);
    f.degenerate = doc.tokens.empty() || f.read.degenerate;
    return f;
}

std::vector<double> StaticFeatures::to_vector() const {
    std::vector<double> v;
    v.reserve(517);
    v.insert(v.end(), punct_freqs.begin(), punct_freqs.end());
    v.push_back(words.avg_word_len);
    v.push_back(words.short_ratio);
    v.push_back(words.long_ratio);
    v.push_back(words.caps_ratio);
    v.push_back(token.token_count);
    v.push_back(token.type_count);
    v.push_back(token.type_token_ratio);
    v.push_back(syntax.sentence_count);
    v.push_back(syntax.avg_sentence_len);
    v.insert(v.end(), syntax.function_word_freqs.begin(), syntax.function_word_freqs.end());
    v.insert(v.end(), syntax.function_phrase_freqs.begin(), syntax.function_phrase_freqs.end());
    v.insert(v.end(), syntax.pos_freqs.begin(), syntax.pos_freqs.end());
    v.push_back(yule);
    v.push_back(read.flesch_reading_ease);
    v.push_back(read.smog_index);
    v.push_back(read.flesch_kincaid_grade);
    v.push_back(read.coleman_liau_index);
    v.push_back(read.automated_readability_index);
    v.push_back(read.dale_chall_score);
    v.push_back(read.difficult_words);
    v.push_back(read.linsear_write);
    v.push_back(read.gunning_fog);
    v.push_back(hapax.hapax_ratio);
    v.push_back(hapax.dis_ratio);
    v.push_back(contraction.contracted);
    v.push_back(contraction.noncontracted);
    return v;
}

std::vector<std::string> static_feature_names(const FeatureLists& lists) {
    std::vector<std::string> names;
    names.reserve(static_feature_dim(lists));
    for (const auto& mark : lists.punctuation) names.push_back("stylo_punct_" + mark);
    names.push_back("stylo_avg_word_len");
    names.push_back("stylo_short_ratio");
    names.push_back("stylo_long_ratio");
    names.push_back("stylo_caps_ratio");
    names.push_back("stylo_token_count");
    names.push_back("stylo_type_count");
    names.push_back("stylo_type_token_ratio");
    names.push_back("stylo_sentence_count");
    names.push_back("stylo_avg_sentence_len");
    for (const auto& w : lists.function_words) names.push_back("stylo_fw_" + w);
    for (const auto& p : lists.function_phrases) names.push_back("stylo_fp_" + p);
    for (int i = 0; i < kNumPosTags; ++i)
        names.push_back(std::string("stylo_pos_") + to_string(static_cast<PosTag>(i)));
    names.push_back("stylo_yules_i");
    names.push_back("stylo_read_flesch_reading_ease");
    names.push_back("stylo_read_smog_index");
    names.push_back("stylo_read_flesch_kincaid_grade");
    names.push_back("stylo_read_coleman_liau_index");
    names.push_back("stylo_read_automated_readability_index");
    names.push_back("stylo_read_dale_chall_score");
    names.push_back("stylo_read_difficult_words");
    names.push_back("stylo_read_linsear_write");
    names.push_back("stylo_read_gunning_fog");
    names.push_back("stylo_hapax_ratio");
    names.push_back("stylo_dis_ratio");
    names.push_back("stylo_contracted_count");
    names.push_back("stylo_noncontracted_count");
    return names;
}

std::size_t static_feature_dim(const FeatureLists& lists) {
    return lists.punctuation.size() + 4 + 3 + 2 + lists.function_words.size() +
           lists.function_phrases.size() + kNumPosTags + 1 + kNumReadability + 2 + 2;
}

}  // namespace stylo
