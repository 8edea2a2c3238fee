#pragma once

#include <string>
#include <vector>

#include "stylo/corpus.hpp"

namespace stylo {

enum class TokenKind { Word, Punct, Symbol, Number, Annotation };

struct Token {
    std::string surface;
    TokenKind kind = TokenKind::Word;
    std::string lower;
};

// Universal POS tagset.
enum class PosTag {
    Adj, Adp, Adv, Aux, Cconj, Det, Intj, Noun, Num,
    Part, Pron, Propn, Punct, Sconj, Sym, Verb, X
};
inline constexpr int kNumPosTags = 17;

const char* to_string(PosTag t);
PosTag pos_tag_from_string(const std::string& s);

// Whitespace split, then leading/trailing punctuation peeled into Punct
// tokens. Apostrophes and hyphens adjacent to letters stay inside Word
// tokens (contractions, possessives, restart fragments like "ha-").
// Currency splits into Symbol + Number. "[...]" spans and "((" / "))"
// become Annotation tokens.
std::vector<Token> tokenize(const std::string& text, Style style);

using Sentence = std::vector<Token>;

// TextLike: terminated by . ? ! tokens (em-dashes continue the sentence).
// Normalized: no terminal punctuation exists, the whole text is one sentence.
std::vector<Sentence> split_sentences(const std::string& text, Style style);

// Vowel-cluster heuristic. Tokens without letters (numbers) count 1.
int count_syllables(const std::string& word);

// Deterministic lexicon-plus-rules tagger. Output length always equals
// input length.
std::vector<PosTag> pos_tag(const std::vector<Token>& tokens, Style style);

}  // namespace stylo
