#include "stylo/textproc.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "stylo/errors.hpp"

namespace stylo {

namespace {

const std::array<const char*, kNumPosTags> kTagNames = {
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"};

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }

char to_lower_ch(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

std::string lowercase(const std::string& s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), to_lower_ch);
    return out;
}

const std::string kSymbolChars = "$&%+=@#*^~<>|";

bool is_symbol_char(char c) { return kSymbolChars.find(c) != std::string::npos; }

bool is_punct_char(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u >= 0x80) return false;  // multibyte handled via normalization
    return !std::isalnum(u) && !std::isspace(u) && !is_symbol_char(c);
}

bool is_peelable(char c) { return is_punct_char(c) || is_symbol_char(c); }

// Curly quotes become ASCII; em-dashes and ellipses become standalone chunks.
std::string normalize_text(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == 0xE2 && i + 2 < text.size()) {
            unsigned char c1 = static_cast<unsigned char>(text[i + 1]);
            unsigned char c2 = static_cast<unsigned char>(text[i + 2]);
            if (c1 == 0x80 && (c2 == 0x98 || c2 == 0x99)) {  // curly single quotes
                out += '\'';
                i += 3;
                continue;
            }
            if (c1 == 0x80 && (c2 == 0x9C || c2 == 0x9D)) {  // curly double quotes
                out += '"';
                i += 3;
                continue;
            }
            if (c1 == 0x80 && (c2 == 0x93 || c2 == 0x94)) {  // en/em dash
                out += " \xE2\x80\x94 ";
                i += 3;
                continue;
            }
            if (c1 == 0x80 && c2 == 0xA6) {  // ellipsis
                out += " \xE2\x80\xA6 ";
                i += 3;
                continue;
            }
        }
        out += text[i];
        ++i;
    }
    return out;
}

bool is_annotation(const std::string& s) {
    if (s == "((" || s == "))") return true;
    if (s.size() >= 3 && s.front() == '[' && s.back() == ']') {
        return s.find(']', 1) == s.size() - 1;
    }
    return false;
}

bool all_hyphens(const std::string& s) {
    return !s.empty() && s.find_first_not_of('-') == std::string::npos;
}

Token make_token(std::string surface, TokenKind kind) {
    Token t;
    t.lower = lowercase(surface);
    t.surface = std::move(surface);
    t.kind = kind;
    return t;
}

TokenKind classify_single(char c) {
    return is_symbol_char(c) ? TokenKind::Symbol : TokenKind::Punct;
}

void emit_chunk(const std::string& chunk, std::vector<Token>& out) {
    if (chunk.empty()) return;
    if (is_annotation(chunk)) {
        out.push_back(make_token(chunk, TokenKind::Annotation));
        return;
    }
    if (chunk == "\xE2\x80\x94" || chunk == "\xE2\x80\xA6" || all_hyphens(chunk)) {
        out.push_back(make_token(chunk, TokenKind::Punct));
        return;
    }

    std::size_t begin = 0, end = chunk.size();
    std::vector<Token> lead, tail;
    while (begin < end && !is_annotation(chunk.substr(begin, end - begin))) {
        char c = chunk[begin];
        if (!is_peelable(c)) break;
        if (c == '\'' && begin + 1 < end && is_letter(chunk[begin + 1])) break;
        lead.push_back(make_token(std::string(1, c), classify_single(c)));
        ++begin;
    }
    while (end > begin && !is_annotation(chunk.substr(begin, end - begin))) {
        char c = chunk[end - 1];
        if (!is_peelable(c)) break;
        bool after_letter = end - 1 > begin && is_letter(chunk[end - 2]);
        if ((c == '\'' || c == '-') && after_letter) break;  // possessive / restart
        tail.push_back(make_token(std::string(1, c), classify_single(c)));
        --end;
    }

    for (auto& t : lead) out.push_back(std::move(t));
    if (end > begin) {
        std::string core = chunk.substr(begin, end - begin);
        TokenKind kind;
        if (is_annotation(core)) {
            kind = TokenKind::Annotation;
        } else if (std::any_of(core.begin(), core.end(), is_letter)) {
            kind = TokenKind::Word;
        } else if (std::any_of(core.begin(), core.end(), is_digit)) {
            kind = TokenKind::Number;
        } else {
            // residual punctuation cluster; emit char by char
            for (char c : core) out.push_back(make_token(std::string(1, c), classify_single(c)));
            for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.push_back(std::move(*it));
            return;
        }
        out.push_back(make_token(std::move(core), kind));
    }
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.push_back(std::move(*it));
}

}  // namespace

const char* to_string(PosTag t) { return kTagNames[static_cast<int>(t)]; }

PosTag pos_tag_from_string(const std::string& s) {
    for (int i = 0; i < kNumPosTags; ++i)
        if (s == kTagNames[i]) return static_cast<PosTag>(i);
    throw DataError("unknown POS tag: '" + s + "'");
}

std::vector<Token> tokenize(const std::string& text, Style /*style*/) {
    std::vector<Token> out;
    std::string norm = normalize_text(text);
    std::size_t i = 0;
    while (i < norm.size()) {
        while (i < norm.size() && std::isspace(static_cast<unsigned char>(norm[i]))) ++i;
        std::size_t j = i;
        while (j < norm.size() && !std::isspace(static_cast<unsigned char>(norm[j]))) ++j;
        if (j > i) emit_chunk(norm.substr(i, j - i), out);
        i = j;
    }
    return out;
}

std::vector<Sentence> split_sentences(const std::string& text, Style style) {
    std::vector<Token> tokens = tokenize(text, style);
    std::vector<Sentence> sentences;
    if (tokens.empty()) return sentences;
    if (style == Style::Normalized) {
        sentences.push_back(std::move(tokens));
        return sentences;
    }
    Sentence current;
    for (auto& tok : tokens) {
        bool terminal = tok.kind == TokenKind::Punct &&
                        (tok.surface == "." || tok.surface == "?" || tok.surface == "!");
        current.push_back(std::move(tok));
        if (terminal) {
            sentences.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) sentences.push_back(std::move(current));
    return sentences;
}

int count_syllables(const std::string& word) {
    std::string letters;
    for (char c : word)
        if (is_letter(c)) letters += to_lower_ch(c);
    if (letters.empty()) return 1;

    auto is_vowel = [](char c) {
        return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
    };
    int clusters = 0;
    bool in_cluster = false;
    for (char c : letters) {
        if (is_vowel(c)) {
            if (!in_cluster) ++clusters;
            in_cluster = true;
        } else {
            in_cluster = false;
        }
    }
    std::size_t n = letters.size();
    if (n >= 2 && letters[n - 1] == 'e' && !is_vowel(letters[n - 2])) {
        bool consonant_le = n >= 3 && letters[n - 2] == 'l' && !is_vowel(letters[n - 3]);
        if (!consonant_le) --clusters;
    }
    return std::max(1, clusters);
}

namespace {

using Lexicon = std::unordered_map<std::string, PosTag>;

void add_all(Lexicon& lex, PosTag tag, std::initializer_list<const char*> words) {
    for (const char* w : words) lex.emplace(w, tag);  // first entry wins
}

const Lexicon& tagger_lexicon() {
    static const Lexicon lex = [] {
        Lexicon m;
        add_all(m, PosTag::Det,
                {"the", "a", "an", "this", "these", "those", "each", "every", "either",
                 "neither", "some", "any", "all", "both", "another", "such", "which",
                 "whatever", "whichever", "that"});
        add_all(m, PosTag::Pron,
                {"i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us",
                 "them", "mine", "yours", "hers", "ours", "theirs", "myself", "yourself",
                 "himself", "herself", "itself", "ourselves", "yourselves", "themselves",
                 "who", "whom", "what", "someone", "somebody", "something", "anyone",
                 "anybody", "anything", "everyone", "everybody", "everything", "nobody",
                 "nothing", "none", "my", "your", "his", "its", "our", "their",
                 "i'm", "i've", "i'll", "i'd", "you're", "you've", "you'll", "you'd",
                 "he's", "he'll", "he'd", "she's", "she'll", "she'd", "it's", "it'll",
                 "it'd", "we're", "we've", "we'll", "we'd", "they're", "they've",
                 "they'll", "they'd", "that's", "that'll", "that'd", "there's",
                 "there'll", "there'd", "here's", "what's", "what'll", "who's",
                 "who'll", "who'd", "where's", "when's", "why's", "how's", "let's"});
        add_all(m, PosTag::Aux,
                {"am", "is", "are", "was", "were", "be", "been", "being", "have", "has",
                 "had", "having", "do", "does", "did", "doing", "done", "will", "would",
                 "shall", "should", "may", "might", "must", "can", "could", "ought",
                 "isn't", "aren't", "wasn't", "weren't", "haven't", "hasn't", "hadn't",
                 "don't", "doesn't", "didn't", "won't", "wouldn't", "can't", "couldn't",
                 "shouldn't", "mustn't", "needn't", "ain't", "mightn't", "gonna",
                 "gotta", "wanna"});
        add_all(m, PosTag::Adp,
                {"about", "above", "across", "after", "against", "along", "amid",
                 "among", "around", "at", "before", "behind", "below", "beneath",
                 "beside", "besides", "between", "beyond", "by", "despite", "down",
                 "during", "except", "for", "from", "in", "inside", "into", "near",
                 "of", "off", "on", "onto", "out", "outside", "over", "past", "per",
                 "since", "through", "throughout", "till", "to", "toward", "towards",
                 "under", "underneath", "until", "unto", "up", "upon", "via", "with",
                 "within", "without"});
        add_all(m, PosTag::Cconj, {"and", "or", "nor", "but", "yet", "plus"});
        add_all(m, PosTag::Sconj,
                {"because", "if", "unless", "while", "whereas", "whether", "although",
                 "though", "once", "cause", "cuz", "when", "where", "why", "how"});
        add_all(m, PosTag::Part, {"not"});
        add_all(m, PosTag::Intj,
                {"oh", "ah", "uh", "um", "er", "hmm", "hm", "mhm", "mm-hmm", "uh-huh",
                 "uh-oh", "huh", "eh", "yeah", "yep", "yes", "no", "nope", "nah", "yup",
                 "hey", "hi", "hello", "bye", "goodbye", "wow", "whoa", "oops", "ouch",
                 "gosh", "gee", "geez", "darn", "okay", "ok", "alright", "please",
                 "thanks", "like", "well"});
        add_all(m, PosTag::Adv,
                {"very", "really", "just", "too", "also", "then", "there", "here",
                 "now", "never", "always", "often", "sometimes", "maybe", "perhaps",
                 "quite", "rather", "almost", "again", "soon", "still", "anyway",
                 "actually", "basically", "exactly", "definitely", "probably",
                 "pretty", "kinda", "sorta", "so", "right", "even", "ever", "more",
                 "most", "much", "back", "away", "together"});
        add_all(m, PosTag::Adj,
                {"good", "bad", "big", "small", "little", "old", "new", "great",
                 "nice", "long", "short", "high", "low", "early", "late", "young",
                 "happy", "sad", "funny", "hard", "easy", "hot", "cold", "warm",
                 "cool", "wrong", "sure", "different", "important", "real", "whole",
                 "free", "full", "other", "same", "own", "last", "next", "first",
                 "second", "third", "favorite", "weird", "crazy", "huge", "tiny"});
        add_all(m, PosTag::Noun,
                {"thing", "things", "morning", "evening", "time", "people", "way",
                 "year", "years", "day", "days", "man", "woman", "kid", "kids",
                 "stuff", "lot", "one", "ones", "bit", "guy", "guys", "home", "house",
                 "friend", "friends", "family", "news", "computer"});
        add_all(m, PosTag::Verb,
                {"go", "goes", "going", "went", "gone", "get", "gets", "getting",
                 "got", "gotten", "make", "makes", "making", "made", "know", "knows",
                 "knowing", "knew", "known", "think", "thinks", "thinking", "thought",
                 "take", "takes", "taking", "took", "taken", "see", "sees", "seeing",
                 "saw", "seen", "come", "comes", "coming", "came", "want", "wants",
                 "wanted", "look", "looks", "looked", "use", "uses", "used", "find",
                 "finds", "found", "give", "gives", "gave", "given", "tell", "tells",
                 "told", "work", "works", "worked", "call", "calls", "called", "try",
                 "tries", "tried", "ask", "asks", "asked", "need", "needs", "needed",
                 "feel", "feels", "felt", "become", "becomes", "became", "leave",
                 "leaves", "leaving", "left", "put", "puts", "mean", "means", "meant",
                 "keep", "keeps", "kept", "let", "lets", "begin", "begins", "began",
                 "begun", "seem", "seems", "seemed", "help", "helps", "helped", "talk",
                 "talks", "talked", "turn", "turns", "turned", "start", "starts",
                 "started", "show", "shows", "showed", "shown", "hear", "hears",
                 "heard", "play", "plays", "played", "run", "runs", "ran", "move",
                 "moves", "moved", "live", "lives", "lived", "believe", "believes",
                 "believed", "hold", "holds", "held", "bring", "brings", "brought",
                 "happen", "happens", "happened", "write", "writes", "wrote",
                 "written", "sit", "sits", "sat", "stand", "stands", "stood", "lose",
                 "loses", "lost", "pay", "pays", "paid", "meet", "meets", "met",
                 "continue", "continues", "continued", "set", "sets", "learn",
                 "learns", "learned", "change", "changes", "changed", "lead", "leads",
                 "led", "understand", "understands", "understood", "watch", "watches",
                 "watched", "follow", "follows", "followed", "stop", "stops",
                 "stopped", "speak", "speaks", "spoke", "spoken", "read", "reads",
                 "spend", "spends", "spent", "grow", "grows", "grew", "grown", "open",
                 "opens", "opened", "walk", "walks", "walked", "win", "wins", "won",
                 "remember", "remembers", "remembered", "love", "loves", "loved",
                 "buy", "buys", "bought", "wait", "waits", "waited", "die", "dies",
                 "died", "send", "sends", "sent", "expect", "expects", "expected",
                 "build", "builds", "built", "stay", "stays", "stayed", "fall",
                 "falls", "fell", "fallen", "cut", "cuts", "reach", "reaches",
                 "reached", "remain", "remains", "remained", "guess", "guesses",
                 "guessed", "suppose", "supposes", "supposed", "say", "says",
                 "saying", "said", "eat", "eats", "eating", "ate", "eaten", "drink",
                 "drinks", "drank", "fly", "flies", "flew", "flown", "enjoy",
                 "enjoys", "enjoyed", "visit", "visits", "visited", "cook", "cooks",
                 "cooked", "travel", "travels", "traveled"});
        return m;
    }();
    return lex;
}

bool has_suffix(const std::string& s, const char* suffix) {
    std::size_t n = std::char_traits<char>::length(suffix);
    return s.size() >= n + 1 && s.compare(s.size() - n, n, suffix) == 0;
}

PosTag suffix_tag(const std::string& lower) {
    if (lower.size() >= 4) {
        if (has_suffix(lower, "ly")) return PosTag::Adv;
        if (has_suffix(lower, "ing") || has_suffix(lower, "ed")) return PosTag::Verb;
        if (has_suffix(lower, "tion") || has_suffix(lower, "sion") ||
            has_suffix(lower, "ment") || has_suffix(lower, "ness") ||
            has_suffix(lower, "ity") || has_suffix(lower, "ence") ||
            has_suffix(lower, "ance") || has_suffix(lower, "ship") ||
            has_suffix(lower, "hood") || has_suffix(lower, "ism"))
            return PosTag::Noun;
        if (has_suffix(lower, "ous") || has_suffix(lower, "ful") ||
            has_suffix(lower, "able") || has_suffix(lower, "ible") ||
            has_suffix(lower, "ive") || has_suffix(lower, "ish") ||
            has_suffix(lower, "less") || has_suffix(lower, "ical"))
            return PosTag::Adj;
    }
    return PosTag::Noun;
}

}  // namespace

std::vector<PosTag> pos_tag(const std::vector<Token>& tokens, Style style) {
    std::vector<PosTag> tags;
    tags.reserve(tokens.size());
    const Lexicon& lex = tagger_lexicon();
    bool sentence_start = true;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& tok = tokens[i];
        PosTag tag;
        switch (tok.kind) {
            case TokenKind::Punct: tag = PosTag::Punct; break;
            case TokenKind::Symbol: tag = PosTag::Sym; break;
            case TokenKind::Number: tag = PosTag::Num; break;
            case TokenKind::Annotation: tag = PosTag::X; break;
            case TokenKind::Word: {
                auto it = lex.find(tok.lower);
                if (it != lex.end()) {
                    tag = it->second;
                } else if (style == Style::TextLike && !sentence_start &&
                           is_upper(tok.surface[0])) {
                    tag = PosTag::Propn;
                } else {
                    tag = suffix_tag(tok.lower);
                }
                break;
            }
            default: tag = PosTag::X; break;
        }
        tags.push_back(tag);
        if (tok.kind == TokenKind::Word || tok.kind == TokenKind::Number) {
            sentence_start = false;
        } else if (tok.kind == TokenKind::Punct &&
                   (tok.surface == "." || tok.surface == "?" || tok.surface == "!")) {
            sentence_start = true;
        }
    }
    return tags;
}

}  // namespace stylo
