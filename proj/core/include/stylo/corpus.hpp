#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace stylo {

enum class Side { A, B };
enum class Style { TextLike, Normalized };
enum class Label { SameSpeaker, DifferentSpeaker };
enum class Difficulty { Base, Hard, Harder };

const char* to_string(Side s);
const char* to_string(Style s);
const char* to_string(Label l);
const char* to_string(Difficulty d);
Side side_from_string(const std::string& s);
Style style_from_string(const std::string& s);       // accepts bbn/ldc and textlike/normalized
Label label_from_string(const std::string& s);
Difficulty difficulty_from_string(const std::string& s);

struct Utterance {
    Side side = Side::A;
    int index = 0;
    std::string text;
    std::vector<std::string> gold_tags;  // optional UPOS tags aligned with tokenize(text)
};

struct CallRecord {
    std::string call_id;
    std::string topic_id;
    std::string speaker_a;
    std::string speaker_b;
    Style style = Style::Normalized;
    std::vector<Utterance> utterances;
};

// One speaker's side of one call, after trimming the opening utterances.
struct TranscriptDoc {
    std::string call_id;
    std::string speaker_id;
    std::string topic_id;
    Style style = Style::Normalized;
    Side side = Side::A;
    std::vector<Utterance> utterances;
    std::string joined_text;       // utterance texts joined with '\n'
    bool trimmed_empty = false;    // the side had no utterances left after trimming

    std::string key() const { return call_id + "/" + to_string(side); }
};

struct Trial {
    std::size_t a = 0;  // indices into a TranscriptDoc pool
    std::size_t b = 0;
    Label label = Label::DifferentSpeaker;
    Difficulty difficulty = Difficulty::Base;
};

// Line-delimited JSON corpus IO. Throws DataError with line context.
std::vector<CallRecord> parse_corpus(std::istream& in, const std::string& origin = "<stream>");
std::vector<CallRecord> load_corpus(const std::string& path);
void write_corpus(std::ostream& out, const std::vector<CallRecord>& records);

// Splits a call into its two sides, dropping the first `trim` utterances of
// each side. A side left empty is flagged, not an error.
std::pair<TranscriptDoc, TranscriptDoc> split_call(const CallRecord& call, int trim = 5);

std::vector<TranscriptDoc> make_docs(const std::vector<CallRecord>& records, int trim = 5);

// Trial file IO. Trials reference docs by (call_id, side).
void write_trials(std::ostream& out, const std::vector<Trial>& trials,
                  const std::vector<TranscriptDoc>& docs);
std::vector<Trial> read_trials(std::istream& in, const std::vector<TranscriptDoc>& docs,
                               const std::string& origin = "<stream>");
std::vector<Trial> load_trials(const std::string& path, const std::vector<TranscriptDoc>& docs);

}  // namespace stylo
