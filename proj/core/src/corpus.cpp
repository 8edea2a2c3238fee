#include "stylo/corpus.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "stylo/errors.hpp"

namespace stylo {

using json = nlohmann::ordered_json;

const char* to_string(Side s) { return s == Side::A ? "A" : "B"; }
const char* to_string(Style s) { return s == Style::TextLike ? "bbn" : "ldc"; }
const char* to_string(Label l) { return l == Label::SameSpeaker ? "same" : "different"; }
const char* to_string(Difficulty d) {
    switch (d) {
        case Difficulty::Base: return "base";
        case Difficulty::Hard: return "hard";
        case Difficulty::Harder: return "harder";
    }
    return "base";
}

Side side_from_string(const std::string& s) {
    if (s == "A" || s == "a") return Side::A;
    if (s == "B" || s == "b") return Side::B;
    throw DataError("invalid side: '" + s + "'");
}

Style style_from_string(const std::string& s) {
    if (s == "bbn" || s == "textlike" || s == "text-like") return Style::TextLike;
    if (s == "ldc" || s == "normalized") return Style::Normalized;
    throw DataError("invalid style: '" + s + "'");
}

Label label_from_string(const std::string& s) {
    if (s == "same" || s == "same_speaker") return Label::SameSpeaker;
    if (s == "different" || s == "different_speaker") return Label::DifferentSpeaker;
    throw DataError("invalid label: '" + s + "'");
}

Difficulty difficulty_from_string(const std::string& s) {
    if (s == "base") return Difficulty::Base;
    if (s == "hard") return Difficulty::Hard;
    if (s == "harder") return Difficulty::Harder;
    throw DataError("invalid difficulty: '" + s + "'");
}

namespace {

[[noreturn]] void fail_line(const std::string& origin, int line, const std::string& what) {
    throw DataError(origin + ":" + std::to_string(line) + ": " + what);
}

std::string require_string(const json& j, const char* field, const std::string& origin, int line) {
    if (!j.contains(field))
        fail_line(origin, line, std::string("missing field '") + field + "'");
    if (!j[field].is_string())
        fail_line(origin, line, std::string("field '") + field + "' must be a string");
    return j[field].get<std::string>();
}

}  // namespace

std::vector<CallRecord> parse_corpus(std::istream& in, const std::string& origin) {
    std::vector<CallRecord> records;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            fail_line(origin, lineno, std::string("malformed record: ") + e.what());
        }
        CallRecord rec;
        rec.call_id = require_string(j, "call_id", origin, lineno);
        rec.topic_id = require_string(j, "topic_id", origin, lineno);
        rec.speaker_a = require_string(j, "speaker_a", origin, lineno);
        rec.speaker_b = require_string(j, "speaker_b", origin, lineno);
        rec.style = style_from_string(require_string(j, "style", origin, lineno));
        if (rec.speaker_a == rec.speaker_b)
            fail_line(origin, lineno, "speaker_a and speaker_b must differ in call '" + rec.call_id + "'");
        if (!seen_ids.insert(rec.call_id).second)
            fail_line(origin, lineno, "duplicate call_id '" + rec.call_id + "'");
        if (!j.contains("utterances") || !j["utterances"].is_array())
            fail_line(origin, lineno, "missing field 'utterances'");
        int last_index[2] = {-1, -1};
        for (const auto& ju : j["utterances"]) {
            Utterance u;
            u.side = side_from_string(require_string(ju, "side", origin, lineno));
            if (!ju.contains("index") || !ju["index"].is_number_integer())
                fail_line(origin, lineno, "utterance missing integer 'index'");
            u.index = ju["index"].get<int>();
            u.text = require_string(ju, "text", origin, lineno);
            if (ju.contains("tags")) {
                if (!ju["tags"].is_array())
                    fail_line(origin, lineno, "utterance 'tags' must be an array");
                for (const auto& t : ju["tags"]) u.gold_tags.push_back(t.get<std::string>());
            }
            int s = u.side == Side::A ? 0 : 1;
            if (u.index < 0 || u.index <= last_index[s])
                fail_line(origin, lineno,
                          "utterance indices must be nonnegative and strictly increasing per side"
                          " in call '" + rec.call_id + "'");
            last_index[s] = u.index;
            rec.utterances.push_back(std::move(u));
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<CallRecord> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open corpus file: " + path);
    return parse_corpus(in, path);
}

void write_corpus(std::ostream& out, const std::vector<CallRecord>& records) {
    for (const auto& rec : records) {
        json j;
        j["call_id"] = rec.call_id;
        j["topic_id"] = rec.topic_id;
        j["speaker_a"] = rec.speaker_a;
        j["speaker_b"] = rec.speaker_b;
        j["style"] = to_string(rec.style);
        json utts = json::array();
        for (const auto& u : rec.utterances) {
            json ju;
            ju["side"] = to_string(u.side);
            ju["index"] = u.index;
            ju["text"] = u.text;
            if (!u.gold_tags.empty()) ju["tags"] = u.gold_tags;
            utts.push_back(std::move(ju));
        }
        j["utterances"] = std::move(utts);
        out << j.dump() << "\n";
    }
}

std::pair<TranscriptDoc, TranscriptDoc> split_call(const CallRecord& call, int trim) {
    if (trim < 0) throw DataError("trim must be nonnegative");
    TranscriptDoc docs[2];
    docs[0].side = Side::A;
    docs[0].speaker_id = call.speaker_a;
    docs[1].side = Side::B;
    docs[1].speaker_id = call.speaker_b;
    int kept[2] = {0, 0};
    int seen[2] = {0, 0};
    for (auto& d : docs) {
        d.call_id = call.call_id;
        d.topic_id = call.topic_id;
        d.style = call.style;
    }
    for (const auto& u : call.utterances) {
        int s = u.side == Side::A ? 0 : 1;
        if (seen[s]++ < trim) continue;
        docs[s].utterances.push_back(u);
        if (kept[s]++ > 0) docs[s].joined_text += '\n';
        docs[s].joined_text += u.text;
    }
    docs[0].trimmed_empty = docs[0].utterances.empty();
    docs[1].trimmed_empty = docs[1].utterances.empty();
    return {std::move(docs[0]), std::move(docs[1])};
}

std::vector<TranscriptDoc> make_docs(const std::vector<CallRecord>& records, int trim) {
    std::vector<TranscriptDoc> docs;
    docs.reserve(records.size() * 2);
    for (const auto& rec : records) {
        auto [a, b] = split_call(rec, trim);
        docs.push_back(std::move(a));
        docs.push_back(std::move(b));
    }
    return docs;
}

namespace {

std::unordered_map<std::string, std::size_t> doc_index(const std::vector<TranscriptDoc>& docs) {
    std::unordered_map<std::string, std::size_t> by_key;
    for (std::size_t i = 0; i < docs.size(); ++i) by_key[docs[i].key()] = i;
    return by_key;
}

}  // namespace

void write_trials(std::ostream& out, const std::vector<Trial>& trials,
                  const std::vector<TranscriptDoc>& docs) {
    for (const auto& t : trials) {
        json j;
        j["doc_a"] = {{"call_id", docs[t.a].call_id}, {"side", to_string(docs[t.a].side)}};
        j["doc_b"] = {{"call_id", docs[t.b].call_id}, {"side", to_string(docs[t.b].side)}};
        j["label"] = to_string(t.label);
        j["difficulty"] = to_string(t.difficulty);
        out << j.dump() << "\n";
    }
}

std::vector<Trial> read_trials(std::istream& in, const std::vector<TranscriptDoc>& docs,
                               const std::string& origin) {
    auto by_key = doc_index(docs);
    std::vector<Trial> trials;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            fail_line(origin, lineno, std::string("malformed trial: ") + e.what());
        }
        Trial t;
        auto resolve = [&](const char* field) -> std::size_t {
            if (!j.contains(field)) fail_line(origin, lineno, std::string("missing '") + field + "'");
            const auto& ref = j[field];
            std::string key = require_string(ref, "call_id", origin, lineno) + "/" +
                              to_string(side_from_string(require_string(ref, "side", origin, lineno)));
            auto it = by_key.find(key);
            if (it == by_key.end())
                fail_line(origin, lineno, "trial references unknown doc '" + key + "'");
            return it->second;
        };
        t.a = resolve("doc_a");
        t.b = resolve("doc_b");
        t.label = label_from_string(require_string(j, "label", origin, lineno));
        t.difficulty = difficulty_from_string(require_string(j, "difficulty", origin, lineno));
        trials.push_back(t);
    }
    return trials;
}

std::vector<Trial> load_trials(const std::string& path, const std::vector<TranscriptDoc>& docs) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open trial file: " + path);
    return read_trials(in, docs, path);
}

}  // namespace stylo
