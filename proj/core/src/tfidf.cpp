#include "stylo/tfidf.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "stylo/errors.hpp"
#include "stylo/io_util.hpp"

namespace stylo {

const char* to_string(GramUnit u) {
    switch (u) {
        case GramUnit::Char: return "char";
        case GramUnit::Token: return "tok";
        case GramUnit::Pos: return "pos";
    }
    return "tok";
}

GramUnit gram_unit_from_string(const std::string& s) {
    if (s == "char") return GramUnit::Char;
    if (s == "tok" || s == "token") return GramUnit::Token;
    if (s == "pos") return GramUnit::Pos;
    throw DataError("unknown gram unit: '" + s + "'");
}

double SparseVector::norm() const {
    double ss = 0.0;
    for (const auto& [i, v] : entries) ss += v * v;
    return std::sqrt(ss);
}

void SparseVector::l2_normalize() {
    double n = norm();
    if (n == 0.0) return;
    for (auto& [i, v] : entries) v /= n;
}

GramSource make_gram_source(const DocAnalysis& doc, const TranscriptDoc& raw) {
    GramSource src;
    src.char_lines.reserve(raw.utterances.size());
    for (const auto& utt : raw.utterances) {
        std::string lower(utt.text);
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        src.char_lines.push_back(std::move(lower));
    }
    src.token_lines.reserve(doc.utt_tokens.size());
    for (const auto& toks : doc.utt_tokens) {
        std::vector<std::string> line;
        line.reserve(toks.size());
        for (const auto& t : toks) line.push_back(t.lower);
        src.token_lines.push_back(std::move(line));
    }
    src.pos_lines.reserve(doc.utt_tags.size());
    for (const auto& tags : doc.utt_tags) {
        std::vector<std::string> line;
        line.reserve(tags.size());
        for (PosTag t : tags) line.emplace_back(to_string(t));
        src.pos_lines.push_back(std::move(line));
    }
    return src;
}

namespace {

void add_joined_ngrams(const std::vector<std::string>& units, int n,
                       std::map<std::string, int>& out) {
    if (n <= 0 || units.size() < static_cast<std::size_t>(n)) return;
    for (std::size_t i = 0; i + n <= units.size(); ++i) {
        std::string gram = units[i];
        for (int k = 1; k < n; ++k) {
            gram += ' ';
            gram += units[i + k];
        }
        ++out[gram];
    }
}

}  // namespace

std::map<std::string, int> extract_ngrams(const GramSource& src, GramUnit unit, int n) {
    std::map<std::string, int> grams;
    if (n <= 0) return grams;
    switch (unit) {
        case GramUnit::Char:
            for (const auto& line : src.char_lines) {
                if (line.size() < static_cast<std::size_t>(n)) continue;
                for (std::size_t i = 0; i + n <= line.size(); ++i)
                    ++grams[line.substr(i, n)];
            }
            break;
        case GramUnit::Token:
            for (const auto& line : src.token_lines) add_joined_ngrams(line, n, grams);
            break;
        case GramUnit::Pos:
            for (const auto& line : src.pos_lines) add_joined_ngrams(line, n, grams);
            break;
    }
    return grams;
}

namespace {

struct GramStats {
    std::size_t df = 0;
    long long count = 0;
};

std::map<std::string, int> pooled_doc_grams(const GramSource& doc, const VectorizerConfig& cfg,
                                            int only_n = 0) {
    std::map<std::string, int> pooled;
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
        if (only_n != 0 && n != only_n) continue;
        for (auto& [gram, count] : extract_ngrams(doc, cfg.unit, n)) pooled[gram] += count;
    }
    return pooled;
}

// Rank by corpus count descending, lexicographic tie-break, keep top k.
std::vector<std::string> select_top(const std::map<std::string, GramStats>& stats,
                                    std::size_t min_count, std::size_t k) {
    std::vector<std::pair<long long, const std::string*>> ranked;
    ranked.reserve(stats.size());
    for (const auto& [gram, st] : stats)
        if (st.df >= min_count) ranked.emplace_back(st.count, &gram);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return *a.second < *b.second;
    });
    if (ranked.size() > k) ranked.resize(k);
    std::vector<std::string> kept;
    kept.reserve(ranked.size());
    for (const auto& [count, gram] : ranked) kept.push_back(*gram);
    return kept;
}

}  // namespace

VectorizerModel fit_vectorizer(std::span<const GramSource> train_docs,
                               const VectorizerConfig& config) {
    if (train_docs.empty()) throw DataError("fit_vectorizer: empty training set");
    if (config.n_lo < 1 || config.n_lo > config.n_hi)
        throw DataError("fit_vectorizer: invalid n range");
    if (config.min_df <= 0.0 || config.min_df > 1.0)
        throw DataError("fit_vectorizer: min_df must be in (0, 1]");
    if (config.max_features < 1) throw DataError("fit_vectorizer: max_features must be >= 1");

    const std::size_t n_docs = train_docs.size();
    const std::size_t min_count =
        static_cast<std::size_t>(std::ceil(config.min_df * static_cast<double>(n_docs)));

    std::vector<std::string> kept;
    if (!config.per_n_budget) {
        std::map<std::string, GramStats> stats;
        for (const auto& doc : train_docs) {
            for (auto& [gram, count] : pooled_doc_grams(doc, config)) {
                auto& st = stats[gram];
                st.df += 1;
                st.count += count;
            }
        }
        kept = select_top(stats, min_count, static_cast<std::size_t>(config.max_features));
    } else {
        std::map<std::string, bool> merged;
        for (int n = config.n_lo; n <= config.n_hi; ++n) {
            std::map<std::string, GramStats> stats;
            for (const auto& doc : train_docs) {
                for (auto& [gram, count] : pooled_doc_grams(doc, config, n)) {
                    auto& st = stats[gram];
                    st.df += 1;
                    st.count += count;
                }
            }
            for (auto& g : select_top(stats, min_count, static_cast<std::size_t>(config.max_features)))
                merged[std::move(g)] = true;
        }
        kept.reserve(merged.size());
        for (auto& [g, unused] : merged) kept.push_back(g);
    }

    std::sort(kept.begin(), kept.end());

    VectorizerModel model;
    model.config = config;
    model.n_train = n_docs;
    model.vocabulary = std::move(kept);
    model.doc_freq.assign(model.vocabulary.size(), 0);
    model.idf.assign(model.vocabulary.size(), 0.0);
    for (std::uint32_t i = 0; i < model.vocabulary.size(); ++i)
        model.index.emplace(model.vocabulary[i], i);

    for (const auto& doc : train_docs) {
        for (auto& [gram, count] : pooled_doc_grams(doc, config)) {
            auto it = model.index.find(gram);
            if (it != model.index.end()) model.doc_freq[it->second] += 1;
        }
    }
    for (std::size_t i = 0; i < model.vocabulary.size(); ++i) {
        model.idf[i] = std::log((1.0 + static_cast<double>(n_docs)) /
                                (1.0 + static_cast<double>(model.doc_freq[i]))) + 1.0;
    }
    return model;
}

SparseVector transform(const GramSource& doc, const VectorizerModel& model) {
    SparseVector vec;
    vec.dim = model.dim();
    std::map<std::uint32_t, double> cells;
    for (int n = model.config.n_lo; n <= model.config.n_hi; ++n) {
        for (auto& [gram, count] : extract_ngrams(doc, model.config.unit, n)) {
            auto it = model.index.find(gram);
            if (it != model.index.end())
                cells[it->second] += static_cast<double>(count) * model.idf[it->second];
        }
    }
    vec.entries.assign(cells.begin(), cells.end());
    vec.l2_normalize();
    return vec;
}

void save_vectorizer(const VectorizerModel& model, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write vectorizer model: " + path.string());
    out << "# stylo tfidf v1\n";
    out << "unit " << to_string(model.config.unit) << "\n";
    out << "n_lo " << model.config.n_lo << "\n";
    out << "n_hi " << model.config.n_hi << "\n";
    out << "max_features " << model.config.max_features << "\n";
    out << "min_df " << fmt_double(model.config.min_df) << "\n";
    out << "per_n " << (model.config.per_n_budget ? 1 : 0) << "\n";
    out << "n_train " << model.n_train << "\n";
    out << "vocab_size " << model.vocabulary.size() << "\n";
    for (std::size_t i = 0; i < model.vocabulary.size(); ++i) {
        out << escape_field(model.vocabulary[i]) << '\t' << i << '\t' << model.doc_freq[i]
            << '\t' << fmt_double(model.idf[i]) << '\n';
    }
    if (!out) throw DataError("failed writing vectorizer model: " + path.string());
}

VectorizerModel load_vectorizer(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open vectorizer model: " + path.string());
    VectorizerModel model;
    std::string line;
    if (!std::getline(in, line) || line != "# stylo tfidf v1")
        throw DataError("bad vectorizer header in " + path.string());
    auto read_kv = [&](const char* key) -> std::string {
        if (!std::getline(in, line))
            throw DataError("truncated vectorizer model: " + path.string());
        std::size_t sp = line.find(' ');
        if (sp == std::string::npos || line.substr(0, sp) != key)
            throw DataError("expected '" + std::string(key) + "' in " + path.string());
        return line.substr(sp + 1);
    };
    model.config.unit = gram_unit_from_string(read_kv("unit"));
    model.config.n_lo = std::stoi(read_kv("n_lo"));
    model.config.n_hi = std::stoi(read_kv("n_hi"));
    model.config.max_features = std::stoi(read_kv("max_features"));
    model.config.min_df = std::stod(read_kv("min_df"));
    model.config.per_n_budget = read_kv("per_n") == "1";
    model.n_train = std::stoull(read_kv("n_train"));
    std::size_t vocab_size = std::stoull(read_kv("vocab_size"));
    model.vocabulary.reserve(vocab_size);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields = split_tsv(line);
        if (fields.size() != 4)
            throw DataError("bad vocabulary line in " + path.string() + ": " + line);
        std::uint32_t idx = static_cast<std::uint32_t>(std::stoul(fields[1]));
        if (idx != model.vocabulary.size())
            throw DataError("vocabulary indices out of order in " + path.string());
        model.vocabulary.push_back(unescape_field(fields[0]));
        model.doc_freq.push_back(std::stoull(fields[2]));
        model.idf.push_back(std::stod(fields[3]));
    }
    if (model.vocabulary.size() != vocab_size)
        throw DataError("vocabulary size mismatch in " + path.string());
    for (std::uint32_t i = 0; i < model.vocabulary.size(); ++i)
        model.index.emplace(model.vocabulary[i], i);
    return model;
}

}  // namespace stylo
