#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "stylo/tfidf.hpp"

namespace stylo {

// Per-feature standardization statistics, fitted on training docs only.
// Applies to the static block; TF-IDF blocks are already L2-normalized.
struct ScalerModel {
    std::vector<double> mean;
    std::vector<double> stddev;  // population standard deviation
};

ScalerModel fit_scaler(const std::vector<std::vector<double>>& rows);
// (x - mean) / std per feature; zero-variance features map to 0.
std::vector<double> apply_scaler(const std::vector<double>& x, const ScalerModel& model);

void save_scaler(const ScalerModel& model, const std::vector<std::string>& names,
                 const std::filesystem::path& path);
ScalerModel load_scaler(const std::filesystem::path& path);

enum class CombineMethod { Concat, Diff, DiffProd, ConcatDiff };
const char* to_string(CombineMethod m);
CombineMethod combine_from_string(const std::string& s);

// Combines two per-doc vectors into one trial vector:
//   Concat     [a ; b]          Diff        |a - b|
//   DiffProd   [|a - b| ; a*b]  ConcatDiff  [a ; b ; |a - b|]
// signed_diff replaces |a - b| with a - b (off by default; strictly worse).
SparseVector combine(const SparseVector& a, const SparseVector& b, CombineMethod method,
                     bool signed_diff = false);

std::vector<std::string> combined_feature_names(const std::vector<std::string>& names,
                                                CombineMethod method);

// Stable global index map over [static | char | tok | pos] blocks.
struct FeatureSpace {
    std::vector<std::string> names;
    std::uint32_t static_dim = 0;
    std::uint32_t char_dim = 0;
    std::uint32_t tok_dim = 0;
    std::uint32_t pos_dim = 0;

    std::uint32_t total_dim() const { return static_dim + char_dim + tok_dim + pos_dim; }
};

// Per-doc feature vector assembled under a FeatureSpace index map.
SparseVector assemble_doc_vector(const std::vector<double>& static_scaled,
                                 const SparseVector& char_vec, const SparseVector& tok_vec,
                                 const SparseVector& pos_vec, const FeatureSpace& space);

}  // namespace stylo
