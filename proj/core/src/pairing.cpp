#include "stylo/pairing.hpp"

#include <cmath>
#include <fstream>

#include "stylo/errors.hpp"
#include "stylo/io_util.hpp"

namespace stylo {

ScalerModel fit_scaler(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw NumericError("fit_scaler: empty training matrix");
    const std::size_t dim = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != dim) throw NumericError("fit_scaler: ragged training matrix");

    ScalerModel m;
    m.mean.assign(dim, 0.0);
    m.stddev.assign(dim, 0.0);
    const double n = static_cast<double>(rows.size());
    for (const auto& r : rows)
        for (std::size_t j = 0; j < dim; ++j) m.mean[j] += r[j];
    for (std::size_t j = 0; j < dim; ++j) m.mean[j] /= n;
    for (const auto& r : rows)
        for (std::size_t j = 0; j < dim; ++j) {
            double d = r[j] - m.mean[j];
            m.stddev[j] += d * d;
        }
    for (std::size_t j = 0; j < dim; ++j) m.stddev[j] = std::sqrt(m.stddev[j] / n);
    return m;
}

std::vector<double> apply_scaler(const std::vector<double>& x, const ScalerModel& model) {
    if (x.size() != model.mean.size())
        throw NumericError("apply_scaler: dimension mismatch (" + std::to_string(x.size()) +
                           " vs " + std::to_string(model.mean.size()) + ")");
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        out[j] = model.stddev[j] == 0.0 ? 0.0 : (x[j] - model.mean[j]) / model.stddev[j];
    return out;
}

void save_scaler(const ScalerModel& model, const std::vector<std::string>& names,
                 const std::filesystem::path& path) {
    if (names.size() != model.mean.size())
        throw NumericError("save_scaler: name/dimension mismatch");
    std::ofstream out(path);
    if (!out) throw DataError("cannot write scaler: " + path.string());
    out << "# stylo scaler v1\n";
    for (std::size_t j = 0; j < names.size(); ++j)
        out << escape_field(names[j]) << '\t' << fmt_double(model.mean[j]) << '\t'
            << fmt_double(model.stddev[j]) << '\n';
    if (!out) throw DataError("failed writing scaler: " + path.string());
}

ScalerModel load_scaler(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open scaler: " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "# stylo scaler v1")
        throw DataError("bad scaler header in " + path.string());
    ScalerModel m;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_tsv(line);
        if (fields.size() != 3) throw DataError("bad scaler line in " + path.string());
        m.mean.push_back(std::stod(fields[1]));
        m.stddev.push_back(std::stod(fields[2]));
    }
    return m;
}

const char* to_string(CombineMethod m) {
    switch (m) {
        case CombineMethod::Concat: return "concat";
        case CombineMethod::Diff: return "diff";
        case CombineMethod::DiffProd: return "diffprod";
        case CombineMethod::ConcatDiff: return "concatdiff";
    }
    return "diff";
}

CombineMethod combine_from_string(const std::string& s) {
    if (s == "concat") return CombineMethod::Concat;
    if (s == "diff") return CombineMethod::Diff;
    if (s == "diffprod" || s == "diff+prod") return CombineMethod::DiffProd;
    if (s == "concatdiff" || s == "concat+diff") return CombineMethod::ConcatDiff;
    throw DataError("unknown combination method: '" + s + "'");
}

namespace {

void check_dims(const SparseVector& a, const SparseVector& b) {
    if (a.dim != b.dim)
        throw NumericError("combine: dimension mismatch (" + std::to_string(a.dim) + " vs " +
                           std::to_string(b.dim) + ")");
}

void append_shifted(const SparseVector& v, std::uint32_t offset, SparseVector& out) {
    for (const auto& [i, x] : v.entries) out.entries.emplace_back(i + offset, x);
}

// Merge walk over two sorted sparse vectors.
template <typename F>
void merge_binary(const SparseVector& a, const SparseVector& b, std::uint32_t offset,
                  SparseVector& out, F op) {
    std::size_t ia = 0, ib = 0;
    while (ia < a.entries.size() || ib < b.entries.size()) {
        std::uint32_t idx;
        double va = 0.0, vb = 0.0;
        if (ia < a.entries.size() &&
            (ib >= b.entries.size() || a.entries[ia].first <= b.entries[ib].first)) {
            idx = a.entries[ia].first;
        } else {
            idx = b.entries[ib].first;
        }
        if (ia < a.entries.size() && a.entries[ia].first == idx) va = a.entries[ia++].second;
        if (ib < b.entries.size() && b.entries[ib].first == idx) vb = b.entries[ib++].second;
        double v = op(va, vb);
        if (v != 0.0) out.entries.emplace_back(idx + offset, v);
    }
}

}  // namespace

SparseVector combine(const SparseVector& a, const SparseVector& b, CombineMethod method,
                     bool signed_diff) {
    check_dims(a, b);
    const std::uint32_t d = a.dim;
    SparseVector out;
    auto diff_op = [signed_diff](double x, double y) {
        return signed_diff ? x - y : std::fabs(x - y);
    };
    auto prod_op = [](double x, double y) { return x * y; };
    switch (method) {
        case CombineMethod::Concat:
            out.dim = 2 * d;
            append_shifted(a, 0, out);
            append_shifted(b, d, out);
            break;
        case CombineMethod::Diff:
            out.dim = d;
            merge_binary(a, b, 0, out, diff_op);
            break;
        case CombineMethod::DiffProd:
            out.dim = 2 * d;
            merge_binary(a, b, 0, out, diff_op);
            merge_binary(a, b, d, out, prod_op);
            break;
        case CombineMethod::ConcatDiff:
            out.dim = 3 * d;
            append_shifted(a, 0, out);
            append_shifted(b, d, out);
            merge_binary(a, b, 2 * d, out, diff_op);
            break;
    }
    return out;
}

std::vector<std::string> combined_feature_names(const std::vector<std::string>& names,
                                                CombineMethod method) {
    std::vector<std::string> out;
    auto push_prefixed = [&](const char* prefix) {
        for (const auto& n : names) out.push_back(prefix + n);
    };
    switch (method) {
        case CombineMethod::Concat:
            out.reserve(2 * names.size());
            push_prefixed("a.");
            push_prefixed("b.");
            break;
        case CombineMethod::Diff:
            out = names;
            break;
        case CombineMethod::DiffProd:
            out.reserve(2 * names.size());
            out = names;
            push_prefixed("prod.");
            break;
        case CombineMethod::ConcatDiff:
            out.reserve(3 * names.size());
            push_prefixed("a.");
            push_prefixed("b.");
            push_prefixed("diff.");
            break;
    }
    return out;
}

SparseVector assemble_doc_vector(const std::vector<double>& static_scaled,
                                 const SparseVector& char_vec, const SparseVector& tok_vec,
                                 const SparseVector& pos_vec, const FeatureSpace& space) {
    if (static_scaled.size() != space.static_dim || char_vec.dim != space.char_dim ||
        tok_vec.dim != space.tok_dim || pos_vec.dim != space.pos_dim)
        throw NumericError("assemble_doc_vector: block dimensions do not match feature space");
    SparseVector out;
    out.dim = space.total_dim();
    for (std::uint32_t j = 0; j < space.static_dim; ++j)
        if (static_scaled[j] != 0.0) out.entries.emplace_back(j, static_scaled[j]);
    std::uint32_t offset = space.static_dim;
    append_shifted(char_vec, offset, out);
    offset += space.char_dim;
    append_shifted(tok_vec, offset, out);
    offset += space.tok_dim;
    append_shifted(pos_vec, offset, out);
    return out;
}

}  // namespace stylo
