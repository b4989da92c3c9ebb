#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cartsym/descriptor.hpp"
#include "cartsym/obasis.hpp"
#include "cartsym/verify.hpp"

namespace cartsym {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };
Format parse_format(std::string_view text);

/// A report in both shapes: a JSON document with stable key order and a flat table
/// for csv/text. Text output prints the summary lines, then the aligned table.
struct Document {
    Json json;
    std::vector<std::string> summary;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string render(const Document& doc, Format format);

/// {"exact", "order", "coeffs", "float": [re, im]}.
Json cyclotomic_json(const Cyclotomic& c);

Document dims_document(const ResolvedGroup& g, const Character& chi, const std::string& spec, long long n);
Document gram_document(const ResolvedGroup& g, const Character& chi, const std::string& spec, long long n);
Document obasis_document(const ResolvedGroup& g, const Character& chi, const std::string& spec, std::size_t budget,
                         Verdict* verdict = nullptr);
/// One row per member of the built-in family.
Document table_document(const ResolvedGroup& g, long long n);
/// JSON output is one object per line; csv/text summarize each report.
Document verify_document(const std::vector<VerificationReport>& reports);

} // namespace cartsym
