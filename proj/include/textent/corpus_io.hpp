#pragma once

#include <filesystem>
#include <span>
#include <string_view>

#include "textent/text.hpp"

namespace textent {

enum class CorpusFormat {
  kText,   // UTF-8, one document per line
  kJsonl,  // one object per line, required string field "text", optional "id"
};

/// "txt" or "jsonl"; throws std::invalid_argument otherwise.
CorpusFormat parse_corpus_format(std::string_view name);

/// Reads and tokenizes a corpus file, one document per record. Malformed or
/// empty records raise std::runtime_error naming the file and line number;
/// so does a file with zero documents.
TokenizedCorpus load_corpus(const std::filesystem::path& path, CorpusFormat format,
                            const TokenizerConfig& tok = {}, std::string_view label = "");

/// Writes one {"id": i, "text": "..."} object per document.
void save_jsonl(const std::filesystem::path& path, const TokenizedCorpus& corpus);

}  // namespace textent
