#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace textent {

struct TokenizerConfig {
  bool nfc = true;          // Unicode NFC normalization
  bool lowercase = true;    // per-code-point simple lowercase
  bool strip_punct = true;  // strip leading/trailing punctuation from each token
};

/// Deterministic whitespace tokenizer. Empty input yields an empty list.
std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& cfg = {});

using TokenizedDoc = std::vector<std::string>;

struct TokenizedCorpus {
  std::string label;
  std::vector<TokenizedDoc> docs;
};

/// Token-id sequence; ids index into the vocabulary that encoded it.
struct Document {
  std::vector<std::int32_t> ids;
  std::int32_t length() const { return static_cast<std::int32_t>(ids.size()); }
};

struct Corpus {
  std::string label;
  std::vector<Document> docs;
};

/// Bijection between surface tokens and dense ids. Ids 0 and 1 are reserved
/// for padding and unknown tokens; content ids start at 2.
class Vocabulary {
 public:
  static constexpr std::int32_t kPadId = 0;
  static constexpr std::int32_t kUnkId = 1;
  static constexpr std::int32_t kNumReserved = 2;
  static constexpr std::string_view kPadToken = "<pad>";
  static constexpr std::string_view kUnkToken = "<unk>";

  /// Reserved tokens followed by `content_tokens` in the given order.
  /// Throws on duplicates or collisions with the reserved surface forms.
  explicit Vocabulary(std::vector<std::string> content_tokens);

  std::int32_t size() const { return static_cast<std::int32_t>(id_to_token_.size()); }
  std::int32_t id(std::string_view token) const;  // kUnkId for unseen tokens
  const std::string& token(std::int32_t id) const;
  bool contains(std::string_view token) const;

 private:
  std::unordered_map<std::string, std::int32_t> token_to_id_;
  std::vector<std::string> id_to_token_;
};

/// Vocabulary over the given documents: content ids assigned by descending
/// frequency, ties broken lexicographically. Tokens with frequency below
/// `min_freq` are left out and encode to unk. Throws if no token survives.
Vocabulary build_vocab(std::span<const TokenizedDoc* const> docs, int min_freq = 1);
Vocabulary build_vocab(std::span<const TokenizedCorpus* const> corpora, int min_freq = 1);

/// Throws on an empty token list; unknown surface forms map to unk.
Document encode(const TokenizedDoc& tokens, const Vocabulary& vocab);
TokenizedDoc decode(const Document& doc, const Vocabulary& vocab);

}  // namespace textent
