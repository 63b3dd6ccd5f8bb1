#include "textent/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace textent {

std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& cfg) {
  icu::UnicodeString s =
      icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int>(text.size())));

  if (cfg.nfc) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    icu::UnicodeString normalized = nfc->normalize(s, status);
    if (U_FAILURE(status)) throw std::runtime_error("unicode NFC normalization failed");
    s = std::move(normalized);
  }

  std::vector<std::string> tokens;
  std::vector<UChar32> current;

  auto flush = [&] {
    if (current.empty()) return;
    std::size_t begin = 0;
    std::size_t end = current.size();
    if (cfg.strip_punct) {
      while (begin < end && u_ispunct(current[begin])) ++begin;
      while (end > begin && u_ispunct(current[end - 1])) --end;
    }
    if (begin < end) {
      icu::UnicodeString tok;
      for (std::size_t i = begin; i < end; ++i) tok.append(current[i]);
      std::string utf8;
      tok.toUTF8String(utf8);
      tokens.push_back(std::move(utf8));
    }
    current.clear();
  };

  for (std::int32_t i = 0; i < s.length();) {
    const UChar32 cp = s.char32At(i);
    i += U16_LENGTH(cp);
    if (u_isUWhiteSpace(cp)) {
      flush();
      continue;
    }
    current.push_back(cfg.lowercase ? u_tolower(cp) : cp);
  }
  flush();
  return tokens;
}

Vocabulary::Vocabulary(std::vector<std::string> content_tokens) {
  id_to_token_.reserve(content_tokens.size() + kNumReserved);
  id_to_token_.emplace_back(kPadToken);
  id_to_token_.emplace_back(kUnkToken);
  for (auto& tok : content_tokens) id_to_token_.push_back(std::move(tok));

  token_to_id_.reserve(id_to_token_.size());
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(id_to_token_.size()); ++i) {
    auto [it, inserted] = token_to_id_.emplace(id_to_token_[i], i);
    if (!inserted) throw std::invalid_argument("duplicate vocabulary token: " + id_to_token_[i]);
  }
}

std::int32_t Vocabulary::id(std::string_view token) const {
  auto it = token_to_id_.find(std::string(token));
  return it == token_to_id_.end() ? kUnkId : it->second;
}

const std::string& Vocabulary::token(std::int32_t id) const {
  if (id < 0 || id >= size()) throw std::out_of_range("token id out of range");
  return id_to_token_[id];
}

bool Vocabulary::contains(std::string_view token) const {
  return token_to_id_.count(std::string(token)) != 0;
}

Vocabulary build_vocab(std::span<const TokenizedDoc* const> docs, int min_freq) {
  // std::map keeps counting deterministic; ordering is re-derived below anyway.
  std::map<std::string, std::int64_t> counts;
  for (const TokenizedDoc* doc : docs) {
    for (const auto& tok : *doc) ++counts[tok];
  }

  std::vector<std::pair<std::string, std::int64_t>> kept;
  kept.reserve(counts.size());
  for (auto& [tok, cnt] : counts) {
    if (cnt >= min_freq) kept.emplace_back(tok, cnt);
  }
  if (kept.empty()) throw std::invalid_argument("empty vocabulary");

  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  std::vector<std::string> content;
  content.reserve(kept.size());
  for (auto& [tok, cnt] : kept) content.push_back(std::move(tok));
  return Vocabulary(std::move(content));
}

Vocabulary build_vocab(std::span<const TokenizedCorpus* const> corpora, int min_freq) {
  std::vector<const TokenizedDoc*> docs;
  for (const TokenizedCorpus* c : corpora) {
    for (const auto& d : c->docs) docs.push_back(&d);
  }
  return build_vocab(docs, min_freq);
}

Document encode(const TokenizedDoc& tokens, const Vocabulary& vocab) {
  if (tokens.empty()) throw std::invalid_argument("empty document");
  Document doc;
  doc.ids.reserve(tokens.size());
  for (const auto& tok : tokens) doc.ids.push_back(vocab.id(tok));
  return doc;
}

TokenizedDoc decode(const Document& doc, const Vocabulary& vocab) {
  TokenizedDoc tokens;
  tokens.reserve(doc.ids.size());
  for (std::int32_t id : doc.ids) tokens.push_back(vocab.token(id));
  return tokens;
}

}  // namespace textent
