#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace diasim {

using TokenId = std::int32_t;
constexpr TokenId kNoToken = -1;

// Interned surface forms of the raw corpus. This is the full lexicon, not the
// model vocabulary; min-count filtering happens in build_vocab.
class Lexicon {
 public:
  TokenId intern(std::string_view tok);
  TokenId find(std::string_view tok) const;
  const std::string& token(TokenId id) const { return tokens_[id]; }
  std::size_t size() const { return tokens_.size(); }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> index_;
};

struct PeriodSlice {
  std::vector<std::vector<TokenId>> documents;
  std::int64_t token_count = 0;  // always the sum of document lengths
};

// Ordered sequence of tokenized sub-corpora, one per period.
struct TimeSlicedCorpus {
  std::shared_ptr<Lexicon> lexicon;
  std::vector<PeriodSlice> periods;
  std::vector<std::string> period_labels;

  std::size_t num_periods() const { return periods.size(); }
  void validate() const;  // T >= 2, labels sorted, token counts consistent
};

enum class CorpusFormat { kDirPerPeriod, kTsv };

// dir-per-period: one subdirectory per period label, UTF-8 text files inside,
// one pre-tokenized document per line. tsv: period_label<TAB>document lines.
TimeSlicedCorpus load_corpus(const std::filesystem::path& root, CorpusFormat format);

void write_corpus_tsv(const TimeSlicedCorpus& corpus, const std::filesystem::path& path);

// word2vec-style frequency subsampling: a token whose within-period relative
// frequency is f survives with probability min(1, sqrt(threshold / f)).
// One RNG stream per period, derived from the master seed.
TimeSlicedCorpus subsample(const TimeSlicedCorpus& corpus, double threshold,
                           std::uint64_t seed);

class Vocabulary {
 public:
  std::vector<std::string> target_words;   // size W
  std::vector<std::string> context_words;  // size C, targets always included
  std::unordered_map<std::string, std::int32_t> target_index;
  std::unordered_map<std::string, std::int32_t> context_index;
  std::vector<std::int64_t> per_period_counts;  // T x W, row-major
  std::size_t num_periods = 0;

  // Lookup tables keyed by the lexicon of the corpus this was built from.
  std::vector<std::int32_t> lex_to_target;
  std::vector<std::int32_t> lex_to_context;

  // Hash of the word lists; used to validate that PPMI matrices being
  // stacked were produced against the same vocabulary.
  std::string fingerprint;

  std::size_t W() const { return target_words.size(); }
  std::size_t C() const { return context_words.size(); }
  std::int64_t count(std::size_t period, std::size_t word) const {
    return per_period_counts[period * W() + word];
  }
  std::int64_t total_count(std::size_t word) const;
};

// Target words: count >= min_count in every period (or forced). Context
// words: count >= context_min_count in every period, plus all targets.
// Both orderings: total frequency descending, ties lexicographic.
// context_min_count < 0 means "same as min_count".
Vocabulary build_vocab(const TimeSlicedCorpus& corpus, std::int64_t min_count,
                       std::int64_t context_min_count = -1,
                       const std::vector<std::string>& force_targets = {});

// TSV export: word<TAB>index<TAB>count_t0<TAB>...<TAB>count_tT
void write_vocab_tsv(const Vocabulary& vocab, const std::filesystem::path& path);

}  // namespace diasim
