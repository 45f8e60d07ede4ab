#include "tokequity/tokenizer/bpe.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <exception>
#include <limits>
#include <queue>
#include <thread>

#include "tokequity/tokenizer/pretokenizer.hpp"

namespace tokequity::tokenizer {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Candidate {
  Rank rank;
  std::uint32_t start;
  std::uint32_t end;
};

// Min-heap order: lowest rank first, leftmost start on equal rank.
struct LaterCandidate {
  bool operator()(const Candidate& a, const Candidate& b) const {
    return a.rank != b.rank ? a.rank > b.rank : a.start > b.start;
  }
};

void encode_ordinary(std::string_view text, const Vocabulary& table,
                     std::vector<Rank>& out) {
  for (auto chunk : table.pretokenizer().split(text)) {
    auto ids = encode_piece(chunk, table);
    out.insert(out.end(), ids.begin(), ids.end());
  }
}

}  // namespace

std::vector<std::string> pretokenize(std::string_view text, const Vocabulary& table) {
  std::vector<std::string> chunks;
  for (auto chunk : table.pretokenizer().split(text)) chunks.emplace_back(chunk);
  return chunks;
}

std::vector<Rank> encode_piece(std::string_view piece, const Vocabulary& table) {
  if (piece.empty()) return {};
  if (auto whole = table.rank_of(piece)) return {*whole};

  const auto n = static_cast<std::uint32_t>(piece.size());
  // Parts form a linked list over byte offsets; part i spans [i, next[i]).
  std::vector<std::uint32_t> next(n);
  std::vector<std::uint32_t> prev(n);
  std::vector<bool> alive(n, true);
  for (std::uint32_t i = 0; i < n; ++i) {
    next[i] = i + 1;
    prev[i] = i == 0 ? kNone : i - 1;
  }

  std::priority_queue<Candidate, std::vector<Candidate>, LaterCandidate> heap;
  auto push_pair = [&](std::uint32_t left) {
    std::uint32_t mid = next[left];
    if (mid >= n) return;
    std::uint32_t end = next[mid];
    if (auto r = table.rank_of(piece.substr(left, end - left))) heap.push({*r, left, end});
  };
  for (std::uint32_t i = 0; i + 1 < n; ++i) push_pair(i);

  while (!heap.empty()) {
    Candidate c = heap.top();
    heap.pop();
    // Stale unless both parts are exactly as they were when pushed.
    if (!alive[c.start]) continue;
    std::uint32_t mid = next[c.start];
    if (mid >= n || next[mid] != c.end) continue;

    alive[mid] = false;
    next[c.start] = c.end;
    if (c.end < n) prev[c.end] = c.start;
    if (prev[c.start] != kNone) push_pair(prev[c.start]);
    push_pair(c.start);
  }

  std::vector<Rank> ids;
  for (std::uint32_t i = 0; i < n; i = next[i]) {
    auto r = table.rank_of(piece.substr(i, next[i] - i));
    if (!r) {
      throw ValidationError(fmt::format("{}: byte 0x{:02x} has no token",
                                        table.name(),
                                        static_cast<unsigned char>(piece[i])));
    }
    ids.push_back(*r);
  }
  return ids;
}

TokenSequence encode(std::string_view text, const Vocabulary& table,
                     EncodeOptions options) {
  TokenSequence seq;
  seq.source_len_bytes = text.size();
  if (!options.allow_special || table.special_tokens().empty()) {
    encode_ordinary(text, table, seq.ids);
    return seq;
  }

  std::size_t pos = 0;
  while (pos < text.size()) {
    // Leftmost special literal; longest wins at the same offset.
    std::size_t best_at = std::string_view::npos;
    const std::pair<const std::string, Rank>* best = nullptr;
    for (const auto& entry : table.special_tokens()) {
      auto at = text.find(entry.first, pos);
      if (at == std::string_view::npos) continue;
      if (at < best_at || (at == best_at && entry.first.size() > best->first.size())) {
        best_at = at;
        best = &entry;
      }
    }
    if (!best) {
      encode_ordinary(text.substr(pos), table, seq.ids);
      break;
    }
    encode_ordinary(text.substr(pos, best_at - pos), table, seq.ids);
    seq.ids.push_back(best->second);
    pos = best_at + best->first.size();
  }
  return seq;
}

std::string decode(std::span<const Rank> ids, const Vocabulary& table) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto bytes = table.bytes_of(ids[i]);
    if (!bytes) {
      throw DecodeError(fmt::format("unknown token id {} at position {}", ids[i], i), i);
    }
    out.append(*bytes);
  }
  return out;
}

TokenCounts count_tokens(std::span<const std::string> sentences, const Vocabulary& table,
                         unsigned threads) {
  TokenCounts counts;
  counts.per_sentence.resize(sentences.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(sentences.size()));

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      counts.per_sentence[i] = encode(sentences[i], table).ids.size();
    }
  };
  if (threads <= 1) {
    work(0, sentences.size());
  } else {
    std::size_t stride = (sentences.size() + threads - 1) / threads;
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (std::size_t b = 0, t = 0; b < sentences.size(); b += stride, ++t) {
        pool.emplace_back([&, b, t] {
          try {
            work(b, std::min(sentences.size(), b + stride));
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  for (auto c : counts.per_sentence) counts.total += c;
  return counts;
}

}  // namespace tokequity::tokenizer
