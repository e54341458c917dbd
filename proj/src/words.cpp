#include "epiword/words.hpp"

#include <algorithm>
#include <charconv>

#include "epiword/error.hpp"

namespace epiword {

namespace {

void require_nonempty(const Word& w, const char* op) {
  if (w.empty()) throw Error(ErrorKind::EmptyWord, std::string(op) + " requires a non-empty word");
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer overflow in tuple arithmetic");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer overflow in tuple arithmetic");
  return out;
}

OccurrenceTuple OccurrenceTuple::unit(std::size_t k, std::size_t m) {
  if (m >= k) throw Error(ErrorKind::InvalidArgument, "unit index out of range");
  auto t = zeros(k);
  t.counts_[m] = 1;
  return t;
}

OccurrenceTuple OccurrenceTuple::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::Parse, "empty tuple");
  std::vector<std::int64_t> counts;
  while (true) {
    const auto comma = text.find(',');
    auto field = text.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw Error(ErrorKind::Parse, "bad tuple entry \"" + std::string(field) + "\"");
    }
    counts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return OccurrenceTuple(std::move(counts));
}

std::int64_t OccurrenceTuple::sum() const {
  std::int64_t s = 0;
  for (auto c : counts_) s = checked_add(s, c);
  return s;
}

bool OccurrenceTuple::all_zero() const noexcept {
  return std::all_of(counts_.begin(), counts_.end(), [](auto c) { return c == 0; });
}

bool OccurrenceTuple::any_negative() const noexcept {
  return std::any_of(counts_.begin(), counts_.end(), [](auto c) { return c < 0; });
}

std::optional<std::size_t> OccurrenceTuple::unit_index() const noexcept {
  std::optional<std::size_t> m;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) continue;
    if (counts_[i] != 1 || m) return std::nullopt;
    m = i;
  }
  return m;
}

OccurrenceTuple& OccurrenceTuple::operator+=(const OccurrenceTuple& rhs) {
  if (rhs.size() != size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "tuples of size " + std::to_string(size()) + " and " + std::to_string(rhs.size()));
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] = checked_add(counts_[i], rhs.counts_[i]);
  return *this;
}

OccurrenceTuple OccurrenceTuple::scaled(std::int64_t factor) const {
  auto out = *this;
  for (auto& c : out.counts_) c = checked_mul(c, factor);
  return out;
}

std::string OccurrenceTuple::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts_[i]);
  }
  return out;
}

std::string OccurrenceTuple::to_paren_string() const { return "(" + to_string() + ")"; }

OccurrenceTuple parikh(const Word& w) {
  auto t = OccurrenceTuple::zeros(w.arity());
  for (Letter a : w) ++t[a];
  return t;
}

Word rotate(const Word& w, std::size_t i) {
  if (w.empty()) return w;
  i %= w.size();
  return w.substr(i, w.size() - i) + w.substr(0, i);
}

Rotation least_rotation(const Word& w) {
  require_nonempty(w, "least_rotation");
  // Booth's algorithm over the doubled word, indices taken mod n.
  const auto n = static_cast<std::ptrdiff_t>(w.size());
  auto at = [&](std::ptrdiff_t i) { return w[static_cast<std::size_t>(i % n)]; };
  std::vector<std::ptrdiff_t> failure(static_cast<std::size_t>(2 * n), -1);
  std::ptrdiff_t k = 0;
  for (std::ptrdiff_t j = 1; j < 2 * n; ++j) {
    const Letter sj = at(j);
    std::ptrdiff_t i = failure[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = failure[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + i + 1)) {  // here i == -1
      if (sj < at(k)) k = j;
      failure[static_cast<std::size_t>(j - k)] = -1;
    } else {
      failure[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  // Booth may land on any copy of the least rotation of a periodic word.
  const auto offset = static_cast<std::size_t>(k % n) % primitive_root_length(w);
  return {rotate(w, offset), offset};
}

bool are_conjugate(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  return least_rotation(a).word == least_rotation(b).word;
}

std::size_t primitive_root_length(const Word& w) {
  require_nonempty(w, "primitive_root_length");
  // KMP border of the whole word gives its smallest period.
  const auto n = w.size();
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    auto b = border[i - 1];
    while (b > 0 && w[i] != w[b]) b = border[b - 1];
    if (w[i] == w[b]) ++b;
    border[i] = b;
  }
  const auto period = n - border[n - 1];
  return n % period == 0 ? period : n;
}

bool is_primitive(const Word& w) {
  require_nonempty(w, "is_primitive");
  return primitive_root_length(w) == w.size();
}

bool is_lyndon(const Word& w) {
  require_nonempty(w, "is_lyndon");
  return is_primitive(w) && least_rotation(w).offset == 0;
}

bool is_balanced(const Word& w) {
  require_nonempty(w, "is_balanced");
  const auto n = w.size();
  const auto k = w.arity();
  std::vector<std::int64_t> counts(k), lo(k), hi(k);
  for (std::size_t len = 1; len < n; ++len) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < len; ++i) ++counts[w[i]];
    lo = counts;
    hi = counts;
    for (std::size_t start = 1; start + len <= n; ++start) {
      --counts[w[start - 1]];
      ++counts[w[start + len - 1]];
      for (std::size_t a = 0; a < k; ++a) {
        lo[a] = std::min(lo[a], counts[a]);
        hi[a] = std::max(hi[a], counts[a]);
      }
    }
    for (std::size_t a = 0; a < k; ++a) {
      if (hi[a] - lo[a] > 1) return false;
    }
  }
  return true;
}

std::set<Word> factors(const Word& w, std::size_t length) {
  std::set<Word> out;
  if (length > w.size()) return out;
  for (std::size_t i = 0; i + length <= w.size(); ++i) out.insert(w.substr(i, length));
  return out;
}

}  // namespace epiword
