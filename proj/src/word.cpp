#include "gcs/word.hpp"

#include <algorithm>

#include "gcs/errors.hpp"

namespace gcs {

bool is_letter(char c) { return c == 'a' || c == 'A' || c == 'b' || c == 'B'; }

char inv_letter(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    case 'B': return 'b';
  }
  throw precondition_error(std::string("bad letter: ") + c);
}

std::string free_reduce(const std::string& letters) {
  std::string out;
  out.reserve(letters.size());
  for (char c : letters) {
    if (!is_letter(c)) throw precondition_error(std::string("bad letter: ") + c);
    if (!out.empty() && out.back() == inv_letter(c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

std::string word_inverse(const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = inv_letter(c);
  return out;
}

std::string word_mul(const std::string& u, const std::string& v) { return free_reduce(u + v); }

std::string cyclic_reduce(const std::string& w, std::string* conjugator) {
  std::string r = free_reduce(w);
  std::string conj;
  while (r.size() >= 2 && r.front() == inv_letter(r.back())) {
    conj.push_back(r.front());
    r = r.substr(1, r.size() - 2);
  }
  if (conjugator) *conjugator = conj;  // w = conj * r * conj^-1
  return r;
}

std::string conjugacy_key(const std::string& w) {
  std::string r = cyclic_reduce(w);
  if (r.empty()) return r;
  auto best_rotation = [](const std::string& s) {
    std::string best = s;
    std::string cur = s;
    for (std::size_t i = 1; i < s.size(); ++i) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (cur < best) best = cur;
    }
    return best;
  };
  return std::min(best_rotation(r), best_rotation(word_inverse(r)));
}

int primitive_root(const std::string& w, std::string* root) {
  const std::size_t n = w.size();
  for (std::size_t len = 1; len <= n; ++len) {
    if (n % len) continue;
    bool ok = true;
    for (std::size_t i = len; i < n && ok; ++i)
      if (w[i] != w[i - len]) ok = false;
    if (ok) {
      if (root) *root = w.substr(0, len);
      return static_cast<int>(n / len);
    }
  }
  if (root) *root = w;
  return 1;
}

std::string random_reduced_word(std::mt19937_64& rng, int length) {
  static const char letters[4] = {'a', 'A', 'b', 'B'};
  std::string w;
  while (static_cast<int>(w.size()) < length) {
    char c = letters[rng() % 4];
    if (!w.empty() && c == inv_letter(w.back())) continue;
    w.push_back(c);
  }
  return w;
}

}  // namespace gcs
