#include "linequiv/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "linequiv/error.hpp"

namespace linequiv {

Permutation::Permutation(int degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> img) : img_(std::move(img)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw Error(ErrorKind::InternalInvariant,
                  "image table is not a bijection");
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

long long Permutation::order() const {
  long long ord = 1;
  for (int len : cycle_type()) ord = std::lcm(ord, static_cast<long long>(len));
  return ord;
}

Permutation Permutation::after(const Permutation& b) const {
  std::vector<int> r(img_.size());
  for (int x = 0; x < degree(); ++x) r[x] = img_[b.img_[x]];
  return Permutation(std::move(r));
}

Permutation Permutation::inverse() const {
  std::vector<int> r(img_.size());
  for (int x = 0; x < degree(); ++x) r[img_[x]] = x;
  return Permutation(std::move(r));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int s = 0; s < degree(); ++s) {
    if (seen[s] || img_[s] == s) continue;
    std::vector<int> cyc;
    int x = s;
    do {
      cyc.push_back(x);
      seen[x] = 1;
      x = img_[x];
    } while (x != s);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> type;
  std::vector<char> seen(img_.size(), 0);
  for (int s = 0; s < degree(); ++s) {
    if (seen[s]) continue;
    int len = 0, x = s;
    do {
      ++len;
      seen[x] = 1;
      x = img_[x];
    } while (x != s);
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string Permutation::cycle_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

Permutation Permutation::parse(const std::string& text, int degree) {
  if (degree < 0)
    throw Error(ErrorKind::Parse, "negative degree");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size())
    throw Error(ErrorKind::Parse, "empty permutation text");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw Error(ErrorKind::Parse, "expected '(' in \"" + text + "\"");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i == text.size())
        throw Error(ErrorKind::Parse, "unterminated cycle in \"" + text + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])) &&
          !(text[i] == ',' ))
        throw Error(ErrorKind::Parse, "unexpected character in \"" + text + "\"");
      if (text[i] == ',') { ++i; continue; }
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw Error(ErrorKind::Parse,
                    "point " + std::to_string(v) + " out of range 1.." +
                        std::to_string(degree));
      if (used[v - 1])
        throw Error(ErrorKind::Parse,
                    "point " + std::to_string(v) + " repeated in \"" + text + "\"");
      used[v - 1] = 1;
      cyc.push_back(v - 1);
    }
    for (size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  skip_ws();
  if (i != text.size())
    throw Error(ErrorKind::Parse, "trailing characters in \"" + text + "\"");
  return Permutation(std::move(img));
}

}  // namespace linequiv
