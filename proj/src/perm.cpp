#include "loopforge/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "loopforge/error.hpp"

namespace loopforge {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotLatin: return "NotLatin";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotSElements: return "NotSElements";
    case ErrorKind::NotSLoop: return "NotSLoop";
    case ErrorKind::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Perm::Perm(std::vector<Element> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw Error(ErrorKind::OutOfRange, "permutation of degree 0");
  }
  std::vector<bool> seen(images_.size(), false);
  for (Element x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw Error(ErrorKind::OutOfRange,
                  "not a bijection: " + std::to_string(x) + " in degree " +
                      std::to_string(images_.size()));
    }
    seen[x] = true;
  }
}

Perm::Perm(std::initializer_list<Element> images)
    : Perm(std::vector<Element>(images)) {}

Perm Perm::identity(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::OutOfRange, "permutation of degree 0");
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{0});
  return Perm(std::move(images), Unchecked{});
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Perm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

Perm Perm::parse(std::string_view text) {
  std::vector<Element> images;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    Element value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw Error(ErrorKind::Parse,
                  "bad permutation entry '" + std::string(field) + "'");
    }
    images.push_back(value);
    pos = comma + 1;
  }
  return Perm(std::move(images));
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) {
    throw Error(ErrorKind::DegreeMismatch,
                "cannot compose degrees " + std::to_string(p.degree()) +
                    " and " + std::to_string(q.degree()));
  }
  std::vector<Element> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) {
    images[x] = q.images_[p.images_[x]];
  }
  return Perm(std::move(images), Perm::Unchecked{});
}

Perm inverse(const Perm& p) {
  std::vector<Element> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) {
    images[p.images_[x]] = static_cast<Element>(x);
  }
  return Perm(std::move(images), Perm::Unchecked{});
}

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<Perm> out;
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{0});
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace loopforge
