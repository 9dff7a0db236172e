#include "effdiag/carrier.hpp"

#include "effdiag/error.hpp"

namespace effdiag {

Carrier Carrier::term(TermPtr t) {
  if (!t) throw InvalidValue("null term carrier");
  std::string key = canonicalKey(*t);
  return Carrier(std::make_shared<const TermData>(TermData{std::move(t), std::move(key)}));
}

Carrier Carrier::atom(const std::string& name) { return term(Term::var(name)); }

const TermPtr& Carrier::term() const {
  static const TermPtr none;
  return term_ ? term_->term : none;
}

std::string Carrier::key() const { return term_ ? term_->key : std::to_string(index_); }

std::string Carrier::display() const { return term_ ? print(*term_->term) : std::to_string(index_); }

bool operator==(const Carrier& a, const Carrier& b) {
  if (a.isIndex() != b.isIndex()) return false;
  if (a.isIndex()) return a.index_ == b.index_;
  return a.term_ == b.term_ || a.term_->key == b.term_->key;
}

std::strong_ordering operator<=>(const Carrier& a, const Carrier& b) {
  if (a.isIndex() != b.isIndex()) return a.isIndex() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.isIndex()) return a.index_ <=> b.index_;
  if (a.term_ == b.term_) return std::strong_ordering::equal;
  int c = a.term_->key.compare(b.term_->key);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace effdiag
