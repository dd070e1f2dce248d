#include "fsd/group.hpp"

#include <numeric>
#include <sstream>

namespace fsd {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

Group::Group(std::vector<long> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) moduli_.push_back(1);
  strides_.resize(moduli_.size());
  for (long n : moduli_)
    if (n < 1) throw std::invalid_argument("group modulus must be >= 1");
  for (int j = rank() - 1; j >= 0; --j) {
    strides_[j] = order_;
    order_ *= moduli_[j];
    exponent_ = lcm_long(exponent_, moduli_[j]);
  }
}

long Group::index_of(const Coords &c) const {
  if (static_cast<int>(c.size()) != rank())
    throw std::invalid_argument("element has wrong number of coordinates");
  long idx = 0;
  for (int j = 0; j < rank(); ++j) {
    long r = c[j] % moduli_[j];
    if (r < 0) r += moduli_[j];
    idx += r * strides_[j];
  }
  return idx;
}

Coords Group::coords_of(long idx) const {
  Coords c(rank());
  for (int j = 0; j < rank(); ++j) {
    c[j] = (idx / strides_[j]) % moduli_[j];
  }
  return c;
}

long Group::add(long a, long b) const {
  long idx = 0;
  for (int j = 0; j < rank(); ++j) {
    long ca = (a / strides_[j]) % moduli_[j];
    long cb = (b / strides_[j]) % moduli_[j];
    idx += ((ca + cb) % moduli_[j]) * strides_[j];
  }
  return idx;
}

long Group::neg(long a) const {
  long idx = 0;
  for (int j = 0; j < rank(); ++j) {
    long ca = (a / strides_[j]) % moduli_[j];
    idx += ((moduli_[j] - ca) % moduli_[j]) * strides_[j];
  }
  return idx;
}

long Group::scale(long k, long a) const {
  long idx = 0;
  for (int j = 0; j < rank(); ++j) {
    long ca = (a / strides_[j]) % moduli_[j];
    long r = (ca % moduli_[j]) * (k % moduli_[j]) % moduli_[j];
    if (r < 0) r += moduli_[j];
    idx += r * strides_[j];
  }
  return idx;
}

long Group::element_order(long a) const {
  long ord = 1;
  for (int j = 0; j < rank(); ++j) {
    long ca = (a / strides_[j]) % moduli_[j];
    long oj = moduli_[j] / gcd_long(ca, moduli_[j]);
    ord = lcm_long(ord, oj);
  }
  return ord;
}

std::string Group::to_string() const {
  std::ostringstream os;
  for (int j = 0; j < rank(); ++j) {
    int run = 1;
    while (j + run < rank() && moduli_[j + run] == moduli_[j]) ++run;
    if (j > 0) os << "x";
    os << "Z" << moduli_[j];
    if (run > 1) os << "^" << run;
    j += run - 1;
  }
  return os.str();
}

Group Group::parse(const std::string &literal) {
  std::vector<long> moduli;
  size_t i = 0;
  auto fail = [&]() -> long {
    throw std::invalid_argument("bad group literal: " + literal);
  };
  auto read_num = [&]() {
    size_t start = i;
    while (i < literal.size() && isdigit(static_cast<unsigned char>(literal[i]))) ++i;
    if (i == start) fail();
    return std::stol(literal.substr(start, i - start));
  };
  while (i < literal.size()) {
    if (literal[i] != 'Z' && literal[i] != 'z') fail();
    ++i;
    long n = read_num();
    long rep = 1;
    if (i < literal.size() && literal[i] == '^') {
      ++i;
      rep = read_num();
    }
    for (long r = 0; r < rep; ++r) moduli.push_back(n);
    if (i < literal.size()) {
      if (literal[i] != 'x' && literal[i] != 'X' && literal[i] != '*') fail();
      ++i;
    }
  }
  if (moduli.empty()) fail();
  return Group(std::move(moduli));
}

std::string Group::format_element(long idx) const {
  Coords c = coords_of(idx);
  if (rank() == 1) return std::to_string(c[0]);
  std::ostringstream os;
  os << "(";
  for (int j = 0; j < rank(); ++j) {
    if (j) os << ",";
    os << c[j];
  }
  os << ")";
  return os.str();
}

long Group::parse_element(const std::string &literal) const {
  Coords c;
  std::string body = literal;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')')
      throw std::invalid_argument("bad element literal: " + literal);
    body = body.substr(1, body.size() - 2);
  }
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("bad element literal: " + literal);
    c.push_back(std::stol(tok));
  }
  return index_of(c);
}

} // namespace fsd
