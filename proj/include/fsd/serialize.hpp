#pragma once

#include <iosfwd>
#include <string>

#include "fsd/codes.hpp"
#include "fsd/duality.hpp"
#include "fsd/evenset.hpp"
#include "fsd/search.hpp"

namespace fsd {

// JSON certificates with stable key order, suitable for golden-file diffs.
std::string certificate_to_json(const DualityCertificate &c);
std::string reduction_to_json(const ReductionResult &r);
std::string combination_to_json(const Group &g, const SubgroupCombination &c);
std::string search_result_to_json(const Group &g, const SearchResult &r);

// one word per line, symbols space-separated
CodeSet read_code_words(std::istream &in, CodeSet::Alphabet alphabet, long q);
void write_code_words(std::ostream &out, const CodeSet &c);

} // namespace fsd
