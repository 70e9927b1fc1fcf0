#pragma once

#include <map>
#include <string>

#include "lsv/variety.hpp"

namespace lsv {

// A named example variety with designated smooth points and linear spaces,
// each space carrying the containment verdict it is known to have.
struct CorpusEntry {
    std::string name;
    Variety variety;
    std::vector<std::vector<Rational>> smooth_points;
    std::map<std::string, LinearSpace> spaces;
    std::map<std::string, bool> contained;  // expected verdict per space
};

std::vector<std::string> corpus_names();

// Builds a corpus entry by name. Recognized parameters:
//   round_quadric:   n (ambient dimension, default 3)
//   perturbed_ruled: d (perturbation degree, default 4, at least 3)
CorpusEntry corpus_variety(const std::string& name,
                          const std::map<std::string, int>& params = {});

}  // namespace lsv
