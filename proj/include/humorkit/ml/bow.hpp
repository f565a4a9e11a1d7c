#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace humorkit::ml {

/// Term-count vectorizer. Columns follow the lexicographic order of the vocabulary.
struct BowVectorizer {
  std::map<std::string, Eigen::Index> vocabulary;
  std::vector<int> document_frequency;  // per column
  int n_documents = 0;

  Eigen::Index size() const noexcept { return static_cast<Eigen::Index>(vocabulary.size()); }
};

BowVectorizer bow_fit(const std::vector<std::vector<std::string>>& docs);

/// Term counts; tokens outside the vocabulary are ignored.
Eigen::VectorXd bow_transform(const BowVectorizer& vectorizer, const std::vector<std::string>& doc);

}  // namespace humorkit::ml
