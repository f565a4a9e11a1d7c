#include "humorkit/ml/bow.hpp"

#include <set>

#include "humorkit/error.hpp"

namespace humorkit::ml {

BowVectorizer bow_fit(const std::vector<std::vector<std::string>>& docs) {
  if (docs.empty()) throw Error(ErrorCode::EmptyCorpus, "bag-of-words needs at least one document");
  std::map<std::string, int> df;
  for (const auto& doc : docs) {
    for (const auto& term : std::set<std::string>(doc.begin(), doc.end())) ++df[term];
  }
  BowVectorizer v;
  v.n_documents = static_cast<int>(docs.size());
  for (const auto& [term, count] : df) {
    v.vocabulary.emplace(term, static_cast<Eigen::Index>(v.document_frequency.size()));
    v.document_frequency.push_back(count);
  }
  return v;
}

Eigen::VectorXd bow_transform(const BowVectorizer& vectorizer, const std::vector<std::string>& doc) {
  Eigen::VectorXd row = Eigen::VectorXd::Zero(vectorizer.size());
  for (const auto& term : doc) {
    auto it = vectorizer.vocabulary.find(term);
    if (it != vectorizer.vocabulary.end()) row(it->second) += 1.0;
  }
  return row;
}

}  // namespace humorkit::ml
