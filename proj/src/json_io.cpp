#include "polyesf/json_io.hpp"

namespace polyesf {

Json partition_to_json(const ColoredPartition& A) {
  Json parts = Json::array();
  for (const auto& [a, mult] : A.parts())
    parts.push_back(Json{{"a", a.counts}, {"mult", mult}});
  return Json{{"q", A.q()}, {"parts", std::move(parts)}};
}

ColoredPartition partition_from_json(const Json& j) {
  const int q = j.at("q").get<int>();
  std::vector<std::pair<ColorVector, int>> parts;
  for (const auto& part : j.at("parts")) {
    parts.emplace_back(ColorVector(part.at("a").get<std::vector<int>>()),
                       part.at("mult").get<int>());
  }
  return ColoredPartition(q, std::move(parts));
}

Json integer_partition_to_json(const IntegerPartition& lambda) {
  return Json{{"n", lambda.n()}, {"multiplicities", lambda.multiplicities}};
}

Json distribution_to_json(const ExactDistribution& d) {
  Json out = Json::array();
  for (size_t i = 0; i < d.size(); ++i)
    out.push_back(Json{{"partition", partition_to_json(d.support()[i])},
                       {"mass", to_string(d.mass()[i])}});
  return out;
}

MomentProblem moment_problem_from_json(const Json& j) {
  std::vector<BigRational> alpha;
  for (const auto& entry : j.at("alpha"))
    alpha.push_back(parse_rational(entry.get<std::string>()));

  const auto& rows = j.at("S");
  if (!rows.is_array() || rows.empty())
    throw std::invalid_argument("moment problem: S must be a nonempty array of rows");
  const int k = static_cast<int>(rows.size());
  const int q = static_cast<int>(rows.at(0).size());
  RationalMatrix S(k, q);
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(rows.at(i).size()) != q)
      throw std::invalid_argument("moment problem: ragged S");
    for (int col = 0; col < q; ++col)
      S.at(i, col) = parse_rational(rows.at(i).at(col).get<std::string>());
  }

  return MomentProblem(std::move(S), std::move(alpha), j.at("n").get<std::vector<int>>());
}

Json moment_problem_to_json(const MomentProblem& p) {
  Json alpha = Json::array();
  for (const auto& a : p.alpha) alpha.push_back(to_string(a));
  Json S = Json::array();
  for (int i = 0; i < p.k(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < p.q(); ++j) row.push_back(to_string(p.S.at(i, j)));
    S.push_back(std::move(row));
  }
  return Json{{"alpha", std::move(alpha)}, {"S", std::move(S)}, {"n", p.n_vec}};
}

}  // namespace polyesf
