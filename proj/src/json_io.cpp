#include "lesq/json_io.hpp"

#include "lesq/text_io.hpp"

#include <algorithm>
#include <limits>

namespace lesq {

Json rational_json(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) {
    const BigInt& num = boost::multiprecision::numerator(q);
    if (num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max())
      return num.convert_to<long long>();
  }
  return to_string(q);
}

Json quiver_json(const Quiver& q) {
  Json vertices = Json::array();
  for (const VertexLabel& v : q.vertices()) vertices.push_back(v.str());
  std::vector<Arrow> arrows(q.arrows());
  std::sort(arrows.begin(), arrows.end(), [](const Arrow& a, const Arrow& b) {
    return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
  });
  Json arrow_list = Json::array();
  for (const Arrow& a : arrows)
    arrow_list.push_back({{"tail", q.vertices()[a.tail].str()},
                          {"head", q.vertices()[a.head].str()},
                          {"multiplicity", a.multiplicity}});
  return {{"n", q.n()}, {"m", q.m()}, {"vertices", vertices}, {"arrows", arrow_list}};
}

Json dim_vector_json(const DimVector& v) {
  const Quiver q = Quiver::star(v.n(), v.m());
  Json vertices = Json::array();
  for (const VertexLabel& label : q.vertices()) vertices.push_back(label.str());
  return {{"n", v.n()}, {"m", v.m()}, {"vertices", vertices}, {"values", v.values()}};
}

Json subset_tuple_json(const SubsetTuple& t) {
  Json out = Json::array();
  for (const Subset& s : t.sets()) out.push_back(s.elements());
  return out;
}

Json snm_json(int n, int m, const std::vector<SubsetTuple>& elements) {
  Json list = Json::array();
  for (const SubsetTuple& t : elements) list.push_back(subset_tuple_json(t));
  return {{"n", n}, {"m", m}, {"count", elements.size()}, {"elements", list}};
}

Json inequality_json(const Inequality& ineq) {
  Json coeffs = Json::array();
  for (const auto& row : ineq.coeffs) {
    Json r = Json::array();
    for (const Rational& c : row) r.push_back(rational_json(c));
    coeffs.push_back(std::move(r));
  }
  return {{"origin", to_string(ineq.origin)},
          {"level", ineq.level},
          {"subsets", ineq.subsets ? subset_tuple_json(*ineq.subsets) : Json::array()},
          {"coeffs", coeffs}};
}

Json inequality_system_json(const InequalitySystem& system) {
  Json list = Json::array();
  for (const Inequality& ineq : system.inequalities) list.push_back(inequality_json(ineq));
  return {{"n", system.n},
          {"m", system.m},
          {"suppressed_trivial", system.suppressed_trivial},
          {"inequalities", list}};
}

Json witness_json(const OracleSearch& search) {
  if (!search.witness) return {{"exists", false}, {"search_space", search.nodes}};
  Json chain = Json::array();
  for (const Partition& mu : search.witness->mus) chain.push_back(mu.parts());
  return {{"exists", true}, {"chain", chain}};
}

Json cross_check_json(const CrossCheckReport& report) {
  Json disagreements = Json::array();
  for (const Disagreement& d : report.disagreements) {
    std::string tuple;
    for (std::size_t i = 0; i < d.tuple.size(); ++i) {
      if (i > 0) tuple += ';';
      tuple += format_partition(d.tuple[i]);
    }
    disagreements.push_back(
        {{"tuple", tuple}, {"against", d.against}, {"oracle", d.oracle}, {"other", d.other}});
  }
  return {{"n", report.n},
          {"m", report.m},
          {"bound", report.bound},
          {"tuples", report.tuples},
          {"members", report.members},
          {"compared_against", report.compared_against},
          {"disagreements", disagreements}};
}

}  // namespace lesq
