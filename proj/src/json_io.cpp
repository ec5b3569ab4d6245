#include "tav/json_io.hpp"

namespace tav {

json encode(const Int& value) { return value.str(); }

json encode(const Rat& value) { return value.str(); }

template <typename M>
static json encode_matrix(const M& value) {
  json rows = json::array();
  for (Index i = 0; i < value.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < value.cols(); ++j) row.push_back(encode(value(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json encode(const IntMatrix& value) { return encode_matrix(value); }

json encode(const RatMatrix& value) { return encode_matrix(value); }

json encode(const std::vector<Int>& value) {
  json out = json::array();
  for (const auto& v : value) out.push_back(encode(v));
  return out;
}

json encode(const FiniteAbelianGroup& value) {
  json out;
  out["invariant_factors"] = encode(value.invariant_factors());
  out["order"] = encode(value.order());
  out["exponent"] = encode(value.exponent());
  out["spectrally_paired"] = value.spectrally_paired();
  return out;
}

json encode(const SmithDecomposition& value) {
  json out;
  out["U"] = encode(value.U);
  out["D"] = encode(value.D);
  out["V"] = encode(value.V);
  out["invariant_factors"] = encode(FiniteAbelianGroup(
      [&] {
        std::vector<Int> positive;
        for (const auto& d : value.diagonal())
          if (d > 0) positive.push_back(d);
        return positive;
      }()).invariant_factors());
  return out;
}

json encode(const InvariantFactorChain& value) { return encode(value.entries()); }

json encode(const DecompositionCertificate& value) {
  json out;
  out["chain"] = encode(value.chain);
  out["N"] = encode(value.multiplier);
  json factors = json::array();
  for (const auto& f : value.factors) factors.push_back(encode(f));
  out["factors"] = std::move(factors);
  return out;
}

json encode(const CertificateCheck& value) {
  json out;
  out["ok"] = value.ok();
  out["status"] = certificate_status_name(value.status);
  return out;
}

json encode(const AntisymTwist& value) {
  json out;
  out["n"] = encode(value.modulus());
  out["genus"] = static_cast<long>(value.genus());
  out["matrix"] = encode(value.matrix());
  return out;
}

json encode(const KSDegreeReport& value) {
  json out;
  out["r"] = static_cast<long>(value.rank);
  out["d"] = encode(value.index_d);
  out["closed_form"] = encode(value.closed_form);
  out["oracle_value"] = encode(value.oracle_value);
  json grades = json::array();
  for (const auto& [grade, det] : value.per_grade) {
    json g;
    g["grade"] = static_cast<long>(grade);
    g["abs_det"] = encode(det);
    grades.push_back(std::move(g));
  }
  out["per_grade"] = std::move(grades);
  out["agree"] = value.agree;
  out["closed_form_square"] = value.closed_form_square;
  return out;
}

json encode(const FactorWitness& value) {
  json out;
  out["factor"] = encode(value.factor);
  out["degree"] = encode(value.degree);
  out["kernel"] = encode(value.kernel);
  out["n"] = encode(value.twist_order);
  out["twist"] = encode(value.twist);
  out["image_matches_kernel"] = value.image_matches_kernel;
  out["isotropic"] = value.isotropic;
  out["conformal_symplectic"] = value.conformal_symplectic;
  return out;
}

json encode(const WitnessReport& value) {
  json out;
  out["chain"] = encode(value.chain);
  out["n_policy"] = twist_order_policy_name(value.policy);
  if (value.prime) out["prime"] = encode(*value.prime);
  out["N"] = encode(value.certificate.multiplier);
  json factors = json::array();
  for (const auto& f : value.certificate.factors) factors.push_back(encode(f));
  out["factors"] = std::move(factors);
  out["certificate_ok"] = value.certificate_ok;
  json witnesses = json::array();
  for (const auto& w : value.factors) witnesses.push_back(encode(w));
  out["factor_witnesses"] = std::move(witnesses);
  out["all_verdicts_true"] = value.all_verdicts_true;
  return out;
}

Int decode_int(const json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  fail(errc::invalid_argument, "expected an integer (decimal string)");
}

Rat decode_rat(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  fail(errc::invalid_argument, "expected a rational (\"p\" or \"p/q\" string)");
}

template <typename M, typename Decode>
static M decode_matrix(const json& j, Decode decode_entry) {
  require(j.is_array() && !j.empty(), errc::invalid_argument,
          "expected a non-empty array of rows");
  const Index rows = static_cast<Index>(j.size());
  require(j[0].is_array() && !j[0].empty(), errc::invalid_argument,
          "expected non-empty rows");
  const Index cols = static_cast<Index>(j[0].size());
  M out(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    require(row.is_array() && static_cast<Index>(row.size()) == cols,
            errc::invalid_argument, "ragged matrix rows");
    for (Index jj = 0; jj < cols; ++jj)
      out(i, jj) = decode_entry(row[static_cast<std::size_t>(jj)]);
  }
  return out;
}

IntMatrix decode_int_matrix(const json& j) {
  return decode_matrix<IntMatrix>(j, decode_int);
}

RatMatrix decode_rat_matrix(const json& j) {
  return decode_matrix<RatMatrix>(j, decode_rat);
}

std::vector<Int> decode_int_list(const json& j) {
  require(j.is_array(), errc::invalid_argument, "expected an array of integers");
  std::vector<Int> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(decode_int(v));
  return out;
}

InvariantFactorChain decode_chain(const json& j) {
  return InvariantFactorChain(decode_int_list(j));
}

const json& field(const json& j, const char* name) {
  require(j.is_object() && j.contains(name), errc::invalid_argument,
          std::string("missing required field \"") + name + "\"");
  return j.at(name);
}

}  // namespace tav
