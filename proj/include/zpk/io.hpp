#pragma once

#include <string>

#include <json.hpp>

#include "zpk/coset.hpp"
#include "zpk/factor.hpp"
#include "zpk/matrix.hpp"
#include "zpk/orbit.hpp"
#include "zpk/train.hpp"

namespace zpk {

// key order is part of the format: serialization is byte-stable
using Json = nlohmann::ordered_json;

// matrix record {p, k, n, rows}; the loader rejects entries that are not
// already canonical in [0, p^k)
Json to_json(const GroupElement& g);
GroupElement matrix_from_json(const Json& j, const std::string& where = "matrix");

// {m, rep}
Json to_json(const DoubleCoset& c);
DoubleCoset coset_from_json(const Json& j, const std::string& where = "coset");

// {alpha, gamma, parts}
Json to_json(const TrainCoset& t);
TrainCoset train_from_json(const Json& j, const std::string& where = "train coset");

// self-contained reduction record {p, k, m, g, q, r, out}: anyone can
// re-check q g r = out and the two memberships with plain multiplication
struct CertificateRecord {
  Index m;
  GroupElement g;
  ReductionCertificate cert;
};
Json to_json(const CertificateRecord& rec);
CertificateRecord certificate_from_json(const Json& j, const std::string& where = "certificate");

Json to_json(const CosetWitness& w);
Json to_json(const EqResult& r);
const char* decision_name(Decision d);

Json to_json(const Factor& f);
Json factors_to_json(const std::vector<Factor>& fs);
std::vector<Factor> factors_from_json(const Json& j, const Modulus& m,
                                      const std::string& where = "factors");

// columns: n, p, k, N, orbit_count, stabilized
std::string orbit_csv(Index n, const Modulus& m, const OrbitTable& table);

// wraps the underlying parser so failures carry the byte location
Json parse_json_text(const std::string& text, const std::string& where);

// unreadable / unwritable paths are input errors (std::invalid_argument),
// matching the malformed-record channel
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace zpk
