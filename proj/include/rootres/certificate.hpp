#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rootres/root_class.hpp"

namespace rootres {

enum class CertificateKind { PowerStage, FreeWord, ClosednessWitness };

std::string to_string(CertificateKind k);

// A self-contained record that some element survives a homomorphism into
// a target of the stated kind:
//   power_stage         g in a generalized free power keeps its reduced
//                       length under A -> A/N, with A/N in the class;
//   free_word           a free-group word has a non-trivial image in the
//                       units of a truncated series ring;
//   closedness_witness  a normal N with A/N in the class and a outside HN.
// `inputs` restates the problem, `data` the witness, `claims` what is
// asserted. Serialized as JSON with "format_version": 1.
struct SeparationCertificate {
  static constexpr int kFormatVersion = 1;

  CertificateKind kind = CertificateKind::PowerStage;
  RootClassSpec cls = RootClassSpec::all_finite();
  nlohmann::json inputs;
  nlohmann::json data;
  nlohmann::json claims;

  nlohmann::json to_json() const;
  // Pretty-printed JSON with a trailing newline; byte-stable.
  std::string serialize() const;
  // Throws MalformedCertificate.
  static SeparationCertificate from_json(const nlohmann::json& j);
};

struct VerificationReport {
  bool accepted = false;
  std::vector<std::string> failures;
};

// Rebuilds every referenced object from the serialized inputs and re-checks
// every claim. Relies only on the permutation-group layer; the amalgam and
// series code that produced the certificate is not consulted. Throws
// MalformedCertificate for payloads of the wrong shape.
VerificationReport check_certificate(const nlohmann::json& j);
bool verify_certificate(const nlohmann::json& j);
bool verify_certificate(std::string_view text);

}  // namespace rootres
