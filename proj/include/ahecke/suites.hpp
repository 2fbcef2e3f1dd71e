#pragma once

#include "ahecke/report.hpp"
#include "ahecke/root_datum.hpp"
#include "ahecke/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ahecke {

struct Instance {
    CartanType type = CartanType::A;
    int rank = 1;
    LatticeKind lattice = LatticeKind::Root;
    std::optional<ParamAssignment> lambda;  // equal parameters when absent
    std::vector<Rational> q{4};             // one value per parameter class; the last is repeated
    int bound = 6;
    std::optional<SimpleSet> I0;            // zero-based
    std::vector<Rational> p{9};
    bool corrupt = false;
};

// Reads cartan_type, rank, lattice_kind, lambda and lambda_star from a JSON document.
// Throws Usage on malformed input.
Instance apply_datum_file(Instance base, const std::string& json_text);

// Deterministic name/value pairs for the report header.
std::vector<std::pair<std::string, std::string>> describe(const Instance& in, const std::string& extra_key = "",
                                                          const std::string& extra_value = "");

// Parameters of the finite Hecke algebra, one per simple reflection. Root orbits are ordered by
// their first simple root, and the k-th orbit takes q[k].
std::vector<Rational> finite_params(const RootDatum& rd, const std::vector<Rational>& q);

// Each suite returns a report; a violated hypothesis becomes a failing record, never an exception.
VerificationReport run_solomon(const Instance& in);
VerificationReport run_hl_char(const Instance& in);
VerificationReport run_kato_finite(const Instance& in);
VerificationReport run_kato_affine(const Instance& in);
VerificationReport run_intertwiner(const Instance& in);
VerificationReport run_involution(const Instance& in);
VerificationReport run_hl_analogue(const Instance& in);
VerificationReport run_complex(const Instance& in);

const std::vector<std::string>& suite_names();
// Also accepts "kato" for kato-affine. Throws Usage for unknown names.
VerificationReport run_suite(const std::string& name, const Instance& in);

}  // namespace ahecke
