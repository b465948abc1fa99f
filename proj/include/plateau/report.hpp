#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "plateau/matrixchar.hpp"
#include "plateau/pgds.hpp"
#include "plateau/sequences.hpp"
#include "plateau/walsh.hpp"

namespace plateau {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "plateau-lab";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// FNV-1a 64 of a byte string, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);
/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file_bytes(const std::string& path);

Json to_json(const CycInt& x);
Json to_json(const FieldSpec& spec);
/// Spec plus primitive element.
Json field_json(const GaloisField& field);
Json to_json(const SpectrumClass& c);
Json to_json(const VectorialClass& c);
Json to_json(const PgdsParams& params);
Json to_json(const PgdsVerdict& v);
Json to_json(const NfVerdict& v);
Json to_json(const GroupRingVerdict& v);
Json to_json(const PartitionReport& r);
Json to_json(const BridgeVerdict& v);
Json to_json(const ThreeValuedVerdict& v);
Json to_json(const DecimationFamily& f);
Json to_json(const ComponentRelationVerdict& v);
Json to_json(const MmmVerdict& v);
Json to_json(const SecondDerivativeVerdict& v);
Json to_json(const EnergyVerdict& v);
Json to_json(const KroneckerVerdict& v);
Json to_json(const LinearStructureSpace& s);
Json to_json(const PartiallyBentVerdict& v);
Json to_json(const TaLemmaVerdict& v);
Json to_json(const DesignVerdict& v);

/// "c0;c1;..." for CSV cells.
std::string coeff_cell(const CycInt& x);
/// mu,w_coeffs,norm_sq_coeffs
std::string spectrum_csv(const WalshSpectrum& spectrum);
/// tau,theta_coeffs,is_rational,rational_value
std::string cross_correlation_csv(const CrossCorrSpectrum& spectrum);

}  // namespace plateau
