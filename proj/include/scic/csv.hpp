#pragma once

#include <string>
#include <vector>

#include "scic/optimizer.hpp"

namespace scic {

/// Shortest-roundtrip decimal rendering with 17 significant digits ("%.17g").
std::string format_g17(double v);

/// Renders the scan table. Column order is fixed:
/// length_km,N_sent,case,mode,mu_k1,mu_k2,S1L,NphU,ephU,e_bit,N_det,lambda_EC,ell,rate
/// The key length column carries floor(ell); every other float keeps its
/// full precision. '\n' line endings, header always present.
std::string scan_to_csv(const std::vector<ScanRow>& rows);

void write_file(const std::string& path, const std::string& content);

/// Rate-versus-distance curves as a static SVG, one polyline per
/// (n_sent, case, mode) group, log10 rate on the y axis. Convenience output
/// only.
std::string scan_to_svg(const std::vector<ScanRow>& rows);

} // namespace scic
