#pragma once

#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "quasinet/network.hpp"
#include "quasinet/serialize.hpp"

namespace quasinet {

/// Inclusive grid of `steps` points from min to max.
struct GridRange {
    Rational min;
    Rational max;
    std::size_t steps = 2;

    Rational at(std::size_t k) const;
};

enum class ScanOutput { BilocalValue, Region, SourceNegativity, ProcessNegativity, LpVerdict };

struct ScanConfig {
    GridRange eta{Rational(0), Rational(3, 2), 101};
    GridRange mu{Rational(0), Rational(1), 101};
    /// Only read when symmetric_mu is false.
    GridRange mu2{Rational(0), Rational(1), 101};
    bool symmetric_mu = true;
    std::set<ScanOutput> outputs{ScanOutput::BilocalValue, ScanOutput::Region, ScanOutput::SourceNegativity,
                                 ScanOutput::ProcessNegativity};

    /// Throws Error unless steps >= 2, eta in [0, 2] and mu in [0, 1].
    void validate() const;
};

ScanConfig scan_config_from_json(const Json& j);

struct ScanRow {
    Rational eta;
    Rational mu1;
    Rational mu2;
    Rational t;
    double bilocal_value = 0.0;
    Region region = Region::Bilocal;
    bool source_neg = false;
    bool process_neg = false;
    std::optional<bool> local;
};

/// Rows in row-major order: eta outermost, then mu (then mu2).
std::vector<ScanRow> run_scan(const ScanConfig& config);

void write_csv(std::ostream& out, const ScanConfig& config, const std::vector<ScanRow>& rows);
Json rows_to_json(const ScanConfig& config, const std::vector<ScanRow>& rows);

}  // namespace quasinet
