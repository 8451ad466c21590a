#ifndef PADELAB_TOOLS_REPORTS_HPP
#define PADELAB_TOOLS_REPORTS_HPP

#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli_options.hpp"
#include "padelab/experiment.hpp"
#include "padelab/rational_fn.hpp"
#include "padelab/scalar.hpp"

namespace padelab::cli {

using nlohmann::json;

inline json scalar_json(const Complex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }
inline json scalar_json(const GaussianRational& z) {
    return {{"re", to_fraction_string(z.real())}, {"im", to_fraction_string(z.imag())}};
}

/// Pole flags serialize as the string "pole" where a number would sit.
inline json sup_json(const std::optional<double>& sup) {
    if (!sup) return "pole";
    return *sup;
}

inline std::string prediction_name(Prediction p) {
    switch (p) {
        case Prediction::Member: return "member";
        case Prediction::NotMember: return "not-member";
        default: return "undetermined";
    }
}

inline std::string csv_number(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}
inline std::string csv_scalar_re(const Complex& z) { return csv_number(z.real()); }
inline std::string csv_scalar_im(const Complex& z) { return csv_number(z.imag()); }
inline std::string csv_scalar_re(const GaussianRational& z) { return to_fraction_string(z.real()); }
inline std::string csv_scalar_im(const GaussianRational& z) { return to_fraction_string(z.imag()); }

/// Wraps rows into the stable top-level document {command, params, rows}.
inline json document(const std::string& command, json params, json rows) {
    return {{"command", command}, {"params", std::move(params)}, {"rows", std::move(rows)}};
}

inline std::string render_json(const json& doc) { return doc.dump(2) + "\n"; }

// ---- table ----------------------------------------------------------------

template <class S>
json table_rows_json(const std::vector<TableCell<S>>& cells) {
    json rows = json::array();
    for (const auto& cell : cells) {
        json row = {{"p", cell.p},
                    {"q", cell.q},
                    {"member", cell.verdict.member},
                    {"det", scalar_json(cell.verdict.det)}};
        row["prediction"] = cell.predicted ? json(prediction_name(*cell.predicted)) : json();
        row["sup_error"] = cell.sup_error ? sup_json(*cell.sup_error) : json();
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class S>
std::string table_csv(const std::vector<TableCell<S>>& cells) {
    std::ostringstream os;
    os << "p,q,member,det_re,det_im,prediction,sup_error\n";
    for (const auto& cell : cells) {
        os << cell.p << ',' << cell.q << ',' << (cell.verdict.member ? "true" : "false") << ','
           << csv_scalar_re(cell.verdict.det) << ',' << csv_scalar_im(cell.verdict.det) << ','
           << (cell.predicted ? prediction_name(*cell.predicted) : "") << ',';
        if (cell.sup_error) os << (*cell.sup_error ? csv_number(**cell.sup_error) : "pole");
        os << '\n';
    }
    return os.str();
}

// ---- membership -----------------------------------------------------------

template <class S>
json membership_row_json(const TableCell<S>& cell) {
    json row = {{"p", cell.p},
                {"q", cell.q},
                {"member", cell.verdict.member},
                {"det", scalar_json(cell.verdict.det)},
                {"scale", cell.verdict.scale}};
    row["prediction"] = cell.predicted ? json(prediction_name(*cell.predicted)) : json();
    return json::array({row});
}

template <class S>
std::string membership_csv(const TableCell<S>& cell) {
    std::ostringstream os;
    os << "p,q,member,det_re,det_im,scale,prediction\n";
    os << cell.p << ',' << cell.q << ',' << (cell.verdict.member ? "true" : "false") << ','
       << csv_scalar_re(cell.verdict.det) << ',' << csv_scalar_im(cell.verdict.det) << ','
       << csv_number(cell.verdict.scale) << ','
       << (cell.predicted ? prediction_name(*cell.predicted) : "") << '\n';
    return os.str();
}

// ---- construct ------------------------------------------------------------

json construct_rows_json(const ConstructReport& report, Mode mode);
std::string construct_csv(const ConstructReport& report, Mode mode);

// ---- converge -------------------------------------------------------------

json converge_rows_json(const std::vector<ConvergeRow>& rows);
std::string converge_csv(const std::vector<ConvergeRow>& rows, int deriv_orders);

} // namespace padelab::cli

#endif
