#include "reports.hpp"

namespace padelab::cli {

namespace {

json construct_scalar(const GaussianRational& z, Mode mode) {
    if (mode == Mode::Exact) return scalar_json(z);
    return scalar_json(z.to_complex());
}

} // namespace

json construct_rows_json(const ConstructReport& report, Mode mode) {
    json excluded = json::array();
    for (const auto& v : report.result.excluded_values)
        excluded.push_back(construct_scalar(v, mode));
    json rows = json::array();
    for (const auto& check : report.centers) {
        rows.push_back({{"center", construct_scalar(check.center, mode)},
                        {"det", construct_scalar(check.det, mode)},
                        {"member", check.member},
                        {"residual", check.residual},
                        {"d", construct_scalar(report.result.d, mode)},
                        {"bound_used", report.result.bound_used},
                        {"excluded_values", excluded}});
    }
    return rows;
}

std::string construct_csv(const ConstructReport& report, Mode mode) {
    const bool exact = mode == Mode::Exact;
    auto re = [&](const GaussianRational& z) {
        return exact ? csv_scalar_re(z) : csv_scalar_re(z.to_complex());
    };
    auto im = [&](const GaussianRational& z) {
        return exact ? csv_scalar_im(z) : csv_scalar_im(z.to_complex());
    };
    std::string excluded;
    for (const auto& v : report.result.excluded_values) {
        if (!excluded.empty()) excluded += ';';
        excluded += exact ? to_string(v) : to_string(v.to_complex());
    }
    std::ostringstream os;
    os << "center_re,center_im,det_re,det_im,member,residual,d_re,d_im,bound_used,"
          "excluded_values\n";
    for (const auto& check : report.centers) {
        os << re(check.center) << ',' << im(check.center) << ',' << re(check.det) << ','
           << im(check.det) << ',' << (check.member ? "true" : "false") << ','
           << csv_number(check.residual) << ',' << re(report.result.d) << ','
           << im(report.result.d) << ',' << csv_number(report.result.bound_used) << ','
           << excluded << '\n';
    }
    return os.str();
}

json converge_rows_json(const std::vector<ConvergeRow>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        json r = {{"n", row.n},
                  {"p", row.p},
                  {"q", row.q},
                  {"member_all_centers", row.member_all_centers},
                  {"status", row.member_all_centers ? "ok" : "not-normal"}};
        if (row.member_all_centers) {
            json sups = json::array();
            for (const auto& sup : row.sup_per_ell) sups.push_back(sup_json(sup));
            r["sup_error"] = std::move(sups);
        } else {
            r["sup_error"] = json();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string converge_csv(const std::vector<ConvergeRow>& rows, int deriv_orders) {
    std::ostringstream os;
    os << "n,p,q,member_all_centers,status";
    for (int ell = 0; ell <= deriv_orders; ++ell) os << ",sup_l" << ell;
    os << '\n';
    for (const auto& row : rows) {
        os << row.n << ',' << row.p << ',' << row.q << ','
           << (row.member_all_centers ? "true" : "false") << ','
           << (row.member_all_centers ? "ok" : "not-normal");
        for (int ell = 0; ell <= deriv_orders; ++ell) {
            os << ',';
            if (row.member_all_centers && ell < static_cast<int>(row.sup_per_ell.size())) {
                const auto& sup = row.sup_per_ell[static_cast<std::size_t>(ell)];
                os << (sup ? csv_number(*sup) : "pole");
            }
        }
        os << '\n';
    }
    return os.str();
}

} // namespace padelab::cli
