#include "commands.hpp"

#include "padelab/experiment.hpp"
#include "parsing.hpp"
#include "reports.hpp"

namespace padelab::cli {

namespace {

json global_params(const GlobalOptions& global) {
    return {{"mode", global.mode == Mode::Exact ? "exact" : "float"},
            {"format", global.format == Format::Json ? "json" : "csv"},
            {"grid_density", global.grid_density},
            {"tol", global.tol}};
}

template <class S>
S to_scalar(const GaussianRational& z) {
    if constexpr (scalar_traits<S>::is_exact)
        return z;
    else
        return z.to_complex();
}

json oracle_params(const OracleOptions& oracle) {
    json out = {{"kind", oracle.kind}};
    if (!oracle.poly_coeffs.empty()) out["coeffs"] = oracle.poly_coeffs;
    if (!oracle.num_coeffs.empty()) out["num"] = oracle.num_coeffs;
    if (!oracle.den_coeffs.empty()) out["den"] = oracle.den_coeffs;
    return out;
}

template <class S>
Oracle<S> make_oracle(const OracleOptions& options) {
    if (options.kind == "exp") {
        if constexpr (scalar_traits<S>::is_exact)
            throw ArgumentError("the exp oracle has transcendental coefficients; use --mode float");
        else
            return make_exp_oracle();
    }
    if (options.kind == "geometric") return make_geometric_oracle<S>();
    if (options.kind == "polynomial") {
        if (options.poly_coeffs.empty()) throw ArgumentError("polynomial oracle needs --coeffs");
        Polynomial<GaussianRational> poly(parse_scalar_list(options.poly_coeffs));
        if constexpr (scalar_traits<S>::is_exact)
            return make_polynomial_oracle(poly);
        else
            return make_polynomial_oracle(to_float(poly));
    }
    if (options.kind == "rational") {
        if (options.num_coeffs.empty() || options.den_coeffs.empty())
            throw ArgumentError("rational oracle needs --num and --den");
        auto f = RationalFn<GaussianRational>::reduce(
            Polynomial<GaussianRational>(parse_scalar_list(options.num_coeffs)),
            Polynomial<GaussianRational>(parse_scalar_list(options.den_coeffs)));
        if constexpr (scalar_traits<S>::is_exact)
            return make_rational_oracle(std::move(f));
        else
            return make_rational_oracle(to_float(f));
    }
    throw ArgumentError("unknown oracle '" + options.kind + "'");
}

template <class S>
std::string table_impl(const GlobalOptions& global, const TableOptions& options) {
    const auto oracle = make_oracle<S>(options.oracle);
    const auto center = parse_scalar(options.center);
    const auto region_desc =
        options.region.empty()
            ? Descriptor(DiskDescriptor{center.to_complex(), 0.5, global.grid_density})
            : parse_descriptor(options.region, global.grid_density);
    const auto region = build(region_desc, "K");
    const auto cells = padelab::run_table<S>(oracle, to_scalar<S>(center), options.p_max,
                                             options.q_max, region, global.tol);
    json params = global_params(global);
    params["oracle"] = oracle_params(options.oracle);
    params["center"] = options.center;
    params["p_max"] = options.p_max;
    params["q_max"] = options.q_max;
    if (!options.region.empty()) params["region"] = options.region;
    if (global.format == Format::Csv) return table_csv(cells);
    return render_json(document("table", std::move(params), table_rows_json(cells)));
}

template <class S>
std::string membership_impl(const GlobalOptions& global, const MembershipOptions& options) {
    const auto oracle = make_oracle<S>(options.oracle);
    const auto center = to_scalar<S>(parse_scalar(options.center));
    const auto series = oracle.series_at(center, options.p + options.q);
    TableCell<S> cell;
    cell.p = options.p;
    cell.q = options.q;
    cell.verdict = hankel_determinant(series, options.p, options.q, global.tol);
    if (oracle.reduced_degrees)
        cell.predicted = predict_rational_membership(oracle.reduced_degrees->first,
                                                     oracle.reduced_degrees->second, options.p,
                                                     options.q);
    json params = global_params(global);
    params["oracle"] = oracle_params(options.oracle);
    params["center"] = options.center;
    params["p"] = options.p;
    params["q"] = options.q;
    if (global.format == Format::Csv) return membership_csv(cell);
    return render_json(document("membership", std::move(params), membership_row_json(cell)));
}

std::string construct_impl(const GlobalOptions& global, const ConstructOptions& options) {
    const auto region = build(parse_descriptor(options.region, global.grid_density), "T");
    const auto centers = build(parse_descriptor(options.centers, global.grid_density), "L");
    const bool smooth = options.kind == "poly-smooth" || options.kind == "rational-smooth";

    PerturbationResult result;
    if (options.kind == "poly" || options.kind == "poly-smooth") {
        if (options.poly_coeffs.empty()) throw ArgumentError("polynomial construction needs --poly");
        Polynomial<GaussianRational> base(parse_scalar_list(options.poly_coeffs));
        result = smooth ? perturb_polynomial_smooth(base, options.p, options.q, options.eps,
                                                    options.smooth_order, region)
                        : perturb_polynomial(base, options.p, options.q, options.eps, region);
    } else if (options.kind == "rational" || options.kind == "rational-smooth") {
        if (options.num_coeffs.empty() || options.den_coeffs.empty())
            throw ArgumentError("rational construction needs --num and --den");
        Polynomial<GaussianRational> num(parse_scalar_list(options.num_coeffs));
        Polynomial<GaussianRational> den(parse_scalar_list(options.den_coeffs));
        result = perturb_rational(num, den, options.p, options.q, options.eps, region,
                                  smooth ? std::optional<int>(options.smooth_order) : std::nullopt);
    } else {
        throw ArgumentError("unknown construction kind '" + options.kind + "'");
    }
    const auto report = verify_construction(std::move(result), centers, region);

    json params = global_params(global);
    params["kind"] = options.kind;
    if (!options.poly_coeffs.empty()) params["poly"] = options.poly_coeffs;
    if (!options.num_coeffs.empty()) params["num"] = options.num_coeffs;
    if (!options.den_coeffs.empty()) params["den"] = options.den_coeffs;
    params["p"] = options.p;
    params["q"] = options.q;
    params["eps"] = options.eps;
    if (smooth) params["smooth_order"] = options.smooth_order;
    params["region"] = options.region;
    params["centers"] = options.centers;
    if (global.format == Format::Csv) return construct_csv(report, global.mode);
    return render_json(
        document("construct", std::move(params), construct_rows_json(report, global.mode)));
}

template <class S>
std::string converge_impl(const GlobalOptions& global, const ConvergeOptions& options) {
    const auto oracle = make_oracle<S>(options.oracle);
    const auto family = parse_index_rule(options.indices);
    const auto centers = build(parse_descriptor(options.centers, global.grid_density), "L");
    const auto region = build(parse_descriptor(options.region, global.grid_density), "K");
    const auto rows = padelab::run_converge<S>(oracle, family, centers, region, options.max_n,
                                               options.deriv_orders, global.tol);
    json params = global_params(global);
    params["oracle"] = oracle_params(options.oracle);
    params["indices"] = options.indices;
    params["max_n"] = options.max_n;
    params["centers"] = options.centers;
    params["region"] = options.region;
    params["deriv_orders"] = options.deriv_orders;
    if (global.format == Format::Csv) return converge_csv(rows, options.deriv_orders);
    return render_json(
        document("converge", std::move(params), converge_rows_json(rows)));
}

} // namespace

std::string run_table(const GlobalOptions& global, const TableOptions& options) {
    return global.mode == Mode::Exact ? table_impl<GaussianRational>(global, options)
                                      : table_impl<Complex>(global, options);
}

std::string run_membership(const GlobalOptions& global, const MembershipOptions& options) {
    return global.mode == Mode::Exact ? membership_impl<GaussianRational>(global, options)
                                      : membership_impl<Complex>(global, options);
}

std::string run_construct(const GlobalOptions& global, const ConstructOptions& options) {
    return construct_impl(global, options);
}

std::string run_converge(const GlobalOptions& global, const ConvergeOptions& options) {
    return global.mode == Mode::Exact ? converge_impl<GaussianRational>(global, options)
                                      : converge_impl<Complex>(global, options);
}

} // namespace padelab::cli
