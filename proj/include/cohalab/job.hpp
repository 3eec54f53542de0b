#pragma once

#include <iomanip>
#include <optional>
#include <ostream>
#include <string>

#include "cohalab/report.hpp"

namespace cohalab {

/// One batch computation: quiver, command, truncation and window settings.
/// Identical JobSpecs produce byte-identical reports.
struct JobSpec {
    Quiver quiver;
    std::string command; // dt | char-coha | char-module | module-dims |
                         // span-principal | span-framed | verify
    int dmax = 3;
    std::optional<int> weight_window;          // default 2 |chi| dmax^2
    std::pair<int, int> degree_window = {0, 8};
    bool degree_window_given = false;
    std::optional<DimVector> framing;
    std::string format = "table"; // json | table
    bool render_q = false;        // print q^{k/2} powers instead of t^k
};

namespace detail {

inline int default_weight_window(const Quiver& q, int dmax) {
    int chi = 1;
    for (int i = 0; i < q.vertex_count; ++i)
        for (int j = 0; j < q.vertex_count; ++j) chi = std::max(chi, std::abs(q.euler(i, j)));
    return 2 * chi * dmax * dmax;
}

/// Default cohomological-degree window for a given d: covers every degree a
/// framed module component can occupy, from chi(d,d) up to 0.
inline std::pair<int, int> default_degree_window_for(const Quiver& q, const DimVector& d) {
    return {q.euler_self(d), 0};
}

inline void emit(std::ostream& os, const json& j, const std::string& format,
                 const std::string& table_text) {
    if (format == "json")
        os << j.dump(2) << "\n";
    else
        os << table_text;
}

} // namespace detail

/// Executes the job, writing the report to `os`. Returns 0 on success,
/// 1 on verification failure, 2 on input errors.
inline int run_job(const JobSpec& job, std::ostream& os) {
    const Quiver& q = job.quiver;
    QuiverValidation val = q.validate();
    if (!val.ok) {
        os << "error: " << val.message << "\n";
        return 2;
    }
    if (job.command == "char-module" || job.command == "module-dims" ||
        job.command == "span-framed") {
        if (!job.framing) {
            os << "error: --framing is required for " << job.command << "\n";
            return 2;
        }
    }
    if (job.framing && job.framing->size() != q.vertex_count) {
        os << "error: framing length does not match the vertex count\n";
        return 2;
    }
    int window = job.weight_window.value_or(detail::default_weight_window(q, job.dmax));

    if (job.command == "dt") {
        DtTable tbl = dt_invariants(q, job.dmax, window);
        std::ostringstream tb;
        tb << "refined DT invariants, " << q.render() << ", dmax " << job.dmax << ", window "
           << window << "\n";
        for (const auto& [d, omega] : tbl.invariants)
            tb << "  Omega_" << d.render() << " = " << omega.render(job.render_q)
               << (tbl.certified.at(d) ? "" : "   [uncertified: window too small]") << "\n";
        detail::emit(os, dt_to_json(q, tbl, job.render_q), job.format, tb.str());
        return 0;
    }

    if (job.command == "char-coha") {
        GradedSeries a = coha_character(q, job.dmax, window);
        std::ostringstream tb;
        tb << "CoHA character A_Q(x,q), " << q.render() << ", dmax " << job.dmax << ", window "
           << window << "\n" << a.render(job.render_q);
        detail::emit(os,
                     json{{"quiver", quiver_to_json(q)}, {"dmax", job.dmax}, {"window", window},
                          {"series", series_to_json(a, job.render_q)}},
                     job.format, tb.str());
        return 0;
    }

    if (job.command == "char-module") {
        GradedSeries z = module_character(q, *job.framing, job.dmax, window);
        std::ostringstream tb;
        tb << "module character Z(M_w,x,q), w = " << job.framing->render() << ", " << q.render()
           << ", dmax " << job.dmax << ", window " << window << "\n" << z.render(job.render_q);
        detail::emit(os,
                     json{{"quiver", quiver_to_json(q)}, {"w", dimvector_to_json(*job.framing)},
                          {"dmax", job.dmax}, {"window", window},
                          {"series", series_to_json(z, job.render_q)}},
                     job.format, tb.str());
        return 0;
    }

    if (job.command == "module-dims") {
        json rows = json::array();
        std::ostringstream tb;
        tb << "framed module dimensions, w = " << job.framing->render() << ", " << q.render()
           << "\n";
        for (const auto& d : enumerate_dimvectors(q.vertex_count, job.dmax)) {
            auto [klo, khi] = job.degree_window_given ? job.degree_window
                                                      : detail::default_degree_window_for(q, d);
            ModuleDims m = module_dims(q, *job.framing, d, klo, khi);
            rows.push_back(module_dims_to_json(m, d));
            tb << "  d = " << d.render() << " total " << m.total(d) << ":";
            for (const auto& [key, dim] : m.dims)
                if (key.first == d) tb << "  k=" << key.second << " -> " << dim;
            tb << "\n";
        }
        detail::emit(os,
                     json{{"quiver", quiver_to_json(q)}, {"w", dimvector_to_json(*job.framing)},
                          {"dmax", job.dmax}, {"tables", rows}},
                     job.format, tb.str());
        return 0;
    }

    if (job.command == "span-principal" || job.command == "span-framed") {
        bool framed = job.command == "span-framed";
        json rows = json::array();
        std::ostringstream tb;
        tb << (framed ? "framed subspace Q_w dimensions" : "principal free vertex algebra dimensions")
           << ", " << q.render();
        if (framed) tb << ", w = " << job.framing->render();
        tb << "\n";
        for (const auto& d : enumerate_dimvectors(q.vertex_count, job.dmax)) {
            WeightWindow win{q.euler_self(d) + window};
            SpanResult r = framed ? span_framed(q, *job.framing, d, win)
                                  : span_principal(q, d, win);
            rows.push_back(span_to_json(d, r, framed));
            tb << "  d = " << d.render() << " (tw in [" << r.min_twice_weight << ", " << r.window
               << "]):";
            for (const auto& [tw, dim] : r.dims) tb << "  " << tw << " -> " << dim;
            if (framed) tb << (r.saturated ? "  [saturated]" : "  [window unsaturated]");
            tb << "\n";
        }
        json out{{"quiver", quiver_to_json(q)}, {"dmax", job.dmax}, {"window", window},
                 {"tables", rows}};
        if (framed) out["w"] = dimvector_to_json(*job.framing);
        detail::emit(os, out, job.format, tb.str());
        return 0;
    }

    if (job.command == "verify") {
        bool ok = true;
        json checks = json::object();
        std::ostringstream tb;
        tb << "verification, " << q.render() << ", dmax " << job.dmax << ", window " << window
           << "\n";

        // locality of every vertex pair, with sharpness
        {
            bool pass = true;
            std::string detail_msg;
            for (int i = 0; i < q.vertex_count && pass; ++i)
                for (int j = 0; j < q.vertex_count && pass; ++j) {
                    LocalityCheck c = locality_order_check(q, i, j, WeightWindow{window});
                    if (!c.ok) {
                        pass = false;
                        detail_msg = c.message;
                    }
                }
            checks["locality"] = pass;
            tb << "  locality: " << (pass ? "ok" : "FAIL " + detail_msg) << "\n";
            ok = ok && pass;
        }

        // shuffle algebra: twisted commutativity and associativity
        {
            bool pass = true;
            for (int i = 0; i < q.vertex_count && pass; ++i)
                for (int j = 0; j < q.vertex_count && pass; ++j) {
                    DimVector di = DimVector::unit(q.vertex_count, i);
                    DimVector dj = DimVector::unit(q.vertex_count, j);
                    for (int pf = 0; pf <= 4 && pass; pf += 2)
                        for (int pg = 0; pg <= 4 - pf && pass; pg += 2)
                            for (const auto& f : monomial_basis(di, pf))
                                for (const auto& g : monomial_basis(dj, pg)) {
                                    SymPoly fg = shuffle_product(q, f, g);
                                    SymPoly gf = shuffle_product(q, g, f);
                                    int sign = q.euler(i, j) % 2 == 0 ? 1 : -1;
                                    if (fg != gf.scaled(sign)) pass = false;
                                }
                    SymPoly a = SymPoly::one(di), b = SymPoly::one(dj);
                    for (int k = 0; k < q.vertex_count && pass; ++k) {
                        SymPoly c = SymPoly::one(DimVector::unit(q.vertex_count, k));
                        if (shuffle_product(q, shuffle_product(q, a, b), c) !=
                            shuffle_product(q, a, shuffle_product(q, b, c)))
                            pass = false;
                    }
                }
            checks["shuffle"] = pass;
            tb << "  shuffle algebra: " << (pass ? "ok" : "FAIL") << "\n";
            ok = ok && pass;
        }

        // three-way cross-check when a framing is supplied
        if (job.framing) {
            bool pass = true;
            json cc = json::array();
            for (const auto& d : enumerate_dimvectors(q.vertex_count, job.dmax)) {
                if (d.is_zero()) continue;
                auto [klo, khi] = job.degree_window_given
                                      ? job.degree_window
                                      : detail::default_degree_window_for(q, d);
                CrossReport rep = cross_check(q, *job.framing, d, WeightWindow{khi}, klo, khi);
                cc.push_back(cross_to_json(rep));
                if (!rep.all_agree || !rep.saturated) pass = false;
                tb << "  cross-check d = " << d.render() << ": "
                   << (rep.all_agree ? "agree" : "MISMATCH")
                   << (rep.saturated ? "" : " (window unsaturated)") << "\n";
                if (rep.note) tb << "    note: " << *rep.note << "\n";
            }
            checks["cross_check"] = pass;
            checks["cross_check_reports"] = cc;
            ok = ok && pass;
        }

        // series symmetry identities
        {
            SymmetryReport rep = symmetry_identity_check(q, job.dmax, window);
            checks["symmetry"] = rep.ok;
            tb << "  symmetry identities: " << (rep.ok ? "ok" : "FAIL " + rep.message) << "\n";
            ok = ok && rep.ok;
        }

        // DT positivity and parity on certified entries
        {
            DtTable tbl = dt_invariants(q, job.dmax, window);
            bool allcert = true;
            for (const auto& [d, c] : tbl.certified) allcert = allcert && c;
            bool pass = allcert;
            if (allcert) {
                PositivityReport rep = positivity_check(q, tbl);
                pass = rep.ok;
            }
            checks["positivity"] = pass;
            tb << "  DT positivity: "
               << (pass ? "ok" : (allcert ? "FAIL" : "FAIL (uncertified entries)")) << "\n";
            ok = ok && pass;
        }

        tb << (ok ? "all checks passed\n" : "verification FAILED\n");
        json out{{"quiver", quiver_to_json(q)}, {"dmax", job.dmax}, {"window", window},
                 {"checks", checks}, {"ok", ok}};
        detail::emit(os, out, job.format, tb.str());
        return ok ? 0 : 1;
    }

    os << "error: unknown command '" << job.command << "'\n";
    return 2;
}

} // namespace cohalab
