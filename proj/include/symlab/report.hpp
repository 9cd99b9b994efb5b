// Deterministic serialization of experiment records. Reports never include
// timings or worker counts, so the same grid produces byte-identical output
// regardless of how it was scheduled.
#pragma once

#include "symlab/core.hpp"
#include "symlab/sweep.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace symlab {

inline double rat_to_double(const BigRat& r) { return r.convert_to<double>(); }

// CSV: one '#' metadata block, a fixed header, then one row per record.
// I_f is written exactly; J_f is blank when it was not requested.
inline std::string write_csv(const std::vector<ExperimentRecord>& records,
                             const std::vector<std::string>& metadata = {}) {
    std::ostringstream os;
    for (const auto& m : metadata) os << "# " << m << "\n";
    os << "g_label,N,h,Q,theta,lambda,I_f,J_f,term1,term2,term3,term4,"
          "trivial,ratio,region_flag,residual_normalized\n";
    for (const auto& r : records) {
        os << r.g_label << ',' << r.N << ',' << r.h << ',' << r.Q << ','
           << fmt_g12(r.theta) << ',' << fmt_g12(r.lambda) << ',' << to_string(r.I_f) << ',';
        if (r.has_J) os << fmt_g12(rat_to_double(r.J_f));
        os << ',' << fmt_g12(r.term1) << ',' << fmt_g12(r.term2) << ',' << fmt_g12(r.term3)
           << ',' << fmt_g12(r.term4) << ',' << fmt_g12(r.trivial) << ',' << fmt_g12(r.ratio)
           << ',' << (r.region ? 1 : 0) << ',' << fmt_g12(r.residual_normalized) << "\n";
    }
    return os.str();
}

namespace detail {
inline void json_string(std::ostringstream& os, const std::string& s) {
    os << '"';
    for (char c : s) {
        if (c == '"' || c == '\\') os << '\\';
        os << c;
    }
    os << '"';
}
} // namespace detail

// JSON: array of objects mirroring the CSV columns, plus the diagnostic
// fields that have no CSV column (t_opt and the two hypothesis flags).
inline std::string write_json(const std::vector<ExperimentRecord>& records) {
    std::ostringstream os;
    os << "[\n";
    for (size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        os << "  {";
        os << "\"g_label\": ";
        detail::json_string(os, r.g_label);
        os << ", \"N\": " << r.N << ", \"h\": " << r.h << ", \"Q\": " << r.Q;
        os << ", \"theta\": " << fmt_g12(r.theta) << ", \"lambda\": " << fmt_g12(r.lambda);
        os << ", \"I_f\": " << to_string(r.I_f);
        os << ", \"J_f\": ";
        if (r.has_J)
            os << fmt_g12(rat_to_double(r.J_f));
        else
            os << "null";
        os << ", \"term1\": " << fmt_g12(r.term1) << ", \"term2\": " << fmt_g12(r.term2);
        os << ", \"term3\": " << fmt_g12(r.term3) << ", \"term4\": " << fmt_g12(r.term4);
        os << ", \"trivial\": " << fmt_g12(r.trivial) << ", \"ratio\": " << fmt_g12(r.ratio);
        os << ", \"t_opt\": " << fmt_g12(r.t_opt);
        os << ", \"region_flag\": " << (r.region ? "true" : "false");
        os << ", \"hyp_level\": " << (r.hyp_level ? "true" : "false");
        os << ", \"hyp_arm\": " << (r.hyp_arm ? "true" : "false");
        os << ", \"residual_normalized\": " << fmt_g12(r.residual_normalized);
        os << "}";
        if (i + 1 < records.size()) os << ",";
        os << "\n";
    }
    os << "]\n";
    return os.str();
}

} // namespace symlab
