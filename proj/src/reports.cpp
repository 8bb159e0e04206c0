#include "ftex/reports.hpp"

#include <sstream>

#include <json.hpp>

#include "ftex/parse.hpp"

namespace ftex {

ReportFormat parse_format(const std::string& s)
{
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "text") return ReportFormat::Text;
    throw std::invalid_argument("unknown format '" + s + "' (expected json, csv, or text)");
}

std::string sequence_string(const ElementSequence& seq)
{
    std::string s;
    for (const auto& x : seq.elements) {
        if (!s.empty()) s += "; ";
        s += print_polynomial(x);
    }
    return s;
}

std::string emit_report(const SurveyReport& rep, ReportFormat fmt)
{
    switch (fmt) {
    case ReportFormat::Json: {
        nlohmann::ordered_json j;
        j["kind"] = "survey";
        j["ring"] = rep.ring_id;
        j["t"] = rep.t;
        j["d"] = rep.d;
        nlohmann::ordered_json samples = nlohmann::ordered_json::array();
        for (const auto& s : rep.samples) {
            nlohmann::ordered_json e;
            e["sample_index"] = s.index;
            e["sequence"] = sequence_string(s.sequence);
            e["fte"] = s.fte;
            e["hsl0"] = s.hsl0;
            e["status"] = to_string(s.status);
            samples.push_back(std::move(e));
        }
        j["samples"] = std::move(samples);
        j["max_fte"] = rep.max_fte;
        j["all_certified"] = rep.all_certified;
        if (rep.claimed_bound) {
            nlohmann::ordered_json b;
            b["value"] = rep.claimed_bound->value;
            b["h"] = rep.claimed_bound->h;
            b["h_provenance"] = rep.claimed_bound->h_provenance;
            b["c"] = rep.claimed_bound->c;
            j["claimed_bound"] = std::move(b);
        }
        j["verdict"] = to_string(rep.verdict);
        return j.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
        std::ostringstream out;
        out << "sample_index,sequence,fte,hsl0,status\n";
        for (const auto& s : rep.samples)
            out << s.index << ",\"" << sequence_string(s.sequence) << "\"," << s.fte << "," << s.hsl0 << ","
                << to_string(s.status) << "\n";
        return out.str();
    }
    case ReportFormat::Text: {
        std::ostringstream out;
        out << "uniform bound survey on " << rep.ring_id << " (t = " << rep.t << ", d = " << rep.d << ")\n";
        for (const auto& s : rep.samples)
            out << "  #" << s.index << "  fte=" << s.fte << "  hsl0=" << s.hsl0 << "  "
                << to_string(s.status) << "  [" << sequence_string(s.sequence) << "]\n";
        out << "max_fte = " << rep.max_fte << ", all_certified = " << (rep.all_certified ? "yes" : "no")
            << "\n";
        if (rep.claimed_bound)
            out << "claimed bound (d-t)h + c = " << rep.claimed_bound->value << " (h="
                << rep.claimed_bound->h << " [" << rep.claimed_bound->h_provenance << "], c="
                << rep.claimed_bound->c << ")\n";
        out << "verdict: " << to_string(rep.verdict) << "\n";
        return out.str();
    }
    }
    throw std::logic_error("bad format");
}

std::string emit_report(const SweepReport& rep, ReportFormat fmt)
{
    switch (fmt) {
    case ReportFormat::Json: {
        nlohmann::ordered_json j;
        j["kind"] = "sweep";
        j["ring"] = rep.ring_id;
        j["base_sequence"] = sequence_string(rep.base);
        j["max_n"] = rep.max_n;
        nlohmann::ordered_json pts = nlohmann::ordered_json::array();
        for (const auto& p : rep.points) {
            nlohmann::ordered_json e;
            e["exponents"] = p.exponents;
            e["fte"] = p.fte;
            e["status"] = to_string(p.status);
            pts.push_back(std::move(e));
        }
        j["points"] = std::move(pts);
        j["max_fte"] = rep.max_fte;
        j["verdict"] = to_string(rep.verdict);
        return j.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
        std::ostringstream out;
        out << "exponents,fte,status\n";
        for (const auto& p : rep.points) {
            std::string ex;
            for (int n : p.exponents) {
                if (!ex.empty()) ex += ";";
                ex += std::to_string(n);
            }
            out << "\"" << ex << "\"," << p.fte << "," << to_string(p.status) << "\n";
        }
        return out.str();
    }
    case ReportFormat::Text: {
        std::ostringstream out;
        out << "power family sweep on " << rep.ring_id << ", base [" << sequence_string(rep.base)
            << "], 1..n = " << rep.max_n << "\n";
        for (const auto& p : rep.points) {
            out << "  (";
            for (std::size_t i = 0; i < p.exponents.size(); ++i)
                out << (i ? "," : "") << p.exponents[i];
            out << ")  fte=" << p.fte << "  " << to_string(p.status) << "\n";
        }
        out << "empirical C_x = " << rep.max_fte << "\nverdict: " << to_string(rep.verdict) << "\n";
        return out.str();
    }
    }
    throw std::logic_error("bad format");
}

}  // namespace ftex
