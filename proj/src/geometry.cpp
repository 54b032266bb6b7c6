#include "sol/geometry.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sol {

namespace {

double fmt_guard(double v) { return v == 0.0 ? 0.0 : v; }  // normalize -0

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", fmt_guard(v));
    return buf;
}

FloatPoint to_point(const QuadNum& x, const QuadNum& y, double z) {
    return {x.to_double(), y.to_double(), z};
}

}  // namespace

std::map<std::string, FloatPoint> parallelepiped_vertices(const SolLattice& L) {
    FieldContext ctx = L.context();
    QuadNum lam = fundamental_unit(ctx);
    QuadNum lam_inv = lam.conj();
    double h = std::log(lam.to_double());

    const QuadNum& x1 = L.tau1().x;
    const QuadNum& y1 = L.tau1().y;
    const QuadNum& x2 = L.tau2().x;
    const QuadNum& y2 = L.tau2().y;
    const QuadNum& x3 = L.tau3().x;
    const QuadNum& y3 = L.tau3().y;

    std::map<std::string, FloatPoint> v;
    v["O"] = {0, 0, 0};
    v["P"] = to_point(x1, y1, 0);
    v["P_prime"] = to_point(x2, y2, 0);
    v["Q"] = to_point(x1 + x2, y1 + y2, 0);
    v["Q_prime"] = to_point((x1 + x2) * lam_inv, (y1 + y2) * lam, 0);
    v["P_dprime"] = to_point(x2 * lam_inv, y2 * lam, 0);
    v["P3"] = to_point(x3, y3, h);
    v["P_tau3"] = to_point(x3 + x1 * lam_inv, y3 + y1 * lam, h);
    v["P_prime_tau3"] = to_point(x3 + x2 * lam_inv, y3 + y2 * lam, h);
    v["Q_tau3"] = to_point(x3 + (x1 + x2) * lam_inv, y3 + (y1 + y2) * lam, h);
    return v;
}

CurveSamples translation_curve(const FloatPoint& start, const SolTranslation& target, int n) {
    if (n < 2) throw std::invalid_argument("translation curve needs at least two samples");
    FieldContext ctx = target.context();
    double a = target.x.to_double();
    double b = target.y.to_double();
    double c = target.k * std::log(fundamental_unit(ctx).to_double());

    CurveSamples out;
    out.points.reserve(n);
    out.params.reserve(n);
    for (int i = 0; i < n; ++i) {
        double t = static_cast<double>(i) / (n - 1);
        double xr, yr, zr;
        if (target.k == 0) {
            xr = a * t;
            yr = b * t;
            zr = 0.0;
        } else {
            xr = a * (1.0 - std::exp(-c * t)) / (1.0 - std::exp(-c));
            yr = b * (std::exp(c * t) - 1.0) / (std::exp(c) - 1.0);
            zr = c * t;
        }
        out.points.push_back({xr + start.x * std::exp(-zr), yr + start.y * std::exp(zr),
                              start.z + zr});
        out.params.push_back(t);
    }
    return out;
}

double arclength(const CurveSamples& samples) {
    if (samples.points.size() < 2) throw std::invalid_argument("arclength needs two samples");
    double total = 0.0;
    for (size_t i = 0; i + 1 < samples.points.size(); ++i) {
        const FloatPoint& p = samples.points[i];
        const FloatPoint& q = samples.points[i + 1];
        double zm = 0.5 * (p.z + q.z);
        double dx = q.x - p.x, dy = q.y - p.y, dz = q.z - p.z;
        double ez = std::exp(zm);
        total += std::sqrt(ez * ez * dx * dx + dy * dy / (ez * ez) + dz * dz);
    }
    return total;
}

std::string export_geometry(const SolLattice& L, ExportFormat format, int samples) {
    if (samples < 2) throw std::invalid_argument("sample count must be at least 2");
    auto verts = parallelepiped_vertices(L);
    static const char* kOrder[] = {"O",  "P",  "P_prime", "Q", "Q_prime",
                                   "P_dprime", "P3", "P_tau3", "P_prime_tau3", "Q_tau3"};
    struct Curve {
        std::string name;
        CurveSamples samples;
    };
    std::vector<Curve> curves;
    for (const char* base : {"O", "P", "P_prime", "Q"}) {
        curves.push_back({std::string(base) + "_to_tau3",
                          translation_curve(verts.at(base), L.tau3(), samples)});
    }

    if (format == ExportFormat::Json) {
        nlohmann::ordered_json j;
        j["schema"] = "sol-geom/1";
        nlohmann::ordered_json jv;
        for (const char* name : kOrder) {
            const FloatPoint& p = verts.at(name);
            jv[name] = {p.x, p.y, p.z};
        }
        j["vertices"] = jv;
        nlohmann::ordered_json jc = nlohmann::ordered_json::array();
        for (const Curve& c : curves) {
            nlohmann::ordered_json pts = nlohmann::ordered_json::array();
            for (const FloatPoint& p : c.samples.points) pts.push_back({p.x, p.y, p.z});
            jc.push_back({{"name", c.name}, {"points", pts}});
        }
        j["curves"] = jc;
        return j.dump(2) + "\n";
    }

    // OBJ: named vertices first, then curve samples; polylines reference
    // them 1-based; the two flat cell faces close the listing.
    std::ostringstream os;
    os << "# sol-geom/1\n";
    int index = 0;
    std::map<std::string, int> vid;
    for (const char* name : kOrder) {
        const FloatPoint& p = verts.at(name);
        os << "v " << num(p.x) << " " << num(p.y) << " " << num(p.z) << "\n";
        vid[name] = ++index;
    }
    for (const Curve& c : curves) {
        os << "# curve " << c.name << "\n";
        int first = index + 1;
        for (const FloatPoint& p : c.samples.points) {
            os << "v " << num(p.x) << " " << num(p.y) << " " << num(p.z) << "\n";
            ++index;
        }
        os << "l";
        for (int i = first; i <= index; ++i) os << " " << i;
        os << "\n";
    }
    os << "f " << vid["O"] << " " << vid["P"] << " " << vid["Q"] << " " << vid["P_prime"] << "\n";
    os << "f " << vid["P3"] << " " << vid["P_tau3"] << " " << vid["Q_tau3"] << " "
       << vid["P_prime_tau3"] << "\n";
    return os.str();
}

}  // namespace sol
