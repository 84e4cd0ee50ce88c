#include "avcert/scan_cache.hpp"

#include <json.hpp>

#include <fstream>

namespace avcert {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

long int_to_long(const Int& v)
{
    if (!v.fits_slong_p()) throw Error("scan cache: integer out of range");
    return v.get_si();
}

}  // namespace

ScanCache::ScanCache(std::string path) : path_(std::move(path))
{
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        CurveQ curve(Int(j.at("curve").at(0).get<long>()), Int(j.at("curve").at(1).get<long>()));
        ScanRecord rec{curve, j.at("p").get<long>(), j.at("N").get<long>(), j.at("ap").get<long>(),
                       {}};
        if (rec.ap != rec.p + 1 - rec.n) throw Error("scan cache: inconsistent trace in " + line);
        if (j.contains("orders"))
            for (const auto& [key, val] : j.at("orders").items()) {
                long ord = val.get<long>();
                if (rec.n % ord != 0) throw Error("scan cache: order does not divide N in " + line);
                rec.orders[key] = ord;
            }
        records_.insert_or_assign(Key{curve, rec.p}, std::move(rec));
    }
}

ScanRecord& ScanCache::record_for(const CurveQ& c, long p)
{
    auto it = records_.find(Key{c, p});
    if (it != records_.end()) {
        ++hits_;
        return it->second;
    }
    ++misses_;
    CurveFp red(c, p);
    long n = red.group_order();
    ScanRecord rec{c, p, n, p + 1 - n, {}};
    return records_.emplace(Key{c, p}, std::move(rec)).first->second;
}

long ScanCache::group_order(const CurveQ& c, long p) { return record_for(c, p).n; }

long ScanCache::point_order(const CurveQ& c, const PointQ& pt, long p)
{
    ScanRecord& rec = record_for(c, p);
    std::string key = pt.to_string();
    auto it = rec.orders.find(key);
    if (it != rec.orders.end()) {
        ++hits_;
        return it->second;
    }
    ++misses_;
    CurveFp red(c, p);
    auto reduced = red.reduce_point(pt);
    if (!reduced) throw BadReductionError("point does not reduce at p = " + std::to_string(p));
    long ord = red.point_order(*reduced);
    rec.orders.emplace(std::move(key), ord);
    return ord;
}

void ScanCache::save() const
{
    if (path_.empty()) return;
    std::ofstream out(path_, std::ios::trunc);
    if (!out) throw Error("scan cache: cannot write " + path_);
    for (const auto& [key, rec] : records_) {
        ordered_json j;
        j["curve"] = {int_to_long(rec.curve.a), int_to_long(rec.curve.b)};
        j["p"] = rec.p;
        j["N"] = rec.n;
        j["ap"] = rec.ap;
        j["orders"] = ordered_json::object();
        for (const auto& [pt, ord] : rec.orders) j["orders"][pt] = ord;
        out << j.dump() << "\n";
    }
}

}  // namespace avcert
