#ifndef AVCERT_SCAN_CACHE_HPP
#define AVCERT_SCAN_CACHE_HPP

#include <map>
#include <string>

#include "avcert/ellcurve.hpp"

namespace avcert {

struct ScanRecord {
    CurveQ curve;
    long p;
    long n;   // group order
    long ap;  // p + 1 - n
    std::map<std::string, long> orders;  // rational point key -> order mod p
};

// Line-delimited cache of per-(curve, prime) records:
//   {"curve":[a,b],"p":...,"N":...,"ap":...,"orders":{...}}
// ordered by (curve, p) and rewritten whole on save.
class ScanCache {
  public:
    ScanCache() = default;                   // in-memory only
    explicit ScanCache(std::string path);    // loads the file when present

    long group_order(const CurveQ& c, long p);
    long point_order(const CurveQ& c, const PointQ& pt, long p);

    void save() const;  // no-op without a backing path
    const std::string& path() const { return path_; }

    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }
    std::size_t record_count() const { return records_.size(); }

  private:
    using Key = std::pair<CurveQ, long>;
    ScanRecord& record_for(const CurveQ& c, long p);

    std::string path_;
    std::map<Key, ScanRecord> records_;
    std::size_t hits_ = 0, misses_ = 0;
};

}  // namespace avcert

#endif
