#include "tribsum/catalog.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "tribsum/error.hpp"

namespace tribsum {

namespace {

CatalogEntry entry(std::string key, std::string display, std::string symbol,
                   std::int64_t w0, std::int64_t w1, std::int64_t w2, std::int64_t r,
                   std::int64_t s, std::int64_t t, std::vector<std::string> ids,
                   std::optional<std::int64_t> shift) {
  SequenceDef def = make_def(w0, w1, w2, r, s, t);
  def.name = display;
  if (!ids.empty()) def.oeis_id = ids.front();
  return CatalogEntry{std::move(key), std::move(display), std::move(symbol), std::move(def),
                      std::move(ids), shift};
}

std::vector<CatalogEntry> build() {
  // W(w0, w1, w2; r, s, t). Shifts are the align() results against the
  // bundled b-files in data/oeis; unset where no b-file is bundled.
  return {
      entry("tribonacci", "Tribonacci", "T", 0, 1, 1, 1, 1, 1, {"A000073", "A057597"}, 1),
      entry("tribonacci-lucas", "Tribonacci-Lucas", "K", 3, 1, 3, 1, 1, 1,
            {"A001644", "A073145"}, 0),
      entry("third-order-pell", "third order Pell", "P3", 0, 1, 2, 2, 1, 1,
            {"A077939", "A077978"}, std::nullopt),
      entry("third-order-pell-lucas", "third order Pell-Lucas", "Q3", 3, 2, 6, 2, 1, 1,
            {"A276225", "A276228"}, std::nullopt),
      entry("third-order-modified-pell", "third order modified Pell", "E3", 0, 1, 1, 2, 1, 1,
            {"A077997", "A078049"}, std::nullopt),
      entry("padovan", "Padovan (Cordonnier)", "P", 1, 1, 1, 0, 1, 1, {"A000931"}, 5),
      entry("perrin", "Perrin (Padovan-Lucas)", "E", 3, 0, 2, 0, 1, 1, {"A001608", "A078712"}, 0),
      entry("padovan-perrin", "Padovan-Perrin", "S", 0, 0, 1, 0, 1, 1, {"A000931", "A176971"}, 1),
      entry("pell-padovan", "Pell-Padovan", "R", 1, 1, 1, 0, 2, 1, {"A066983", "A128587"},
            std::nullopt),
      entry("pell-perrin", "Pell-Perrin", "C", 3, 0, 2, 0, 2, 1, {}, std::nullopt),
      entry("jacobsthal-padovan", "Jacobsthal-Padovan", "Q", 1, 1, 1, 0, 1, 2, {"A159284"},
            std::nullopt),
      entry("jacobsthal-perrin", "Jacobsthal-Perrin (-Lucas)", "D", 3, 0, 2, 0, 1, 2,
            {"A072328"}, std::nullopt),
      entry("narayana", "Narayana", "N", 0, 1, 1, 1, 0, 1, {"A078012"}, 2),
      entry("third-order-jacobsthal", "third order Jacobsthal", "J3", 0, 1, 1, 1, 1, 2,
            {"A077947"}, std::nullopt),
      entry("third-order-jacobsthal-lucas", "third order Jacobsthal-Lucas", "j3", 2, 1, 5, 1, 1,
            2, {"A226308"}, std::nullopt),
  };
}

}  // namespace

std::span<const CatalogEntry> list_all() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& lookup(std::string_view key) {
  const auto all = list_all();
  const auto it = std::find_if(all.begin(), all.end(),
                               [&](const CatalogEntry& e) { return e.key == key; });
  if (it == all.end()) throw UnknownSequence(std::string(key));
  return *it;
}

std::string catalog_table() {
  std::ostringstream os;
  os << std::left << std::setw(30) << "key" << std::setw(18) << "W(w0,w1,w2;r,s,t)"
     << "oeis\n";
  for (const auto& e : list_all()) {
    const auto& d = e.def;
    std::ostringstream w;
    w << "W(" << d.w0 << "," << d.w1 << "," << d.w2 << ";" << d.params.r << ","
      << d.params.s << "," << d.params.t << ")";
    std::string ids;
    for (const auto& id : e.oeis_ids) ids += (ids.empty() ? "" : ", ") + id;
    os << std::setw(30) << e.key << std::setw(18) << w.str() << (ids.empty() ? "-" : ids)
       << "\n";
  }
  return os.str();
}

}  // namespace tribsum
