// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "fanoturan/kernels.hpp"
#include "fanoturan/multigraph.hpp"
#include "fanoturan/search.hpp"

using namespace fanoturan;

namespace {

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> check;
};

std::vector<CanonicalForm> sorted_classes(std::initializer_list<Hypergraph> hs) {
  std::vector<CanonicalForm> out;
  for (const auto& h : hs) out.push_back(canonical_form(h));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "ex(7) = 30, classes {B_7, J_7}, all 4- and 5-triple complements", 60,
       [](std::string& note) {
         const auto r = max_fano_free_edges(7);
         const auto lemma = verify_lemma_n7();
         note = "ex=" + std::to_string(r.edges) + " classes=" + std::to_string(r.classes.size()) +
                " lemma-n7 visited=" + std::to_string(lemma.visited);
         return r.edges == 30 &&
                r.classes == sorted_classes({construct(Family::balanced_bipartite, 7), construct(Family::j7, 7)}) &&
                r.scans.size() == 6 && r.scans[4].space == 52360 && r.scans[4].visited == 52360 &&
                r.scans[4].survivors == 0 && r.scans[5].space == 324632 && r.scans[5].visited == 324632 &&
                lemma.pass && lemma.visited == 52360 + 324632;
       }},
      {2, "f5(4) = 25 and f5(5) = 40 by branch and bound", 120,
       [](std::string& note) {
         const auto a = max_edges_no_crossing(5, 4);
         const auto b = max_edges_no_crossing(5, 5);
         note = "f5(4)=" + std::to_string(a.edges) + " f5(5)=" + std::to_string(b.edges);
         return a.edges == 25 && b.edges == 40 && !has_three_crossing_pairs(a.witness) &&
                !has_three_crossing_pairs(b.witness);
       }},
      {3, "f4(4) = 20 and f4(5) = 32 by exact search, equal to the closed form", 600,
       [](std::string& note) {
         const auto a = max_edges_no_crossing(4, 4);
         const auto b = max_edges_no_crossing(4, 5);
         note = "f4(4)=" + std::to_string(a.edges) + " f4(5)=" + std::to_string(b.edges);
         return a.edges == 20 && b.edges == 32 && a.edges == f4_formula(4) && b.edges == f4_formula(5);
       }},
      {4, "4-vertex 5-multigraph lemma over all 32^6 states", 300,
       [](std::string& note) {
         const auto c = verify_lemma_4vertex();
         note = c.detail;
         return c.pass && c.space == (1ULL << 30) && c.visited == c.space;
       }},
      {5, "link lemma: d(v) >= 11, e(H - v) >= 18, Fano-free forces B_6", 60,
       [](std::string& note) {
         const auto c = verify_lemma_2_3();
         note = "states=" + std::to_string(c.visited) + ", " + c.detail;
         return c.pass && c.space == 6914048 && c.visited == c.space;
       }},
      {6, "max Fano-free link over K_6 is 10; 20+10+10+6 = 46 < 48 = b(8)", 10,
       [](std::string& note) {
         const auto c = verify_fact_2_4();
         const auto scan = link_scan(11, 18);
         note = c.detail;
         return c.pass && scan.max_free_link == 10 && 20 + 10 + 10 + 6 == 46 && b_formula(8) == 48;
       }},
      {7, "matching facts over all 2^15 six-vertex graphs", 1,
       [](std::string& note) {
         const auto c = verify_matching_facts();
         note = c.detail;
         return c.pass && c.visited == 32768;
       }},
      {8, "b(n) edges force a tetrahedron for n = 4..7", 60,
       [](std::string& note) {
         const std::array ns{4, 5, 6, 7};
         const auto c = verify_fact_tetra(ns);
         note = c.detail;
         return c.pass && c.visited == c.space;
       }},
      {9, "corollary inequalities and the odd-n equality chain for n in [9, 10001]", 1,
       [](std::string& note) {
         const auto a = verify_corollary_inequalities(10001);
         const auto b = verify_section4_arithmetic(10001);
         note = std::to_string(a.visited) + " inequality checks, " + std::to_string(b.visited) + " identity checks";
         return a.pass && b.pass && a.visited == 2 * 4997;
       }},
      {10, "three Fano detectors agree on 1000 seeded samples for n = 7, 8, 9", 60,
       [](std::string& note) {
         const std::array ns{7, 8, 9};
         const auto c = verify_detector_agreement(42, ns);
         note = c.detail;
         return c.pass && c.visited == 3000;
       }},
      {11, "ex(8) = 48 with B_8 the unique extremal class", 4 * 3600,
       [](std::string& note) {
         const auto r = max_fano_free_edges(8);
         const auto& seven = r.scans.at(7);
         const auto& eight = r.scans.at(8);
         note = "7-triple complements " + std::to_string(seven.visited) + "/" + std::to_string(seven.space) +
                ", 8-triple survivors " + std::to_string(eight.survivors);
         return r.edges == 48 && r.classes == sorted_classes({construct(Family::balanced_bipartite, 8)}) &&
                seven.survivors == 0 && seven.visited == seven.space && eight.visited == eight.space;
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.check(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.budget_seconds;
    if (!in_time) note += " (over the " + std::to_string(c.budget_seconds) + " s budget)";
    const bool pass = ok && in_time;
    failures += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " [" << seconds
              << " s] " << note << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
