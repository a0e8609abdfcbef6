#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mukai/cones.hpp"
#include "mukai/divisor.hpp"
#include "mukai/interp.hpp"
#include "mukai/params.hpp"

namespace mukai {

inline constexpr std::size_t kDefaultDecompositionCap = 1'000'000;

// The integral effective classes of anticanonical degree 1: lattice points
// of the convex hull of the (-1)-divisors, confirmed effective numerically.
struct DegreeOneSet {
  Params params;
  std::vector<DivisorClass> classes; // complete list, sorted
};

DegreeOneSet degree_one_effectives(const Params& p, const InterpConfig& cfg,
                                   EffectiveCone* cone = nullptr, int seeds = 3);

// target = sum of deg(target) elements of a DegreeOneSet, as a non-increasing
// index multiset.
struct Decomposition {
  DivisorClass target;
  std::vector<std::size_t> parts;
};

std::vector<Decomposition> decompositions(const DivisorClass& target, const DegreeOneSet& s,
                                          std::size_t cap = kDefaultDecompositionCap);

// Rank of the evaluation matrix of all products of part sections at
// M >= h0(D) + 8 random ambient points. Never exceeds h0(D).
int64_t multiplication_image_rank(const Params& p, const DivisorClass& d,
                                  const std::vector<Decomposition>& decomps,
                                  const DegreeOneSet& s, const InterpConfig& cfg);

// True iff the multiplication image fills H0: image rank equals h0.
bool generated_in_degree(const Params& p, const DivisorClass& d, const InterpConfig& cfg);

// Largest possible anticanonical degree of a minimal Cox generator,
// b(a-1)(c-1) - 2.
int64_t generator_degree_bound(const Params& p);
// Castelnuovo-Mumford regularity of the Cox ring, b(a-1)(c-1) - 1.
int64_t regularity(const Params& p);

// Representatives (up to point symmetry) of the effective classes of
// anticanonical degree exactly k.
std::vector<DivisorClass> effective_classes_up_to_degree(const Params& p, int64_t k,
                                                         const InterpConfig& cfg,
                                                         EffectiveCone* cone = nullptr,
                                                         int seeds = 3);

struct CoxReportRow {
  DivisorClass divisor;
  int64_t degree = 0;
  int64_t h0 = 0;
  int64_t image_rank = 0;
  std::size_t n_decompositions = 0;
  bool generated = false;
  bool seeds_agree = false;
  int64_t wall_time_ms = 0;
};

struct CoxReport {
  Params params;
  int64_t max_degree = 0;
  uint64_t prime = 0;
  uint64_t seed = 0;
  int seeds = 0;
  std::vector<CoxReportRow> rows;
  bool all_generated = false;
  bool partial = false; // budget ran out before all classes were checked
};

// Runs the surjectivity check for every effective class of degree
// 2..max_degree up to point symmetry, across `seeds` independent seeds.
// budget_ms = 0 means no cap; otherwise the report stops early and is
// marked partial.
CoxReport cox_generation_report(const Params& p, int64_t max_degree, const InterpConfig& cfg,
                                int seeds = 3, int64_t budget_ms = 0);

std::string cox_report_csv(const CoxReport& report);
std::string cox_report_json(const CoxReport& report);

} // namespace mukai
