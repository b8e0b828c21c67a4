#pragma once

#include <optional>
#include <vector>

#include "juliadir/arcs.hpp"
#include "juliadir/poles.hpp"
#include "juliadir/zoo.hpp"

namespace juliadir {

// Multiplicity sequence m_1 = 2, m_{k+1} = 2^{sum_{j<=k} m_j}.
// Exact big integers as far as the bit budget allows (m_5 would already
// need ~2^70 bits); ln m_k in doubles as far as double range allows.
struct MSequence {
  std::vector<BigUint> exact;   // m_1 .. m_E with E = min(K, exact cap)
  std::vector<double> log_m;    // ln m_k for k = 1..K (+inf past double range)
};

// K <= 6; throws std::domain_error beyond, std::overflow_error if an exact
// term would blow the bit budget yet fewer than min(K,4) were requested.
MSequence build_m_sequence(int K);

PoleConfiguration build_pole_configuration(const std::vector<double>& directions,
                                           OrderTag tag, double rho, int K);

// Non-paper generator for estimator exercises: level k places one pole of
// multiplicity k at every direction, at radius (|E| k(k+1)/2)^{1/rho}, so
// the pole count tracks r^rho exactly at the pole radii.
PoleConfiguration mild_variant_configuration(const std::vector<double>& directions,
                                             double rho, int K);

struct CoefficientPlan {
  std::vector<double> directions;
  std::vector<double> coeff_logs;  // ln a_n, a_1 = 1
  double c_bound = 1.0;
  double r0 = 0.0;
  double log_lambda0 = 0.0;
  double r_prime = 0.0;
};

struct Lemma4Constants {
  double r0;
  double log_lambda0;
  double r_prime;
};

// R0 with C R0^-2 < 1/3 (1% margin), lambda0 small enough that
// R' = lambda0 (exp(e^R0 + R0) + 1/3) satisfies 2 R' < R0.
Lemma4Constants solve_lemma4_constants(double c_bound);

// Chooses a_{k+1} = min(2^-k, 2^-k / M_{k+1}) where M_{k+1} is a
// conservative grid estimate of sup |f_{k+1}| over the bounded overlap of
// strip k+1 with the earlier strips. Throws on coinciding directions.
CoefficientPlan choose_coefficients(const std::vector<double>& directions,
                                    double c_bound, double lambda_log,
                                    int grid = 200);

// Largest strip-sum magnitude over the pairwise overlap regions, per k,
// estimated on an n x n grid. Used both by the chooser and the verifier.
double overlap_sup_log(const std::vector<double>& directions, int k,
                       double c_bound, double lambda_log, int grid);

enum class PieceKind { Full, Partial };

struct IntervalPiece {
  PieceKind kind;
  Arc arc;
  double theta_offset = 0.0;  // for the merged partial piece
};

struct IntervalDecomposition {
  Arc j;
  double rho;
  std::vector<IntervalPiece> pieces;
};

// Tile a closed arc J with meas(J) >= pi/rho into pieces of measure
// pi/rho, merging the remainder (if any) into one wider partial piece
// of measure in (pi/rho, 2pi/rho) with its shift offset.
IntervalDecomposition partition_interval(const Arc& j, double rho);

// max(u1(beta), u1(beta - theta0)) with u1(x) = cos(rho x) on the open
// interval |x| < pi/(2 rho) and 0 outside.
double eval_growth_indicator(double beta, double rho, double theta0);

}  // namespace juliadir
