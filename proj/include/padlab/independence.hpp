#pragma once

// Multiplicative-independence machinery: primitive/semi-primitive root
// classification, the Property I/II hypotheses, the Pei-Feng criteria for
// cyclotomic-unit systems, and two independent oracles (bounded exponent
// search and the rank of the logarithmic embedding matrix) that cross-check
// the criteria on desk-scale instances.

#include <optional>
#include <string>
#include <vector>

#include "padlab/cyclotomic.hpp"
#include "padlab/report.hpp"

namespace padlab {

long mult_order(long g, long m);  // least t with g^t = 1 mod m

enum class RootClass { Primitive, SemiPrimitive, Neither };
// Primitive: order = phi(m); SemiPrimitive: order = phi(m)/2.
// m must be an odd prime power or twice one (or 2^a for the Pei-Feng clauses).
RootClass classify_root(long g, long m);
std::string root_class_name(RootClass c);

struct EvidenceRecord {
    long base = 0;
    long modulus = 0;
    long order = 0;
    long phi = 0;
    std::string classification;
    json to_json() const;
};

struct PropertyReport {
    std::string subject;
    bool verdict = false;
    std::string case_tag;  // e.g. "PropI-case2", "P3-1a", "P5-1"
    std::string reason;    // filled when verdict is false
    std::vector<EvidenceRecord> evidence;
    std::vector<long> j_set;  // prime factors (Property II)
    json to_json() const;
};

PropertyReport check_property_i(long m);
PropertyReport check_property_ii(const std::vector<long>& M);

// Pei-Feng-style criteria for {(1-zeta_q^h)/(1-zeta_q) : (h,q)=1, 2<=h<q/2}.
// pei_feng_composite: q composite with >= 2 distinct primes, q != 2 mod 4.
// pei_feng_two_mod_four: q = 2 mod 4.
PropertyReport pei_feng_composite(long q);
PropertyReport pei_feng_two_mod_four(long q);

struct IndependenceWitness {
    std::vector<long> exponents;
    long root_of_unity_order = 1;  // order of the product (it is torsion)
};

struct IndependenceReport {
    std::vector<std::string> numbers;  // symbolic descriptors
    std::string method;                // "bounded-search" | "rank" | "criterion"
    std::string verdict;               // independent | dependent-with-witness |
                                       // independent-up-to-bound | undecided
    std::optional<IndependenceWitness> witness;
    long bound = 0;
    long digits = 0;
    std::string tolerance_note;
    json to_json() const;

    bool dependent() const { return verdict == "dependent-with-witness"; }
    bool independent() const { return verdict == "independent" || verdict == "independent-up-to-bound"; }
};

// Exhaustive exponent search over [-B, B]^n (lexicographic; first witness
// wins); (2B+1)^n is capped at 10^6.  Exactness: every candidate is confirmed
// by exact powering; the float prefilter only skips vectors whose relation
// residual provably exceeds the certified bound.
IndependenceReport oracle_bounded(const std::vector<CycloNum>& nums, long B,
                                  std::vector<std::string> labels = {});

// Rank of [log|sigma_j(alpha_i)|] plus one scaled row per rational prime
// dividing any norm; full column rank => independent, a numerically null
// direction is rationalized and confirmed exactly (or the oracle returns
// "undecided" -- never a silent guess).
IndependenceReport oracle_rank(const std::vector<CycloNum>& nums, long digits,
                               std::vector<std::string> labels = {});

// The full two-prime unit list for a Property-II set of m_i = p_i q_i:
// 1-zeta_p, 1-zeta_q, unit ratios at m_i, p_i, q_i; runs both oracles.
IndependenceReport verify_p4_instance(const std::vector<long>& M, long B, long digits,
                                      bool adversarial_duplicate = false);

// the system from the Pei-Feng propositions, coerced to modulus q
std::vector<CycloNum> cyclotomic_unit_system(long q, std::vector<std::string>* labels = nullptr);

}  // namespace padlab
