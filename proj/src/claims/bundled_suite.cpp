#include "logmean/claims/suite.hpp"

namespace logmean::claims {

namespace {

// Labels are canonical throughout: N2 = ((sqrt a + sqrt b)/2) sqrt((a+b)/2),
// N3 = (a + sqrt(ab) + b)/3. Entries whose printed form uses the swapped
// labels are transcribed through the swap, and say so in the note.
constexpr std::string_view kSuite = R"SUITE(
# Mean chains
eq2-chain | H <= G <= N1 <= A <= S | expect=HOLDS | power-mean special cases t = -1, 0, 1/2, 1, 2
eq2-power-means | B[-3] <= B[-1] <= B[0] <= B[1/3] <= B[1/2] <= B[1] <= B[2] <= B[5] | expect=HOLDS | monotone in the order
eq3-dp-half | N1 <= DP[1/2] <= A | expect=HOLDS | sqrt(N1) <= dp_mid(1/2) <= sqrt(A), raised to the power 2
eq3-dp-quarter | B[1/4] <= DP[1/4] <= A | expect=HOLDS | same bound at r = 1/4
eq3-dp-three-quarters | B[3/4] <= DP[3/4] <= A | expect=HOLDS | same bound at r = 3/4
eq4-chain | N1 <= N3 <= N2 | expect=HOLDS |
eq5-bound | N2 <= A | expect=HOLDS |
eq6-chain | H <= G <= N1 <= N3 <= N2 <= A <= S | expect=HOLDS |

# Cited chains, audited only
eq9-chain | H <= 2*A*H/(A+H) <= G <= (2*H+S)/3 <= (A+H)/2 <= sqrt((A^2+H^2)/2) <= (S+G)/2 <= (H+2*S)/3 <= A <= S+H-G <= S <= 3*(A-G)+H | expect=HOLDS |
eq10-chain | H <= G <= (G+2*N2)/3 <= N1 <= (2*A+7*N1)/9 <= N2 <= (A+N1)/2 <= (7*A+H)/8 <= A | expect=HOLDS | printed N3 read as canonical N2
eq11-chain | G <= (S+3*G)/4 <= N1 <= (S+8*N1)/9 <= N3 <= N2 <= (A+N1)/2 <= (S+2*N1)/3 <= (S+4*N2)/5 <= A | expect=HOLDS | labels swapped to canonical

# Log-mean chains
eq16-chain | H <= G <= L <= N1 | expect=HOLDS |
eq17-chain | H <= G <= L <= N1 <= N3 <= N2 <= A <= S | expect=HOLDS | printed N2/N3 swapped to canonical
eq18-chain | L <= N1 <= N3 <= N2 <= A <= S | expect=HOLDS | printed N2/N3 swapped to canonical

# Difference measures
eq31-chain | N1-L <= N3-L <= N2-L <= A-L <= S-L | expect=HOLDS | canonical labels
eq32-chain | N3-N1 <= N2-N1 <= A-N1 <= S-N1 | expect=HOLDS | canonical labels
eq33-chain | N2-N3 <= A-N3 <= S-N3 | expect=HOLDS | canonical labels
eq34-bound | A-N3 <= S-N2 | expect=HOLDS | canonical labels

# Best-constant chains
eq35-printed | S-L <= 5/2*(A-L) <= 5*(N3-L) <= 6*(N1-L) | expect=FAILS | printed constant 6; canonical labels
eq35-printed-tail | 5*(N3-L) <= 6*(N1-L) | expect=FAILS | amended by eq35-corrected; eq40 and eq43 compose to constant 10
eq35-corrected | S-L <= 5/2*(A-L) <= 5*(N3-L) <= 10*(N1-L) | expect=HOLDS | amends eq35-printed
eq36-chain | S-L <= 4*(N2-L) <= 10*(N1-L) | expect=HOLDS | canonical labels
eq37-bound | S-L <= 5/2*(A-L) | expect=HOLDS |
eq40-bound | A-L <= 2*(N3-L) | expect=HOLDS | canonical labels
eq43-bound | N3-L <= 2*(N1-L) | expect=HOLDS | canonical labels
eq46-bound | S-L <= 4*(N2-L) | expect=HOLDS | canonical labels
eq49-bound | N2-L <= 5/2*(N1-L) | expect=HOLDS | canonical labels

# Further constants
eq51-bound | S-H <= 9/5*(S-L) | expect=HOLDS |
eq52-bound | A-G <= 3/2*(A-L) | expect=HOLDS |
eq53-bound | S-N1 <= 9/10*(S-L) | expect=HOLDS |
eq54-chain | S-H <= 9/5*(S-L) <= 3*(A-G) <= 9/2*(A-L) | expect=HOLDS |
eq55-chain | S-A <= 3/4*(S-N3) <= 2/3*(S-N1) <= 3/5*(S-L) | expect=HOLDS | canonical labels
eq56-chain | S-A <= 1/3*(S-H) <= 1/2*(A-H) <= 1/2*(S-G) <= A-G | expect=HOLDS | cited chain, audited only
eq57-chain | S-A <= 3/4*(S-N3) <= 2/3*(S-N1) | expect=HOLDS | cited chain, audited only; canonical labels

# Difference functions and composite chains
eq58-t1 | 5/3*(A-G) - (S-L) >= 0 | expect=HOLDS | T1 >= 0
eq58-chain | 9/5*(S-L) <= 3*(A-G) | expect=HOLDS |
eq59-printed | L <= (S+9*L)/10 <= (2*N2+3*L)/5 <= (5*A+7*L)/12 <= N1 <= (5*N3+L)/6 | expect=FAILS | labels swapped to canonical; (5A+7L)/12 <= N1 fails near a = b
eq59-corrected | L <= (S+9*L)/10 <= (2*N2+3*L)/5 <= N1 <= (5*N3+L)/6 | expect=HOLDS | amends eq59-printed by dropping the failing middle term
eq59-corrected-substituted | L <= (S+9*L)/10 <= (2*N2+3*L)/5 <= (A+3*L)/4 <= N1 <= (5*N3+L)/6 | expect=FAILS | amends eq59-printed with the eq60 correction; (2N2+3L)/5 <= (A+3L)/4 fails for large b/a
eq60-printed | (S+5*L)/6 <= (5*A+7*L)/12 <= N1 <= (5*N3+L)/6 | expect=FAILS | labels swapped to canonical
eq60-middle-printed | (5*A+7*L)/12 <= N1 | expect=FAILS | fails near a = b: curvature at b/a = 1 is -7/72 on the left, -9/72 for N1
eq60-middle-corrected | (A+3*L)/4 <= N1 | expect=HOLDS | amends eq60-middle-printed; tight at a = b, oracle-adjudicated
eq60-corrected | (S+9*L)/10 <= (A+3*L)/4 <= N1 <= (5*N3+L)/6 | expect=HOLDS | amends eq60-printed
eq61-chain | (S+9*L)/10 <= (2*N2+3*L)/5 <= N1 | expect=HOLDS | labels swapped to canonical
eq62-t2 | (5*A+7*L)/12 - (2*N2+3*L)/5 >= 0 | expect=HOLDS | T2 >= 0
eq62-chain | (2*N2+3*L)/5 <= (5*A+7*L)/12 | expect=HOLDS | labels swapped to canonical

# Sign change: neither direction holds
remark44-le | (S+5*L)/6 <= (2*N2+3*L)/5 | expect=FAILS | T3 = (S+5L)/6 - (2N2+3L)/5; T3(1, 1e-5) ~ -3.7512758e-3, printed -0.00337512758
remark44-ge | (S+5*L)/6 >= (2*N2+3*L)/5 | expect=FAILS | T3(1, 1.1) ~ +1.3213513e-4

# Last chain
eq63-printed | N3 <= (5*N3+L)/6 <= N2 | expect=FAILS | labels swapped to canonical; left step implies N3 <= L
eq63-printed-left | N3 <= (5*N3+L)/6 | expect=FAILS |
eq63-corrected | N1 <= (5*N3+L)/6 <= N2 | expect=HOLDS | amends eq63-printed with leading N1
remark45-t4 | N2 - (5*N3+L)/6 >= 0 | expect=HOLDS | T4 >= 0
)SUITE";

} // namespace

std::string_view bundled_suite_text() { return kSuite; }

} // namespace logmean::claims
