#pragma once

namespace hollow {

/// Built-in copy of data/catalog.txt.  The shipped file is the interchange
/// artifact; this string keeps the library self-contained, and a test pins
/// the two to be identical.
inline constexpr const char* kCatalogText = R"CAT(# Closed-form hollow spectral parameters, one record per family.
#
# Schema
#   [entry] <name>          start of a record
#   match: <key>:<params>   recognition key and parameter names (no params
#                           for fixed graphs such as the paw)
#   when: <expr>            integer guard over the parameters (optional)
#   q0|M0|MM0|MR0|mr0|M_plus: <expr>        exact value
#   <field>_lo / <field>_hi: <expr>         bracket when no exact value
#   oml_set: <list>|<list>...  exact set of ordered multiplicity lists,
#                           each list as (m1,m2,...); ones(n) = n ones
#   spectra_law: <text>     shape of every realizable spectrum
#   anchor: <text>          the mathematical fact backing the stored values
#   note: <text>            free-form annotation
#
# Expressions: integers, parameters, + - *, floordiv, ceildiv, mod, min,
# max, abs, odd, even, pow2, if(cond,a,b), comparisons, and/or.
# oml_set is the exact set; oml_set_contains lists known members only;
# unrestricted_oml_set is the exact set WITHOUT the hollow restriction
# (every hollow list belongs to it, so it refutes outsiders).
# List components may themselves be expressions, e.g. (r,2*r).

[entry] empty graph
match: empty:n
q0: 1
M0: n
MM0: n
MR0: 0
mr0: 0
oml_set: (n)
spectra_law: the zero matrix is the only member; spectrum {0^(n)}
anchor: a graph has a one-eigenvalue hollow matrix exactly when it has no edges

[entry] path
match: path:n
when: n >= 2
q0: n
M0: if(odd(n), 1, 0)
MM0: 1
MR0: 2*floordiv(n,2)
mr0: if(odd(n), n-1, n)
M_plus: 1
oml_set: ones(n)
spectra_law: distinct entries, symmetric about the origin; every such multiset is realizable
anchor: tridiagonal matrices with nonzero off-diagonal have simple eigenvalues, so the only list is all ones
anchor: a multiset of n distinct reals with S = -S is realizable on the path, and nothing else is

[entry] cycle
match: cycle:n
when: n >= 3
q0: ceildiv(n,2)
M0: if(even(n), 2, 0)
MM0: 2
MR0: n
mr0: if(even(n), n-2, n)
M_plus: 2
spectra_law: odd cycles never have eigenvalue zero; flipped adjacency reaches the all-twos lists
anchor: the minimum hollow rank of a cycle is n-2 for even n and n for odd n
anchor: the flipped adjacency has list (2,...,2) for even n and (1,2,...,2) for odd n, so the minimum distinct count is ceil(n/2)
note: no ordered multiplicity list of an odd cycle of order >= 5 is hollow spectrally arbitrary (zero is never available)

[entry] complete graph
match: complete:n
when: n >= 2
q0: 2
MM0: n-1
MR0: if(n >= 3, n, 2)
mr0: if(n >= 3, 3, 2)
M0: if(n >= 3, n-3, 0)
M_plus: n-1
spectra_law: adjacency realizes {n-1, (-1)^(n-1)}; every zero-sum multiset with n-1 eigenvalues of one sign is realizable
anchor: the adjacency matrix of the complete graph has spectrum {n-1, (-1)^(n-1)}, so two distinct eigenvalues suffice
anchor: the squared-difference matrix (entry (i-j)^2) is hollow of rank 3, so the minimum hollow rank is 3 for n >= 3
note: spectra with n-1 negative eigenvalues and their negatives are realizable by nonnegative matrices and their negatives

[entry] complete graph on four vertices
match: complete:n
when: n == 4
oml_set: (3,1)|(1,3)|(2,1,1)|(1,1,2)|(1,2,1)|(1,1,1,1)
anchor: (2,2) needs a hollow orthogonal matrix, and eliminating the off-diagonal of U^2 forces a nonzero entry
anchor: the remaining six compositions of four are realizable

[entry] complete bipartite
match: kmn:m,n
q0: if(m == n, 2, 3)
M0: m+n-2
MM0: max(m+n-2, 1)
MR0: 2*m
mr0: 2
M_plus: m
spectra_law: S = -S with an even nonzero count k, 2 <= k <= 2m; every such multiset is realizable
anchor: realizable spectra are exactly the origin-symmetric multisets whose nonzero count lies between 2 and twice the smaller side
anchor: the minimum distinct count is 2 for equal sides and 3 otherwise

[entry] balanced complete tripartite
match: krrr:r
q0: 2
MM0_lo: 2*r
oml_set_contains: (r,2*r)|(2*r,r)
spectra_law: two random orthogonal blocks give spectrum {(-2)^(r), 1^(2r)} up to scale
anchor: I - 3 P P^T built from orthogonal blocks is hollow on the balanced tripartite pattern with spectrum {(-2)^(r), 1^(2r)}

[entry] hypercube
match: hypercube:d
q0: 2
MR0: pow2(d)
spectra_law: lists (2^k,...,2^k) of length 2^(d-k) are realizable by iterated doubling
anchor: doubling a zero-free origin-symmetric spectrum keeps the distinct count, so the hypercube reaches two distinct eigenvalues

[entry] wheel
match: wheel:n
when: n >= 4
M0: if(even(n), 1, if(n == 5, 2, 3))
mr0: n - if(even(n), 1, if(n == 5, 2, 3))
MR0: n
anchor: bordering an odd-cycle adjacency preserves rank n-1 for even wheels; odd wheels of order >= 7 reach rank n-3 from a rank-deficient even-cycle base

[entry] five-wheel
match: wheel:n
when: n == 5
q0: 3
M0: 2
MM0: 3
M_plus: 3
oml_set: (3,1,1)|(1,1,3)|(2,1,2)|(2,2,1)|(1,2,2)|(2,1,1,1)|(1,1,1,2)|(1,2,1,1)|(1,1,2,1)|(1,1,1,1,1)
anchor: deleting the hub of a two-eigenvalue five-wheel matrix forces an asymmetric spectrum on the bipartite rim, so three distinct eigenvalues are needed
anchor: the psd maximum nullity of the five-wheel is 3 (external), and the bordered Gram construction turns it into smallest-eigenvalue multiplicity 3
note: the unrestricted minimum distinct count of the five-wheel is 2, strictly below the hollow value 3

[entry] complete split
match: split:r,s
when: r >= 2
q0_lo: 2
q0_hi: 3
spectra_law: lists (m_1,...,m_t,r-1,1) and reversals, with the m_i summing to s, are realizable
anchor: nonnegative realizations on the split pattern give zero with multiplicity r-1 plus one positive eigenvalue, so at most three distinct values are needed

[entry] complete split with a two-clique
match: split:r,s
when: s == 2 and r >= 3
q0: 3
MR0: 4
anchor: the largest generalized cycle of the split pattern with a two-clique has order four, so zero is always an eigenvalue and two distinct values cannot suffice

[entry] spider S(2,1,1)
match: spider:a,b,c
when: a == 2 and b == 1 and c == 1
q0: 5
oml_set: (1,1,1,1,1)
unrestricted_oml_set: (1,2,1,1)|(1,1,2,1)|(1,1,1,1,1)
anchor: the unrestricted multiplicity lists of this spider are (1,2,1,1), (1,1,2,1) and all ones (external)
anchor: the only origin-symmetric candidate among the tree's lists is all ones, so all five eigenvalues are distinct
note: the unrestricted minimum distinct count of this spider is 4, strictly below the hollow value 5

[entry] paw
match: paw
q0_lo: 3
MM0: 2
MR0: 4
mr0: 4
M0: 0
M_plus: 2
oml_set: (2,1,1)|(1,1,2)|(1,1,1,1)
anchor: the paw has a unique generalized cycle of order four (two disjoint edges), so every hollow matrix has full rank
anchor: the leaf and the far triangle vertex share a unique common neighbor, which rules out (2,2)

[entry] diamond
match: diamond
q0_lo: 3
MM0: 2
MR0: 4
mr0: 3
M0: 1
M_plus: 2
oml_set: (2,1,1)|(1,1,2)|(1,1,1,1)
anchor: deleting a degree-three vertex leaves a path on three vertices, which blocks the balanced central-two list
anchor: a hollow orthogonal diamond matrix would need (U^2)_{12} = u13 u32 = 0, impossible on the pattern

[entry] disjoint pair of complete graphs sharing a triangle
match: union2_complete:a,b
when: (a == 3 or b == 3) and a >= 2 and b >= 2
q0: if(mod(if(a == 3, b, a), 3) == 0, 2, 3)
anchor: aligning two-eigenvalue spectra of complete components forces the larger order to be a multiple of three
)CAT";

}  // namespace hollow
