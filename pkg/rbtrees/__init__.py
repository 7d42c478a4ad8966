"""
Rota-Baxter tree identities - normalization, closed forms and model checks.

This package rewrites tree terms T(a,b,c) = P^c(P^a(x)P^b(y)) to the normal
basis {T(0,i,j), T(i,0,j), T(0,0,j)}, generates the closed-form identities,
audits them against a brute-force oracle and evaluates them in concrete
Rota-Baxter algebras.
"""

__version__ = "0.1.0"
