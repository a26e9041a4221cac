"""
Gate counts grow as log^2 N
===========================

Each circuit is a QFT on n+1 qubits plus base changes built from increments
and multiply-controlled gates. With a linear cost per control the total is
quadratic in n.
"""

from qdct import CostModel, Variant, scaling_table

table = scaling_table(list(Variant), range(2, 11), fit_model=CostModel.LINEAR_MCX)
print(" n " + "".join(f"{v.value:>8s}" for v in Variant))
for n in range(2, 11):
    counts = [r.linear_count for r in table.rows if r.n == n]
    print(f"{n:2d} " + "".join(f"{c:8d}" for c in counts))

# %%
# Least-squares quadratic fits and their worst relative error.

for v, fit in table.fits.items():
    print(f"{v.value:>3s}: {fit.a:.2f} n^2 {fit.b:+.2f} n {fit.c:+.2f}  (max rel. error {fit.max_relative_residual:.1%})")
