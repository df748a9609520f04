"""Evaluating retrieval measures in exact arithmetic.

The library keeps every rational-formula measure on an exact backend, so
two rankings score equal only when the formulas really coincide. This
script walks the classic worked examples: a contingency table, a few
user-oriented counts, and the length-4 binary rankings that make many
rank-based measures collide.
"""

from metriclass import ContingencyTable, GradeScheme, Ranking, Universe, UserContext, fmt
from metriclass import measure_from_id

binary = GradeScheme.binary()


def show(measure_id, value):
    print(f"  {measure_id:18s} -> {fmt(value)}")


# --- a set-based system output, summarised as four counts -----------------
table = ContingencyTable(tp=2, fp=3, fn=3, tn=7)
print(f"contingency table {table.display()} (N=15, R=5):")
for mid in ("recall", "precision", "fallout", "accuracy", "f-measure"):
    show(mid, measure_from_id(mid).evaluate(table))
show("utility(1,1,1,1)", measure_from_id(
    "utility?alpha=1,beta=1,gamma=1,delta=1").evaluate(table))

# --- user-oriented counts --------------------------------------------------
print("\nuser-oriented counts, one known relevant document:")
ctx_tight = UserContext(known_relevant=1, retrieved_known=1, retrieved_unknown=0, retrieved_total=1)
ctx_loose = UserContext(known_relevant=1, retrieved_known=1, retrieved_unknown=0, retrieved_total=2)
rr_measure = measure_from_id("retrieval-recall")
print(f"  retrieval-recall on A=1: {fmt(rr_measure.evaluate(ctx_tight))}")
print(f"  retrieval-recall on A=2: {fmt(rr_measure.evaluate(ctx_loose))}")
print("  -> one extra nonrelevant retrieved document is invisible to it")

# --- rank-based measures on length-4 binary rankings ------------------------
top = Ranking(binary, ("1", "0", "0", "0"))
second = Ranking(binary, ("0", "1", "0", "0"))
spread = Ranking(binary, ("0", "1", "0", "1"))
universe = Universe(8, 4)

print("\nrank-based on <1,0,0,0> vs <0,1,0,0> vs <0,1,0,1> (R=4):")
for mid in ("prec@4", "ap", "rr", "dcg?b=2", "rbp?p=1/2", "bpref", "q-measure"):
    measure = measure_from_id(mid)
    values = " | ".join(
        fmt(measure.evaluate(r, universe)) for r in (top, second, spread)
    )
    print(f"  {mid:10s} {values}")

print("\nnote the collisions: prec@4 cannot tell the first two rankings apart,")
print("ap scores the first and third alike, dcg (base 2) discounts rank 2 by")
print("log2(2) = 1 and therefore ties the first two as well.")

# --- the same formulas under a single relevant document ---------------------
u1 = Universe(8, 1)
print("\nmodified sliding ratio with one relevant document (R=1):")
for items in (("1", "0", "0", "0"), ("0", "1", "0", "0"), ("0", "0", "1", "0")):
    r = Ranking(binary, items)
    show(f"msr {r.display()}", measure_from_id("msr").evaluate(r, u1))
print("  -> distinct values 1, 1/2, 1/3: sensitive to order, but the gaps shrink,")
print("     which is exactly why it fails to be an interval scale.")
