"""Classifying measures and rebuilding the published comparison tables.

The classifier decides two machine-checkable questions on an explicit
finite domain: does the measure take distinct values on distinct elements
(then its distance is a metric), and are the attained values equally
spaced (then, for a metric, it is an interval scale)? Every negative
answer ships with a witness that re-evaluates to the recorded values.
"""

from metriclass import build_published_suite, classify, measure_from_id, parse_domain, render_table

print("one-off classifications")
print("=======================")
for measure_id, domain in (
    ("recall", "contingency:N=15,R=5,n=5"),
    ("recall", "contingency:N=15,R=5,n=0..15"),
    ("msr", "binary:L=4"),
    ("ap", "binary:L=4"),
    ("esl", "leveled:docs=4,s=1"),
):
    verdict = classify(measure_from_id(measure_id), parse_domain(domain))
    print(f"\n{measure_id} on {domain}")
    print(f"  {verdict.describe()}")
    print(f"  oracle agrees: {verdict.oracle == (verdict.injective and verdict.equispaced)}")

print("\nrecall is an interval scale only while the retrieved-set size is")
print("pinned; letting n vary collapses distinct tables onto equal values.")

print("\nfull published comparison")
print("=========================")
report = build_published_suite()
print(render_table(report, "text"))

contested = [row for row in report.rows if row.agreement == "contested"]
print("contested rows, kept visible with machine witnesses:")
for row in contested:
    verdict = next(v for v in row.verdicts if v.collision is not None)
    print(f"  {row.display}: published {row.published}, machine {verdict.category},")
    print(f"    witness {verdict.collision.describe()} on {verdict.domain}")
