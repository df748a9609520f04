"""Evaluating a TREC-style run file against qrels.

Run lines are re-ordered by descending score (ties break on doc id),
unjudged documents take the lowest grade, and each topic gets a universe
whose relevant total counts every relevant judgment, retrieved or not.
The aggregate always carries the permissibility flag: averaging values
that only carry ordinal information presumes a scale they do not have.
"""

from metriclass import (
    GradeScheme,
    aggregate,
    fmt,
    measure_from_id,
    parse_qrels,
    parse_run,
    to_rankings,
)

QRELS = """\
1 0 d1 1
1 0 d2 0
1 0 d3 1
1 0 d4 0
1 0 d5 1
2 0 d1 1
2 0 d2 1
3 0 d1 0
3 0 d2 1
"""

RUN = """\
1 Q0 d1 1 3.0 sys1
1 Q0 d9 2 2.5 sys1
1 Q0 d3 3 2.0 sys1
1 Q0 d4 4 1.0 sys1
2 Q0 d5 1 0.9 sys1
2 Q0 d1 2 0.8 sys1
3 Q0 d2 1 1.0 sys1
3 Q0 d1 2 0.5 sys1
"""

qrels = parse_qrels(QRELS)
run = parse_run(RUN)
rankings, skipped = to_rankings(run, qrels, GradeScheme.binary(), depth=4)

print(f"system tag: {run.tag}; topics converted: {sorted(rankings)}; skipped: {list(skipped)}")
for topic in sorted(rankings):
    ranking, universe = rankings[topic]
    print(f"  topic {topic}: {ranking.display()}  (R={universe.total_relevant},"
          f" N={universe.collection_size})")

print("\nper-topic scores:")
for measure_id in ("ap", "dcg?b=2", "rbp?p=1/2"):
    measure = measure_from_id(measure_id)
    values = []
    for topic in sorted(rankings):
        ranking, universe = rankings[topic]
        value = measure.evaluate(ranking, universe)
        values.append(value)
        print(f"  topic {topic}: {measure_id:10s} = {fmt(value)}")
    mean, warning = aggregate(values, "map")
    print(f"  mean {measure_id} = {fmt(mean)}")
    print(f"  warning: {warning}\n")
