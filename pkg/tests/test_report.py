"""Report rendering, DOT export, and the machine-readable record."""

import pytest

from metriclass.enumeration import parse_domain
from metriclass.errors import ParseError
from metriclass.intrinsic import build_hasse, classify, order_values
from metriclass.measures import measure_from_id
from metriclass.report import (
    ClassificationReport,
    ReportRow,
    build_published_suite,
    emit_json_report,
    export_dot,
    parse_json_report,
    render_table,
)
from metriclass.values import exact


@pytest.fixture(scope="module")
def suite():
    return build_published_suite()


class TestSuiteShape:
    def test_every_suite_measure_appears_once(self, suite):
        ids = [row.measure_id for row in suite.rows]
        assert len(ids) == len(set(ids))
        assert len([r for r in suite.rows if r.group == "set-based"]) == 17
        assert len([r for r in suite.rows if r.group == "rank-based"]) == 19

    def test_contested_rows_survive_with_witnesses(self, suite):
        contested = {r.measure_id: r for r in suite.rows if r.agreement == "contested"}
        assert set(contested) == {"f-measure", "rnorm"}
        rnorm = contested["rnorm"].verdicts[0]
        assert rnorm.collision is not None
        assert {rnorm.collision.first, rnorm.collision.second} == {"<1,0,0,1>", "<0,1,1,0>"}

    def test_all_other_rows_agree(self, suite):
        for row in suite.rows:
            if row.measure_id in ("f-measure", "rnorm"):
                continue
            assert row.agreement == "agree", row.measure_id


class TestRenderTable:
    def test_markdown_has_columns_and_agreement(self, suite):
        text = render_table(suite, "markdown")
        header = text.splitlines()[0]
        for column in ("ord/pseudom", "ord/metr", "interv/metr", "published", "agreement"):
            assert column in header
        assert "| recall " in text
        assert "contested" in text

    def test_csv_row_count_matches_verdicts(self, suite):
        verdict_count = sum(len(row.verdicts) for row in suite.rows)
        lines = render_table(suite, "csv").strip().splitlines()
        assert len(lines) == verdict_count + 1  # header

    def test_text_format(self, suite):
        text = render_table(suite, "text")
        assert text.splitlines()[0].startswith("measure")

    def test_unknown_format_rejected(self, suite):
        with pytest.raises(ParseError):
            render_table(suite, "pdf")

    def test_rendering_is_deterministic(self, suite):
        rebuilt = build_published_suite()
        for fmt_name in ("markdown", "csv", "text"):
            assert render_table(suite, fmt_name) == render_table(rebuilt, fmt_name)

    def test_injective_rows_render_placeholder_witness(self, suite):
        text = render_table(suite, "csv")
        msr_line = next(line for line in text.splitlines() if line.startswith('"modified'))
        assert '"-"' not in msr_line  # msr carries an uneven-gap witness
        recall_fixed = next(
            line for line in text.splitlines()
            if line.startswith('"recall"') and "n=5" in line
        )
        assert recall_fixed.endswith('"-"')


class TestExportDot:
    def test_single_class_single_node(self):
        h = build_hasse(order_values([("a", exact(1)), ("b", exact(1))]))
        dot = export_dot(h, labels=["a", "b"])
        assert dot.count("c0 [label=") == 1
        assert "->" not in dot

    def test_four_level_shape(self):
        six = [
            ("r1", exact(0)),
            ("r2", exact(1)),
            ("r3", exact(1)),
            ("r4", exact(1)),
            ("r5", exact(2)),
            ("r6", exact(4)),
        ]
        dot = export_dot(build_hasse(order_values(six)), labels=[x for x, _ in six])
        assert dot.count("[label=") == 4 + 3  # nodes + weighted edges
        assert "r2, r3, r4" in dot

    def test_precision_chain(self):
        from metriclass.intrinsic import induced_order

        ordered = induced_order(measure_from_id("prec@4"), parse_domain("binary:L=4"))
        dot = export_dot(build_hasse(ordered), labels=ordered.labels)
        assert dot.count("->") == 4
        assert dot.count('[label="1/4"]') == 4
        assert export_dot(build_hasse(ordered), labels=ordered.labels) == dot


class TestJsonRecord:
    def test_round_trip_equality(self, suite):
        text = emit_json_report(suite)
        again = parse_json_report(text)
        assert again == suite

    def test_schema_tag_present(self, suite):
        assert '"schema": "metriclass/1"' in emit_json_report(suite)

    def test_rational_gap_kept_as_fraction(self, suite):
        recall_row = next(r for r in suite.rows if r.measure_id == "recall")
        fixed = recall_row.verdicts[0]
        assert fixed.gap == exact(1, 5)
        text = emit_json_report(suite)
        assert '"num": 1' in text and '"den": 5' in text

    def test_oracle_skip_marker_preserved(self):
        verdict = classify(
            measure_from_id("msr"), parse_domain("binary:L=4"), oracle_cap=1
        )
        assert verdict.oracle is None and "skipped" in verdict.oracle_note
        report = ClassificationReport(
            "0.1.0",
            (ReportRow("msr", "modified sliding ratio", "rank-based",
                       "ordinal/metric", False, (verdict,)),),
        )
        again = parse_json_report(emit_json_report(report))
        assert again.rows[0].verdicts[0].oracle is None
        assert "skipped" in again.rows[0].verdicts[0].oracle_note

    def test_bad_schema_rejected(self):
        with pytest.raises(ParseError):
            parse_json_report('{"schema": "other/9", "version": "0", "rows": []}')
