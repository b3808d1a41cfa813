import json

import pytest

from src.config.settings import ResourceLimits
from src.utils.errors import UsageError
from src.utils.journal import Journal
from src.utils.sweep import (
    ROW_COLUMNS,
    SweepTask,
    build_tasks,
    expand_grid,
    parse_grid,
    render_rows,
    run_sweep,
    solve_row,
)


class TestGrid:
    def test_parse(self):
        assert parse_grid("n=8|14, d=1..n/2") == [("n", "8|14"), ("d", "1..n/2")]
        with pytest.raises(UsageError):
            parse_grid("n")

    def test_dependent_ranges(self):
        rows = list(expand_grid(parse_grid("n=8|14,d=1..n/2")))
        assert len(rows) == 4 + 7
        assert rows[0] == {"n": 8, "d": 1}
        assert rows[4] == {"n": 14, "d": 1}

    @pytest.mark.parametrize("grid", ["d=1..q", "n=8,d=1..n/x", "n=8||9", "d=n..3,n=3"])
    def test_bad_bounds(self, grid):
        with pytest.raises(UsageError):
            list(expand_grid(parse_grid(grid)))

    def test_tasks(self):
        tasks = build_tasks("gndm", "n=8,d=1..2,m=4", ["d", "s"])
        assert [t.key for t in tasks] == [
            "gndm:n=8,d=1,m=4|d",
            "gndm:n=8,d=1,m=4|s",
            "gndm:n=8,d=2,m=4|d",
            "gndm:n=8,d=2,m=4|s",
        ]
        assert [t.index for t in tasks] == [0, 1, 2, 3]
        with pytest.raises(UsageError):
            build_tasks("petersen", "n=3", ["d"])


class TestRows:
    def test_ok_row(self):
        row = solve_row(SweepTask(0, "cycle:n=8", "d"), ResourceLimits())
        assert row["status"] == "ok"
        assert row["value"] == 5
        assert list(row) == list(ROW_COLUMNS)

    def test_invalid_instance(self):
        row = solve_row(SweepTask(0, "gndm:n=8,d=9,m=4", "d"), ResourceLimits())
        assert row["status"] == "invalid"
        assert row["value"] is None
        row = solve_row(SweepTask(0, "cycle:n=8", "sdp:k=1,l=2"), ResourceLimits())
        assert row["status"] == "invalid"

    def test_resource_row(self):
        row = solve_row(SweepTask(0, "cycle:n=8", "d"), ResourceLimits(max_nodes=1))
        assert row["status"] == "resource"
        assert row["nodes"] >= 1


class TestRunSweep:
    def test_resume_from_journal(self, tmp_path):
        path = tmp_path / "j.jsonl"
        tasks = build_tasks("cycle", "n=3..6", ["d"])
        first = run_sweep(tasks, journal_path=path)
        assert [r["value"] for r in first] == [2, 2, 3, 4]

        # a torn last line is ignored and its row solved again
        lines = path.read_text(encoding="utf-8").splitlines()
        path.write_text("\n".join(lines[:3]) + "\n" + lines[3][:10], encoding="utf-8")
        second = run_sweep(tasks, journal_path=path)
        assert [r["value"] for r in second] == [2, 2, 3, 4]
        assert len(Journal(path).load()) == 4

    def test_failed_journal_writes_are_reported(self, tmp_path, monkeypatch, caplog):
        monkeypatch.setattr(Journal, "append", lambda self, key, row: False)
        tasks = build_tasks("cycle", "n=3..4", ["d"])
        with caplog.at_level("WARNING", logger="src.utils.sweep"):
            rows = run_sweep(tasks, journal_path=tmp_path / "j.jsonl")
        assert [r["value"] for r in rows] == [2, 2]
        assert "2 of 2 rows missing from journal" in caplog.text

    def test_process_pool_keeps_grid_order(self):
        tasks = build_tasks("path", "n=2..7", ["d"])
        rows = run_sweep(tasks, workers=2)
        assert [r["graph"] for r in rows] == [f"path:n={n}" for n in range(2, 8)]
        assert [r["value"] for r in rows] == [2, 2, 3, 3, 4, 5]

    def test_render(self):
        rows = run_sweep(build_tasks("cycle", "n=4", ["d"]))
        data = json.loads(render_rows(rows, "json", timing=False))
        assert data[0]["millis"] is None
        assert data[0]["key"] == "cycle:n=4|d"
        assert render_rows(rows, "text").split() == ["cycle:n=4", "d", "2"]


class TestJournal:
    def test_disabled(self):
        journal = Journal(None)
        assert not journal.enabled
        assert journal.load() == {}
        assert journal.append("k", {"a": 1})

    def test_append_and_remove(self, tmp_path):
        journal = Journal(tmp_path / "sub" / "j.jsonl")
        assert journal.append("k", {"value": 3})
        assert journal.load() == {"k": {"value": 3}}
        assert journal.remove()
        assert journal.load() == {}
