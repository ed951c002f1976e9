# coding=utf-8
import shutil

import pytest

from knotradar import AppContext
from knotradar.jobs import (
    COMMANDS,
    EXIT_INCONSISTENT,
    EXIT_INPUT,
    EXIT_OK,
    CommandRegistry,
    JobContext,
    JobRunner,
    JobSpec,
    ResultCache,
    ResultRecord,
    batch_jobs,
    get_default_registry,
    job_digest,
    render,
    render_kv,
    render_summary,
    render_text,
)
from knotradar.utils.errors import InvalidParameterError


def window_job(q, chi=-2, n=2):
    return JobSpec.create("window", [], {"q": q, "chi": chi, "n": n, "tau": ()})


@pytest.fixture
def runner(tmp_path):
    cache = ResultCache(str(tmp_path / "cache"))
    return JobRunner(get_default_registry(), JobContext(), "0.3.0", cache)


class TestDigest:
    def test_depends_on_content(self, tmp_path):
        path = tmp_path / "a.od"
        path.write_text("p: 1\n", encoding="utf-8")
        job = JobSpec.create("hfk11", [path])
        before = job_digest(job, "0.3.0")
        path.write_text("p: 2\n", encoding="utf-8")
        assert job_digest(job, "0.3.0") != before

    def test_depends_on_version_and_options(self):
        job = window_job(5)
        assert job_digest(job, "0.3.0") != job_digest(job, "0.3.1")
        assert job_digest(job, "0.3.0") != job_digest(window_job(6), "0.3.0")
        assert job_digest(job, "0.3.0") == job_digest(window_job(5), "0.3.0")

    def test_option_order_is_irrelevant(self):
        a = JobSpec.create("window", [], {"q": 5, "chi": -2})
        b = JobSpec.create("window", [], {"chi": -2, "q": 5})
        assert a == b


class TestCache:
    def test_get_set_clear(self, tmp_path):
        cache = ResultCache(str(tmp_path / "cache"))
        assert cache.get("k") is None
        cache.set("k", {"status": 0})
        assert cache.get("k") == {"status": 0}
        stats = cache.get_stats()
        assert (stats["total_entries"], stats["hits"], stats["misses"]) == (1, 1, 1)
        assert cache.delete("k")
        assert not cache.delete("k")
        cache.set("a", {})
        cache.set("b", {})
        assert cache.clear() == 2
        assert cache.get_stats()["total_entries"] == 0

    def test_unreadable_record_is_a_miss(self, tmp_path):
        cache = ResultCache(str(tmp_path))
        (tmp_path / "bad.json").write_text("{not json", encoding="utf-8")
        assert cache.get("bad") is None


class TestRunner:
    def test_cached_record_matches(self, runner, fixtures_dir):
        job = JobSpec.create("hfk11", [fixtures_dir / "trefoil.od"])
        fresh = runner.run(job)
        again = runner.run(job)
        assert not fresh.cached
        assert again.cached
        assert again == fresh
        assert render_text(again) == render_text(fresh)
        assert render_kv(again) == render_kv(fresh)

    def test_order_with_workers(self, runner):
        jobs = [window_job(q) for q in range(1, 9)]
        records = runner.run_many(jobs, workers=4)
        assert [r.output["q"] for r in records] == list(range(1, 9))

    def test_failures_are_not_cached(self, runner, fixtures_dir):
        record = runner.run(JobSpec.create("hfk11", [fixtures_dir / "bad" / "broken.od"]))
        assert record.status == EXIT_INPUT
        assert record.output["error"]["code"] == "DIAGRAM_ERROR"
        assert runner.cache.get_stats()["total_entries"] == 0

    def test_missing_input(self, runner, tmp_path):
        record = runner.run(JobSpec.create("hfk11", [tmp_path / "absent.od"]))
        assert record.status == EXIT_INPUT
        assert record.output["error"]["code"] == "INPUT_UNREADABLE"

    def test_unknown_command(self, runner):
        record = runner.run(JobSpec.create("knotify", []))
        assert record.status == EXIT_INPUT
        assert record.output["error"]["code"] == "INVALID_PARAMETER"

    def test_odd_window_is_an_input_error(self, runner):
        record = runner.run(window_job(5, n=1))
        assert record.status == EXIT_INPUT
        assert record.output["error"]["code"] == "PARITY_ERROR"


class TestCommands:
    def test_registry(self):
        assert sorted(get_default_registry().all()) == sorted(COMMANDS)
        registry = CommandRegistry()
        registry.register(get_default_registry().get("window"))
        with pytest.raises(ValueError):
            registry.register(get_default_registry().get("window"))

    def test_torsion(self, runner, fixtures_dir):
        record = runner.run(JobSpec.create("torsion", [fixtures_dir / "figure8.gp"]))
        assert record.status == EXIT_OK
        assert record.output["norm"] == 5
        assert record.output["group"] == "Z"

    def test_hfk11(self, runner, fixtures_dir):
        out = runner.run(JobSpec.create("hfk11", [fixtures_dir / "figure8.od"])).output
        assert out["dim"] == 5
        assert out["certified"] is True
        assert out["bound"] == "ok"
        assert sorted(dim for _, dim in out["table"]) == [1, 1, 3]

    def test_crosscheck(self, runner, fixtures_dir):
        record = runner.run(JobSpec.create("crosscheck", [fixtures_dir / "trefoil.od"]))
        assert record.status == EXIT_OK
        assert record.output["agree"] is True

    def test_decomp(self, runner, fixtures_dir):
        out = runner.run(JobSpec.create("decomp", [fixtures_dir / "example14.gre"])).output
        assert (out["norm_en"], out["norm_gr"]) == (9, 5)
        assert out["bound"]["status"] == "ok"
        assert out["bound"]["tight_first"] is True
        assert len(out["torsion_split"]) == 5

    def test_decomp_difference(self, runner, fixtures_dir):
        record = runner.run(JobSpec.create("decomp", [fixtures_dir / "trefoil_vs_unknot.gre"]))
        assert record.status == EXIT_OK
        assert record.output["difference"] == [["(|)", True, "1", "t^-1"]]

    def test_detect(self, runner, fixtures_dir):
        record = runner.run(JobSpec.create("detect", [fixtures_dir / "symmetry.det"]))
        assert record.status == EXIT_INCONSISTENT
        assert record.output["verdict"] == "Inconsistent(symmetry)"
        record = runner.run(JobSpec.create("detect", [fixtures_dir / "trefoil.od"]))
        assert record.status == EXIT_OK
        assert record.output["kind"] == "GenusOneFibred"
        assert record.output["theory"] == "heegaard"

    def test_window(self, runner):
        record = runner.run(JobSpec.create("window", [], {"q": 5, "chi": -2, "n": 4, "tau": ()}))
        assert record.status == EXIT_OK
        out = record.output
        assert out["valid"] is True
        assert out["first_valid"] == 2
        assert out["blocks"]["first"] == [5, 3, 12, 5, 3]
        assert out["blocks"]["total"] == 28
        assert ["-", None, None] in out["bounds"]


class TestRender:
    def test_kv_is_sorted(self, runner):
        text = render(runner.run(window_job(5)), "kv")
        lines = text.splitlines()
        assert lines == sorted(lines)
        assert "valid=true" in lines
        assert "status_name=ok" in lines

    def test_text(self, runner):
        text = render(runner.run(window_job(5)), "text")
        assert text.startswith("window q=5 chi_bar_plus=-2 n=2")
        assert text.endswith("status: ok\n")

    def test_error_text(self):
        record = ResultRecord("", "hfk11", "x.od", EXIT_INPUT, {"error": {"code": "DIAGRAM_ERROR", "message": "m"}}, "0.3.0")
        text = render(record)
        assert "DIAGRAM_ERROR" in text
        assert "suggestion" not in text

    def test_unknown_format(self, runner):
        with pytest.raises(InvalidParameterError):
            render(runner.run(window_job(5)), "json")


def copy_fixtures(src, dst, skip=()):
    dst.mkdir()
    for path in src.iterdir():
        if path.is_file() and path.name not in skip:
            shutil.copy(path, dst / path.name)
    return dst


class TestBatch:
    def test_jobs_follow_extensions(self, fixtures_dir):
        jobs = batch_jobs(fixtures_dir)
        commands = {(job.command, job.label.rsplit("/", 1)[-1]) for job in jobs}
        assert ("hfk11", "trefoil.od") in commands
        assert ("crosscheck", "trefoil.od") in commands
        assert ("torsion", "trefoil.gp") in commands
        assert ("detect", "symmetry.det") in commands
        assert not any(label.endswith(".md") for _, label in commands)

    def test_clean_directory(self, config, fixtures_dir, tmp_path):
        root = copy_fixtures(fixtures_dir, tmp_path / "run", skip=("symmetry.det",))
        ctx = AppContext(config, jobs=4)
        summary = ctx.batch(str(root))
        assert summary.exit_code == EXIT_OK
        assert (root / ".knotradar" / "summary.txt").is_file()
        assert (root / ".knotradar" / "trefoil.od.hfk11.json").is_file()
        assert summary.counts() == {"ok": len(summary.records)}

    def test_inconsistent_verdict_sets_the_exit_code(self, config, fixtures_dir, tmp_path):
        root = copy_fixtures(fixtures_dir, tmp_path / "run")
        summary = AppContext(config, cache_enabled=False).batch(str(root))
        assert summary.exit_code == EXIT_INCONSISTENT
        assert "exit_code=2" in render_summary(summary, "kv")

    def test_empty_directory(self, config, tmp_path):
        root = tmp_path / "empty"
        root.mkdir()
        summary = AppContext(config).batch(str(root))
        assert summary.exit_code == EXIT_OK
        assert "(no jobs)" in (root / ".knotradar" / "summary.txt").read_text(encoding="utf-8")

    def test_input_errors_dominate(self, config, fixtures_dir, tmp_path):
        root = copy_fixtures(fixtures_dir, tmp_path / "run")
        shutil.copy(fixtures_dir / "bad" / "broken.od", root / "broken.od")
        summary = AppContext(config).batch(str(root))
        assert summary.exit_code == EXIT_INPUT
        text = render_summary(summary)
        assert "DIAGRAM_ERROR" in text
