import json

from fstchar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCharacter:
    def test_oracle_json_vacuum(self, capsys):
        code, out, _ = run(
            capsys, "character", "--method", "oracle", "--l", "2",
            "--weight", "1,0,0", "--zmax", "4", "--qmax", "10",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["l"] == 2
        constant = dict((tuple(n), s) for n, s in payload["terms"])[(0, 0)]
        assert constant["terms"] == [[0, "1"]]

    def test_fermionic_byte_identical_to_oracle(self, capsys):
        code, oracle_out, _ = run(
            capsys, "character", "--method", "oracle", "--l", "2",
            "--weight", "1,0,0", "--zmax", "4", "--qmax", "10",
        )
        assert code == 0
        code, fermionic_out, _ = run(
            capsys, "character", "--method", "fermionic", "--l", "2",
            "--weight", "1,0,0", "--zmax", "4", "--qmax", "10",
        )
        assert code == 0
        assert fermionic_out == oracle_out

    def test_wrong_weight_arity_exits_2(self, capsys):
        code, _, err = run(
            capsys, "character", "--method", "oracle", "--l", "2",
            "--weight", "0,0", "--zmax", "2", "--qmax", "4",
        )
        assert code == 2
        assert "weight" in err

    def test_fermionic_requires_l2(self, capsys):
        code, _, _ = run(
            capsys, "character", "--method", "fermionic", "--l", "3",
            "--weight", "1,0,0,0", "--zmax", "2", "--qmax", "4",
        )
        assert code == 2

    def test_jobs_do_not_change_output(self, capsys):
        argv = [
            "character", "--method", "fermionic", "--l", "2",
            "--weight", "1,1,0", "--zmax", "3", "--qmax", "8",
        ]
        code, serial, _ = run(capsys, *argv, "--jobs", "1")
        assert code == 0
        code, parallel, _ = run(capsys, *argv, "--jobs", "3")
        assert code == 0
        assert serial == parallel

    def test_fjmmt_method(self, capsys):
        code, out, _ = run(
            capsys, "character", "--method", "fjmmt",
            "--weight", "2,0,0", "--zmax", "3", "--qmax", "10",
        )
        assert code == 0
        assert json.loads(out)["kind"] == "graded"

    def test_fjmmt_rejects_nonzero_k2(self, capsys):
        code, _, _ = run(
            capsys, "character", "--method", "fjmmt",
            "--weight", "1,0,1", "--zmax", "3", "--qmax", "10",
        )
        assert code == 2

    def test_fjmmt2_sites(self, capsys):
        base = [
            "character", "--method", "fjmmt2", "--ab", "1,0",
            "--level", "1", "--qmax", "10",
        ]
        code, inf_out, _ = run(capsys, *base, "--sites", "inf")
        assert code == 0
        code, default_out, _ = run(capsys, *base)
        assert default_out == inf_out
        code, _, _ = run(capsys, *base, "--sites", "nonsense")
        assert code == 2

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "char.json"
        code, out, _ = run(
            capsys, "character", "--method", "oracle", "--l", "2",
            "--weight", "1,0,0", "--zmax", "2", "--qmax", "5",
            "--output", str(target),
        )
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["l"] == 2

    def test_text_format(self, capsys):
        code, out, _ = run(
            capsys, "character", "--method", "oracle", "--l", "2",
            "--weight", "1,0,0", "--zmax", "2", "--qmax", "5",
            "--format", "text",
        )
        assert code == 0
        assert out.startswith("# l=2")


class TestVerify:
    def test_system_suite_passes(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "system", "--l", "2", "--level", "2",
            "--zmax", "4", "--qmax", "10",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        names = [r["name"] for r in payload["reports"]]
        assert any(n.startswith("recurrence-golden") for n in names)

    def test_corrupted_golden_exits_1(self, capsys, tmp_path):
        from importlib import resources

        golden = (
            resources.files("fstchar.data")
            .joinpath("system_l2_k2.txt")
            .read_text(encoding="utf-8")
        )
        bad = tmp_path / "golden.txt"
        bad.write_text(golden.replace("A[0,2,0](n1-2,n2)", "A[0,2,0](n1-1,n2)"))
        code, out, _ = run(
            capsys, "verify", "--suite", "system", "--l", "2", "--level", "2",
            "--zmax", "3", "--qmax", "8", "--golden", str(bad),
        )
        assert code == 1
        payload = json.loads(out)
        failing = [r for r in payload["reports"] if not r["ok"]]
        assert failing and failing[0]["violations"][0]["where"]["line"] == 1

    def test_lemma_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "lemmas", "--level", "2")
        assert code == 0
        assert json.loads(out)["ok"] is True

    def test_fjmmt_suite_level1(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "fjmmt", "--level", "1",
            "--zmax", "4", "--qmax", "10",
        )
        assert code == 0

    def test_fjmmt2_suite_level1(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "fjmmt2", "--level", "1", "--qmax", "10",
        )
        assert code == 0

    def test_jobs_do_not_change_output(self, capsys):
        argv = [
            "verify", "--suite", "system", "--l", "2", "--level", "2",
            "--zmax", "3", "--qmax", "8",
        ]
        code, serial, _ = run(capsys, *argv, "--jobs", "1")
        assert code == 0
        code, parallel, _ = run(capsys, *argv, "--jobs", "2")
        assert serial == parallel

    def test_env_caps_jobs(self, capsys, monkeypatch):
        monkeypatch.setenv("FSTCHAR_MAX_JOBS", "1")
        argv = [
            "verify", "--suite", "system", "--l", "2", "--level", "1",
            "--zmax", "3", "--qmax", "8", "--jobs", "8",
        ]
        code, out, _ = run(capsys, *argv)
        assert code == 0

    def test_bad_env_cap_exits_2(self, capsys, monkeypatch):
        monkeypatch.setenv("FSTCHAR_MAX_JOBS", "many")
        code, _, err = run(
            capsys, "verify", "--suite", "system", "--l", "2", "--level", "1",
            "--zmax", "3", "--qmax", "8",
        )
        assert code == 2
        assert "FSTCHAR_MAX_JOBS" in err

    def test_text_format_summary(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "system", "--l", "2", "--level", "1",
            "--zmax", "3", "--qmax", "8", "--format", "text",
        )
        assert code == 0
        assert "suite system: ok" in out


class TestListAdmissible:
    def test_level1_stream(self, capsys):
        code, out, _ = run(
            capsys, "list-admissible", "--l", "2", "--weight", "1,0,0",
            "--qmax", "3", "--zmax", "1",
        )
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        configs = [tuple(r[0]) for r in rows]
        assert (1,) in configs and (0, 0, 1) in configs and (0, 0, 0, 0, 1) in configs
        for config, degree, weight in rows:
            assert degree <= 3

    def test_q_zero_only_vacuum(self, capsys):
        code, out, _ = run(
            capsys, "list-admissible", "--l", "2", "--weight", "1,0,0",
            "--qmax", "0",
        )
        assert code == 0
        assert [json.loads(line) for line in out.splitlines()] == [[[], 0, [0, 0]]]

    def test_init_prefix_pins_start(self, capsys):
        code, out, _ = run(
            capsys, "list-admissible", "--l", "2", "--weight", "2,0,0",
            "--qmax", "2", "--init", "0,0",
        )
        assert code == 0
        for line in out.splitlines():
            config = json.loads(line)[0]
            assert config[:2] in ([], [0], [0, 0]) or (
                len(config) >= 2 and config[0] == 0 and config[1] == 0
            )

    def test_energy_bound_mode(self, capsys):
        code, out, _ = run(
            capsys, "list-admissible", "--l", "2", "--weight", "1,0,0",
            "--init", "0,0", "--energy-max", "5",
        )
        assert code == 0
        for line in out.splitlines():
            config, degree, weight = json.loads(line)
            assert sum(i * a for i, a in enumerate(config)) <= 5

    def test_missing_weight_exits_2(self, capsys):
        code, _, _ = run(capsys, "list-admissible", "--l", "2", "--qmax", "2")
        assert code == 2

    def test_config_zmax_caps_listing(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("zmax=0\n")
        code, out, _ = run(
            capsys, "--config", str(cfg), "list-admissible", "--l", "2",
            "--weight", "1,0,0", "--qmax", "3",
        )
        assert code == 0
        assert [json.loads(line) for line in out.splitlines()] == [[[], 0, [0, 0]]]


class TestConfigFile:
    def test_config_supplies_defaults_flags_win(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("l=2\nzmax=2\nqmax=6\n")
        code, from_cfg, _ = run(
            capsys, "--config", str(cfg), "character", "--method", "oracle",
            "--weight", "1,0,0",
        )
        assert code == 0
        assert json.loads(from_cfg)["q_order"] == 6
        code, overridden, _ = run(
            capsys, "--config", str(cfg), "character", "--method", "oracle",
            "--weight", "1,0,0", "--qmax", "4",
        )
        assert json.loads(overridden)["q_order"] == 4

    def test_bad_config_line_exits_2(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("zmax 2\n")
        code, _, err = run(
            capsys, "--config", str(cfg), "character", "--method", "oracle",
            "--weight", "1,0,0",
        )
        assert code == 2
