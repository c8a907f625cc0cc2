"""
Integration Tests for the Command Line

Runs the click commands end to end on files in a temporary directory and
checks reports and exit codes.
"""

import csv
import json

import pytest
from click.testing import CliRunner

from src.cli.io import load_config, load_sequence, parse_grid, parse_range, parse_rule
from src.cli.main import EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, cli, main
from src.core.errors import InputError
from src.core.rules import ConstRule, KellerRule, PowerRule
from src.core.sequences import FiniteSequence


@pytest.fixture
def runner():
    return CliRunner()


def read_csv(path):
    with open(path, newline="") as handle:
        return list(csv.DictReader(handle))


class TestWeightsCommand:
    """Tests for `weights`."""

    def test_keller_sweep_writes_csv(self, runner, tmp_path):
        out = tmp_path / "keller.csv"
        result = runner.invoke(cli, ["weights", "--family", "keller", "--n-range", "1:100", "--out", str(out)])

        assert result.exit_code == EXIT_OK, result.output
        rows = read_csv(out)
        assert len(rows) == 100
        assert list(rows[0])[:4] == ["n", "value", "classical_bound", "margin"]
        assert all(float(row["margin"]) > 0.0 for row in rows)

    def test_exploratory_family_exits_zero(self, runner):
        result = runner.invoke(cli, ["weights", "--family", "g", "--g", "linear", "--n-range", "1:5"])

        assert result.exit_code == EXIT_OK
        assert "unproven-range" in result.output

    def test_fabricated_table_fails(self, runner, tmp_path):
        table = tmp_path / "table.json"
        table.write_text(json.dumps([0.5, 0.01, 0.02]))
        result = runner.invoke(
            cli, ["weights", "--family", "table", "--table", str(table), "--n-range", "1:3"]
        )

        assert result.exit_code == EXIT_VIOLATION
        assert "candidate-weight-bound" in result.output
        assert "n=2" in result.output

    def test_missing_parameter(self, runner):
        result = runner.invoke(
            cli, ["weights", "--family", "power", "--alpha", "0.5", "--n-range", "1:10"]
        )

        assert result.exit_code == EXIT_INPUT
        assert "--beta" in result.output

    def test_bad_range(self, runner):
        result = runner.invoke(cli, ["weights", "--family", "keller", "--n-range", "10:1"])

        assert result.exit_code == EXIT_INPUT

    def test_json_format(self, runner, tmp_path):
        out = tmp_path / "copson.json"
        result = runner.invoke(
            cli, ["weights", "--family", "copson", "--n-range", "1:10", "--format", "json", "--out", str(out)]
        )

        assert result.exit_code == EXIT_OK
        rows = json.loads(out.read_text())
        assert rows[0]["n"] == 1
        assert rows[0]["value"] == pytest.approx(0.6412805, abs=1e-7)


class TestVerifyCommands:
    """Tests for `verify` and `identity`."""

    def test_hardy_report(self, runner, sequence_file):
        path = sequence_file([1.0])
        result = runner.invoke(cli, ["verify", "hardy", "--input", str(path), "--log-level", "ERROR"])

        assert result.exit_code == EXIT_OK, result.output
        header, row = result.output.strip().splitlines()[:2]
        values = dict(zip(header.split(","), row.split(",")))
        assert values["check"] == "hardy-weighted-inequality"
        assert float(values["lhs"]) == pytest.approx(2.0)

    def test_power_form_needs_both_exponents(self, runner, sequence_file):
        result = runner.invoke(cli, ["verify", "hardy", "--input", str(sequence_file([1.0])), "--alpha", "0.5"])

        assert result.exit_code == EXIT_INPUT

    def test_copson_outside_proven_range(self, runner, sequence_file):
        path = sequence_file([1.0, 2.0, -1.5j])
        result = runner.invoke(cli, ["verify", "copson", "--input", str(path), "--c", "1.2"])

        assert result.exit_code == EXIT_OK
        assert "unproven-range" in result.output

    def test_copson_improved(self, runner, sequence_file):
        result = runner.invoke(cli, ["verify", "copson", "--input", str(sequence_file([1.0]))])

        assert result.exit_code == EXIT_OK
        assert "copson-improved-inequality" in result.output

    def test_classical_from_csv(self, runner, tmp_path):
        path = tmp_path / "a.csv"
        path.write_text("index,re,im\n1,1.0,0.0\n")
        out = tmp_path / "classical.csv"
        result = runner.invoke(cli, ["verify", "classical", "--input", str(path), "--out", str(out)])

        assert result.exit_code == EXIT_OK
        row = read_csv(out)[0]
        assert float(row["tail_lo"]) <= 1.6449340668 <= float(row["tail_hi"])
        assert float(row["classical_sum"]) == pytest.approx(4.0)

    def test_copson_general(self, runner, sequence_file):
        result = runner.invoke(
            cli, ["verify", "copson-general", "--input", str(sequence_file([1.0, 0.5])), "--q", "linear"]
        )

        assert result.exit_code == EXIT_OK

    def test_identity_line(self, runner, sequence_file):
        path = sequence_file([1.0, -2.0, 0.5j])
        result = runner.invoke(cli, ["identity", "hardy", "--input", str(path), "--log-level", "ERROR"])

        assert result.exit_code == EXIT_OK
        assert result.output.startswith("hardy-remainder-identity: residual=")
        assert "weighted_residual=" in result.output

    def test_copson_identity(self, runner, sequence_file):
        result = runner.invoke(cli, ["identity", "copson", "--input", str(sequence_file([1.0, 1.0])), "--c", "1.1"])

        assert result.exit_code == EXIT_OK
        assert "copson-remainder-identity" in result.output


class TestBadInput:
    """Malformed inputs exit with code 2."""

    def test_nan_entry(self, runner, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"offset": 1, "values": [1.0, NaN]}')
        result = runner.invoke(cli, ["verify", "hardy", "--input", str(path)])

        assert result.exit_code == EXIT_INPUT
        assert "non-finite" in result.output

    def test_corrupted_json(self, runner, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"values": [1.0, ')
        result = runner.invoke(cli, ["verify", "hardy", "--input", str(path)])

        assert result.exit_code == EXIT_INPUT

    def test_missing_file(self, runner, tmp_path):
        result = runner.invoke(cli, ["verify", "hardy", "--input", str(tmp_path / "missing.json")])

        assert result.exit_code == EXIT_INPUT

    def test_plateau_input(self, runner, tmp_path):
        path = tmp_path / "A.json"
        path.write_text(json.dumps({"values": [1.0, 2.0], "plateau": 2.0}))
        result = runner.invoke(cli, ["verify", "hardy", "--input", str(path)])

        assert result.exit_code == EXIT_INPUT

    def test_out_of_range_rule_parameter(self, runner, sequence_file):
        result = runner.invoke(
            cli, ["verify", "hardy", "--input", str(sequence_file([1.0])), "--lambda", "const:-1"]
        )

        assert result.exit_code == EXIT_INPUT


class TestSweepCommands:
    """Tests for `optimality`, `lemmas` and `stability`."""

    def test_hardy_optimality(self, runner, tmp_path):
        out = tmp_path / "probe.csv"
        result = runner.invoke(cli, ["optimality", "hardy", "--N-list", "10,100", "--out", str(out)])

        assert result.exit_code == EXIT_OK, result.output
        rows = read_csv(out)
        assert [int(row["N"]) for row in rows] == [10, 100]
        assert float(rows[0]["remainder"]) == pytest.approx(0.43425564, rel=1e-6)

    def test_copson_optimality(self, runner):
        result = runner.invoke(cli, ["optimality", "copson", "--N-list", "10,30"])

        assert result.exit_code == EXIT_OK

    def test_lemma_grid(self, runner, tmp_path):
        out = tmp_path / "lemmas.csv"
        result = runner.invoke(cli, ["lemmas", "--c-grid", "1.5:2.0:0.25", "--n-max", "200", "--out", str(out)])

        assert result.exit_code == EXIT_OK, result.output
        rows = read_csv(out)
        assert len(rows) == 12
        assert {row["c"] for row in rows} == {"1.5", "1.75", "2.0"}

    def test_lemma_grid_threads_do_not_change_rows(self, runner):
        args = ["lemmas", "--c-grid", "1.5:2.0:0.25", "--n-max", "2000", "--log-level", "ERROR"]
        single = runner.invoke(cli, args + ["--threads", "1"])
        pooled = runner.invoke(cli, args + ["--threads", "3"])

        assert single.exit_code == EXIT_OK, single.output
        assert pooled.output == single.output

    def test_threads_only_on_sweep_commands(self, runner, sequence_file):
        path = str(sequence_file([1.0]))
        for args in (
            ["verify", "hardy", "--input", path],
            ["identity", "copson", "--input", path],
            ["stability", "--n-values", "10"],
        ):
            result = runner.invoke(cli, args + ["--threads", "2"])

            assert result.exit_code == EXIT_INPUT
            assert "No such option" in result.output

    def test_stability(self, runner):
        result = runner.invoke(cli, ["stability", "--n-values", "10,1000000", "--log-level", "ERROR"])

        assert result.exit_code == EXIT_OK
        lines = result.output.strip().splitlines()
        assert len(lines) == 5
        assert "naive_digits_lost" in lines[0]


class TestSpaceCommands:
    """Tests for `space`."""

    def test_norm(self, runner, sequence_file, config_file):
        config = config_file({"p": 2, "gamma": "const:1"})
        result = runner.invoke(
            cli, ["space", "norm", "--input", str(sequence_file([1.0, -1.0])), "--config", str(config)]
        )

        assert result.exit_code == EXIT_OK
        assert "gamma-space-norm" in result.output

    def test_parallelogram_witness(self, runner, tmp_path, config_file):
        config = config_file({"p": 3, "gamma": {"rule": "power", "exponent": -3.5}})
        out = tmp_path / "pg.json"
        result = runner.invoke(
            cli, ["space", "parallelogram", "--config", str(config), "--format", "json", "--out", str(out)]
        )

        assert result.exit_code == EXIT_OK
        row = json.loads(out.read_text())[0]
        assert row["defect"] == pytest.approx(8.0 - 4.0 ** (4.0 / 3.0), rel=1e-9)
        assert row["pair"] == "witness"

    def test_dual_from_rule(self, runner, config_file):
        config = config_file({"p": 2, "gamma": "const:1"})
        result = runner.invoke(
            cli, ["space", "dual", "--rule", "linear", "--horizon", "500", "--config", str(config)]
        )

        assert result.exit_code == EXIT_OK
        assert "growing" in result.output

    def test_dual_needs_one_source(self, runner, config_file):
        result = runner.invoke(cli, ["space", "dual", "--config", str(config_file({"preset": "W"}))])

        assert result.exit_code == EXIT_INPUT

    def test_inclusion(self, runner, tmp_path, config_file):
        out = tmp_path / "inclusion.csv"
        result = runner.invoke(cli, [
            "space", "inclusion", "--kind", "lp_in_Wp", "--horizons", "100,1000",
            "--config", str(config_file({"preset": "W", "p": 2})), "--out", str(out),
        ])

        assert result.exit_code == EXIT_OK
        rows = read_csv(out)
        assert float(rows[0]["p_norm"]) == pytest.approx(10.0)

    def test_basis(self, runner, sequence_file, config_file):
        config = config_file({"p": 2, "gamma": "power:-2"})
        result = runner.invoke(
            cli, ["space", "basis", "--input", str(sequence_file([1.0, -1.0])), "--config", str(config),
                  "--log-level", "ERROR"]
        )

        assert result.exit_code == EXIT_OK
        assert len(result.output.strip().splitlines()) == 4

    def test_invalid_config(self, runner, sequence_file, config_file):
        config = config_file({"p": 0.5, "gamma": "const:1"})
        result = runner.invoke(
            cli, ["space", "norm", "--input", str(sequence_file([1.0])), "--config", str(config)]
        )

        assert result.exit_code == EXIT_INPUT


class TestMain:
    """Tests for the main() entry point."""

    def test_report_path(self, tmp_path):
        out = tmp_path / "keller.csv"
        outcome = main(["weights", "--family", "keller", "--n-range", "1:10", "--out", str(out)])

        assert outcome.exit_code == EXIT_OK
        assert outcome.report_path == out

    def test_violation(self, tmp_path):
        table = tmp_path / "table.json"
        table.write_text("[0.5, 0.01, 0.02]")
        outcome = main(["weights", "--family", "table", "--table", str(table), "--n-range", "1:3"])

        assert outcome.exit_code == EXIT_VIOLATION

    def test_usage_error(self):
        assert main(["weights", "--family", "keller"]).exit_code == EXIT_INPUT

    def test_version(self):
        assert main(["--version"]).exit_code == EXIT_OK


class TestInputParsing:
    """Tests for the file and flag parsers."""

    def test_json_pairs_and_reals(self, tmp_path):
        path = tmp_path / "x.json"
        path.write_text(json.dumps({"offset": 2, "values": [[1.0, -1.0], 2.0, 0.0]}))

        assert load_sequence(path) == FiniteSequence.from_values([1 - 1j, 2.0], offset=2)

    def test_csv_with_gaps(self, tmp_path):
        path = tmp_path / "x.csv"
        path.write_text("index,re,im\n3,1.0,0.5\n1,2.0,0.0\n")

        assert load_sequence(path) == FiniteSequence.from_values([2.0, 0.0, 1.0 + 0.5j])

    def test_csv_rejects_duplicates(self, tmp_path):
        path = tmp_path / "x.csv"
        path.write_text("index,re,im\n1,1.0,0\n1,2.0,0\n")

        with pytest.raises(InputError):
            load_sequence(path)

    def test_parse_rule(self):
        assert parse_rule("power:-2") == PowerRule(exponent=-2.0)
        assert parse_rule("const") == ConstRule()
        assert isinstance(parse_rule("keller"), KellerRule)
        with pytest.raises(InputError):
            parse_rule("power")
        with pytest.raises(InputError):
            parse_rule("spline:1")

    def test_ranges_and_grids(self):
        assert parse_range("1:5") == range(1, 6)
        assert parse_grid("1.1:1.5:0.1") == [1.1, 1.2, 1.3, 1.4, 1.5]
        with pytest.raises(InputError):
            parse_grid("1:2")

    def test_config_forms(self, config_file):
        cfg = load_config(config_file({"p": 3, "gamma": "power:-4", "q": {"rule": "linear"}}))

        assert cfg.p == 3.0
        assert cfg.gamma == PowerRule(exponent=-4.0)
        assert isinstance(load_config(config_file({"preset": "W"})).gamma, KellerRule)
