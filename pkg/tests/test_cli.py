import json
import math
import subprocess
import sys

from markovnecklaces import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- golden outputs ------------------------------------------------------------


def test_phi_golden_json(capsys):
    code, out, _ = run_cli(capsys, "phi", "[1,2]")
    expected = {
        "necklace": "[1,2]",
        "phi": "29",
        "trace": "87",
        "length": 2 * math.acosh(87 / 2),
        "evaluators": {"literal": "29", "transfer": "29", "oracle": "29"},
        "agree": True,
    }
    assert code == 0
    assert out == json.dumps(expected) + "\n"


def test_from_params_golden(capsys):
    code, out, _ = run_cli(capsys, "necklace", "from-params", "5", "7", "3")
    assert code == 0
    assert out == '"[3,4,3,4,3,4,4,3,4,3,4,4]"\n'
    code, out, _ = run_cli(
        capsys, "necklace", "from-params", "5", "7", "3", "--format", "text"
    )
    assert code == 0
    assert out == "[3,4,3,4,3,4,4,3,4,3,4,4]\n"


def test_markov_numbers_golden(capsys):
    code, out, _ = run_cli(capsys, "markov", "numbers", "--bound", "100")
    assert code == 0
    assert json.loads(out) == ["1", "2", "5", "13", "29", "34", "89"]
    code, out, _ = run_cli(
        capsys, "markov", "numbers", "--bound", "100", "--format", "text"
    )
    assert out == "[1,2,5,13,29,34,89]\n"


def test_integers_serialize_as_strings(capsys):
    code, out, _ = run_cli(capsys, "phi", "[3,4,4,3,4,3,4,4,3,4,3,4]")
    payload = json.loads(out)
    assert payload["phi"] == "3440971837880006083249"
    assert payload["trace"] == "10322915513640018249747"
    assert isinstance(payload["length"], float)


# --- necklace subcommands -------------------------------------------------------


def test_necklace_check(capsys):
    code, out, _ = run_cli(capsys, "necklace", "check", "[1,2,1,2]")
    assert code == 0
    assert json.loads(out) == {
        "necklace": "[1,2,1,2]",
        "k": "4",
        "member": False,
        "small_variation": True,
        "primitive": False,
    }


def test_necklace_to_params(capsys):
    code, out, _ = run_cli(capsys, "necklace", "to-params", "[3,4,4,3,4,3,4,4,3,4,3,4]")
    assert code == 0
    assert json.loads(out) == {"x": "5", "y": "7", "m": "3"}


def test_necklace_theta_and_inverse(capsys):
    code, out, _ = run_cli(capsys, "necklace", "theta", "[2,3]")
    assert code == 0
    image = json.loads(out)
    code, out, _ = run_cli(capsys, "necklace", "theta", image, "--inverse")
    assert code == 0
    assert json.loads(out) == "[2,3]"


def test_to_params_outside_domain_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "necklace", "to-params", "[1,2,1,2]")
    assert code == 1
    assert "not primitive" in err


# --- usage errors ----------------------------------------------------------------


def test_malformed_necklace_reports_position(capsys):
    code, _, err = run_cli(capsys, "phi", "[1,,2]")
    assert code == 1
    assert "position 3" in err


def test_unknown_command_exits_1(capsys):
    code, _, _ = run_cli(capsys, "frobnicate")
    assert code == 1


def test_nonpositive_bound_exits_1(capsys):
    code, _, _ = run_cli(capsys, "markov", "numbers", "--bound", "0")
    assert code == 1


def test_literal_evaluator_over_cap_is_usage_error(capsys):
    from markovnecklaces.necklace import NecklaceParams, from_params

    big = str(from_params(NecklaceParams(13, 9, 1)))  # k = 22, in the family
    code, _, err = run_cli(capsys, "phi", big, "--evaluator", "literal")
    assert code == 1
    assert "phi_transfer" in err
    code, _, _ = run_cli(capsys, "phi", big, "--evaluator", "transfer")
    assert code == 0


# --- spectrum and verify ----------------------------------------------------------


def test_spectrum_csv_columns(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--phi-bound", "10", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "necklace,k,sum_n,phi,trace,length,multiplicity"
    assert lines[1] == "[0],1,0,1,3,1.9248473,6"
    assert len(lines) == 4


def test_spectrum_json(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--phi-bound", "10")
    payload = json.loads(out)
    assert payload["phi_bound"] == "10"
    assert [row["phi"] for row in payload["entries"]] == ["1", "2", "5"]
    assert [row["multiplicity"] for row in payload["entries"]] == ["6", "6", "12"]


def test_verify_injectivity_clean(capsys):
    code, out, _ = run_cli(capsys, "verify", "injectivity", "--phi-bound", "1000")
    assert code == 0
    payload = json.loads(out)
    assert payload["collisions"] == []
    assert payload["scanned"] == "13"


def test_verify_cross_check_clean(capsys):
    code, out, _ = run_cli(capsys, "verify", "cross-check", "--phi-bound", "1000")
    assert code == 0
    payload = json.loads(out)
    assert payload["match"] is True
    assert payload["phi_values"] == payload["markov_values"]
    assert payload["only_phi"] == [] and payload["only_markov"] == []


def test_worker_count_does_not_change_output(capsys):
    outputs = []
    for workers in ("1", "2", "3"):
        code, out, _ = run_cli(
            capsys,
            "verify",
            "injectivity",
            "--phi-bound",
            "100000",
            "--workers",
            workers,
        )
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1] == outputs[2]

    for workers in ("1", "2"):
        code, out, _ = run_cli(
            capsys,
            "verify",
            "cross-check",
            "--phi-bound",
            "100000",
            "--workers",
            workers,
        )
        assert code == 0
        outputs.append(out)
    assert outputs[3] == outputs[4]


# --- distinct exit codes ------------------------------------------------------------


def test_collision_exit_code(capsys, monkeypatch):
    from markovnecklaces import spectrum
    from markovnecklaces.necklace import canonicalize

    fake = [spectrum.Collision(7, (canonicalize([1]), canonicalize([2])))]
    monkeypatch.setattr(spectrum, "find_collisions", lambda scanned: fake)
    code, out, _ = run_cli(capsys, "verify", "injectivity", "--phi-bound", "10")
    assert code == 3
    assert json.loads(out)["collisions"] == [
        {"phi": "7", "necklaces": ["[1]", "[2]"]}
    ]


def test_markov_collision_exit_code(capsys, monkeypatch):
    from markovnecklaces import markov
    from markovnecklaces.markov import MarkovTriple

    pair = (MarkovTriple(1, 5, 13), MarkovTriple(1, 5, 13))
    monkeypatch.setattr(cli.markov, "uniqueness_scan", lambda bound: [pair])
    code, out, _ = run_cli(capsys, "markov", "uniqueness", "--bound", "20")
    assert code == 3
    assert json.loads(out)["collisions"][0]["markov_number"] == "13"


def test_pipeline_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli.markov, "markov_numbers", lambda bound: [1])
    code, out, err = run_cli(capsys, "verify", "cross-check", "--phi-bound", "10")
    assert code == 2
    assert json.loads(out)["only_phi"] == ["2", "5"]
    assert "disagree" in err


def test_inconsistency_exit_code(capsys, monkeypatch):
    def boom(n, cap=20, verify=False):
        raise cli.InconsistencyError("fabricated disagreement")

    monkeypatch.setattr(cli.spectrum, "phi", boom)
    code, _, err = run_cli(capsys, "spectrum", "--phi-bound", "10")
    assert code == 2
    assert "fabricated" in err


# --- process-level smoke -------------------------------------------------------------


def test_module_invocation_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "markovnecklaces", "phi", "[0]"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["phi"] == "1"


def test_parallel_workers_in_subprocess():
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "markovnecklaces",
            "verify",
            "injectivity",
            "--phi-bound",
            "1000000",
            "--workers",
            "4",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["collisions"] == []
