import json
import os
import subprocess
import sys

import pytest

from matcomp.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "phi([1;2])")
    assert code == 0 and out == "[1; 2] + 1/2*[1*2]"


def test_eval_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "eval", "[1] bsh [2]")
    data = json.loads(out)
    assert data["type"] == "element"
    assert [t["composition"] for t in data["terms"]] == ["[2 e; e 1]", "[1 e; e 2]"]


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "eval", "[e e; 1 2]")
    assert code == 2 and "row 1" in err and "column 1" in err


def test_alphabet_flag_positions(capsys):
    assert run(capsys, "--alphabet", "2", "eval", "[3]")[0] == 2
    assert run(capsys, "eval", "--alphabet", "2", "[3]")[0] == 2
    assert run(capsys, "eval", "[3]")[0] == 0


def test_rewrite_and_transport(capsys):
    _, out, _ = run(capsys, "rewrite", "--product", "bsh", "[2 e; e 1]")
    assert out == "B([1])*B([2]) - B([1][2])"
    _, out, _ = run(capsys, "transport", "--from", "bsh", "--to", "sh2", "[2 e; e 1]")
    assert out == "[2 e; e 1] + [e 1; 2 e] + [e 2; 1 e]"
    _, out, _ = run(capsys, "transport", "--from", "sh2", "--to", "bsh", "--hopf", "[1 e; e 2]")
    assert out == "[1 e; e 2] - 1/2*[e 1; 2 e] - 1/2*[e 2; 1 e]"


def test_order_cmp_and_lyndon(capsys):
    assert run(capsys, "order-cmp", "[1 e; 3 2]", "[1 e; e 2]")[1] == "[1 e; 3 2] < [1 e; e 2]"
    assert run(capsys, "order-cmp", "--order", "connected", "[2;1]", "[1 2]")[1] == "[2;1] > [1 2]"
    assert run(capsys, "order-cmp", "--order", "deglex", "2", "1*2*3")[1] == "2 < 1*2*3"
    assert run(capsys, "lyndon", "--cfl", "[2 e; e 1]")[1] == "([2]) ([1])"
    assert run(capsys, "lyndon", "--check", "[3]", "[1;2]")[1] == "lyndon"
    assert run(capsys, "lyndon", "--check", "[2]", "[1]")[1] == "not lyndon"


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "orders", "--max-degree", "3", "--samples", "20", "--seed", "5")
    second = run(capsys, "verify", "orders", "--max-degree", "3", "--samples", "20", "--seed", "5")
    assert first == second and first[0] == 0
    assert first[1].splitlines()[-1].endswith("properties passed")


@pytest.mark.parametrize("env", [{}, {"MATCOMP_ALPHABET": "2"}])
def test_console_module(env):
    proc = subprocess.run([sys.executable, "-m", "matcomp.cli", "eval", "[2] qsh [1]"],
                          capture_output=True, text=True, env={**os.environ, **env})
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("[1*2]")
