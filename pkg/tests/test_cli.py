import json
import subprocess
import sys
import time

import pytest

from masseycrit.cli import COMMANDS, main
from masseycrit.library import DEFAULT_XI, EXAMPLES, load_example


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    doc = json.loads(out)
    assert doc["schema"] == 1
    return doc


def test_pages_torus(capsys):
    doc = run_json(capsys, "pages", "--example", "torus9", "--field", "Q", "--xi", "torus9.a")
    assert doc["pages"]["2"] == [0, 0, 0]
    assert doc["novikov_betti"] == [0, 0, 0]


def test_bound_genus_two(capsys):
    doc = run_json(capsys, "bound", "--example", "sigma2", "--field", "F2", "--xi", "sigma2.fig1")
    assert doc["m"] == 2 and doc["cat_lower_bound"] == 1 and doc["count_lower_bound"] == 1


def test_betti_rp2(capsys):
    doc = run_json(capsys, "betti", "--example", "rp2", "--field", "F2")
    assert doc["betti"] == [1, 1, 1]


def test_bound_with_explicit_classes(capsys):
    doc = run_json(capsys, "bound", "--example", "sigma2xrp2", "--field", "F2",
                   "--class", "v1", "--class", "v2", "--factor", "w")
    assert doc["m"] == 4 and doc["cat_lower_bound"] == 3


def test_unknown_example_exit_2(capsys):
    code, out, err = run(capsys, "betti", "--example", "nope")
    assert code == 2 and out == "" and "nope" in err


def test_invalid_cocycle_names_triangle(tmp_path, capsys):
    K = load_example("torus9").complex
    a, b = K.label(K.simplices[1][0])
    f = tmp_path / "bad.zeta"
    f.write_text(f"edge {a} {b} 1\n")
    code, _, err = run(capsys, "pages", "--example", "torus9", "--xi", str(f))
    assert code == 2 and "2-simplex" in err


def test_invalid_field_exit_2(capsys):
    code, _, err = run(capsys, "betti", "--example", "rp2", "--field", "F4")
    assert code == 2


def test_missing_xi_on_file_complex(tmp_path, capsys):
    f = tmp_path / "c.txt"
    f.write_text("simplex a b\nsimplex b c\nsimplex a c\n")
    code, _, err = run(capsys, "pages", "--complex", str(f))
    assert code == 2 and "--xi" in err


def test_foreign_reference_rejected(capsys):
    code, _, err = run(capsys, "pages", "--example", "torus9", "--xi", "sigma2.fig1")
    assert code == 2 and "sigma2" in err


def test_strict_check_requires_class(capsys):
    code, _, _ = run(capsys, "strict-check", "--example", "sigma2", "--field", "F2")
    assert code == 2


def test_product_and_consum_emit_parseable_files(tmp_path, capsys):
    from masseycrit.complex import parse_complex
    doc = run_json(capsys, "product", "--example", "circle3", "--example", "circle3")
    X = parse_complex(doc["complex_text"])
    assert X.euler_characteristic == 0 and X.f_vector[0] == 9
    doc = run_json(capsys, "consum", "--example", "rp2", "--example", "torus9")
    assert parse_complex(doc["complex_text"]).euler_characteristic == -1


def test_text_format(capsys):
    code, out, _ = run(capsys, "bound", "--example", "sigma2", "--field", "F2", "--format", "text")
    assert code == 0 and out.startswith("m = 2")


def test_byte_identical_output(capsys):
    argv = ["survivors", "--example", "sigma2", "--field", "F3"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_console_script_entry_point():
    p = subprocess.run([sys.executable, "-m", "masseycrit.cli", "betti", "--example", "circle3"],
                       capture_output=True, text=True, timeout=60)
    assert p.returncode == 0 and json.loads(p.stdout)["betti"] == [1, 1]


SINGLE = [c for c in COMMANDS if c not in ("product", "consum", "examples", "strict-check")]


@pytest.mark.parametrize("name", EXAMPLES)
def test_every_command_on_every_example(name, capsys):
    t0 = time.perf_counter()
    for cmd in SINGLE:
        if cmd in ("pages", "novikov", "survivors", "bound") and name not in DEFAULT_XI:
            code, _, err = run(capsys, cmd, "--example", name, "--field", "F2")
            assert code == 2 and "--xi" in err
            continue
        run_json(capsys, cmd, "--example", name, "--field", "F2")
    run_json(capsys, "examples")
    assert time.perf_counter() - t0 < 60
