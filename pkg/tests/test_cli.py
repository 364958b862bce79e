import json

import pytest

from cofrob.builders import build, random_path_coalgebra
from cofrob.cli import main
from cofrob.coalg import Coalgebra
from cofrob.hopf import HopfAlgebra
from cofrob.modelfile import parse_model, serialize

BAD_MODEL = """\
field 1
coalgebra bad dim 2
  delta 0 0 0 1
  delta 1 1 1 1
  delta 1 0 1 1
  counit 0 1
  counit 1 1
end
"""

GOOD_MODEL = """\
field 3
build t3 taft N=3
coalgebra kc2 dim 2
  delta 0 0 0 1
  delta 1 1 1 1
  counit 0 1
  counit 1 1
end
"""


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_filtration_text(capsys):
    code, out, _ = run(capsys, "--command", "filtration", "--target", "sweedler")
    assert code == 0
    assert "dims         : 2, 4" in out and "length       : 1" in out


def test_integral_text(capsys):
    code, out, _ = run(capsys, "--command", "integral", "--target", "taft:N=3")
    assert code == 0
    assert "dim      : 1" in out and "vector 0 :" in out


def test_realize_exhaustive_no(capsys):
    code, out, _ = run(capsys, "--command", "realize", "--target", "rank2:type=A2,p=5,x=1", "--group", "5")
    assert code == 0
    assert "no realization (exhaustive)" in out


@pytest.mark.parametrize("command", ["validate", "coradical", "filtration", "gr", "loewy", "socle",
                                     "poincare", "envelopes", "integral", "vanishing-profile",
                                     "hopf-socle", "diagram", "cofrobenius", "chevalley",
                                     "duality-check"])
def test_hopf_commands_pass(command, capsys):
    code, out, err = run(capsys, "--command", command, "--target", "sweedler")
    assert code == 0, err + out


@pytest.mark.parametrize("command,target", [
    ("cartan", "realization:G=3,g=1;1,chi=1;2"),
    ("classify", "rank2:type=G2,p=7,x=1"),
    ("nichols-dim", "realization:G=3,g=1;1,chi=1;2"),
    ("bosonize", "realization:G=3,g=1;1,chi=1;2"),
    ("realize", "rank2:type=B2,p=13"),
])
def test_braided_commands(command, target, capsys):
    code, out, err = run(capsys, "--command", command, "--target", target)
    assert code == 0, err + out


def test_fuzz_command(capsys):
    code, out, _ = run(capsys, "--command", "fuzz", "--seed", "3", "--cap", "5")
    assert code == 0


def test_machine_output(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, _, _ = run(capsys, "--command", "cofrobenius", "--target", "taft:N=3",
                     "--machine-output", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["ok"] is True
    assert doc["items"]["filtration length"] == 2
    assert doc["items"]["dim R"] == 3


def test_output_is_deterministic(tmp_path, capsys):
    outs = []
    for k in range(2):
        path = tmp_path / f"o{k}.json"
        run(capsys, "--command", "envelopes", "--target", "qls:G=3,theta=2",
            "--jobs", str(k + 1), "--machine-output", str(path))
        outs.append(path.read_text())
    assert outs[0] == outs[1]


def test_violation_exit_code(tmp_path, capsys):
    model = tmp_path / "bad.model"
    model.write_text(BAD_MODEL)
    code, out, _ = run(capsys, "--model", str(model), "--command", "validate", "--target", "bad")
    assert code == 1
    assert "VIOLATIONS" in out


def test_input_error_exit_codes(tmp_path, capsys):
    assert run(capsys, "--command", "nosuch", "--target", "sweedler")[0] == 2
    assert run(capsys, "--command", "filtration", "--target", "nosuch")[0] == 2
    assert run(capsys, "--command", "realize", "--target", "rank2:type=A2,p=5,x=1", "--group", "4")[0] == 2
    model = tmp_path / "broken.model"
    model.write_text("field 1\ncoalgebra c dim 2\n  delta 0 0 9 1\nend\n")
    assert run(capsys, "--model", str(model), "--command", "validate", "--target", "c")[0] == 2
    # argparse failure: missing --command
    assert run(capsys, "--target", "sweedler")[0] == 2


def test_precondition_error_is_input_error(capsys):
    # a path coalgebra is not a Hopf algebra
    code, _, err = run(capsys, "--command", "integral", "--target", "path:seed=1")
    assert code == 2 and err.startswith("error:")


def test_model_file_targets(tmp_path, capsys):
    model = tmp_path / "good.model"
    model.write_text(GOOD_MODEL)
    code, out, _ = run(capsys, "--model", str(model), "--command", "filtration", "--target", "t3")
    assert code == 0 and "3, 6, 9" in out
    code, out, _ = run(capsys, "--model", str(model), "--command", "coradical", "--target", "kc2")
    assert code == 0


@pytest.mark.parametrize("spec", [("sweedler", {}), ("taft", {"N": "3"}), ("qls", {"G": "3", "theta": "2"}),
                                  ("group_algebra", {"G": "2,3"})])
def test_serialize_round_trip(spec):
    h = build(*spec)
    text = serialize({"x": h})
    back = parse_model(text).get("x")
    assert isinstance(back, HopfAlgebra)
    assert back.same_structure(h)
    assert serialize({"x": back}) == text


def test_serialize_path_coalgebra():
    c = random_path_coalgebra(7)
    back = parse_model(serialize({"c": c})).get("c")
    assert isinstance(back, Coalgebra) and back.same_structure(c)


def test_dump_command(capsys):
    code, out, _ = run(capsys, "--command", "dump", "--target", "sweedler")
    assert code == 0
    assert parse_model(out).get("sweedler").dim == 4


def test_builder_spec_multi_values(capsys):
    from cofrob.modelfile import parse_builder_spec

    assert parse_builder_spec("group:G=2,3") == ("group", {"G": "2,3"})
    assert parse_builder_spec("qls:G=2,2,g=1,0;0,1,chi=1,0;0,1") == (
        "qls", {"G": "2,2", "g": "1,0;0,1", "chi": "1,0;0,1"})
    code, out, _ = run(capsys, "--command", "filtration", "--target", "qls:G=2,2,g=1,0;0,1,chi=1,0;0,1")
    assert code == 0 and "4, 12, 16" in out
