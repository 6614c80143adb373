import json
import subprocess
import sys
from pathlib import Path

from ellab import catalog
from ellab.cli import main
from ellab.correspondence import certificate_to_json, certify
from ellab.isogeny import closure, graph_to_json
from ellab.configs import parse_config
from ellab.product import parse_diagram

WORKED = "4,4,2,1,1 / 6,2,_,3,1"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_class_tsv_golden(capsys):
    code, out, _ = run(capsys, "class", "3333")
    assert code == 0
    assert out == "3333\n9111\n1911\n1191\n1119\n"


def test_class_modes(capsys):
    code, out, _ = run(capsys, "class", "44211", "--mode", "catalog")
    assert code == 0
    assert out == "44211\n22422\n11811\n11244\n"
    code, out, _ = run(capsys, "class", "44211", "--mode", "combinatorial")
    assert len(out.splitlines()) == 8


def test_class_json_parity(capsys):
    code, out, _ = run(capsys, "class", "4422", "--json")
    assert code == 0
    assert out == graph_to_json(closure(parse_config("4422")))


def test_torsion_golden(capsys):
    code, out, _ = run(capsys, "torsion", "53211", "-p", "2")
    assert code == 0
    assert out == "No (MoveNonexistence)\n"


def test_torsion_json(capsys):
    code, out, _ = run(capsys, "torsion", "11811", "-p", "2", "--json")
    assert json.loads(out) == {"schema": 1, "answer": "Yes",
                               "provenances": ["CatalogTable"]}


def test_torsion_bad_input_exit_2(capsys):
    code, _, err = run(capsys, "torsion", "3332", "-p", "2")
    assert code == 2
    assert "error:" in err


def test_torsion_unsupported_prime_exit_2(capsys):
    code, _, err = run(capsys, "torsion", "3333", "-p", "7")
    assert code == 2


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert len(out.splitlines()) == len(catalog.EMBEDDED_ENTRIES)
    assert any("Gamma_1(6)" in line for line in out.splitlines())


def test_catalog_query(capsys):
    code, out, _ = run(capsys, "catalog", "6321")
    assert code == 0
    assert "(x-z)(x-t+2z)(x^2+t^2-z^2)" in out


def test_catalog_query_accepts_positioned_text(capsys):
    code, out, _ = run(capsys, "catalog", "6231")
    assert code == 0 and "Gamma_1(6)" in out


def test_catalog_miss_exit_1(capsys):
    code, _, err = run(capsys, "catalog", "7311")
    assert code == 1
    assert "no catalog entry" in err


def test_catalog_json_matches_export(capsys):
    code, out, _ = run(capsys, "catalog", "--json")
    assert out == catalog.export_catalog()


def test_product_golden(capsys):
    code, out, _ = run(capsys, "product", "44211", "6231", "--align", "1,2,4,5")
    assert code == 0
    assert out == WORKED + "\n"


def test_product_new_point(capsys):
    code, out, _ = run(capsys, "product", "3333", "4422", "--align", "1,2,3,_")
    assert code == 0
    assert out == "3,3,3,3,_ / 4,4,2,_,2\n"


def test_product_warns_on_shared_class(capsys):
    code, out, err = run(capsys, "product", "3333", "9111")
    assert code == 0
    assert "warning" in err


def test_product_json(capsys):
    code, out, _ = run(capsys, "product", "44211", "6231", "--align", "1,2,4,5", "--json")
    payload = json.loads(out)
    assert payload["pairs"] == [[4, 6], [4, 2], [2, 0], [1, 3], [1, 1]]


def test_kummer_golden(capsys):
    code, out, _ = run(capsys, "kummer", WORKED, "--delta", "2")
    assert code == 0
    assert out == (
        "points: P1 P2 P3 P4 P5\n"
        "fixed: 16 16 16 9 9\n"
        "nodes: 2\n"
        "euler: 20\n"
        "components: 9..10\n"
        "rationality: Forced\n"
        "equisingular_zero: true\n"
        "transversal_zero: true\n"
        "rigid: true\n")


def test_kummer_default_delta(capsys):
    code, out, _ = run(capsys, "kummer", "3,3,2,3,1 / 8,2,_,1,1", "--json")
    payload = json.loads(out)
    assert payload["node_count"] == 2
    assert payload["euler"] == 12


def test_certify_worked_example(capsys):
    code, out, _ = run(capsys, "certify", WORKED)
    assert code == 0
    assert "kind: RigidKummer" in out
    assert "euler: 20" in out


def test_certify_json_parity(capsys):
    code, out, _ = run(capsys, "certify", WORKED, "--json")
    assert code == 0
    assert out == certificate_to_json(certify(parse_diagram(WORKED)))


def test_certify_not_certified_exit_1(capsys):
    code, out, _ = run(capsys, "certify", "3,3,3,2,1 / 3,3,3,_,3")
    assert code == 1
    assert "kind: NotCertified" in out


def test_certify_hypotheses_not_met_exit_2(capsys):
    code, _, err = run(capsys, "certify", "3,3,3,3 / 9,1,1,1")
    assert code == 2


def test_env_catalog_override(capsys, tmp_path, monkeypatch):
    entries = [e for e in catalog.EMBEDDED_ENTRIES if e.partition != (9, 1, 1, 1)]
    path = tmp_path / "catalog.json"
    path.write_text(catalog.export_catalog(entries))
    monkeypatch.setenv(catalog.CATALOG_ENV_VAR, str(path))
    code, out, _ = run(capsys, "catalog", "9111")
    assert code == 1
    # without the 9111 partition the 3333 closure collapses to the start
    code, out, _ = run(capsys, "class", "3333")
    assert out == "3333\n"


def test_module_entry_point():
    import os
    repo = Path(__file__).resolve().parents[1]
    env = dict(os.environ, PYTHONPATH=str(repo / "src"))
    env.pop(catalog.CATALOG_ENV_VAR, None)
    result = subprocess.run(
        [sys.executable, "-m", "ellab", "class", "5511"],
        capture_output=True, text=True, env=env,
    )
    assert result.returncode == 0
    assert result.stdout == "5511\n1155\n"
