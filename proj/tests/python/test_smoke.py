# Smoke tests for the sympblocks Python extension: calculator round trips and
# JSON report plumbing.  The build directory holding the module is passed via
# SYMPBLOCKS_MODULE_DIR.

import json
import os
import sys

sys.path.insert(0, os.environ["SYMPBLOCKS_MODULE_DIR"])

import sympblocks  # noqa: E402


def test_partition_calculus():
    assert sympblocks.e_core([4, 2], 3) == [4, 2]
    assert sympblocks.e_quotient([3], 2) == [[1], []]
    assert sympblocks.compose([], [[], [1]], 2) == [2]
    la = [5, 3, 2, 2]
    for e in (2, 3, 4):
        core = sympblocks.e_core(la, e)
        quot = sympblocks.e_quotient(la, e)
        assert sympblocks.compose(core, quot, e) == la


def test_symbol_calculus():
    assert sympblocks.symbol_core("[[],[0,2]]", 2, "cohook") == "[[],[]]"
    quots = sympblocks.symbol_quotients("[[],[0,2]]", 2, "cohook")
    assert len(quots) == 2
    for q in quots:
        assert sympblocks.compose_symbol("[[],[]]", q, 2, "cohook") == "[[],[0,2]]"


def test_group_order():
    assert sympblocks.group_order("Sp", 2, 3) == "51840"
    assert sympblocks.group_order("CSp", 2, 3) == "103680"


def test_sylow_report():
    rep = json.loads(sympblocks.sylow("Sp", 2, 3, 5))
    assert rep["ok"] is True
    assert rep["order"] == "51840"


def test_blocks_listing():
    rows = json.loads(sympblocks.blocks("CSp", 2, 3, 5))
    assert len(rows) > 0
    assert all(r["n_ibr"] == r["n_weights"] for r in rows)


def test_verify_report():
    rep = json.loads(sympblocks.verify("CSp", 2, 3, 5))
    assert rep["status"] == "ok"
    assert rep["counts"]["ibr"] == rep["counts"]["direct"]
    classes = json.loads(sympblocks.classes("CSp", 2, 3, 5))
    assert len(classes) == 4
