import fnmatch
import itertools
from collections import Counter
from types import SimpleNamespace

import numpy as np
import pytest

from ffkdf.catalog import list_identities, lookup
from ffkdf.errors import InadmissibleCase, NotFound, OddQRequired
from ffkdf.field import construct_field
from ffkdf.hypergeom import KdFParams, Kernel, kdf_eval
from ffkdf.params import ParamMultiset
from ffkdf.rings import Vals
from ffkdf.verify import Cap, admissible_cases, eval_identity_case, run_suite, verify_identity


def test_catalog_shape():
    ids = [E.id for E in list_identities()]
    assert len(ids) == len(set(ids)) == 49
    assert ids[:3] == ["BASE-01", "BASE-02", "BASE-03"]
    assert sum(i.startswith("BASE-") for i in ids) == 15
    assert "FIX-PERTURBED" not in ids
    assert list_identities(include_fixtures=True)[-1].id == "FIX-PERTURBED"
    assert "Euler-Gauss summation formula" in lookup("BASE-09").anchor
    with pytest.raises(NotFound):
        lookup("NOPE")


def test_restatements_point_at_literal_entries():
    for E in list_identities():
        if E.restates:
            assert E.id == E.restates + "-D"
            assert E.lhs is lookup(E.restates).lhs


def test_case_counts():
    assert len(list(admissible_cases("BASE-01", "5"))) == 4
    excluded = sum(
        Counter((a, b)) == Counter((c, 0)) for a, b, c in itertools.product(range(3), repeat=3)
    )
    assert len(list(admissible_cases("BASE-09", "2^2"))) == 27 - excluded
    # regression value: 24 admissible triples, 3 x-values, 4 y-values
    assert len(list(admissible_cases("COR-1a", "5"))) == 288


def test_cor1a_cases_satisfy_hypotheses():
    for case in admissible_cases("COR-1a", "5"):
        a, b, c = (case.chars[s] for s in "abc")
        assert b not in (a % 4, (a + c) % 4) and c != 0
        assert case.args["x"] not in (0, 1) and case.args["y"] != 0


def test_enumeration_is_deterministic():
    cap = Cap(tuples=20, args=3)
    one = list(admissible_cases("THM-1", "7", cap, seed=42))
    two = list(admissible_cases("THM-1", "7", cap, seed=42))
    assert one == two
    assert len(one) == 60
    assert one != list(admissible_cases("THM-1", "7", cap, seed=43))


def test_odd_q_required():
    with pytest.raises(OddQRequired):
        list(admissible_cases("BASE-11", "2^2"))
    rep = verify_identity("BASE-11", "2^2")
    assert rep.attempted == 0 and rep.reason


def test_verify_examples():
    rep = verify_identity("BASE-01", "7")
    assert (rep.attempted, rep.passed, rep.failed) == (6, 6, 0)
    assert rep.counterexample is None and rep.ms is None
    assert verify_identity("BASE-01", "7", timing=True).ms >= 0


def test_perturbed_fixture():
    rep = verify_identity("FIX-PERTURBED", "5")
    assert rep.failed >= 1 and rep.passed + rep.failed == rep.attempted
    ce = rep.counterexample
    assert ce["case"] == 0 and ce["chars"] == {"a": 0}
    assert ce["lhs"] != ce["rhs"]


def test_eval_identity_case():
    lhs, rhs = eval_identity_case("BASE-06", "7", {"chars": {"u": 2}, "args": {"x": 3}})
    assert lhs == rhs
    lhs, rhs = eval_identity_case("REM-5", "5", {"chars": {"a": 1, "b": 2, "c": 3}, "args": {"x": 2, "y": 3}})
    assert lhs == rhs
    with pytest.raises(InadmissibleCase):
        eval_identity_case("BASE-10", "5", {"chars": {"a": 0, "c": 1, "n": 1}, "args": {}})
    with pytest.raises(InadmissibleCase):
        eval_identity_case("BASE-06", "5", {"chars": {"u": 1}, "args": {"x": 0}})
    with pytest.raises(ValueError):
        eval_identity_case("THM-1", "5", {"chars": {"a": 1, "b": 3, "c": 1}, "args": {"x": 2, "y": 3}})


def test_counterexample_replays():
    rep = verify_identity("COR-2c", "7")
    assert rep.failed
    ce = rep.counterexample
    lhs, rhs = eval_identity_case("COR-2c", "7", ce)
    assert [v.to_json() for v in lhs] == ce["lhs"] != [v.to_json() for v in rhs]


def test_theorem_with_unit_weight_is_corollary_lhs():
    # f = 1 is the sum of the delta basis, and the theorem side carries no 1/(1-q)^2
    case = {"chars": {"a": 1, "b": 3, "c": 1}, "args": {"x": 2, "y": 3}}
    parts = [eval_identity_case("THM-1", "5", case, f={"kind": "delta", "mu0": j})[0][0] for j in range(4)]
    cor, _ = eval_identity_case("COR-1a", "5", case)
    assert sum(parts[1:], parts[0]) == cor[0] * 16


class OracleKernel(Kernel):
    """Routes every two-variable sum through the scalar reference loop."""

    def kdf(self, A, A2, B, B2, C, C2, x, y):
        x, y = np.broadcast_arrays(np.asarray(x), np.asarray(y))
        out = []
        for i in range(x.size):
            groups = [ParamMultiset(self.fld, [int(np.ravel(v)[i if np.size(v) > 1 else 0]) for v in g])
                      for g in (A, B, C, A2, B2, C2)]
            out.append(kdf_eval(KdFParams(*groups), int(x.flat[i]), int(y.flat[i]), self.twist))
        return Vals(self.ring, self.ring.table(out), 1, 1.0)


def _kdf_entries():
    return [E.id for E in list_identities() if not E.needs_f and E.id[:3] in ("COR", "SUM", "REM")]


@pytest.mark.parametrize("identity_id", _kdf_entries())
def test_corollary_lhs_matches_reference_loop(identity_id):
    E = lookup(identity_id)
    for spec in ("5", "7"):
        F = construct_field(spec)
        K, O = Kernel(F, "exact"), OracleKernel(F, "exact")
        for case in list(admissible_cases(identity_id, spec, Cap(tuples=4, args=2), seed=1))[:8]:
            c = SimpleNamespace(**{s: np.array([v]) for s, v in case.chars.items()})
            X = SimpleNamespace(x=np.array([case.args.get("x", 0)]), y=np.array([case.args.get("y", 0)]))
            got = E.lhs(O, c, X, None).data.reshape(-1)[0]
            want = E.lhs(K, c, X, None).data.reshape(-1)[0]
            assert got == want


def test_run_suite_order_and_filters():
    assert run_suite(["BASE-01"], []) == []
    ids = [E.id for E in list_identities() if fnmatch.fnmatch(E.id, "BASE-*")]
    reps = run_suite(ids, ["3", "2^2"], cap=Cap(20, 5))
    assert len(reps) == 30
    assert [r.field for r in reps[:15]] == ["3"] * 15
    assert [r.id for r in reps[15:]] == ids
    assert all(r.ok for r in reps)
